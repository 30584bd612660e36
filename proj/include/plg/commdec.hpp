#pragma once

#include <utility>
#include <vector>

#include "plg/plmap.hpp"

namespace plg {

// Formal product of commutators [x_i, y_i] of continuous elements.
struct CommutatorList {
  std::vector<std::pair<PLMap, PLMap>> pairs;
};

PLMap product_of_commutators(const CommutatorList& c);

// Injective self-map of [0, r): identity on [alpha1, beta1], a single gentle
// slope on [0, alpha1] and [beta1, r), image inside [alpha2, beta2).  Not a
// group element; conjugation by it compresses supports into the outer window.
struct Compressor {
  GroupParams params;
  Rational alpha1, beta1;  // inner window, pointwise fixed
  Rational alpha2, beta2;  // outer window, contains the image
  Rational slope;          // n^-j on both outer pieces

  Rational s_eval(const Rational& t) const;
  Rational s_lo() const;  // image of 0
  Rational s_hi() const;  // left limit of the image at r
};

Compressor build_compressor(const GroupParams& params, const Rational& alpha1,
                            const Rational& beta1, const Rational& alpha2,
                            const Rational& beta2);

// The compression endomorphism: s^-1 x s on the image of s, identity
// elsewhere.  Fixes any x supported inside the inner window.
PLMap compress(const PLMap& x, const Compressor& s);

// Up-moving element pushing alpha past beta: a power of a near-full bump.
PLMap translator(const GroupParams& params, const Rational& alpha, const Rational& beta);

// Constituent supports pairwise disjoint across pairs: the commutator of the
// two products is the product of the commutators.
std::pair<PLMap, PLMap> merge_disjoint(const CommutatorList& c);

// Rewrites any commutator list as an equal product of exactly two
// commutators, compressing the last three pairs into a shared window and
// folding them with a translator until only two remain.
CommutatorList two_commutators(const CommutatorList& c);

}  // namespace plg
