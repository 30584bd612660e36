#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

#include "plg/error.hpp"

namespace plg {

// Exact arithmetic only: every scalar in the library is a reduced rational
// with arbitrary-precision integer parts.  No floating point anywhere.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// base^e for any sign of e; base must be nonzero when e < 0.
Rational pow_rat(const Rational& base, long long e);

// Strict "p/q" or "p" parser; rejects anything else, including "1/0".
Rational parse_rational(const std::string& text);
std::string rat_str(const Rational& q);

// Parameters (n, r) of the group family: slopes range over the cyclic group
// generated by n, breakpoints over Z[1/n], the domain is [0, r).
struct GroupParams {
  int n;
  Rational r;

  GroupParams(int n_, const Rational& r_);
  bool operator==(const GroupParams& o) const { return n == o.n && r == o.r; }
  bool operator!=(const GroupParams& o) const { return !(*this == o); }
};

// q ∈ Z[1/n]: the reduced denominator divides some power of n.
bool in_A(const Rational& q, const GroupParams& params);

// k such that q = n^k, if q is such a power.
std::optional<long long> log_lambda(const Rational& q, const GroupParams& params);

// n^k as an exact rational.
Rational lambda_pow(const GroupParams& params, long long k);

}  // namespace plg
