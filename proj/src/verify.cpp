#include "plg/verify.hpp"

#include <sstream>

#include "plg/arith.hpp"
#include "plg/centralizer.hpp"
#include "plg/commdec.hpp"
#include "plg/elements.hpp"
#include "plg/io.hpp"
#include "plg/wreath.hpp"

namespace plg {

namespace {

// accumulates named assertion groups; remembers the first failure detail
class Suite {
 public:
  void begin(const std::string& name) {
    checks_.push_back(Check{name, true, ""});
  }
  void require(bool ok, const std::string& detail) {
    if (!ok && checks_.back().ok) {
      checks_.back().ok = false;
      checks_.back().detail = detail;
    }
  }
  std::vector<Check> done() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string at_iter(int i) { return "iteration " + std::to_string(i); }

long long ipow_small(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

IntervalSet open_interval(const Rational& a, const Rational& b) {
  IntervalSetBuilder bld;
  bld.add_open(a, b);
  return bld.finish();
}

}  // namespace

Rational random_grid_point(Rng& rng, const GroupParams& params) {
  int j = static_cast<int>(rng.range(2, 5));
  long long steps = ipow_small(params.n, j);
  return params.r * Rational(rng.range(1, steps - 1), steps);
}

PLMap random_bump(Rng& rng, const GroupParams& params) {
  Rational a = random_grid_point(rng, params);
  Rational b = random_grid_point(rng, params);
  while (a == b) b = random_grid_point(rng, params);
  if (b < a) std::swap(a, b);
  return bump(params, a, b, rng.range(1, 3), rng.range(1, 3));
}

PLMap random_f(Rng& rng, const GroupParams& params, int factors) {
  PLMap acc = random_bump(rng, params);
  for (int i = 1; i < factors; ++i) acc = compose(acc, random_bump(rng, params));
  return acc;
}

PLMap random_v(Rng& rng, const GroupParams& params) {
  // rotation or interval swap, optionally stirred with a continuous element
  int j = static_cast<int>(rng.range(1, 3));
  long long steps = ipow_small(params.n, j);
  Rational grid = params.r / steps;
  PLMap base = identity_map(params);
  if (steps >= 2 && rng.coin()) {
    Rational q = grid * rng.range(1, steps - 1);
    base = PLMap::make(params, {Segment{Rational(0), Rational(1), q},
                               Segment{params.r - q, Rational(1), q - params.r}});
  } else if (steps >= 3) {
    long long k1 = rng.range(0, steps - 3);
    long long k2 = rng.range(k1 + 1, steps - 2);
    Rational u = grid * k1, v = grid * (k2 + 1);
    std::vector<Segment> segs;
    if (u > 0) segs.push_back(Segment{Rational(0), Rational(1), Rational(0)});
    segs.push_back(Segment{u, Rational(1), v - u});
    if (u + grid < v) segs.push_back(Segment{u + grid, Rational(1), Rational(0)});
    segs.push_back(Segment{v, Rational(1), u - v});
    if (v + grid < params.r) segs.push_back(Segment{v + grid, Rational(1), Rational(0)});
    base = PLMap::make(params, std::move(segs));
  }
  if (rng.coin()) base = compose(base, random_f(rng, params, 1));
  return base;
}

std::vector<Check> suite_prop33() {
  GroupParams params(2, Rational(1));
  PLMap x0 = thompson_x0(params);
  auto [a, b] = thompson_ab(params);
  Suite s;

  s.begin("support of x0 is (0,1)");
  s.require(support(x0) == open_interval(Rational(0), Rational(1)), "support mismatch");

  s.begin("orbit of 1/2 under a matches the closed form for |k| <= 3");
  Ladder lad = ladder(params, a, Rational(1, 2), -4, 4);
  for (long long k = -3; k <= 3; ++k) {
    Rational expect = k < 0 ? pow_rat(Rational(2), -1 + 2 * k)
                            : 1 - pow_rat(Rational(2), -1 - 2 * k);
    s.require(lad.points.at(k) == expect, "alpha_" + std::to_string(k));
  }

  s.begin("support of a^-k b a^k is (alpha_k, alpha_k+1) for |k| <= 3");
  for (long long k = -3; k <= 3; ++k) {
    PLMap bk = conjugate(b, power(a, k));
    s.require(support(bk) == open_interval(lad.points.at(k), lad.points.at(k + 1)),
              "k = " + std::to_string(k));
  }

  s.begin("x0 and every a^-k b a^k move points up, checked per segment");
  s.require(is_up(x0), "x0");
  for (long long k = -3; k <= 3; ++k)
    s.require(is_up(conjugate(b, power(a, k))), "k = " + std::to_string(k));

  return s.done();
}

std::vector<Check> suite_lemma43(std::uint64_t seed) {
  Rng rng(seed);
  Suite s;

  s.begin("random prescribed-support elements over (2,1) and (3,2)");
  for (GroupParams params : {GroupParams(2, Rational(1)), GroupParams(3, Rational(2))}) {
    for (int i = 0; i < 10; ++i) {
      Rational a = random_grid_point(rng, params);
      Rational b = random_grid_point(rng, params);
      while (a == b) b = random_grid_point(rng, params);
      if (b < a) std::swap(a, b);
      long long pe = rng.range(1, 3), qe = rng.range(1, 3);
      PLMap x = bump(params, a, b, pe, qe);
      s.require(support(x) == open_interval(a, b), at_iter(i) + " support");
      s.require(slope_right(x, a) == lambda_pow(params, pe), at_iter(i) + " left slope");
      s.require(slope_left(x, b) == lambda_pow(params, -qe), at_iter(i) + " right slope");
      s.require(is_up(x), at_iter(i) + " up");
      s.require(classify(x) == MapClass::F, at_iter(i) + " continuity");
    }
  }

  s.begin("worked instance: values and slopes on the construction grid");
  GroupParams params(2, Rational(1));
  PLMap x = bump(params, Rational(0), Rational(1), 1, 1);
  const std::pair<Rational, Rational> table[] = {
      {Rational(0), Rational(0)},
      {Rational(1, 8), Rational(1, 4)},
      {Rational(3, 16), Rational(3, 8)},
      {Rational(5, 8), Rational(13, 16)},
      {Rational(7, 8), Rational(15, 16)},
  };
  const Rational slopes[] = {Rational(2), Rational(2), Rational(1), Rational(1, 2),
                             Rational(1, 2)};
  for (int i = 0; i < 5; ++i) {
    s.require(eval(x, table[i].first) == table[i].second, "value at " + rat_str(table[i].first));
    s.require(slope_right(x, table[i].first) == slopes[i], "slope at " + rat_str(table[i].first));
  }
  return s.done();
}

namespace {

WreathElem random_wreath(Rng& rng) {
  WreathElem w;
  w.shift = rng.range(-3, 3);
  int nz = static_cast<int>(rng.range(0, 2));
  for (int i = 0; i < nz; ++i) {
    long long k = rng.range(-3, 3), e = rng.range(-3, 3);
    if (e != 0) w.coeffs[k] = e;
  }
  return w;
}

}  // namespace

std::vector<Check> suite_wreath(std::uint64_t seed) {
  Rng rng(seed);
  GroupParams params(2, Rational(1));
  auto [a, b] = thompson_ab(params);
  PLMap id = identity_map(params);
  Suite s;

  s.begin("conjugates of b along the orbit commute for 0 < |i-j| <= 4");
  std::vector<PLMap> bk;
  for (long long k = -2; k <= 2; ++k) bk.push_back(conjugate(b, power(a, k)));
  for (std::size_t i = 0; i < bk.size(); ++i)
    for (std::size_t j = i + 1; j < bk.size(); ++j)
      s.require(equals(commutator(bk[i], bk[j]), id),
                "i = " + std::to_string(i) + ", j = " + std::to_string(j));

  s.begin("realization is a homomorphism on 1000 random pairs");
  for (int i = 0; i < 1000; ++i) {
    WreathElem u = random_wreath(rng), v = random_wreath(rng);
    PLMap pu = pl_from_wreath(u, a, b), pv = pl_from_wreath(v, a, b);
    s.require(equals(pl_from_wreath(w_mul(u, v), a, b), compose(pu, pv)), at_iter(i));
    if (!(u == v)) s.require(!equals(pu, pv), at_iter(i) + " faithfulness");
  }

  s.begin("coordinate recovery round-trips on 500 random elements");
  for (int i = 0; i < 500; ++i) {
    WreathElem u = random_wreath(rng);
    s.require(wreath_from_pl(pl_from_wreath(u, a, b), a, b) == u, at_iter(i));
  }

  s.begin("no torsion on sampled elements");
  for (int i = 0; i < 25; ++i) {
    WreathElem u = random_wreath(rng);
    if (u == w_identity()) continue;
    PLMap p = pl_from_wreath(u, a, b);
    for (long long k = 1; k <= 4; ++k)
      s.require(!is_identity(power(p, k)), at_iter(i) + " power " + std::to_string(k));
  }
  return s.done();
}

std::vector<Check> suite_arith() {
  GroupParams params(2, Rational(1));
  Suite s;

  s.begin("decode inverts encode on [1, 50]");
  for (long long m = 1; m <= 50; ++m)
    s.require(decode(encode(params, m).element) == m, "m = " + std::to_string(m));
  GroupParams p32(3, Rational(2));
  for (long long m = 1; m <= 10; ++m)
    s.require(decode(encode(p32, m).element) == m, "(3,2) m = " + std::to_string(m));

  s.begin("composition adds encoded values modulo slope-1-at-ends, m, k <= 30");
  std::vector<PLMap> enc;
  enc.push_back(identity_map(params));  // placeholder at index 0
  for (long long m = 1; m <= 60; ++m) enc.push_back(encode(params, m).element);
  for (long long m = 1; m <= 30; ++m)
    for (long long k = 1; k <= 30; ++k) {
      PLMap prod = compose(enc[m], enc[k]);
      s.require(decode(prod) == m + k && equiv_mod_F0(prod, enc[m + k]),
                "m = " + std::to_string(m) + ", k = " + std::to_string(k));
    }

  s.begin("divisibility witnesses match integer divisibility on [1, 12]^2");
  for (long long m = 1; m <= 12; ++m)
    for (long long k = 1; k <= 12; ++k) {
      ArithCode x = encode(params, m), y = encode(params, k);
      auto wit = divisibility_witness(x, y);
      std::string tag = "m = " + std::to_string(m) + ", k = " + std::to_string(k);
      s.require(wit.has_value() == (k % m == 0), tag);
      if (wit) {
        s.require(in_F0(wit->z), tag + " z");
        s.require(commutes(wit->w, compose(x.element, wit->z)), tag + " commuting");
        s.require(in_F0(compose(y.element, wit->w)), tag + " yw");
      }
    }

  s.begin("triangle identity and derived multiplication on [0, 30]^2");
  for (long long k = 0; k <= 30; ++k)
    s.require(robinson_triangle(k) == k * (k + 1), "k = " + std::to_string(k));
  for (long long k = 0; k <= 30; ++k)
    for (long long l = 0; l <= 30; ++l)
      s.require(robinson_mul(k, l) == k * l,
                "k = " + std::to_string(k) + ", l = " + std::to_string(l));
  return s.done();
}

std::vector<Check> suite_prop81(std::uint64_t seed) {
  Rng rng(seed);
  GroupParams params(2, Rational(1));
  Suite s;

  s.begin("200 random commutator lists reduce to two with the exact product");
  for (int i = 0; i < 200; ++i) {
    CommutatorList c;
    int len = static_cast<int>(rng.range(1, 5));
    for (int j = 0; j < len; ++j)
      c.pairs.push_back({random_f(rng, params, static_cast<int>(rng.range(1, 2))),
                         random_f(rng, params, static_cast<int>(rng.range(1, 2)))});
    PLMap target = product_of_commutators(c);
    CommutatorList two = two_commutators(c);
    s.require(two.pairs.size() == 2, at_iter(i) + " length");
    s.require(equals(product_of_commutators(two), target), at_iter(i) + " product");
    for (const auto& p : two.pairs)
      s.require(in_F0(p.first) && in_F0(p.second), at_iter(i) + " endpoint slopes");
  }
  return s.done();
}

std::vector<Check> suite_partition(std::uint64_t seed) {
  Rng rng(seed);
  GroupParams params(2, Rational(1));
  Suite s;

  s.begin("cut points are fixed with a one-sided slope away from 1");
  for (int i = 0; i < 50; ++i) {
    PLMap x = random_f(rng, params, static_cast<int>(rng.range(1, 3)));
    PartitionDescriptor d = partition(x);
    for (std::size_t j = 1; j + 1 < d.cut_points.size(); ++j) {
      const Rational& c = d.cut_points[j];
      s.require(eval(x, c) == c, at_iter(i) + " fixed");
      s.require(slope_left(x, c) != 1 || slope_right(x, c) != 1, at_iter(i) + " slope");
      s.require(in_A(c, params), at_iter(i) + " grid");
    }
  }

  s.begin("sampled commuting elements fix every cut point");
  for (int i = 0; i < 50; ++i) {
    PLMap x = random_f(rng, params, static_cast<int>(rng.range(1, 3)));
    PartitionDescriptor d = partition(x);
    std::vector<PLMap> commuting;
    for (long long k = -2; k <= 2; ++k)
      if (k != 0) commuting.push_back(power(x, k));
    // an element supported inside an identity interval commutes with x
    for (const auto& iv : d.intervals)
      if (iv.kind == IntervalKind::identity && in_A(iv.lo, params) && in_A(iv.hi, params))
        commuting.push_back(bump(params, iv.lo, iv.hi, 1, 1));
    for (const PLMap& y : commuting) {
      if (!commutes(y, x)) continue;
      for (std::size_t j = 1; j + 1 < d.cut_points.size(); ++j)
        s.require(eval(y, d.cut_points[j]) == d.cut_points[j], at_iter(i));
    }
  }

  s.begin("slope at the left edge separates powers and solves membership");
  for (int i = 0; i < 25; ++i) {
    PLMap c = random_bump(rng, params);
    Rational alpha = support(c).intervals[0].first;
    std::vector<Rational> seen;
    for (long long k = -6; k <= 6; ++k) {
      PLMap ck = power(c, k);
      Rational sl = slope_hom(ck, alpha);
      for (const Rational& prev : seen) s.require(prev != sl, at_iter(i) + " injectivity");
      seen.push_back(sl);
      s.require(solve_cyclic(ck, c) == std::optional<long long>(k),
                at_iter(i) + " k = " + std::to_string(k));
    }
  }
  return s.done();
}

std::vector<Check> suite_algebra(std::uint64_t seed) {
  Rng rng(seed);
  GroupParams params(2, Rational(1));
  PLMap id = identity_map(params);
  Suite s;

  s.begin("group axioms, conjugation support law, chain rule: 1000 rounds");
  for (int i = 0; i < 1000; ++i) {
    PLMap f = rng.coin() ? random_f(rng, params, static_cast<int>(rng.range(1, 2)))
                         : random_v(rng, params);
    PLMap g = rng.coin() ? random_f(rng, params, 1) : random_v(rng, params);
    PLMap h = rng.coin() ? random_f(rng, params, 1) : random_v(rng, params);

    s.require(equals(compose(compose(f, g), h), compose(f, compose(g, h))),
              at_iter(i) + " associativity");
    s.require(equals(compose(f, id), f) && equals(compose(id, f), f),
              at_iter(i) + " identity");
    s.require(is_identity(compose(f, inverse(f))) && is_identity(compose(inverse(f), f)),
              at_iter(i) + " inverse");
    s.require(support(conjugate(f, g)) == image_set(support(f), g),
              at_iter(i) + " conjugated support");

    PLMap fg = compose(f, g);
    for (const Segment& seg : fg.segments())
      s.require(slope_right(fg, seg.left) ==
                    slope_right(f, seg.left) * slope_right(g, eval(f, seg.left)),
                at_iter(i) + " chain rule");
  }

  s.begin("disjoint supports commute: 200 rounds");
  for (int i = 0; i < 200; ++i) {
    // split the domain at a grid point and take one element on each side
    Rational cut = random_grid_point(rng, params);
    Rational lo = cut / 2, hi = cut + (params.r - cut) / 2;
    PLMap f = bump(params, lo, cut, rng.range(1, 3), rng.range(1, 3));
    PLMap g = bump(params, hi, params.r, rng.range(1, 3), rng.range(1, 3));
    s.require(disjoint(support(f), support(g)), at_iter(i) + " setup");
    s.require(is_identity(commutator(f, g)), at_iter(i));
  }

  s.begin("powers of an up element keep its support, |k| <= 5: 200 rounds");
  for (int i = 0; i < 200; ++i) {
    PLMap f = random_f(rng, params, static_cast<int>(rng.range(1, 2)));
    long long k = rng.range(1, 5) * (rng.coin() ? 1 : -1);
    s.require(is_up(f), at_iter(i) + " setup");
    s.require(support(power(f, k)) == support(f), at_iter(i));
  }
  return s.done();
}

std::vector<Check> suite_classify() {
  GroupParams params(2, Rational(1));
  PLMap x0 = thompson_x0(params), x1 = thompson_x1(params);
  auto [a, b] = thompson_ab(params);
  Suite s;

  s.begin("named generators are continuous");
  for (const PLMap* x : {&x0, &x1, &a, &b})
    s.require(classify(*x) == MapClass::F, "generator");

  PLMap rot = PLMap::make(params, {Segment{Rational(0), Rational(1), Rational(1, 4)},
                                   Segment{Rational(3, 4), Rational(1), Rational(-3, 4)}});
  s.begin("rotation by 1/4 is circle-continuous only");
  s.require(classify(rot) == MapClass::T_only, "rotation");

  PLMap swap = PLMap::make(params, {Segment{Rational(0), Rational(1), Rational(1, 4)},
                                    Segment{Rational(1, 4), Rational(1), Rational(-1, 4)},
                                    Segment{Rational(1, 2), Rational(1), Rational(0)}});
  s.begin("interval swap is right-continuous only");
  s.require(classify(swap) == MapClass::V_only, "swap");

  s.begin("each continuity class closed under composition where it is a group");
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    PLMap f = random_f(rng, params, 2), g = random_f(rng, params, 2);
    s.require(classify(compose(f, g)) == MapClass::F, at_iter(i) + " interval");
    PLMap t1 = compose(rot, f), t2 = rng.coin() ? compose(g, rot) : g;
    MapClass c = classify(compose(t1, t2));
    s.require(c == MapClass::F || c == MapClass::T_only, at_iter(i) + " circle");
  }
  return s.done();
}

std::vector<Check> suite_serialize(std::uint64_t seed) {
  Rng rng(seed);
  GroupParams params(2, Rational(1));
  GroupParams p32(3, Rational(2));
  Suite s;

  s.begin("500 random elements round-trip bit-exactly");
  for (int i = 0; i < 500; ++i) {
    const GroupParams& p = i % 3 == 0 ? p32 : params;
    PLMap x = rng.coin() ? random_f(rng, p, static_cast<int>(rng.range(1, 3)))
                         : random_v(rng, p);
    std::string text = serialize_plmap(x);
    PLMap y = parse_plmap(text);
    s.require(equals(x, y), at_iter(i) + " reparse");
    s.require(serialize_plmap(y) == text, at_iter(i) + " text identity");
  }
  return s.done();
}

std::vector<std::string> suite_names() {
  return {"prop33", "lemma43", "wreath", "arith", "prop81",
          "partition", "algebra", "classify", "serialize"};
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "prop33") return suite_prop33();
  if (name == "lemma43") return suite_lemma43(seed);
  if (name == "wreath") return suite_wreath(seed);
  if (name == "arith") return suite_arith();
  if (name == "prop81") return suite_prop81(seed);
  if (name == "partition") return suite_partition(seed);
  if (name == "algebra") return suite_algebra(seed);
  if (name == "classify") return suite_classify();
  if (name == "serialize") return suite_serialize(seed);
  throw Error(Err::OutOfRange, "unknown suite '" + name + "'");
}

}  // namespace plg
