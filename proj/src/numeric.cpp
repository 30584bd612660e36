#include "plg/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <sstream>

namespace plg {

const char* err_name(Err kind) {
  switch (kind) {
    case Err::BadParams: return "BadParams";
    case Err::NonPositive: return "NonPositive";
    case Err::BreakpointNotInA: return "BreakpointNotInA";
    case Err::SlopeNotInLambda: return "SlopeNotInLambda";
    case Err::NotBijective: return "NotBijective";
    case Err::OutOfRange: return "OutOfRange";
    case Err::OutOfDomain: return "OutOfDomain";
    case Err::ParamMismatch: return "ParamMismatch";
    case Err::BadInterval: return "BadInterval";
    case Err::NoValidS: return "NoValidS";
    case Err::WrongParams: return "WrongParams";
    case Err::BadBase: return "BadBase";
    case Err::NotInSubgroup: return "NotInSubgroup";
    case Err::NotInF: return "NotInF";
    case Err::NotInB: return "NotInB";
    case Err::IdentityViolated: return "IdentityViolated";
    case Err::BadWindows: return "BadWindows";
    case Err::SupportsOverlap: return "SupportsOverlap";
    case Err::VerificationFailed: return "VerificationFailed";
    case Err::NotFixed: return "NotFixed";
    case Err::TrivialGenerator: return "TrivialGenerator";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

Rational pow_rat(const Rational& base, long long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw Error(Err::NonPositive, "zero base with negative exponent");
  Integer n = numerator(base), d = denominator(base);
  unsigned long long a = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Integer np = boost::multiprecision::pow(n, static_cast<unsigned>(a));
  Integer dp = boost::multiprecision::pow(d, static_cast<unsigned>(a));
  return e < 0 ? Rational(dp, np) : Rational(np, dp);
}

namespace {

bool parse_int_token(const std::string& s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Integer(s);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    Integer p;
    if (!parse_int_token(text, p))
      throw Error(Err::ParseError, "bad rational '" + text + "'");
    return Rational(p);
  }
  Integer p, q;
  if (!parse_int_token(text.substr(0, slash), p) ||
      !parse_int_token(text.substr(slash + 1), q))
    throw Error(Err::ParseError, "bad rational '" + text + "'");
  if (q == 0) throw Error(Err::ParseError, "zero denominator in '" + text + "'");
  return Rational(p, q);
}

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

GroupParams::GroupParams(int n_, const Rational& r_) : n(n_), r(r_) {
  if (n < 2) throw Error(Err::BadParams, "slope base n must be >= 2");
  if (r <= 0) throw Error(Err::BadParams, "right endpoint r must be positive");
  if (!in_A(r, *this)) throw Error(Err::BadParams, "r = " + rat_str(r) + " not in Z[1/" + std::to_string(n) + "]");
}

bool in_A(const Rational& q, const GroupParams& params) {
  Integer d = denominator(q);
  if (d == 1) return true;
  // d > 1 divides a power of n iff it divides n^e with e >= log2(d), since
  // no prime-power factor of d can exceed that exponent
  unsigned e = static_cast<unsigned>(boost::multiprecision::msb(d)) + 1;
  return boost::multiprecision::pow(Integer(params.n), e) % d == 0;
}

std::optional<long long> log_lambda(const Rational& q, const GroupParams& params) {
  if (q <= 0) throw Error(Err::NonPositive, "log of nonpositive value " + rat_str(q));
  if (q == 1) return 0;
  Integer n = params.n;
  // q = n^k has either trivial denominator (k > 0) or trivial numerator (k < 0).
  Integer v;
  bool up;
  if (denominator(q) == 1) {
    v = numerator(q);
    up = true;
  } else if (numerator(q) == 1) {
    v = denominator(q);
    up = false;
  } else {
    return std::nullopt;
  }
  long long k = 0;
  while (v % n == 0) {
    v /= n;
    ++k;
  }
  if (v != 1) return std::nullopt;
  return up ? k : -k;
}

Rational lambda_pow(const GroupParams& params, long long k) {
  return pow_rat(Rational(params.n), k);
}

}  // namespace plg
