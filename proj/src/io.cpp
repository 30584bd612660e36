#include "plg/io.hpp"

#include <sstream>

namespace plg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

Rational parse_at_line(const std::string& text, int lineno) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error(Err::ParseError, e.raw() + " (line " + std::to_string(lineno) + ")");
  }
}

}  // namespace

std::string serialize_plmap(const PLMap& x) {
  std::ostringstream os;
  os << "plmap r=" << x.params().r << " n=" << x.params().n << "\n";
  for (const Segment& s : x.segments())
    os << s.left << " " << s.slope << " " << s.intercept << "\n";
  return os.str();
}

std::vector<PLMap> parse_plmaps(const std::string& text) {
  std::vector<PLMap> maps;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;

  bool in_map = false;
  GroupParams params(2, Rational(1));
  std::vector<Segment> segs;
  int header_line = 0;

  auto flush = [&]() {
    if (!in_map) return;
    if (segs.empty())
      throw Error(Err::ParseError, "map with no segments (line " + std::to_string(header_line) + ")");
    maps.push_back(PLMap::make(params, std::move(segs)));
    segs.clear();
    in_map = false;
  };

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "plmap") {
      flush();
      if (toks.size() != 3 || toks[1].rfind("r=", 0) != 0 || toks[2].rfind("n=", 0) != 0)
        throw Error(Err::ParseError, "bad header (line " + std::to_string(lineno) + ")");
      Rational r = parse_at_line(toks[1].substr(2), lineno);
      Rational n = parse_at_line(toks[2].substr(2), lineno);
      if (!is_integer(n) || n < 2 || n > 1000000)
        throw Error(Err::ParseError, "bad n (line " + std::to_string(lineno) + ")");
      params = GroupParams(static_cast<int>(num(n)), r);
      header_line = lineno;
      in_map = true;
      continue;
    }
    if (!in_map)
      throw Error(Err::ParseError, "segment before header (line " + std::to_string(lineno) + ")");
    if (toks.size() != 3)
      throw Error(Err::ParseError, "expected 3 fields (line " + std::to_string(lineno) + ")");
    segs.push_back(Segment{parse_at_line(toks[0], lineno), parse_at_line(toks[1], lineno),
                           parse_at_line(toks[2], lineno)});
  }
  flush();
  return maps;
}

PLMap parse_plmap(const std::string& text) {
  auto maps = parse_plmaps(text);
  if (maps.size() != 1)
    throw Error(Err::ParseError, "expected exactly one map, got " + std::to_string(maps.size()));
  return maps[0];
}

}  // namespace plg
