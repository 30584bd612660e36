#pragma once

#include <string>
#include <vector>

#include "plg/plmap.hpp"

namespace plg {

// Text format, one map per block:
//   plmap r=<rational> n=<int>
//   <left> <slope> <intercept>      (one line per segment)
// Blank lines and lines starting with '#' are ignored.  Serialization always
// writes the canonical form, so serialize/parse round-trips are bit-exact.
std::string serialize_plmap(const PLMap& x);
PLMap parse_plmap(const std::string& text);
std::vector<PLMap> parse_plmaps(const std::string& text);

}  // namespace plg
