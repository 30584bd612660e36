// plg: command-line front end for the piecewise-affine group library.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "plg/arith.hpp"
#include "plg/centralizer.hpp"
#include "plg/commdec.hpp"
#include "plg/elements.hpp"
#include "plg/io.hpp"
#include "plg/verify.hpp"
#include "plg/wreath.hpp"

namespace {

using namespace plg;

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Err::ParseError, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

PLMap load_map(const std::string& path) { return parse_plmap(read_text(path)); }

void print_map(const PLMap& x, const std::string& name = "") {
  if (!name.empty()) std::cout << "# " << name << "\n";
  std::cout << serialize_plmap(x);
}

GroupParams params_of(int n, const std::string& r) {
  return GroupParams(n, parse_rational(r));
}

std::uint64_t env_seed() {
  const char* s = std::getenv("PLGROUPS_SEED");
  if (!s || !*s) return 1;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  return (end && *end == '\0') ? v : 1;
}

// word tokens: name or name^exp over the named (2,1) generators
PLMap eval_word(const std::vector<std::string>& args) {
  std::vector<std::string> tokens;
  for (const std::string& arg : args) {
    std::istringstream split(arg);
    for (std::string tok; split >> tok;) tokens.push_back(tok);
  }
  GroupParams params(2, Rational(1));
  PLMap x0 = thompson_x0(params), x1 = thompson_x1(params);
  auto [a, b] = thompson_ab(params);
  PLMap acc = identity_map(params);
  for (const std::string& tok : tokens) {
    std::string name = tok;
    long long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        std::size_t used = 0;
        exp = std::stoll(tok.substr(caret + 1), &used);
        if (caret + 1 + used != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw Error(Err::ParseError, "bad exponent in token '" + tok + "'");
      }
    }
    const PLMap* gen = nullptr;
    if (name == "x0") gen = &x0;
    else if (name == "x1") gen = &x1;
    else if (name == "a") gen = &a;
    else if (name == "b") gen = &b;
    else throw Error(Err::ParseError, "unknown generator '" + name + "'");
    acc = compose(acc, power(*gen, exp));
  }
  return acc;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names =
      suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool all_ok = true;
  for (const std::string& name : names) {
    for (const Check& c : run_suite(name, seed)) {
      if (c.ok) {
        std::cout << "PASS: " << name << ": " << c.name << "\n";
      } else {
        std::cout << "FAIL: " << name << ": " << c.name << " (" << c.detail << ")\n";
        all_ok = false;
      }
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact piecewise-affine permutation groups"};
  app.require_subcommand(1);

  int n = 2;
  std::string r = "1";

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "slope base (n >= 2)");
    cmd->add_option("--r", r, "domain length, rational p/q");
  };

  // gens
  auto* c_gens = app.add_subcommand("gens", "emit the named generators");
  std::string alpha0 = "";
  add_params(c_gens);
  c_gens->add_option("--alpha0", alpha0, "base orbit point for general (n, r); default r/n");

  // bump
  auto* c_bump = app.add_subcommand("bump", "element with prescribed support and endpoint slopes");
  std::string b_alpha, b_beta;
  long long b_p = 1, b_q = 1;
  add_params(c_bump);
  c_bump->add_option("--alpha", b_alpha, "support left endpoint")->required();
  c_bump->add_option("--beta", b_beta, "support right endpoint")->required();
  c_bump->add_option("--p", b_p, "left slope exponent: slope n^p at alpha");
  c_bump->add_option("--q", b_q, "right slope exponent: slope n^-q at beta");

  // ladder
  auto* c_ladder = app.add_subcommand("ladder", "orbit points alpha_k = (alpha0)a^k");
  std::string l_file, l_alpha0;
  long long l_kmin = -3, l_kmax = 3;
  add_params(c_ladder);
  c_ladder->add_option("file", l_file, "serialized map a; default: the named generator a");
  c_ladder->add_option("--alpha0", l_alpha0, "orbit base point; default r/n");
  c_ladder->add_option("--kmin", l_kmin, "lowest k");
  c_ladder->add_option("--kmax", l_kmax, "highest k");

  // compose
  auto* c_compose = app.add_subcommand("compose", "compose maps left to right (left acts first)");
  std::vector<std::string> comp_files;
  c_compose->add_option("files", comp_files, "map files; one file may hold several maps")
      ->required();

  // inverse
  auto* c_inverse = app.add_subcommand("inverse", "invert a map");
  std::string inv_file;
  c_inverse->add_option("file", inv_file, "map file")->required();

  // eval-word
  auto* c_word = app.add_subcommand("eval-word", "evaluate a word over x0, x1, a, b");
  std::vector<std::string> word_tokens;
  std::string word_at;
  c_word->add_option("word", word_tokens, "tokens like x0 x1^-1")->required();
  c_word->add_option("--at", word_at, "print the image of this point instead of the map");

  // classify
  auto* c_classify = app.add_subcommand("classify", "continuity class of a map");
  std::string cls_file;
  c_classify->add_option("file", cls_file, "map file")->required();

  // support
  auto* c_support = app.add_subcommand("support", "support of a map");
  std::string sup_file;
  c_support->add_option("file", sup_file, "map file")->required();

  // encode / decode / add / divides
  auto* c_encode = app.add_subcommand("encode", "integer to endpoint-slope code");
  long long enc_m = 1;
  add_params(c_encode);
  c_encode->add_option("m", enc_m, "positive integer")->required();

  auto* c_decode = app.add_subcommand("decode", "endpoint-slope code to integer");
  std::string dec_file;
  c_decode->add_option("file", dec_file, "map file")->required();

  auto* c_add = app.add_subcommand("add", "compose two codes; value adds");
  std::string add_f1, add_f2;
  c_add->add_option("f1", add_f1, "first code file")->required();
  c_add->add_option("f2", add_f2, "second code file")->required();

  auto* c_div = app.add_subcommand("divides", "divisibility witness between two codes");
  std::string div_f1, div_f2;
  c_div->add_option("f1", div_f1, "divisor code file")->required();
  c_div->add_option("f2", div_f2, "dividend code file")->required();

  // wreath-decompose
  auto* c_wreath = app.add_subcommand("wreath-decompose", "coordinates over the standard pair");
  std::string wr_file, wr_alpha0;
  add_params(c_wreath);
  c_wreath->add_option("file", wr_file, "map file")->required();
  c_wreath->add_option("--alpha0", wr_alpha0, "orbit base for general (n, r); default r/n");

  // two-commutators
  auto* c_two = app.add_subcommand("two-commutators", "rewrite a commutator product as two");
  std::string two_file;
  c_two->add_option("file", two_file, "stream of serialized maps x1 y1 x2 y2 ...")->required();

  // partition
  auto* c_part = app.add_subcommand("partition", "fixed-point structure of a continuous map");
  std::string part_file;
  c_part->add_option("file", part_file, "map file")->required();

  // verify
  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = env_seed();
  c_verify->add_option("--suite", suite, "suite name or 'all'")->required();
  c_verify->add_option("--seed", seed, "randomness seed (default: PLGROUPS_SEED or 1)");

  // plot
  auto* c_plot = app.add_subcommand("plot", "TSV samples (t, (t)x) of a map");
  std::string plot_file;
  long long plot_samples = 256;
  bool plot_decimal = false;
  c_plot->add_option("file", plot_file, "map file")->required();
  c_plot->add_option("--samples", plot_samples, "uniform sample count");
  c_plot->add_flag("--decimal", plot_decimal, "append approximate columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*c_gens) {
      GroupParams params = params_of(n, r);
      if (params.n == 2 && params.r == 1) {
        print_map(thompson_x0(params), "x0");
        print_map(thompson_x1(params), "x1");
        auto [a, b] = thompson_ab(params);
        print_map(a, "a");
        print_map(b, "b");
      } else {
        Rational a0 = alpha0.empty() ? params.r / params.n : parse_rational(alpha0);
        auto [a, b] = general_ab(params, a0);
        print_map(a, "a");
        print_map(b, "b");
      }
    } else if (*c_bump) {
      GroupParams params = params_of(n, r);
      print_map(bump(params, parse_rational(b_alpha), parse_rational(b_beta), b_p, b_q));
    } else if (*c_ladder) {
      GroupParams params = params_of(n, r);
      PLMap a = identity_map(params);
      if (!l_file.empty()) {
        a = load_map(l_file);
      } else if (params.n == 2 && params.r == 1) {
        a = thompson_ab(params).first;
      } else {
        a = general_ab(params, params.r / params.n).first;
      }
      Rational a0 = l_alpha0.empty()
                        ? (params.n == 2 && params.r == 1 ? Rational(1, 2)
                                                          : params.r / params.n)
                        : parse_rational(l_alpha0);
      Ladder lad = ladder(a.params(), a, a0, l_kmin, l_kmax);
      for (const auto& [k, v] : lad.points) std::cout << k << "\t" << rat_str(v) << "\n";
    } else if (*c_compose) {
      std::vector<PLMap> maps;
      for (const std::string& f : comp_files)
        for (PLMap& x : parse_plmaps(read_text(f))) maps.push_back(std::move(x));
      if (maps.empty()) throw Error(Err::ParseError, "no maps given");
      print_map(compose(maps));
    } else if (*c_inverse) {
      print_map(inverse(load_map(inv_file)));
    } else if (*c_word) {
      PLMap w = eval_word(word_tokens);
      if (word_at.empty()) print_map(w);
      else std::cout << rat_str(eval(w, parse_rational(word_at))) << "\n";
    } else if (*c_classify) {
      std::cout << map_class_name(classify(load_map(cls_file))) << "\n";
    } else if (*c_support) {
      std::cout << interval_set_str(support(load_map(sup_file))) << "\n";
    } else if (*c_encode) {
      print_map(encode(params_of(n, r), enc_m).element);
    } else if (*c_decode) {
      std::cout << decode(load_map(dec_file)) << "\n";
    } else if (*c_add) {
      PLMap sum = compose(load_map(add_f1), load_map(add_f2));
      std::cout << "# value=" << decode(sum) << "\n";
      print_map(sum);
    } else if (*c_div) {
      PLMap fx = load_map(div_f1), fy = load_map(div_f2);
      ArithCode x{fx, decode(fx)}, y{fy, decode(fy)};
      auto wit = divisibility_witness(x, y);
      if (!wit) {
        std::cout << "# divisible=false\n";
        return 1;
      }
      std::cout << "# divisible=true k=" << wit->k << "\n";
      print_map(wit->z, "z");
      print_map(wit->w, "w");
    } else if (*c_wreath) {
      GroupParams params = params_of(n, r);
      PLMap g = load_map(wr_file);
      PLMap a = identity_map(params), b = a;
      if (params.n == 2 && params.r == 1) {
        std::tie(a, b) = thompson_ab(params);
      } else {
        Rational a0 = wr_alpha0.empty() ? params.r / params.n : parse_rational(wr_alpha0);
        std::tie(a, b) = general_ab(params, a0);
      }
      WreathElem w = wreath_from_pl(g, a, b);
      std::cout << "shift=" << w.shift << "; coeffs={";
      bool first = true;
      for (const auto& [k, e] : w.coeffs) {
        if (!first) std::cout << ",";
        std::cout << k << ":" << e;
        first = false;
      }
      std::cout << "}\n";
    } else if (*c_two) {
      std::vector<PLMap> maps = parse_plmaps(read_text(two_file));
      if (maps.size() % 2 != 0)
        throw Error(Err::ParseError, "expected an even number of maps (pairs x_i y_i)");
      CommutatorList c;
      for (std::size_t i = 0; i + 1 < maps.size(); i += 2)
        c.pairs.push_back({maps[i], maps[i + 1]});
      CommutatorList out = two_commutators(c);
      for (std::size_t i = 0; i < out.pairs.size(); ++i) {
        print_map(out.pairs[i].first, "pair " + std::to_string(i + 1) + " x");
        print_map(out.pairs[i].second, "pair " + std::to_string(i + 1) + " y");
      }
      bool ok = equals(product_of_commutators(out), product_of_commutators(c));
      std::cout << "verified: " << (ok ? "true" : "false") << "\n";
      if (!ok) return 1;
    } else if (*c_part) {
      PartitionDescriptor d = partition(load_map(part_file));
      std::cout << "cuts:";
      for (const Rational& c : d.cut_points) std::cout << " " << rat_str(c);
      std::cout << "\n";
      for (const PartitionInterval& iv : d.intervals) {
        std::cout << "interval (" << rat_str(iv.lo) << "," << rat_str(iv.hi) << "): ";
        if (iv.kind == IntervalKind::identity) {
          std::cout << "identity\n";
        } else {
          std::cout << "rigid fix_avoids_A=" << (iv.fix_avoids_A ? "true" : "false") << "\n";
        }
      }
    } else if (*c_verify) {
      return run_verify(suite, seed);
    } else if (*c_plot) {
      PLMap x = load_map(plot_file);
      if (plot_samples < 1) throw Error(Err::OutOfRange, "samples must be positive");
      std::set<Rational> ts;
      for (long long i = 0; i < plot_samples; ++i)
        ts.insert(x.params().r * Rational(i, plot_samples));
      for (const Segment& s : x.segments()) ts.insert(s.left);
      if (plot_decimal) std::cout << "# t\tx\tt_dec\tx_dec\n";
      else std::cout << "# t\tx\n";
      for (const Rational& t : ts) {
        Rational v = eval(x, t);
        std::cout << rat_str(t) << "\t" << rat_str(v);
        if (plot_decimal)
          std::cout << "\t" << static_cast<double>(t) << "\t" << static_cast<double>(v);
        std::cout << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
