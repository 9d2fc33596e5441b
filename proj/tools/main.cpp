#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "ihopf/algebra.hpp"
#include "ihopf/format.hpp"
#include "ihopf/series.hpp"
#include "ihopf/trees.hpp"
#include "ihopf/words.hpp"

namespace {

using namespace ihopf;
using nlohmann::json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  int n = 0;  // 0 = infer from the input literal
  int order = 4;
  std::string format = "text";
  unsigned long long seed = 0;
  int max_leaves = 6;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--n", opt.n, "number of colors (default: inferred)");
  cmd->add_option("--order", opt.order, "series truncation order");
  cmd->add_option("--format", opt.format, "output format: text|json|latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  cmd->add_option("--seed", opt.seed, "seed for randomized checks");
  cmd->add_option("--max-leaves", opt.max_leaves, "enumeration safety cap");
  cmd->add_flag("--force", opt.force, "override the enumeration safety cap");
}

void check_cap(std::size_t leaves, const CommonOptions& opt) {
  if (static_cast<int>(leaves) > opt.max_leaves && !opt.force)
    throw UsageError("word length " + std::to_string(leaves) +
                     " exceeds the safety cap " + std::to_string(opt.max_leaves) +
                     " (use --force to override)");
}

std::string render_element(const AlgebraElement& a, const std::string& format) {
  if (format == "latex") return element_latex(a);
  if (format == "json") return element_json(a).dump();
  return element_text(a);
}

// antipode ---------------------------------------------------------------------

int run_antipode(const std::string& literal, const std::string& algorithm,
                 bool all, const CommonOptions& opt) {
  auto [upper, lower] = parse_generator_literal(literal);
  int n = opt.n > 0 ? opt.n : std::max(upper, lower.max_color());
  if (upper < 1 || upper > n || !lower.fits(n))
    throw UsageError("generator colors exceed N=" + std::to_string(n));
  if (lower.size() < 2) throw UsageError("antipode needs |u| >= 2");
  Generator g(upper, lower);

  const std::vector<std::pair<std::string, AntipodeAlgorithm>> algorithms = {
      {"geometric", AntipodeAlgorithm::geometric},
      {"recursive", AntipodeAlgorithm::recursive},
      {"breadth", AntipodeAlgorithm::breadth},
      {"ost", AntipodeAlgorithm::ost},
      {"reduced-h", AntipodeAlgorithm::reduced_h},
      {"reduced-l", AntipodeAlgorithm::reduced_l},
      {"reduced-r", AntipodeAlgorithm::reduced_r},
  };

  if (!all) {
    auto found = std::find_if(algorithms.begin(), algorithms.end(),
                              [&](const auto& p) { return p.first == algorithm; });
    if (found == algorithms.end()) throw UsageError("unknown algorithm " + algorithm);
    if (found->second != AntipodeAlgorithm::geometric &&
        found->second != AntipodeAlgorithm::recursive)
      check_cap(lower.size(), opt);
    std::cout << render_element(antipode_generator(g, n, found->second), opt.format)
              << "\n";
    return 0;
  }

  check_cap(lower.size(), opt);
  std::vector<AlgebraElement> s_h_results;
  for (const auto& [name, alg] : algorithms) {
    AlgebraElement value = antipode_generator(g, n, alg);
    std::cout << name << ": " << render_element(value, opt.format) << "\n";
    if (alg != AntipodeAlgorithm::reduced_l && alg != AntipodeAlgorithm::reduced_r)
      s_h_results.push_back(std::move(value));
  }
  int agree = 0;
  for (const auto& value : s_h_results)
    if (value == s_h_results.front()) ++agree;
  std::cout << "agreement: " << agree << "/" << s_h_results.size()
            << (agree == static_cast<int>(s_h_results.size()) ? " equal" : " UNEQUAL")
            << "\n";
  return agree == static_cast<int>(s_h_results.size()) ? 0 : kExitVerificationFailure;
}

// trees ------------------------------------------------------------------------

int run_trees(const std::string& word_text, int root_color, const std::string& action,
              const std::string& class_name, const CommonOptions& opt) {
  ColorWord u = ColorWord::parse(word_text);
  int n = opt.n > 0 ? opt.n : std::max(root_color, u.max_color());
  if (!u.fits(n) || root_color < 1 || root_color > n)
    throw UsageError("colors exceed N=" + std::to_string(n));
  check_cap(u.size(), opt);

  auto class_of = [](const std::string& name) {
    if (name == "layered") return TreeClass::layered;
    if (name == "reduced") return TreeClass::reduced;
    if (name == "simple") return TreeClass::simple;
    if (name == "ost") return TreeClass::ost;
    throw UsageError("unknown tree class " + name);
  };

  if (action == "count") {
    auto trees = enumerate_trees(u, root_color, n, class_of(class_name));
    std::cout << trees.size() << "\n";
    return 0;
  }
  if (action == "list") {
    auto trees = enumerate_trees(u, root_color, n, class_of(class_name));
    if (opt.format == "json") {
      json out = json::array();
      for (const auto& tree : trees) out.push_back(tree_json(tree));
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& tree : trees) std::cout << tree_term(tree) << "\n";
    }
    return 0;
  }
  if (action == "census") {
    std::cout << "LT=" << enumerate_trees(u, root_color, n, TreeClass::layered).size()
              << " RT=" << enumerate_trees(u, root_color, n, TreeClass::reduced).size()
              << " ST=" << enumerate_trees(u, root_color, n, TreeClass::simple).size()
              << " OST=" << enumerate_trees(u, root_color, n, TreeClass::ost).size()
              << "\n";
    return 0;
  }
  throw UsageError("unknown action " + action);
}

// verify -----------------------------------------------------------------------

struct CheckReport {
  bool ok = true;
  void line(const std::string& name, bool pass, long long count) {
    std::cout << (pass ? "ok   " : "FAIL ") << name << " (" << count << " checks)\n";
    ok = ok && pass;
  }
};

void for_each_word_of_length(int n, int length,
                             const std::function<void(const ColorWord&)>& visit) {
  std::vector<Color> current;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      visit(ColorWord(current));
      return;
    }
    for (Color c = 1; c <= n; ++c) {
      current.push_back(c);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
}

void for_each_generator(int n, int min_len, int max_len,
                        const std::function<void(const Generator&)>& visit) {
  for (int p = min_len; p <= max_len; ++p)
    for_each_word_of_length(n, p, [&](const ColorWord& u) {
      for (Color i = 1; i <= n; ++i) visit(Generator(i, u));
    });
}

int run_verify(const std::string& suite, const CommonOptions& opt) {
  int n = opt.n > 0 ? opt.n : 2;
  int cap = std::min(opt.max_leaves, opt.force ? opt.max_leaves : 6);
  CheckReport report;

  if (suite == "hopf-axioms") {
    long long checked = 0;
    bool pass = true;
    for_each_generator(n, 2, cap, [&](const Generator& g) {
      pass = pass && verify_antipode_axiom(g, n, AntipodeKind::H) &&
             verify_antipode_axiom(g, n, AntipodeKind::L) &&
             verify_antipode_axiom(g, n, AntipodeKind::R);
      ++checked;
    });
    report.line("antipode axioms (H, L, R)", pass, checked);

    checked = 0;
    pass = true;
    for_each_generator(n, 2, cap, [&](const Generator& g) {
      AlgebraElement e = AlgebraElement::generator(n, g.upper(), g.lower());
      pass = pass && antipode_h(antipode_l(e)) == e;
      ++checked;
    });
    report.line("S_H o S_L = id", pass, checked);

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> len(2, std::max(2, cap - 1));
    std::uniform_int_distribution<int> color(1, n);
    auto random_monomial = [&]() {
      std::vector<Generator> factors;
      int count = 1 + static_cast<int>(rng() % 2);
      for (int j = 0; j < count; ++j) {
        std::vector<Color> word;
        int p = len(rng);
        for (int k = 0; k < p; ++k) word.push_back(color(rng));
        factors.emplace_back(color(rng), ColorWord(std::move(word)));
      }
      return AlgebraElement::from_monomial(n, Monomial(std::move(factors)));
    };
    checked = 0;
    pass = true;
    for (int trial = 0; trial < 16; ++trial) {
      AlgebraElement a = random_monomial(), b = random_monomial();
      pass = pass && antipode_h(a * b) == antipode_h(b) * antipode_h(a);
      ++checked;
    }
    report.line("S(gh) = S(h)S(g) on random monomials", pass, checked);
  } else if (suite == "cancellation") {
    long long classes = 0, generators = 0;
    bool pass = true;
    for_each_generator(n, 2, cap, [&](const Generator& g) {
      for (const auto& simple_tree :
           enumerate_trees(g.lower(), g.upper(), n, TreeClass::simple)) {
        if (is_order_reduced(simple_tree)) continue;
        long long signed_sum = 0;
        for (const auto& tree : tree_class_of(simple_tree))
          signed_sum += layer_count(tree) % 2 == 0 ? 1 : -1;
        pass = pass && signed_sum == 0;
        ++classes;
      }
      pass = pass && antipode_breadth(g, n) == antipode_ost(g, n);
      ++generators;
    });
    report.line("signed layer sums over contractible classes", pass, classes);
    report.line("breadth-first antipode equals OST antipode", pass, generators);
  } else if (suite == "bijection") {
    long long reduced = 0, osts = 0;
    bool pass = true;
    for (int p = 1; p <= cap; ++p)
      for_each_word_of_length(n, p, [&](const ColorWord& u) {
        for (Color i = 1; i <= n; ++i) {
          auto rt = enumerate_trees(u, i, n, TreeClass::reduced);
          for (const auto& tree : rt) {
            pass = pass && contract_singular(expand_to_ost(tree)) == tree;
            ++reduced;
          }
          auto ost = enumerate_trees(u, i, n, TreeClass::ost);
          for (const auto& tree : ost) {
            pass = pass && is_ost(tree) &&
                   expand_to_ost(contract_singular(tree)) == tree;
            ++osts;
          }
          pass = pass && rt.size() == ost.size();
        }
      });
    report.line("rho o Psi = id on reduced trees", pass, reduced);
    report.line("Psi o rho = id on order-reduced simple trees", pass, osts);
  } else if (suite == "duality") {
    long long trees = 0;
    bool pass = true;
    for (int p = 1; p <= cap; ++p)
      for_each_word_of_length(n, p, [&](const ColorWord& u) {
        for (Color i = 1; i <= n; ++i)
          for (const auto& tree : enumerate_trees(u, i, n, TreeClass::reduced)) {
            PlanarTree grown = expand_to_ost(tree);
            pass = pass &&
                   omega(grown) == lambda_monomial(tree, DepthFirstVariant::right_up);
            pass = pass && layer_count(grown) == nonleaf_count(tree);
            auto lup = depth_first_order(tree, DepthFirstVariant::left_up,
                                         VertexFilter::all);
            auto rup_reflected = depth_first_order(
                reflect(tree), DepthFirstVariant::right_up, VertexFilter::all);
            std::vector<VertexPath> mapped;
            for (const auto& path : lup) mapped.push_back(reflect_path(tree, path));
            pass = pass && mapped == rup_reflected;
            ++trees;
          }
      });
    report.line("Omega o Psi = Lambda, layer counts, reflection duality", pass, trees);

    long long gens = 0;
    bool pass2 = true;
    for_each_generator(n, 2, std::min(cap, 4), [&](const Generator& g) {
      AlgebraElement e = AlgebraElement::generator(n, g.upper(), g.lower());
      pass2 = pass2 && map_s(antipode_h(map_s(e))) == antipode_l(e);
      pass2 = pass2 && map_t(antipode_h(map_t(e))) == antipode_r(e);
      pass2 = pass2 && map_alpha(map_s(e)) == map_t(e);
      ++gens;
    });
    report.line("transform identities sS_Hs = S_L, tS_Ht = S_R, t = alpha s", pass2,
                gens);
  } else {
    throw UsageError("unknown suite " + suite);
  }
  return report.ok ? 0 : kExitVerificationFailure;
}

// invert -----------------------------------------------------------------------

NCSeries retruncate(const NCSeries& series, int order) {
  NCSeries out(series.n_components(), order);
  for (const auto& [key, value] : series.stored())
    if (static_cast<int>(key.second.size()) <= order)
      out.set_coeff(key.first, key.second, value);
  return out;
}

int run_invert(const std::string& path, const std::string& side, bool order_given,
               const CommonOptions& opt) {
  json data;
  try {
    if (path == "-") {
      data = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open " + path);
      data = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed series JSON: ") + e.what());
  }
  NCSeries series = series_from_json(data);
  if (order_given) series = retruncate(series, opt.order);
  int order = series.truncation_order();

  auto print = [&](const char* label, const NCSeries& s) {
    if (opt.format == "json")
      std::cout << label << " " << series_json(s).dump() << "\n";
    else
      std::cout << label << "\n" << series_text(s);
  };

  if (side == "left" || side == "both") print("left-inverse", left_inverse(series));
  if (side == "right" || side == "both") print("right-inverse", right_inverse(series));
  if (side == "both") {
    NCSeries g = left_inverse(series), h = right_inverse(series);
    int first_difference = 0;
    for (int p = 2; p <= order && first_difference == 0; ++p)
      for_each_word_of_length(series.n_components(), p, [&](const ColorWord& w) {
        if (first_difference) return;
        for (int i = 1; i <= series.n_components(); ++i)
          if (g.coeff(i, w) != h.coeff(i, w)) {
            first_difference = p;
            return;
          }
      });
    if (first_difference)
      std::cout << "first disagreement at order " << first_difference << "\n";
    else
      std::cout << "identical through order " << order << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the incidence Hopf algebra of colored "
               "interval partitions"};
  app.require_subcommand(1);

  CommonOptions antipode_opt, trees_opt, verify_opt, invert_opt;

  auto* antipode_cmd = app.add_subcommand("antipode", "antipode of a generator Y^i_u");
  std::string literal, algorithm = "recursive";
  bool all = false;
  antipode_cmd->add_option("generator", literal, "generator literal, e.g. Y^1_1234")
      ->required();
  antipode_cmd->add_option("--algorithm", algorithm,
                           "geometric|recursive|breadth|ost|reduced-h|reduced-l|reduced-r");
  antipode_cmd->add_flag("--all", all, "run every algorithm and report agreement");
  add_common(antipode_cmd, antipode_opt);

  auto* trees_cmd = app.add_subcommand("trees", "enumerate colored tree classes");
  std::string word_text, action, class_name = "layered";
  int root_color = 0;
  trees_cmd->add_option("word", word_text, "leaf word, e.g. 1111")->required();
  trees_cmd->add_option("root", root_color, "root color")->required();
  trees_cmd->add_option("action", action, "count|list|census")->required();
  trees_cmd->add_option("--class", class_name, "layered|reduced|simple|ost");
  add_common(trees_cmd, trees_opt);

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "hopf-axioms|cancellation|bijection|duality")
      ->required();
  add_common(verify_cmd, verify_opt);

  auto* invert_cmd = app.add_subcommand("invert", "invert a series (JSON file or -)");
  std::string series_path, side = "both";
  invert_cmd->add_option("series", series_path, "series JSON path or - for stdin")
      ->required();
  invert_cmd->add_option("--side", side, "left|right|both")
      ->check(CLI::IsMember({"left", "right", "both"}));
  add_common(invert_cmd, invert_opt);

  try {
    app.parse(argc, argv);
    if (antipode_cmd->parsed())
      return run_antipode(literal, algorithm, all, antipode_opt);
    if (trees_cmd->parsed())
      return run_trees(word_text, root_color, action, class_name, trees_opt);
    if (verify_cmd->parsed()) return run_verify(suite, verify_opt);
    if (invert_cmd->parsed())
      return run_invert(series_path, side, invert_cmd->count("--order") > 0,
                        invert_opt);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
