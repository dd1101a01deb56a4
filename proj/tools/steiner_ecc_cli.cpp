// steiner-ecc: command-line front end for the steiner_ecc library.
//
// Exit codes (stable):
//   0 success, 1 usage error, 2 input parse/validation failure,
//   3 infeasible construction or sequence, 4 transformation error,
//   5 verification failure, 6 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steiner_ecc/report_io.hpp"
#include "steiner_ecc/steiner_ecc.hpp"

namespace {

using namespace steiner_ecc;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kInfeasible = 3,
  kTransform = 4,
  kVerifyFail = 5,
  kCap = 6,
};

/// Flag combinations CLI11 cannot express; exits with kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap;

  // Tree input: exactly one of these.
  std::string input;
  std::string prufer;
  bool random = false;

  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::string pi;
  std::string segments;
  std::string theorem;
  std::string group;
  std::string family;
  std::string output;
  std::size_t site = 0;
  std::vector<std::string> sequences;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible:
    case ErrorCode::InfeasibleSequence:
    case ErrorCode::LengthMismatch:
    case ErrorCode::SumMismatch:
    case ErrorCode::Incomparable:
      return kInfeasible;
    case ErrorCode::InvalidSite:
    case ErrorCode::NotGeneralizedStar:
    case ErrorCode::AlreadyBalanced:
      return kTransform;
    case ErrorCode::CapExceeded:
      return kCap;
    default:
      return kInput;
  }
}

Tree load_tree(const RunConfig& cfg) {
  const int sources = !cfg.input.empty() + !cfg.prufer.empty() + cfg.random;
  if (sources != 1) {
    throw UsageError("give exactly one of --input, --prufer, --random");
  }
  if (cfg.random) {
    if (cfg.n < 1) throw UsageError("--random needs --n >= 1");
    std::mt19937_64 rng(cfg.seed);
    return random_tree(cfg.n, rng);
  }
  if (!cfg.prufer.empty()) {
    const std::string text = cfg.prufer == "-" ? std::string() : cfg.prufer;
    return from_prufer(parse_prufer(text));
  }
  if (cfg.input == "-") return read_edge_list(std::cin);
  std::ifstream in(cfg.input);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + cfg.input);
  return read_edge_list(in);
}

std::string seq_str(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Writes to --output when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + cfg.output);
  out << text;
}

/// Every JSON document records the seed it was produced under.
std::string json_text(const RunConfig& cfg, json j) {
  j["seed"] = cfg.seed;
  return j.dump(2) + "\n";
}

void emit_tree(const RunConfig& cfg, const Tree& t, const std::string& label) {
  if (cfg.format == "json") {
    emit(cfg, json_text(cfg, {{"tree", label},
                              {"n", t.order()},
                              {"edges", to_json(t.edges())}}));
    return;
  }
  emit(cfg, "# " + label + ", n=" + std::to_string(t.order()) + "\n" +
                edge_list_string(t));
}

// ---------------------------------------------------------------------------

int cmd_compute(const RunConfig& cfg) {
  const Tree t = load_tree(cfg);
  const std::size_t n = t.order();
  const auto pi = degree_sequence(t);
  const std::string segs = n >= 2 ? segment_sequence(t).str() : "()";
  std::vector<std::size_t> ecc3;
  std::optional<Rational> avg;
  if (n >= 3) {
    ecc3 = ecc3_all(t);
    avg = aecc3(t);
  }
  std::ostringstream out;
  if (cfg.format == "json") {
    json j{{"n", n},
           {"degree_sequence", pi.values()},
           {"segment_sequence", n >= 2 ? segment_sequence(t).values()
                                       : std::vector<std::size_t>{}},
           {"diameter", diameter(t)},
           {"radius", radius(t)},
           {"ecc3", ecc3},
           {"aecc3", avg ? to_json(*avg) : json(nullptr)},
           {"canonical", canonical_form(t)}};
    out << json_text(cfg, std::move(j));
  } else if (cfg.format == "csv") {
    out << "n,degree_sequence,segment_sequence,diameter,radius,aecc3,aecc3_decimal\n";
    out << n << ",\"" << pi.str() << "\",\"" << segs << "\"," << diameter(t) << ','
        << radius(t) << ',' << (avg ? avg->str() : "") << ','
        << (avg ? avg->decimal() : "") << '\n';
  } else {
    out << "n: " << n << '\n'
        << "degree sequence: " << pi.str() << '\n'
        << "segment sequence: " << segs << '\n'
        << "diameter: " << diameter(t) << '\n'
        << "radius: " << radius(t) << '\n';
    if (avg) {
      out << "ecc3:";
      for (Vertex v = 0; v < n; ++v) out << ' ' << v << '=' << ecc3[v];
      out << '\n' << "aecc3: " << avg->str() << " (" << avg->decimal() << ")\n";
    } else {
      out << "aecc3: undefined for n < 3\n";
    }
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_construct(const RunConfig& cfg) {
  const std::string& f = cfg.family;
  Tree t;
  std::string label = f;
  if (f == "caterpillar") {
    const DegreeSequence pi(parse_integer_list(cfg.pi));
    t = caterpillar_from_degree_sequence(pi);
    label += " " + pi.str();
  } else if (f == "star") {
    const SegmentSequence legs(parse_integer_list(cfg.segments));
    t = generalized_star(legs);
    label = "generalized-star S" + legs.str();
  } else if (f == "balanced-star") {
    t = balanced_star(cfg.n, cfg.m);
    label += " ST(" + std::to_string(cfg.n) + "," + std::to_string(cfg.m) + ")";
  } else if (f == "path") {
    if (cfg.n < 2) throw Error(ErrorCode::Infeasible, "path needs --n >= 2");
    t = generalized_star(SegmentSequence({cfg.n - 1}));
    label += " P" + std::to_string(cfg.n);
  } else if (f == "broom") {
    t = broom(cfg.n, cfg.delta);
    label += " n=" + std::to_string(cfg.n) + " Delta=" + std::to_string(cfg.delta);
  } else if (f == "cnk") {
    t = caterpillar_Cnk(cfg.n, cfg.k);
    label += " n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k);
  } else if (f == "cndeltak") {
    t = caterpillar_CnDeltak(cfg.n, cfg.delta, cfg.k);
    label += " n=" + std::to_string(cfg.n) + " Delta=" + std::to_string(cfg.delta) +
             " k=" + std::to_string(cfg.k);
  } else {
    std::cerr << "unknown family '" << f << "'\n";
    return kUsage;
  }
  emit_tree(cfg, t, label);
  return kOk;
}

int cmd_transform(const RunConfig& cfg, const std::string& op) {
  const Tree t = load_tree(cfg);
  std::vector<TransformOutcome> chain;
  try {
    if (op == "sigma") {
      const auto sites = find_sigma_sites(t);
      if (cfg.site >= sites.size()) {
        throw Error(ErrorCode::InvalidSite, "tree has " + std::to_string(sites.size()) +
                                                " sigma site(s); asked for #" +
                                                std::to_string(cfg.site));
      }
      chain.push_back(sigma_transform(t, sites[cfg.site]));
    } else if (op == "pi") {
      const auto sites = find_pi_sites(t);
      if (cfg.site >= sites.size()) {
        throw Error(ErrorCode::InvalidSite, "tree has " + std::to_string(sites.size()) +
                                                " pi site(s); asked for #" +
                                                std::to_string(cfg.site));
      }
      chain.push_back(pi_transform(t, sites[cfg.site]));
    } else if (op == "sigma-reduce") {
      chain = reduce_to_caterpillar(t);
    } else if (op == "star-reduce") {
      chain = reduce_to_generalized_star(t);
    } else if (op == "rebalance") {
      chain.push_back(rebalance_step(t));
    } else if (op == "balance") {
      chain = balance_generalized_star(t);
    } else {
      std::cerr << "unknown transform '" << op << "'\n";
      return kUsage;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CapExceeded) throw;
    std::cerr << "error: " << e.what() << '\n';
    return kTransform;
  }
  const Tree& final_tree = chain.empty() ? t : chain.back().after;
  const Rational start = t.order() >= 3 ? aecc3(t) : Rational(0);
  std::ostringstream out;
  if (cfg.format == "json") {
    json steps = json::array();
    for (const auto& o : chain) steps.push_back(to_json(o));
    const Rational end = chain.empty() ? start : chain.back().aecc3_after;
    out << json_text(cfg, {{"transform", op},
                {"input", to_json(t.edges())},
                {"steps", steps},
                {"final", to_json(final_tree.edges())},
                {"final_is_caterpillar", is_caterpillar(final_tree)},
                {"final_is_generalized_star", is_generalized_star(final_tree)},
                {"aecc3_start", to_json(start)},
                {"aecc3_end", to_json(end)},
                {"cumulative_delta", to_json(end - start)}});
  } else if (cfg.format == "csv") {
    out << "step,kind,site,aecc3_before,aecc3_after,cumulative_delta\n";
    std::size_t i = 0;
    for (const auto& o : chain) {
      out << ++i << ',' << to_string(o.kind) << ",\"" << o.site << "\","
          << o.aecc3_before.str() << ',' << o.aecc3_after.str() << ','
          << (o.aecc3_after - start).str() << '\n';
    }
  } else {
    out << "transform " << op << ": " << chain.size() << " step(s)\n";
    std::size_t i = 0;
    for (const auto& o : chain) {
      out << "step " << ++i << " [" << to_string(o.kind) << "] " << o.site << "\n"
          << "  aecc3 " << o.aecc3_before << " -> " << o.aecc3_after << "  delta "
          << o.delta() << "  cumulative " << (o.aecc3_after - start) << '\n';
    }
    out << "caterpillar: " << (is_caterpillar(final_tree) ? "yes" : "no")
        << ", generalized star: " << (is_generalized_star(final_tree) ? "yes" : "no")
        << '\n'
        << "# final tree\n"
        << edge_list_string(final_tree);
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_bound(const RunConfig& cfg) {
  Rational value;
  std::string what;
  if (!cfg.pi.empty()) {
    const DegreeSequence pi(parse_integer_list(cfg.pi));
    value = formula_thm1_bound(pi);
    what = "degree sequence " + pi.str();
  } else {
    const FamilyParams p{cfg.n, cfg.delta, cfg.k};
    if (cfg.family == "tn") {
      value = formula_cor_bounds(Family::Tn, p);
    } else if (cfg.family == "tndelta") {
      value = formula_cor_bounds(Family::TnDelta, p);
    } else if (cfg.family == "tnk") {
      value = formula_cor_bounds(Family::Tnk, p);
    } else if (cfg.family == "tndeltak") {
      value = formula_cor_bounds(Family::TnDeltak, p);
    } else {
      std::cerr << "bound needs --pi or --family tn|tndelta|tnk|tndeltak\n";
      return kUsage;
    }
    what = "family " + cfg.family;
  }
  if (cfg.format == "json") {
    emit(cfg, json_text(cfg, {{"input", what}, {"bound", to_json(value)}}));
  } else {
    emit(cfg, "max aecc3 for " + what + ": " + value.str() + " (" + value.decimal() +
                  ")\n");
  }
  return kOk;
}

int cmd_majorize(const RunConfig& cfg) {
  if (cfg.sequences.size() != 2) {
    std::cerr << "majorize needs two comma-separated sequences\n";
    return kUsage;
  }
  const auto x = parse_integer_list(cfg.sequences[0]);
  const auto y = parse_integer_list(cfg.sequences[1]);
  const bool xy = majorizes(x, y);
  const bool yx = majorizes(y, x);
  json j{{"x", x}, {"y", y}, {"x_majorizes_y", xy}, {"y_majorizes_x", yx}};
  std::ostringstream out;
  out << seq_str(x) << (xy ? " majorizes " : " does not majorize ") << seq_str(y) << '\n'
      << seq_str(y) << (yx ? " majorizes " : " does not majorize ") << seq_str(x) << '\n';
  // Bound comparison only applies to tree degree sequences with a branch vertex.
  try {
    const DegreeSequence a(x), b(y);
    if (a.max_degree() >= 3 && b.max_degree() >= 3 && (xy || yx)) {
      const auto c = compare_extremal(a, b);
      const auto ba = formula_thm1_bound(a), bb = formula_thm1_bound(b);
      const char* rel = c.bound_order < 0 ? "<" : c.bound_order > 0 ? ">" : "=";
      out << "bound" << a.str() << " = " << ba << " " << rel << " " << bb << " = bound"
          << b.str() << (c.strict_expected ? " (strict expected)" : "") << '\n';
      j["bound_x"] = to_json(ba);
      j["bound_y"] = to_json(bb);
      j["strict_expected"] = c.strict_expected;
    }
  } catch (const Error&) {
  }
  emit(cfg, cfg.format == "json" ? json_text(cfg, std::move(j)) : out.str());
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  const std::size_t cap = enumeration_cap(cfg.cap);
  const auto trees = enumerate_free_trees(cfg.n, cap);
  std::ostringstream out;
  if (!cfg.group.empty()) {
    const auto key = parse_group_key(cfg.group);
    if (!key) {
      std::cerr << "unknown group key '" << cfg.group << "'\n";
      return kUsage;
    }
    const auto groups = group_trees(trees, *key);
    if (cfg.format == "json") {
      json classes = json::array();
      for (const auto& [k, members] : groups) {
        classes.push_back({{"key", format_class_key(k)}, {"size", members.size()}});
      }
      out << json_text(cfg, {{"n", cfg.n},
                             {"group", cfg.group},
                             {"total", trees.size()},
                             {"classes", classes}});
    } else {
      out << "key,size\n";
      for (const auto& [k, members] : groups) {
        out << '"' << format_class_key(k) << "\"," << members.size() << '\n';
      }
      if (cfg.format == "text") out << "# total " << trees.size() << '\n';
    }
  } else if (cfg.format == "json") {
    json list = json::array();
    for (const Tree& t : trees) {
      list.push_back({{"canonical", canonical_form(t)}, {"edges", to_json(t.edges())}});
    }
    out << json_text(cfg, {{"n", cfg.n}, {"count", trees.size()}, {"trees", list}});
  } else {
    std::size_t i = 0;
    for (const Tree& t : trees) {
      out << "# tree " << i++ << " " << canonical_form(t) << '\n';
      write_edge_list(out, t);
      out << '\n';
    }
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const std::size_t cap = enumeration_cap(cfg.cap);
  std::vector<Theorem> which;
  if (cfg.theorem == "all") {
    which.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  } else if (auto th = parse_theorem(cfg.theorem)) {
    which.push_back(*th);
  } else {
    std::cerr << "unknown theorem '" << cfg.theorem << "'\n";
    return kUsage;
  }
  bool ok = true;
  std::ostringstream out;
  json reports = json::array();
  bool header = true;
  for (Theorem th : which) {
    const auto rep = verify(th, cfg.n, cap);
    ok = ok && rep.passed();
    if (cfg.format == "json") {
      reports.push_back(to_json(rep));
    } else if (cfg.format == "csv") {
      std::ostringstream part;
      write_csv(part, rep);
      auto s = part.str();
      if (!header) s = s.substr(s.find('\n') + 1);
      header = false;
      out << s;
    } else {
      write_text(out, rep);
    }
  }
  if (cfg.format == "json") {
    // A single theorem emits its report; "all" wraps them.
    if (reports.size() == 1) {
      out << json_text(cfg, reports.front());
    } else {
      out << json_text(cfg, {{"n", cfg.n}, {"passed", ok}, {"reports", reports}});
    }
  }
  emit(cfg, out.str());
  return ok ? kOk : kVerifyFail;
}

void add_tree_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "edge-list file ('-' for stdin)");
  sub->add_option("--prufer", cfg.prufer, "inline Prüfer code, comma-separated");
  sub->add_flag("--random", cfg.random, "Prüfer-uniform random tree of order --n");
  sub->add_option("--n", cfg.n, "order for --random");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner 3-eccentricity toolkit for trees"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized inputs")->capture_default_str();
  app.add_option("--cap", cfg.cap, "enumeration cap (overrides STEINER_ECC_CAP)");
  app.add_option("--output", cfg.output, "write result to a file instead of stdout");
  app.fallthrough();

  auto* compute = app.add_subcommand("compute", "metrics of one tree");
  add_tree_input(compute, cfg);

  auto* construct = app.add_subcommand("construct", "build an extremal tree");
  construct
      ->add_option("family", cfg.family,
                   "caterpillar|star|balanced-star|path|broom|cnk|cndeltak")
      ->required();
  construct->add_option("--n", cfg.n);
  construct->add_option("--m", cfg.m);
  construct->add_option("--k", cfg.k);
  construct->add_option("--delta", cfg.delta);
  construct->add_option("--pi", cfg.pi, "degree sequence, comma-separated");
  construct->add_option("--segments", cfg.segments, "leg lengths, comma-separated");

  std::string op;
  auto* transform = app.add_subcommand("transform", "apply a tree transformation");
  transform
      ->add_option("op", op, "sigma|sigma-reduce|pi|star-reduce|rebalance|balance")
      ->required();
  add_tree_input(transform, cfg);
  transform->add_option("--site", cfg.site, "site index for sigma/pi")
      ->capture_default_str();

  auto* bound = app.add_subcommand("bound", "closed-form maximum aecc3");
  bound->add_option("--pi", cfg.pi, "degree sequence, comma-separated");
  bound->add_option("--family", cfg.family, "tn|tndelta|tnk|tndeltak");
  bound->add_option("--n", cfg.n);
  bound->add_option("--k", cfg.k);
  bound->add_option("--delta", cfg.delta);

  auto* majorize = app.add_subcommand("majorize", "majorization test of two sequences");
  majorize->add_option("sequences", cfg.sequences, "two comma-separated sequences")
      ->expected(2);

  auto* enumerate = app.add_subcommand("enumerate", "all free trees of order n");
  enumerate->add_option("--n", cfg.n)->required();
  enumerate->add_option("--group", cfg.group,
                        "degree_seq|segment_seq|segment_count|max_degree|count_max_degree");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustively check a statement");
  verify_cmd->add_option("--theorem", cfg.theorem, "theorem id or 'all'")->required();
  verify_cmd->add_option("--n", cfg.n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*construct) return cmd_construct(cfg);
    if (*transform) return cmd_transform(cfg, op);
    if (*bound) return cmd_bound(cfg);
    if (*majorize) return cmd_majorize(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}
