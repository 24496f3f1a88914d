#include "adtpf_cli/cli.hpp"

#include <charconv>
#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "adtpf/adtpf.hpp"

namespace adtpf::cli {
namespace {

/// Thrown for bad flag values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

/// LO..HI:STEP, LO..HI (step 1) or a single N.
std::vector<std::uint32_t> parse_sizes(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_uint(text, "size")};
  const auto colon = text.find(':', dots);
  const auto lo = parse_uint(std::string_view(text).substr(0, dots), "size");
  const auto hi = parse_uint(
      std::string_view(text).substr(dots + 2, colon == std::string::npos ? std::string::npos
                                                                          : colon - dots - 2),
      "size");
  const auto step =
      colon == std::string::npos ? 1u : parse_uint(std::string_view(text).substr(colon + 1), "step");
  if (lo == 0 || hi < lo || step == 0) throw UsageError("bad size range '" + text + "'");
  std::vector<std::uint32_t> sizes;
  for (std::uint64_t n = lo; n <= hi; n += step) sizes.push_back(static_cast<std::uint32_t>(n));
  return sizes;
}

std::vector<Algorithm> parse_algos(const std::string& text) {
  std::vector<Algorithm> algos;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = parse_algorithm(item);
    if (!a) throw UsageError("unknown algorithm '" + item + "'");
    algos.push_back(*a);
  }
  if (algos.empty()) throw UsageError("no algorithms given");
  return algos;
}

Shape parse_shape(const std::string& text) {
  if (text == "tree") return Shape::Tree;
  if (text == "dag") return Shape::Dag;
  throw UsageError("unknown shape '" + text + "'");
}

DomainKind parse_domain(const std::string& text) {
  auto d = find_builtin_domain(text);
  if (!d) throw UsageError("unknown domain '" + text + "'");
  return d->kind();
}

Aadt load_model(const std::string& path) { return to_aadt(parse_adt_json(read_file(path))); }

VarOrder load_order(const Aadt& aadt, const std::string& order_path) {
  if (order_path.empty()) return default_defense_first_order(aadt.adt());
  const auto ids = parse_order_file(read_file(order_path));
  return VarOrder::defense_first(aadt.adt(), ids);
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const AdtDocument doc = parse_adt_json(read_file(path));
  const auto violations = validate(doc.adt);
  if (!violations.empty()) {
    for (const auto& v : violations) out << v.node << ": " << v.message << "\n";
    return kInvalidModel;
  }
  to_aadt(doc);
  out << "valid\n";
  return kOk;
}

struct AnalyzeArgs {
  std::string input;
  std::string algo = "bu";
  std::string order;
  std::string format = "csv";
  std::string out;
  bool force = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const auto algo = parse_algorithm(a.algo);
  if (!algo) throw UsageError("unknown algorithm '" + a.algo + "'");
  if (!a.order.empty() && *algo != Algorithm::Bdd)
    throw UsageError("--order only applies to --algo bdd");
  const Aadt aadt = load_model(a.input);

  std::optional<ParetoFront> front;
  std::optional<std::size_t> bdd_nodes;
  switch (*algo) {
    case Algorithm::Naive: {
      EnumerationOptions opts;
      opts.force = a.force;
      front = naive_pareto(aadt, opts);
      break;
    }
    case Algorithm::BottomUp:
      front = bu_pareto(aadt);
      break;
    case Algorithm::Bdd: {
      BddManager mgr(load_order(aadt, a.order));
      const BddRef root = compile(mgr, aadt.adt());
      front = bdd_bu(aadt, mgr, root);
      bdd_nodes = mgr.reachable_count(root);
      break;
    }
  }
  emit(a.out, a.format == "json" ? front_to_json(*front) : front_to_csv(*front), out);
  err << "front size: " << front->size() << "\n";
  if (bdd_nodes) err << "bdd nodes: " << *bdd_nodes << "\n";
  return kOk;
}

struct GenArgs {
  GenConfig cfg;
  std::string shape = "tree";
  std::string defender_domain = "min_cost";
  std::string attacker_domain = "min_cost";
  std::string out;
};

int cmd_gen(GenArgs g, std::ostream& out) {
  g.cfg.shape = parse_shape(g.shape);
  g.cfg.defender_domain = parse_domain(g.defender_domain);
  g.cfg.attacker_domain = parse_domain(g.attacker_domain);
  try {
    check_config(g.cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(g.out, to_json(random_aadt(g.cfg)), out);
  return kOk;
}

int cmd_dump(const std::string& input, const std::string& dot, const std::string& order,
             std::ostream& out, std::ostream& err) {
  const Aadt aadt = load_model(input);
  BddManager mgr(load_order(aadt, order));
  const BddRef root = compile(mgr, aadt.adt());
  emit(dot, to_dot(mgr, root), out);
  err << "bdd nodes: " << mgr.reachable_count(root) << "\n";
  return kOk;
}

struct BenchArgs {
  std::string sizes;
  std::uint32_t per_size = 1;
  std::uint64_t seed = 0;
  double timeout = 60.0;
  std::string algos = "naive,bu,bdd";
  std::string shape = "tree";
  std::string out;
  std::string aggregate;
  std::uint32_t interval = 20;
};

int cmd_bench(const BenchArgs& b, std::ostream& out) {
  SuiteConfig cfg;
  cfg.sizes = parse_sizes(b.sizes);
  cfg.per_size = b.per_size;
  cfg.seed = b.seed;
  cfg.timeout_seconds = b.timeout;
  cfg.algorithms = parse_algos(b.algos);
  cfg.shape = parse_shape(b.shape);
  if (b.timeout <= 0) throw UsageError("--timeout must be positive");
  if (b.interval == 0) throw UsageError("--interval must be positive");
  if (cfg.shape == Shape::Dag)
    for (Algorithm a : cfg.algorithms)
      if (a == Algorithm::BottomUp)
        throw UsageError("the bu algorithm needs --shape tree");
  const auto records = run_suite(cfg);
  emit(b.out, records_to_csv(records), out);
  if (!b.aggregate.empty()) emit(b.aggregate, medians_to_csv(aggregate_medians(records, b.interval)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto-front analysis of attack-defense trees", "adtpf"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a model for well-formedness");
  validate_cmd->add_option("file", validate_path, "Model JSON")->required();

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute the Pareto front of a model");
  analyze_cmd->add_option("file", an.input, "Model JSON")->required();
  analyze_cmd->add_option("--algo", an.algo, "naive | bu | bdd")
      ->check(CLI::IsMember({"naive", "bu", "bdd"}));
  analyze_cmd->add_option("--order", an.order, "Variable order file (bdd only)");
  analyze_cmd->add_option("--format", an.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  analyze_cmd->add_option("--out", an.out, "Output file (default: stdout)");
  analyze_cmd->add_flag("--force", an.force, "Lift the enumeration cap of the naive algorithm");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random model");
  gen_cmd->add_option("--nodes", gen.cfg.node_count, "Exact node count")->required();
  gen_cmd->add_option("--seed", gen.cfg.seed, "Random seed")->required();
  gen_cmd->add_option("--shape", gen.shape, "tree | dag");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");
  gen_cmd->add_option("--max-children", gen.cfg.max_children, "Largest AND/OR fan-out");
  gen_cmd->add_option("--dag-share", gen.cfg.dag_share_prob, "Chance of an extra shared child");
  gen_cmd->add_option("--inh-prob", gen.cfg.inh_prob, "Chance of an INH gate");
  gen_cmd->add_option("--cost-min", gen.cfg.cost_min, "Smallest basic-step value");
  gen_cmd->add_option("--cost-max", gen.cfg.cost_max, "Largest basic-step value");
  gen_cmd->add_option("--defender-domain", gen.defender_domain, "Defender attribute domain");
  gen_cmd->add_option("--attacker-domain", gen.attacker_domain, "Attacker attribute domain");

  std::string dump_input, dump_dot, dump_order;
  auto* bdd_cmd = app.add_subcommand("bdd", "Decision-diagram utilities");
  bdd_cmd->require_subcommand(1);
  auto* dump_cmd = bdd_cmd->add_subcommand("dump", "Write the compiled BDD as Graphviz DOT");
  dump_cmd->add_option("file", dump_input, "Model JSON")->required();
  dump_cmd->add_option("--dot", dump_dot, "DOT output file")->required();
  dump_cmd->add_option("--order", dump_order, "Variable order file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the algorithms on generated suites");
  bench_cmd->add_option("--sizes", bench.sizes, "LO..HI:STEP")->required();
  bench_cmd->add_option("--per-size", bench.per_size, "Instances per size");
  bench_cmd->add_option("--seed", bench.seed, "Suite seed");
  bench_cmd->add_option("--timeout", bench.timeout, "Seconds per run");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated list of naive,bu,bdd");
  bench_cmd->add_option("--shape", bench.shape, "tree | dag");
  bench_cmd->add_option("--out", bench.out, "Records CSV (default: stdout)");
  bench_cmd->add_option("--aggregate", bench.aggregate, "Median table CSV");
  bench_cmd->add_option("--interval", bench.interval, "Bucket width for the median table");

  std::vector<std::string> argv_storage{"adtpf"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_path, out);
    if (*analyze_cmd) return cmd_analyze(an, out, err);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*dump_cmd) return cmd_dump(dump_input, dump_dot, dump_order, out, err);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageOrInput;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageOrInput;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kInvalidModel;
  } catch (const NotATreeError& e) {
    err << "error: " << e.what() << "\n";
    return kShapeOrOrder;
  } catch (const OrderError& e) {
    err << "order error: " << e.what() << "\n";
    return kShapeOrOrder;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (use --force to override)\n";
    return kCapExceeded;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrInput;
  }
  return kUsageOrInput;
}

}  // namespace adtpf::cli
