#include "adtpf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "adtpf/bdd.hpp"
#include "adtpf/bottom_up.hpp"
#include "adtpf/errors.hpp"
#include "adtpf/io.hpp"
#include "adtpf/naive.hpp"

namespace adtpf {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::Naive: return "naive";
    case Algorithm::BottomUp: return "bu";
    case Algorithm::Bdd: return "bdd";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "naive") return Algorithm::Naive;
  if (text == "bu") return Algorithm::BottomUp;
  if (text == "bdd") return Algorithm::Bdd;
  return std::nullopt;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct RunResult {
  ParetoFront front;
  std::optional<std::size_t> bdd_nodes;
};

RunResult run_once(const Aadt& aadt, Algorithm algo, const Deadline& deadline) {
  switch (algo) {
    case Algorithm::Naive: {
      EnumerationOptions opts;
      opts.force = true;
      opts.deadline = deadline;
      return {naive_pareto(aadt, opts), std::nullopt};
    }
    case Algorithm::BottomUp: {
      BottomUpOptions opts;
      opts.deadline = deadline;
      return {bu_pareto(aadt, opts), std::nullopt};
    }
    case Algorithm::Bdd: {
      BddManager mgr(default_defense_first_order(aadt.adt()));
      const BddRef root = compile(mgr, aadt.adt(), deadline);
      BddBuOptions opts;
      opts.deadline = deadline;
      ParetoFront front = bdd_bu(aadt, mgr, root, opts);
      return {std::move(front), mgr.reachable_count(root)};
    }
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace

GenConfig instance_config(const SuiteConfig& cfg, std::uint32_t size, std::uint32_t index) {
  GenConfig g = cfg.generator;
  g.node_count = size;
  g.shape = cfg.shape;
  g.seed = mix(mix(mix(cfg.seed) ^ size) ^ index);
  return g;
}

std::vector<BenchRecord> run_suite(const SuiteConfig& cfg) {
  if (cfg.algorithms.empty()) throw std::invalid_argument("no algorithms requested");
  if (cfg.shape == Shape::Dag &&
      std::find(cfg.algorithms.begin(), cfg.algorithms.end(), Algorithm::BottomUp) !=
          cfg.algorithms.end())
    throw std::invalid_argument("the bottom-up algorithm only runs on tree-shaped instances");

  using Clock = std::chrono::steady_clock;
  const auto budget = std::chrono::duration<double>(cfg.timeout_seconds);
  std::vector<BenchRecord> records;

  for (std::uint32_t size : cfg.sizes) {
    for (std::uint32_t i = 0; i < cfg.per_size; ++i) {
      const Aadt aadt = random_aadt(instance_config(cfg, size, i));
      const std::string id = "n" + std::to_string(size) + "-" + std::to_string(i);
      std::optional<ParetoFront> reference;

      for (Algorithm algo : cfg.algorithms) {
        BenchRecord rec;
        rec.instance = id;
        rec.nodes = size;
        rec.shape = cfg.shape;
        rec.algorithm = algo;
        try {
          if (cfg.warm_up) run_once(aadt, algo, Deadline::after(budget));
          const auto start = Clock::now();
          RunResult r = run_once(aadt, algo, Deadline::after(budget));
          rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
          rec.front_size = r.front.size();
          rec.bdd_nodes = r.bdd_nodes;
          if (!reference)
            reference = std::move(r.front);
          else if (*reference != r.front)
            throw std::logic_error("algorithms disagree on instance " + id);
        } catch (const TimeoutError&) {
          rec.timed_out = true;
          rec.seconds = cfg.timeout_seconds;
          rec.front_size.reset();
          rec.bdd_nodes.reset();
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

}  // namespace

std::vector<MedianRow> aggregate_medians(const std::vector<BenchRecord>& records,
                                         std::uint32_t interval) {
  if (interval == 0) throw std::invalid_argument("interval must be positive");
  std::map<std::pair<std::uint32_t, int>, std::vector<double>> buckets;
  for (const auto& r : records) {
    if (r.nodes == 0) continue;
    const std::uint32_t lo = (r.nodes - 1) / interval * interval + 1;
    buckets[{lo, static_cast<int>(r.algorithm)}].push_back(r.seconds);
  }
  std::vector<MedianRow> rows;
  for (auto& [key, times] : buckets)
    rows.push_back({key.first, key.first + interval - 1,
                    static_cast<Algorithm>(key.second), median(std::move(times))});
  return rows;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance,nodes,shape,algo,seconds,front_size,bdd_nodes,timed_out\n";
  for (const auto& r : records) {
    out << r.instance << ',' << r.nodes << ',' << to_string(r.shape) << ','
        << to_string(r.algorithm) << ',' << format_value(r.seconds) << ',';
    if (r.front_size) out << *r.front_size;
    out << ',';
    if (r.bdd_nodes) out << *r.bdd_nodes;
    out << ',' << (r.timed_out ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string medians_to_csv(const std::vector<MedianRow>& rows) {
  std::ostringstream out;
  out << "bucket_lo,bucket_hi,algo,median_seconds\n";
  for (const auto& r : rows)
    out << r.bucket_lo << ',' << r.bucket_hi << ',' << to_string(r.algorithm) << ','
        << format_value(r.median_seconds) << '\n';
  return out.str();
}

}  // namespace adtpf
