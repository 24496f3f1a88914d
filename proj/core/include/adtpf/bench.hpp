#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adtpf/generator.hpp"

namespace adtpf {

enum class Algorithm { Naive, BottomUp, Bdd };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct BenchRecord {
  std::string instance;
  std::uint32_t nodes = 0;
  Shape shape = Shape::Tree;
  Algorithm algorithm = Algorithm::Naive;
  /// Wall time of the measured run; equals the timeout when timed_out.
  double seconds = 0.0;
  /// Size of the front at the root; absent on timeout.
  std::optional<std::size_t> front_size;
  /// Reachable diagram nodes (bdd only, absent on timeout).
  std::optional<std::size_t> bdd_nodes;
  bool timed_out = false;
};

struct SuiteConfig {
  std::vector<std::uint32_t> sizes;
  std::uint32_t per_size = 1;
  std::uint64_t seed = 0;
  double timeout_seconds = 60.0;
  std::vector<Algorithm> algorithms;
  Shape shape = Shape::Tree;
  /// Template for the generator; node_count, seed and shape are overridden.
  GenConfig generator;
  /// Run each (instance, algorithm) once unmeasured before timing it.
  bool warm_up = true;
};

/// Generator configuration of instance `index` of size `size`; a pure
/// function of the suite seed.
GenConfig instance_config(const SuiteConfig& cfg, std::uint32_t size, std::uint32_t index);

/// Runs every algorithm on every instance, one measured run at a time.
/// Results of non-timed-out runs on the same instance must agree; a
/// disagreement throws std::logic_error. Throws std::invalid_argument when
/// algorithms is empty or the bottom-up algorithm is asked to run on DAGs.
std::vector<BenchRecord> run_suite(const SuiteConfig& cfg);

struct MedianRow {
  std::uint32_t bucket_lo;
  std::uint32_t bucket_hi;
  Algorithm algorithm;
  double median_seconds;

  friend bool operator==(const MedianRow&, const MedianRow&) = default;
};

/// Median wall time per (node-count bucket, algorithm). Buckets are
/// [1, interval], [interval+1, 2*interval], ...; empty buckets are left
/// out; an even count takes the mean of the two middle values.
std::vector<MedianRow> aggregate_medians(const std::vector<BenchRecord>& records,
                                         std::uint32_t interval = 20);

/// `instance,nodes,shape,algo,seconds,front_size,bdd_nodes,timed_out`
std::string records_to_csv(const std::vector<BenchRecord>& records);
/// `bucket_lo,bucket_hi,algo,median_seconds`
std::string medians_to_csv(const std::vector<MedianRow>& rows);

}  // namespace adtpf
