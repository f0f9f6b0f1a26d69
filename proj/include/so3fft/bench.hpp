#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "so3fft/core.hpp"

namespace so3::bench {

enum class Format { csv, json };
enum class Direction { forward, inverse };

std::string_view to_string(Direction d);
std::string_view to_string(Format f);

struct BenchConfig {
  std::vector<int> bandwidths;
  std::vector<int> thread_counts;
  int runs = 10;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output_path;
  Format output_format = Format::csv;
  bool oracle = false;
  int oracle_cap = 12;
  bool include_plan = false;
  std::optional<std::filesystem::path> save_samples;
  std::optional<std::filesystem::path> save_coeffs;

  /// Throws std::invalid_argument on empty lists, runs < 1, B < 1 or threads < 1.
  void validate() const;
};

struct BenchRecord {
  int bandwidth = 0;
  int threads = 0;
  Direction direction = Direction::forward;
  int run = 0;
  double wall_seconds = 0.0;
  double speedup = 0.0;
  double efficiency = 0.0;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// SplitMix64. Coefficient stream for (seed, B, run): key = derive_seed(seed, B, run);
// component c (0 = re, 1 = im) of slot s takes output number 2s + c + 1 of the
// generator started at key, i.e. mix(key + (2s + c + 1) * 0x9E3779B97F4A7C15).
// The top 53 bits give u in [0, 1); the value is 2u - 1.
std::uint64_t splitmix64(std::uint64_t state_after_increment) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, int bandwidth, int run) noexcept;

/// Real and imaginary parts independently uniform on [-1, 1).
So3Coefficients random_coefficients(Bandwidth b, std::uint64_t seed);

struct ErrorMetrics {
  double max_abs = 0.0;
  double max_rel = 0.0;  // slots with zero reference are skipped
};

ErrorMetrics error_metrics(std::span<const Complex> reference, std::span<const Complex> reconstructed);
ErrorMetrics error_metrics(const So3Coefficients& reference, const So3Coefficients& reconstructed);

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<std::string> failures;  // assertion/oracle violations; empty on success

  bool ok() const noexcept { return failures.empty(); }
};

/// Runs the round-trip protocol: random coefficients -> iFSOFT -> FSOFT per
/// bandwidth, sequential first and then every thread count. Progress lines go to `log`.
BenchResult run_benchmark(const BenchConfig& cfg, std::ostream* log = nullptr);

void write_report(std::span<const BenchRecord> records, const std::filesystem::path& path,
                  Format format);
std::vector<BenchRecord> read_report(const std::filesystem::path& path, Format format);

struct SummaryRow {
  int bandwidth;
  int threads;
  Direction direction;
  int runs;
  double wall_mean, wall_std;
  double speedup_mean, speedup_std;
  double efficiency_mean;
  double max_abs_mean, max_abs_std;
  double max_rel_mean, max_rel_std;
};

/// Mean and sample standard deviation over runs per (bandwidth, threads, direction).
std::vector<SummaryRow> summarize(std::span<const BenchRecord> records);
void print_summary(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace so3::bench
