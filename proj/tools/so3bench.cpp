// Benchmark and validation harness: random coefficients -> iFSOFT -> FSOFT,
// sequential against parallel, with timing, speedup, efficiency and errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "so3fft/bench.hpp"

int main(int argc, char** argv) {
  using namespace so3::bench;

  CLI::App app{"SO(3) FFT benchmark: sequential vs parallel FSOFT/iFSOFT"};
  BenchConfig cfg;
  cfg.bandwidths = {8, 16, 32};
  cfg.thread_counts = {1, 2, 4};
  std::string output, save_samples, save_coeffs;

  app.add_option("--bandwidths", cfg.bandwidths, "Comma-separated bandwidths")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.thread_counts, "Comma-separated thread counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--runs", cfg.runs, "Repetitions per configuration")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--output", output, "Report path (omit to skip writing a report)");
  std::string format = "csv";
  app.add_option("--format", format, "Report format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--oracle", cfg.oracle, "Cross-check against the direct transforms (B <= cap)");
  app.add_option("--oracle-cap", cfg.oracle_cap, "Largest bandwidth for the direct transforms");
  app.add_flag("--include-plan", cfg.include_plan, "Add plan construction time to wall times");
  app.add_option("--save-samples", save_samples, "Write run-0 samples (SOFG)");
  app.add_option("--save-coeffs", save_coeffs, "Write run-0 reference coefficients (SOFC)");

  CLI11_PARSE(app, argc, argv);

  cfg.output_format = format == "json" ? Format::json : Format::csv;
  if (!output.empty()) cfg.output_path = output;
  if (!save_samples.empty()) cfg.save_samples = save_samples;
  if (!save_coeffs.empty()) cfg.save_coeffs = save_coeffs;

  BenchResult result;
  try {
    result = run_benchmark(cfg, &std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const auto rows = summarize(result.records);
  print_summary(std::cout, rows);

  if (cfg.output_path) {
    try {
      if (result.records.empty()) throw std::runtime_error("no records to write");
      write_report(result.records, *cfg.output_path, cfg.output_format);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }

  if (!result.ok()) {
    std::cerr << result.failures.size() << " check(s) failed:\n";
    for (const auto& f : result.failures) std::cerr << "  " << f << '\n';
    return 1;
  }
  return 0;
}
