#include "so3fft/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "so3fft/io.hpp"
#include "so3fft/soft.hpp"

namespace so3::bench {

std::string_view to_string(Direction d) {
  return d == Direction::forward ? "forward" : "inverse";
}

std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

namespace {

Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::forward;
  if (s == "inverse") return Direction::inverse;
  throw std::runtime_error("unknown direction: " + s);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace

void BenchConfig::validate() const {
  if (bandwidths.empty()) throw std::invalid_argument("no bandwidths given");
  if (thread_counts.empty()) throw std::invalid_argument("no thread counts given");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  for (int b : bandwidths)
    if (b < 1) throw std::invalid_argument("bandwidth must be >= 1");
  for (int t : thread_counts)
    if (t < 1) throw std::invalid_argument("thread count must be >= 1");
}

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, int bandwidth, int run) noexcept {
  std::uint64_t k = splitmix64(seed + kGolden);
  k = splitmix64(k + static_cast<std::uint64_t>(bandwidth) * kGolden);
  return splitmix64(k + static_cast<std::uint64_t>(run) * kGolden);
}

So3Coefficients random_coefficients(Bandwidth b, std::uint64_t seed) {
  So3Coefficients c(b);
  auto uniform = [seed](std::uint64_t counter) {
    const std::uint64_t x = splitmix64(seed + counter * kGolden);
    const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  };
  for (std::size_t s = 0; s < c.data.size(); ++s)
    c.data[s] = {uniform(2 * s + 1), uniform(2 * s + 2)};
  return c;
}

ErrorMetrics error_metrics(std::span<const Complex> reference,
                           std::span<const Complex> reconstructed) {
  if (reference.size() != reconstructed.size())
    throw std::invalid_argument("error_metrics: length mismatch");
  ErrorMetrics e;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double diff = std::abs(reference[i] - reconstructed[i]);
    e.max_abs = std::max(e.max_abs, diff);
    const double mag = std::abs(reference[i]);
    if (mag > 0.0) e.max_rel = std::max(e.max_rel, diff / mag);
  }
  return e;
}

ErrorMetrics error_metrics(const So3Coefficients& reference, const So3Coefficients& reconstructed) {
  if (!(reference.bandwidth == reconstructed.bandwidth))
    throw std::invalid_argument("error_metrics: bandwidth mismatch");
  return error_metrics(reference.data, reconstructed.data);
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::filesystem::path per_bandwidth_path(const std::filesystem::path& p, int b, bool several) {
  if (!several) return p;
  auto out = p;
  out.replace_filename(p.stem().string() + "_B" + std::to_string(b) + p.extension().string());
  return out;
}

// Round-trip bound asserted for B <= 64; larger bandwidths are reported only.
constexpr double kRoundTripTolerance = 1e-10;
constexpr int kRoundTripCheckedUpTo = 64;
constexpr double kOracleTolerance = 1e-10;

void run_bandwidth(const BenchConfig& cfg, int bw, BenchResult& result, std::ostream* log) {
  const Bandwidth b(bw);
  std::optional<TransformPlan> plan;
  const double plan_seconds = timed([&] {
    plan.emplace(b, Partitioner::kappa, MatrixCache::streaming, cfg.oracle_cap);
  });
  const double plan_extra = cfg.include_plan ? plan_seconds : 0.0;
  const bool several = cfg.bandwidths.size() > 1;
  auto fail = [&](const std::string& msg) {
    result.failures.push_back("B=" + std::to_string(bw) + ": " + msg);
    if (log) *log << "FAIL " << result.failures.back() << '\n';
  };

  for (int run = 0; run < cfg.runs; ++run) {
    const auto reference = random_coefficients(b, derive_seed(cfg.seed, bw, run));

    std::optional<So3SampleGrid> samples_seq;
    std::optional<So3Coefficients> coeffs_seq;
    const double inv_seq =
        timed([&] { samples_seq.emplace(ifsoft_sequential(reference, *plan)); }) + plan_extra;
    const double fwd_seq =
        timed([&] { coeffs_seq.emplace(fsoft_sequential(*samples_seq, *plan)); }) + plan_extra;
    const auto err_seq = error_metrics(reference, *coeffs_seq);

    if (run == 0) {
      if (cfg.save_samples) write_samples(per_bandwidth_path(*cfg.save_samples, bw, several), *samples_seq);
      if (cfg.save_coeffs) write_coefficients(per_bandwidth_path(*cfg.save_coeffs, bw, several), reference);
    }

    if (bw <= kRoundTripCheckedUpTo && !(err_seq.max_abs < kRoundTripTolerance)) {
      std::ostringstream os;
      os << "round-trip max abs error " << err_seq.max_abs << " >= " << kRoundTripTolerance;
      fail(os.str());
    }

    if (cfg.oracle && bw <= cfg.oracle_cap) {
      const auto direct_fwd = fsoft_direct(*samples_seq, *plan);
      const auto direct_inv = ifsoft_direct(reference, *plan);
      const double fwd_diff = error_metrics(direct_fwd.data, coeffs_seq->data).max_abs;
      const double inv_diff = error_metrics(direct_inv.data, samples_seq->data).max_abs;
      if (!(fwd_diff < kOracleTolerance)) {
        std::ostringstream os;
        os << "forward oracle mismatch " << fwd_diff;
        fail(os.str());
      }
      if (!(inv_diff < kOracleTolerance)) {
        std::ostringstream os;
        os << "inverse oracle mismatch " << inv_diff;
        fail(os.str());
      }
      if (log)
        *log << "  oracle B=" << bw << " run " << run << ": forward " << fwd_diff << ", inverse "
             << inv_diff << '\n';
    }

    for (int t : cfg.thread_counts) {
      double inv_t = inv_seq, fwd_t = fwd_seq;
      auto err = err_seq;
      if (t > 1) {
        std::optional<So3SampleGrid> samples;
        std::optional<So3Coefficients> coeffs;
        inv_t = timed([&] { samples.emplace(ifsoft_parallel(reference, *plan, t)); }) + plan_extra;
        fwd_t = timed([&] { coeffs.emplace(fsoft_parallel(*samples, *plan, t)); }) + plan_extra;
        err = error_metrics(reference, *coeffs);
        if (samples->data != samples_seq->data)
          fail("parallel iFSOFT with " + std::to_string(t) + " threads differs from sequential");
        if (coeffs->data != coeffs_seq->data)
          fail("parallel FSOFT with " + std::to_string(t) + " threads differs from sequential");
      }
      for (auto [dir, seq, par] : {std::tuple{Direction::inverse, inv_seq, inv_t},
                                   std::tuple{Direction::forward, fwd_seq, fwd_t}}) {
        BenchRecord r;
        r.bandwidth = bw;
        r.threads = t;
        r.direction = dir;
        r.run = run;
        r.wall_seconds = par;
        r.speedup = seq / par;
        r.efficiency = r.speedup / t;
        r.max_abs_error = err.max_abs;
        r.max_rel_error = err.max_rel;
        result.records.push_back(r);
      }
      if (log)
        *log << "B=" << bw << " run " << run << " threads " << t << ": inverse " << inv_t
             << " s, forward " << fwd_t << " s, max abs " << err.max_abs << '\n';
    }
  }
}

}  // namespace

BenchResult run_benchmark(const BenchConfig& cfg, std::ostream* log) {
  cfg.validate();
  BenchResult result;
  for (int bw : cfg.bandwidths) {
    try {
      run_bandwidth(cfg, bw, result, log);
    } catch (const std::exception& e) {
      result.failures.push_back("B=" + std::to_string(bw) + ": aborted: " + e.what());
      if (log) *log << "FAIL " << result.failures.back() << '\n';
    }
  }
  return result;
}

namespace {

constexpr const char* kCsvHeader =
    "bandwidth,threads,direction,run,wall_seconds,speedup,efficiency,max_abs_error,max_rel_error";

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_report(std::span<const BenchRecord> records, const std::filesystem::path& path,
                  Format format) {
  if (records.empty()) throw std::invalid_argument("write_report: no records");
  std::ostringstream os;
  if (format == Format::csv) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
      os << r.bandwidth << ',' << r.threads << ',' << to_string(r.direction) << ',' << r.run << ','
         << format_double(r.wall_seconds) << ',' << format_double(r.speedup) << ','
         << format_double(r.efficiency) << ',' << format_double(r.max_abs_error) << ','
         << format_double(r.max_rel_error) << '\n';
    }
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) {
      arr.push_back({{"bandwidth", r.bandwidth},
                     {"threads", r.threads},
                     {"direction", to_string(r.direction)},
                     {"run", r.run},
                     {"wall_seconds", r.wall_seconds},
                     {"speedup", r.speedup},
                     {"efficiency", r.efficiency},
                     {"max_abs_error", r.max_abs_error},
                     {"max_rel_error", r.max_rel_error}});
    }
    os << arr.dump(2) << '\n';
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report: " + path.string());
  out << os.str();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<BenchRecord> read_report(const std::filesystem::path& path, Format format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read report: " + path.string());
  std::vector<BenchRecord> out;
  if (format == Format::json) {
    const auto arr = nlohmann::json::parse(in);
    for (const auto& o : arr) {
      BenchRecord r;
      r.bandwidth = o.at("bandwidth").get<int>();
      r.threads = o.at("threads").get<int>();
      r.direction = parse_direction(o.at("direction").get<std::string>());
      r.run = o.at("run").get<int>();
      r.wall_seconds = o.at("wall_seconds").get<double>();
      r.speedup = o.at("speedup").get<double>();
      r.efficiency = o.at("efficiency").get<double>();
      r.max_abs_error = o.at("max_abs_error").get<double>();
      r.max_rel_error = o.at("max_rel_error").get<double>();
      out.push_back(r);
    }
    return out;
  }
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("unexpected CSV header in " + path.string());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 9) throw std::runtime_error("malformed CSV row: " + line);
    BenchRecord r;
    r.bandwidth = std::stoi(f[0]);
    r.threads = std::stoi(f[1]);
    r.direction = parse_direction(f[2]);
    r.run = std::stoi(f[3]);
    r.wall_seconds = std::stod(f[4]);
    r.speedup = std::stod(f[5]);
    r.efficiency = std::stod(f[6]);
    r.max_abs_error = std::stod(f[7]);
    r.max_rel_error = std::stod(f[8]);
    out.push_back(r);
  }
  return out;
}

std::vector<SummaryRow> summarize(std::span<const BenchRecord> records) {
  using Key = std::tuple<int, int, int>;
  std::map<Key, std::vector<const BenchRecord*>> groups;
  for (const auto& r : records)
    groups[{r.bandwidth, r.threads, static_cast<int>(r.direction)}].push_back(&r);

  auto stats = [](const std::vector<const BenchRecord*>& g, double BenchRecord::*field) {
    double mean = 0.0;
    for (const auto* r : g) mean += r->*field;
    mean /= static_cast<double>(g.size());
    double var = 0.0;
    for (const auto* r : g) var += (r->*field - mean) * (r->*field - mean);
    const double sd = g.size() > 1 ? std::sqrt(var / static_cast<double>(g.size() - 1)) : 0.0;
    return std::pair{mean, sd};
  };

  std::vector<SummaryRow> out;
  for (const auto& [key, g] : groups) {
    SummaryRow s{};
    s.bandwidth = std::get<0>(key);
    s.threads = std::get<1>(key);
    s.direction = static_cast<Direction>(std::get<2>(key));
    s.runs = static_cast<int>(g.size());
    std::tie(s.wall_mean, s.wall_std) = stats(g, &BenchRecord::wall_seconds);
    std::tie(s.speedup_mean, s.speedup_std) = stats(g, &BenchRecord::speedup);
    s.efficiency_mean = stats(g, &BenchRecord::efficiency).first;
    std::tie(s.max_abs_mean, s.max_abs_std) = stats(g, &BenchRecord::max_abs_error);
    std::tie(s.max_rel_mean, s.max_rel_std) = stats(g, &BenchRecord::max_rel_error);
    out.push_back(s);
  }
  return out;
}

void print_summary(std::ostream& out, std::span<const SummaryRow> rows) {
  out << std::left << std::setw(6) << "B" << std::setw(9) << "threads" << std::setw(9) << "dir"
      << std::setw(24) << "wall [s] mean+-sd" << std::setw(20) << "speedup mean+-sd"
      << std::setw(8) << "eff" << std::setw(26) << "max abs mean+-sd"
      << "max rel mean+-sd\n";
  out << std::scientific << std::setprecision(2);
  for (const auto& r : rows) {
    std::ostringstream wall, sp, abs, rel;
    wall << std::scientific << std::setprecision(3) << r.wall_mean << "+-" << r.wall_std;
    sp << std::fixed << std::setprecision(2) << r.speedup_mean << "+-" << r.speedup_std;
    abs << std::scientific << std::setprecision(2) << r.max_abs_mean << "+-" << r.max_abs_std;
    rel << std::scientific << std::setprecision(2) << r.max_rel_mean << "+-" << r.max_rel_std;
    std::ostringstream eff;
    eff << std::fixed << std::setprecision(2) << r.efficiency_mean;
    out << std::setw(6) << r.bandwidth << std::setw(9) << r.threads << std::setw(9)
        << to_string(r.direction) << std::setw(24) << wall.str() << std::setw(20) << sp.str()
        << std::setw(8) << eff.str() << std::setw(26) << abs.str() << rel.str() << '\n';
  }
  out << std::defaultfloat;
}

}  // namespace so3::bench
