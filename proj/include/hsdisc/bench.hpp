#pragma once

// Query-count and wall-time scaling runs with a log-log least-squares fit.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hsdisc {

struct BenchRecord {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::string solver;
  std::uint64_t seed = 0;
  std::uint64_t rep = 0;
  std::uint64_t wall_nanos = 0;
  std::uint64_t queries = 0;
  std::uint64_t candidates = 0;
};

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square of the fit residuals
};

// Least squares of log y against log x. Needs >= 2 points with x, y > 0.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct BenchReport {
  std::vector<BenchRecord> records;
  SlopeFit queries;  // over the median query count per size
  SlopeFit time;     // over the median wall time per size
};

// solver: "exact", "sweep" (d = 1 only), "approx" or "stub". Each size gets
// one random instance, solved `reps` times in sequence.
// Throws Error(kInvalidArgument) for unknown solvers, fewer than 3 sizes or
// non-increasing sizes.
BenchReport bench_run(const std::string& solver, const std::vector<std::size_t>& sizes, std::size_t d,
                      std::uint64_t seed, std::size_t reps = 3, unsigned threads = 1);

// Header n,d,solver,seed,rep,wall_nanos,queries,candidates and one row per
// record.
std::string bench_csv(const BenchReport& report);

}  // namespace hsdisc
