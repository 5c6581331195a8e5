#include "hsdisc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "hsdisc/generators.hpp"
#include "hsdisc/solvers.hpp"

namespace hsdisc {

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two samples");
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw Error(ErrorCode::kInvalidArgument, "log-log fit needs positive samples");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw Error(ErrorCode::kInvalidArgument, "sizes must differ");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

namespace {

template <class T>
double median(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? static_cast<double>(v[m]) : (static_cast<double>(v[m - 1]) + static_cast<double>(v[m])) / 2;
}

SolveResult stub_solve(const ColoredInstance& inst) {
  QueryCounter qc;
  const Halfspace h = all_space(inst);
  if (!inst.red.empty()) side_of(h, inst.red[0], qc);
  SolveResult r{h, 0, qc.count(), false, false, {}};
  r.stats = {inst.size(), inst.dim, 1};
  return r;
}

}  // namespace

BenchReport bench_run(const std::string& solver, const std::vector<std::size_t>& sizes, std::size_t d,
                      std::uint64_t seed, std::size_t reps, unsigned threads) {
  if (solver != "exact" && solver != "sweep" && solver != "approx" && solver != "stub")
    throw Error(ErrorCode::kInvalidArgument, "unknown solver '" + solver + "'");
  if (sizes.size() < 3) throw Error(ErrorCode::kInvalidArgument, "need at least three sizes");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end() || sizes.front() == 0)
    throw Error(ErrorCode::kInvalidArgument, "sizes must be positive and increasing");
  if (reps == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one repetition");
  if (solver == "sweep" && d != 1) throw Error(ErrorCode::kWrongDimension, "sweep needs d = 1");

  BenchReport report;
  std::vector<double> xs, med_q, med_t;
  for (std::size_t n : sizes) {
    // Wide coordinate range: general position with overwhelming probability.
    const ColoredInstance inst = gen_colored(n, d, 1'000'000, seed + n);
    std::vector<std::uint64_t> qs, ts;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      SolveResult r = [&] {
        if (solver == "exact") return max_halfspace_exact(inst, {false, threads});
        if (solver == "sweep") return max_halfspace_1d(inst);
        if (solver == "approx") return max_halfspace_approx(inst, ApproxParams{{1, 10}, {1, 10}, seed, 4}, {false, threads});
        return stub_solve(inst);
      }();
      const auto stop = std::chrono::steady_clock::now();
      BenchRecord rec;
      rec.n = n;
      rec.d = d;
      rec.solver = solver;
      rec.seed = seed;
      rec.rep = rep;
      rec.wall_nanos = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      rec.queries = r.queries;
      rec.candidates = r.stats.candidates;
      report.records.push_back(rec);
      qs.push_back(rec.queries);
      ts.push_back(std::max<std::uint64_t>(rec.wall_nanos, 1));
    }
    xs.push_back(static_cast<double>(n));
    med_q.push_back(std::max(median(qs), 1.0));
    med_t.push_back(median(ts));
  }
  report.queries = fit_loglog(xs, med_q);
  report.time = fit_loglog(xs, med_t);
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "n,d,solver,seed,rep,wall_nanos,queries,candidates\n";
  for (const auto& r : report.records)
    out << r.n << ',' << r.d << ',' << r.solver << ',' << r.seed << ',' << r.rep << ',' << r.wall_nanos << ','
        << r.queries << ',' << r.candidates << '\n';
  return out.str();
}

}  // namespace hsdisc
