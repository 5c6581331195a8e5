#include "hsdisc/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hsdisc/bench.hpp"
#include "hsdisc/generators.hpp"
#include "hsdisc/io.hpp"

namespace hsdisc {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string meta;
  std::string halfspace;
  std::uint64_t seed = 0;
  std::string gamma;
  std::string epsilon = "1/10";
  std::string delta = "1/10";
  std::string c = "4";
  bool abs_mode = false;
  bool count_queries = false;
  unsigned threads = 1;

  std::size_t n = 8;
  std::size_t k = 3;
  std::size_t d = 2;
  std::int64_t bound = 9;
  bool planted = false;
  bool repeats = false;

  bool distinct = false;
  bool no_shear = false;

  std::string stat = "phi";
  std::string alpha = "1/2";
  bool signed_alpha = false;
  unsigned precision = 64;

  std::string solver = "exact";
  std::vector<std::size_t> sizes{32, 64, 128, 256};
  std::size_t reps = 3;
};

class Output {
 public:
  Output(const Options& o, std::ostream& out) : path_(o.output), out_(out) {}
  void emit(const std::string& text) {
    if (path_.empty())
      out_ << text;
    else
      write_text_file(path_, text);
  }

 private:
  std::string path_;
  std::ostream& out_;
};

void error_json(std::ostream& err, std::string_view name, const std::string& message) {
  err << Json{{"error", name}, {"message", message}}.dump() << "\n";
}

Json input(const Options& o) {
  if (o.input.empty()) throw Error(ErrorCode::kInvalidArgument, "missing -i input file");
  return read_json_file(o.input);
}

std::string meta_path(const Options& o) { return o.meta.empty() ? o.input + ".meta.json" : o.meta; }
std::string meta_path_for(const std::string& out) { return out + ".meta.json"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Halfspace discrepancy: exact and approximate solvers, reductions and verifiers", "hsdisc"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "input JSON file");
    sub->add_option("-o,--output", o.output, "output file (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "generate a source instance");
  gen->require_subcommand(1);
  auto* gen_ksum_cmd = gen->add_subcommand("ksum", "random k-Sum instance");
  auto* gen_points_cmd = gen->add_subcommand("points", "random integer point set");
  for (auto* sub : {gen_ksum_cmd, gen_points_cmd}) {
    add_io(sub);
    sub->add_option("-n,--n", o.n, "number of values / points");
    sub->add_option("--bound", o.bound, "values / coordinates in [-bound, bound]");
    sub->add_flag("--planted", o.planted, "guarantee a witness");
    sub->add_option("--seed", o.seed, "64-bit seed");
  }
  gen_ksum_cmd->add_option("-k,--k", o.k, "tuple size");
  gen_ksum_cmd->add_flag("--allow-repeats", o.repeats, "values need not be distinct");
  gen_points_cmd->add_option("-d,--d", o.d, "dimension");

  auto* reduce = app.add_subcommand("reduce", "build the colored instance of a reduction");
  reduce->require_subcommand(1);
  auto* reduce_ksum_cmd = reduce->add_subcommand("ksum", "k-Sum construction");
  auto* reduce_degen_cmd = reduce->add_subcommand("degen", "affine degeneracy construction");
  for (auto* sub : {reduce_ksum_cmd, reduce_degen_cmd}) add_io(sub);
  reduce_ksum_cmd->add_option("--gamma", o.gamma, "shift, p/q in (0, 1/(4d))");

  auto* solve = app.add_subcommand("solve", "maximize discrepancy over halfspaces");
  solve->require_subcommand(1);
  auto* solve_exact_cmd = solve->add_subcommand("exact", "exact optimum");
  auto* solve_approx_cmd = solve->add_subcommand("approx", "sampling approximation");
  for (auto* sub : {solve_exact_cmd, solve_approx_cmd}) {
    add_io(sub);
    sub->add_flag("--abs", o.abs_mode, "maximize over both colorings");
    sub->add_flag("--count-queries", o.count_queries, "also print the query report to stderr");
    sub->add_option("--threads", o.threads, "worker threads");
  }
  solve_approx_cmd->add_option("--epsilon", o.epsilon, "additive error fraction");
  solve_approx_cmd->add_option("--delta", o.delta, "failure probability");
  solve_approx_cmd->add_option("--seed", o.seed, "64-bit seed");
  solve_approx_cmd->add_option("--c", o.c, "sample size constant");

  auto* verify = app.add_subcommand("verify", "compare a reduction against its oracle");
  verify->require_subcommand(1);
  auto* verify_ksum_cmd = verify->add_subcommand("ksum", "k-Sum equivalence");
  auto* verify_degen_cmd = verify->add_subcommand("degen", "degeneracy equivalence");
  for (auto* sub : {verify_ksum_cmd, verify_degen_cmd}) {
    add_io(sub);
    sub->add_option("--threads", o.threads, "worker threads");
  }
  verify_ksum_cmd->add_flag("--distinct", o.distinct, "oracle requires distinct indices");
  verify_degen_cmd->add_flag("--no-shear", o.no_shear, "reduce the source as given");

  auto* recover = app.add_subcommand("recover", "map a halfspace back to a source witness");
  recover->require_subcommand(1);
  auto* recover_ksum_cmd = recover->add_subcommand("ksum", "k-Sum witness");
  auto* recover_degen_cmd = recover->add_subcommand("degen", "degenerate tuple");
  for (auto* sub : {recover_ksum_cmd, recover_degen_cmd}) {
    add_io(sub);
    sub->add_option("-m,--meta", o.meta, "reduction metadata (default <input>.meta.json)");
    sub->add_option("--halfspace", o.halfspace, "halfspace or solve result JSON")->required();
  }

  auto* eval = app.add_subcommand("eval", "evaluate a statistic of one halfspace");
  add_io(eval);
  eval->add_option("--stat", o.stat, "phi|psi|parallel|alpha|poisson")
      ->check(CLI::IsMember({"phi", "psi", "parallel", "alpha", "poisson"}));
  eval->add_option("--halfspace", o.halfspace, "halfspace or solve result JSON")->required();
  eval->add_option("--alpha", o.alpha, "alpha in [0, 1]");
  eval->add_flag("--signed", o.signed_alpha, "alpha form with the blue term subtracted");
  eval->add_option("--precision", o.precision, "working bits of the logarithms");
  eval->add_flag("--count-queries", o.count_queries, "include the query count");

  auto* bench = app.add_subcommand("bench", "query-count and timing scaling");
  bench->add_option("-o,--output", o.output, "CSV file (default stdout)");
  bench->add_option("--solver", o.solver, "exact|sweep|approx|stub");
  bench->add_option("--sizes", o.sizes, "increasing instance sizes")->delimiter(',');
  bench->add_option("-d,--d", o.d, "dimension");
  bench->add_option("--seed", o.seed, "64-bit seed");
  bench->add_option("--reps", o.reps, "repetitions per size");
  bench->add_option("--threads", o.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, "UsageError", e.what());
    return 2;
  }

  Output sink(o, out);
  try {
    if (gen_ksum_cmd->parsed()) {
      GenSpec spec{o.n, o.k, o.bound, o.planted, o.seed, !o.repeats};
      sink.emit(dump(to_json(gen_ksum(spec))));
    } else if (gen_points_cmd->parsed()) {
      GenSpec spec{o.n, o.d, o.bound, o.planted, o.seed, true};
      sink.emit(dump(to_json(gen_points(spec))));
    } else if (reduce_ksum_cmd->parsed() || reduce_degen_cmd->parsed()) {
      if (o.output.empty()) throw Error(ErrorCode::kInvalidArgument, "reduce needs -o (metadata goes beside it)");
      const Json src = input(o);
      if (reduce_ksum_cmd->parsed()) {
        std::optional<ExactScalar> gamma;
        if (!o.gamma.empty()) gamma = parse_scalar(o.gamma);
        const KSumReduction red = reduce_ksum(ksum_from_json(src), gamma);
        sink.emit(dump(to_json(red.instance)));
        write_text_file(meta_path_for(o.output), dump(reduction_meta(red)));
      } else {
        const DegeneracyReduction red = reduce_degeneracy(points_from_json(src));
        sink.emit(dump(to_json(red.instance)));
        write_text_file(meta_path_for(o.output), dump(reduction_meta(red)));
      }
    } else if (solve_exact_cmd->parsed() || solve_approx_cmd->parsed()) {
      const ColoredInstance inst = colored_from_json(input(o));
      const ExactOptions opts{o.abs_mode, o.threads};
      SolveResult r = solve_exact_cmd->parsed()
                          ? max_halfspace_exact(inst, opts)
                          : max_halfspace_approx(inst,
                                                 ApproxParams{parse_scalar(o.epsilon), parse_scalar(o.delta), o.seed,
                                                              parse_scalar(o.c)},
                                                 opts);
      if (!o.count_queries) r.queries = 0;
      sink.emit(dump(to_json(r)));
      if (o.count_queries) err << to_json(query_report(r)).dump() << "\n";
    } else if (verify_ksum_cmd->parsed()) {
      VerifyOptions vo;
      vo.mode = o.distinct ? KSumMode::kDistinct : KSumMode::kMultiset;
      vo.threads = o.threads;
      const KSumVerdict v = verify_equivalence_ksum(ksum_from_json(input(o)), vo);
      sink.emit(dump(to_json(v)));
      if (!v.agree || !v.cap_holds || (v.witness && !v.witness_valid)) return 1;
    } else if (verify_degen_cmd->parsed()) {
      VerifyOptions vo;
      vo.threads = o.threads;
      vo.shear = !o.no_shear;
      const DegeneracyVerdict v = verify_equivalence_degeneracy(points_from_json(input(o)), vo);
      sink.emit(dump(to_json(v)));
      if (!v.agree || (v.witness && !v.witness_valid)) return 1;
    } else if (recover_ksum_cmd->parsed() || recover_degen_cmd->parsed()) {
      const Json inst = input(o);
      const Json meta = read_json_file(meta_path(o));
      const Halfspace h = halfspace_from_json(read_json_file(o.halfspace));
      if (recover_ksum_cmd->parsed())
        sink.emit(dump(to_json(recover_ksum_witness(ksum_reduction_from_json(inst, meta), h))));
      else
        sink.emit(dump(to_json(recover_degeneracy_witness(degeneracy_reduction_from_json(inst, meta), h))));
    } else if (eval->parsed()) {
      const ColoredInstance inst = colored_from_json(input(o));
      const Halfspace h = halfspace_from_json(read_json_file(o.halfspace));
      Json j;
      j["stat"] = o.stat;
      if (o.stat == "phi") {
        QueryCounter qc;
        j["value"] = to_text(phi(inst, h, qc));
        if (o.count_queries) j["queries"] = qc.count();
      } else if (o.stat == "psi") {
        j["value"] = to_text(psi(inst, h));
      } else if (o.stat == "parallel") {
        j["value"] = to_text(phi_parallel(inst, h));
      } else if (o.stat == "alpha") {
        j["value"] = to_text(
            phi_alpha(inst, h, parse_scalar(o.alpha), o.signed_alpha ? AlphaForm::kSigned : AlphaForm::kAsPrinted));
      } else {
        const PoissonValue p = phi_poisson(inst, h, o.precision);
        j["infinite"] = p.infinite;
        j["lower"] = to_text(p.lower);
        j["upper"] = to_text(p.upper);
        j["approx"] = p.infinite ? Json("inf") : Json(p.approx);
      }
      sink.emit(dump(j));
    } else if (bench->parsed()) {
      const BenchReport rep = bench_run(o.solver, o.sizes, o.d, o.seed, o.reps, o.threads);
      sink.emit(bench_csv(rep));
      err << Json{{"query_slope", rep.queries.slope},
                  {"query_residual", rep.queries.residual},
                  {"time_slope", rep.time.slope},
                  {"time_residual", rep.time.residual}}
                 .dump()
          << "\n";
    }
  } catch (const Error& e) {
    error_json(err, error_name(e.code()), e.what());
    return 2;
  }
  return 0;
}

}  // namespace hsdisc
