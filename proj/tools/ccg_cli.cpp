// Command-line driver: sampling, exact moments, Monte Carlo verification,
// limit-law tables, and the kernel-moment cross-check.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccg/dpp_sampler.hpp"
#include "ccg/exact_moments.hpp"
#include "ccg/harness.hpp"
#include "ccg/limit_laws.hpp"
#include "ccg/parallel.hpp"
#include "ccg/pi_oracle.hpp"
#include "ccg/stats.hpp"

namespace {

using namespace ccg;

struct CommonOpts {
  std::string group = "u";
  int n = 8;
  int64_t reps = 100000;
  uint64_t seed = 1;
  int jobs = 1;
  double tol = 1e-10;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_reps = true) {
  cmd->add_option("--group", o.group,
                  "group family: u su so-odd o-odd so-even o-minus usp");
  cmd->add_option("--n", o.n, "matrix size parameter N")->check(CLI::PositiveNumber);
  if (with_reps) {
    cmd->add_option("--reps", o.reps, "Monte Carlo replicates")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "series evaluation tolerance");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "json, csv or jsonl")
      ->check(CLI::IsMember({"json", "csv", "jsonl"}));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

ExperimentConfig to_config(const CommonOpts& o) {
  ExperimentConfig cfg;
  cfg.group = parse_group(o.group);
  cfg.n = o.n;
  cfg.replicates = o.reps;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.tol = o.tol;
  return cfg;
}

int run_sample(const CommonOpts& o) {
  const auto spec = ensemble_spec(parse_group(o.group), o.n);
  std::vector<std::string> lines(o.reps);
  parallel_for(o.reps, o.jobs, [&](int64_t i) {
    const auto s = draw_sample(spec, o.seed, static_cast<uint64_t>(i));
    std::ostringstream row;
    row.precision(17);
    row << "{\"group\":\"" << group_token(spec.group) << "\",\"n\":" << spec.n
        << ",\"seed\":" << o.seed << ",\"replicate\":" << i << ",\"angles\":[";
    for (size_t j = 0; j < s.angles.size(); ++j) {
      if (j) row << ",";
      row << s.angles[j];
    }
    row << "]}";
    lines[static_cast<size_t>(i)] = row.str();
  });
  std::ostringstream all;
  for (const auto& line : lines) all << line << "\n";
  emit(all.str(), o.out);
  return 0;
}

int run_moments(const CommonOpts& o) {
  const auto spec = ensemble_spec(parse_group(o.group), o.n);
  const auto report = moment_report(spec, o.tol);
  emit(moment_report_to_json(report), o.out);
  return 0;
}

void emit_report(const McReport& report, const CommonOpts& o) {
  emit(o.format == "csv" ? report_to_csv(report) : report_to_json(report),
       o.out);
  std::cerr << "{\"kind\":\"" << report.kind
            << "\",\"runtime_seconds\":" << report.runtime_seconds << "}\n";
}

int run_mc(const CommonOpts& o) {
  const auto report = mc_experiment(to_config(o));
  emit_report(report, o);
  return report.pass ? 0 : 1;
}

int run_pi_check(const CommonOpts& o, int kmax, double gate) {
  const auto spec = ensemble_spec(parse_group(o.group), o.n);
  const auto report = pi_check(spec, kmax);
  std::ostringstream out;
  out.precision(17);
  if (o.format == "csv") {
    out << "args,closed,quadrature,abs_error\n";
    for (const auto& row : report.rows) {
      for (size_t i = 0; i < row.args.size(); ++i) {
        out << (i ? " " : "") << row.args[i];
      }
      out << "," << row.closed << "," << row.quadrature << "," << row.abs_error
          << "\n";
    }
  } else {
    out << "{\"group\":\"" << group_token(spec.group) << "\",\"n\":" << spec.n
        << ",\"cases\":" << report.rows.size()
        << ",\"max_abs_error\":" << report.max_abs_error
        << ",\"pass\":" << (report.max_abs_error < gate ? "true" : "false")
        << "}";
  }
  emit(out.str(), o.out);
  return report.max_abs_error < gate ? 0 : 1;
}

int run_limitlaw(const CommonOpts& o, const std::string& grid, int64_t trunc,
                 const std::string& ladder_csv) {
  const GroupId g = parse_group(o.group);
  if (!ladder_csv.empty()) {
    // KS ladder of the centered finite-N statistic against the xi reference.
    ExperimentConfig cfg = to_config(o);
    cfg.ladder.clear();
    std::istringstream in(ladder_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) cfg.ladder.push_back(std::stoi(tok));
    cfg.xi_kmax = trunc;
    const auto report = limit_law_experiment(cfg);
    emit_report(report, o);
    return report.pass ? 0 : 1;
  }

  double t0 = -2.0, t1 = 2.0, step = 0.5;
  if (!grid.empty()) {
    std::istringstream in(grid);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
        !std::getline(in, c, ':')) {
      throw CLI::ValidationError("--grid expects t0:t1:step");
    }
    t0 = std::stod(a);
    t1 = std::stod(b);
    step = std::stod(c);
  }
  const auto xs = sample_xi_batch(g, trunc, o.reps, o.seed, o.jobs);
  std::ostringstream csv;
  csv.precision(12);
  csv << "t,re_cf_exact,im_cf_exact,re_cf_empirical,im_cf_empirical\n";
  for (double t = t0; t <= t1 + 1e-12; t += step) {
    const auto exact = xi_cf(g, t);
    std::complex<double> emp = 0.0;
    for (double x : xs) emp += std::complex<double>(std::cos(t * x), std::sin(t * x));
    emp /= static_cast<double>(xs.size());
    csv << t << "," << exact.real() << "," << exact.imag() << "," << emp.real()
        << "," << emp.imag() << "\n";
  }
  emit(csv.str(), o.out);
  // Summary: KS against the closed CDF where one exists.
  std::ostringstream summary;
  summary.precision(12);
  if (xi_family(g) == XiFamily::U) {
    const double ks = ks_distance(xs, xi_u_cdf);
    summary << "{\"group\":\"" << o.group << "\",\"replicates\":" << o.reps
            << ",\"trunc\":" << trunc << ",\"ks_vs_closed_cdf\":" << ks << "}";
  } else {
    summary << "{\"group\":\"" << o.group << "\",\"replicates\":" << o.reps
            << ",\"trunc\":" << trunc << "}";
  }
  std::cerr << summary.str() << "\n";
  return 0;
}

int run_reduce(const CommonOpts& o) {
  const auto report = reduction_test(to_config(o));
  emit_report(report, o);
  return report.pass ? 0 : 1;
}

int run_trace(const CommonOpts& o, int kmax, bool dpp) {
  const auto report = trace_experiment(to_config(o), kmax, /*use_matrix=*/!dpp);
  emit_report(report, o);
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Eigen-angle point processes of the compact classical groups: exact "
      "sampling, Wasserstein distance to uniformity, and moment/limit-law "
      "verification"};
  app.require_subcommand(1);

  CommonOpts sample_opts;
  auto* cmd_sample = app.add_subcommand("sample", "draw eigen-angle samples (JSON lines)");
  add_common(cmd_sample, sample_opts);

  CommonOpts moment_opts;
  auto* cmd_moments =
      app.add_subcommand("moments", "exact and asymptotic W2^2 moments");
  add_common(cmd_moments, moment_opts, /*with_reps=*/false);

  CommonOpts mc_opts;
  auto* cmd_mc = app.add_subcommand(
      "mc", "Monte Carlo cross-check of the exact moment formulas");
  add_common(cmd_mc, mc_opts);

  CommonOpts pi_opts;
  int pi_kmax = 12;
  double pi_gate = 1e-9;
  auto* cmd_pi = app.add_subcommand(
      "pi-check", "closed kernel moments against exact quadrature");
  add_common(cmd_pi, pi_opts, /*with_reps=*/false);
  cmd_pi->add_option("--kmax", pi_kmax, "largest frequency argument");
  cmd_pi->add_option("--gate", pi_gate, "max tolerated |closed - quadrature|");

  CommonOpts ll_opts;
  std::string ll_grid;
  std::string ll_ladder;
  int64_t ll_trunc = 100000;
  auto* cmd_ll = app.add_subcommand(
      "limitlaw", "limit-law characteristic function table / KS ladder");
  add_common(cmd_ll, ll_opts);
  cmd_ll->add_option("--grid", ll_grid, "CF grid as t0:t1:step");
  cmd_ll->add_option("--trunc", ll_trunc, "series truncation k_max");
  cmd_ll->add_option("--ladder", ll_ladder,
                     "comma-separated N ladder; runs the finite-N KS test");

  CommonOpts red_opts;
  auto* cmd_red = app.add_subcommand(
      "reduce-test", "two-sample KS between a group and its alias");
  add_common(cmd_red, red_opts);

  CommonOpts tr_opts;
  int tr_kmax = 4;
  bool tr_dpp = false;
  auto* cmd_tr =
      app.add_subcommand("trace-test", "trace moments against the fixed-k law");
  add_common(cmd_tr, tr_opts);
  cmd_tr->add_option("--kmax", tr_kmax, "largest trace power");
  cmd_tr->add_flag("--dpp", tr_dpp, "use angle sums instead of dense matrices");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_sample->parsed()) return run_sample(sample_opts);
    if (cmd_moments->parsed()) return run_moments(moment_opts);
    if (cmd_mc->parsed()) return run_mc(mc_opts);
    if (cmd_pi->parsed()) return run_pi_check(pi_opts, pi_kmax, pi_gate);
    if (cmd_ll->parsed()) return run_limitlaw(ll_opts, ll_grid, ll_trunc, ll_ladder);
    if (cmd_red->parsed()) return run_reduce(red_opts);
    if (cmd_tr->parsed()) return run_trace(tr_opts, tr_kmax, tr_dpp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
