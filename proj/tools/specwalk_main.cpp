// specwalk: spectral-measure and random-walk decision problems on sparse
// symmetric instances, with exact and simulated-measurement methods.
//
// Reports are JSON with a versioned schema and embed the resolved
// parameter set of any sampling run, so error budgets are auditable and
// identical (config, seed) pairs reproduce byte-identical files.
// Timing goes to stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include "specwalk/circuits.hpp"
#include "specwalk/diagonal_entry.hpp"
#include "specwalk/fixtures.hpp"
#include "specwalk/graph.hpp"
#include "specwalk/graph_gadget.hpp"
#include "specwalk/linalg.hpp"
#include "specwalk/phase_estimation.hpp"
#include "specwalk/random_walks.hpp"
#include "specwalk/sparse.hpp"
#include "specwalk/witness_search.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace specwalk;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_promise_violated = 2;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit_report(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}


// Circuits arrive either already closed into an involution ("u") or as an
// open circuit Y to be closed around a middle PauliZ ("z") or a middle
// Hadamard ("h", which keeps the gadget-compatible entry structure).
GateCircuit load_involution(const std::string& path, const std::string& form) {
  GateCircuit c = load_circuit(path);
  if (form == "u") return c;
  if (form == "z") return build_u_circuit(c);
  if (form == "h") return hadamard_involution(c);
  throw std::runtime_error("--form must be one of u, z, h");
}

json budget_json(const EstimateResult& est) {
  return json{{"theta", est.theta},
              {"eta", est.eta},
              {"p", est.p},
              {"delta", est.delta},
              {"epsilon", est.epsilon},
              {"samples", est.sample_count},
              {"sampling_budget", est.sampling_budget},
              {"total_error_bound", est.total_error_bound}};
}

json measure_json(const SpectralMeasure& m) {
  json out = json::array();
  for (std::size_t k = 0; k < m.values.size(); ++k)
    out.push_back(json::array({m.values[k], m.weights[k]}));
  return out;
}

std::string method_name(Method m) {
  return m == Method::exact ? "exact" : "quantum-sim";
}

Method parse_method(const std::string& name) {
  if (name == "exact") return Method::exact;
  if (name == "quantum-sim") return Method::quantum_sim;
  throw CLI::ValidationError("--method must be exact or quantum-sim");
}

std::string verdict_name(PathVerdict v) {
  switch (v) {
    case PathVerdict::ge: return "GE";
    case PathVerdict::le: return "LE";
    case PathVerdict::promise_violated: return "promise-violated";
  }
  return "?";
}

std::string verdict_name(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::ge_a: return "GE_a";
    case DecayVerdict::le_b: return "LE_b";
    case DecayVerdict::promise_violated: return "promise-violated";
  }
  return "?";
}

// ---------------------------------------------------------------- spectral

int run_spectral(const std::string& circuit_path, const std::string& form,
                 const std::string& matrix_path, Index j, const std::string& csv_path,
                 const std::string& out_path) {
  json report{{"schema", 1}, {"subcommand", "spectral"}};
  SpectralMeasure numeric;
  if (!circuit_path.empty()) {
    GateCircuit u = load_involution(circuit_path, form);
    ClockHermitian clock = build_clock_hermitian(u);
    ClockRowReport rows = verify_clock_rows(clock);
    EigenSystem es = eig(materialize(clock.a_matrix));
    CVec start = CVec::Zero(clock.dim());
    start[clock.start_index] = 1.0;
    numeric = project_state(es, start).pruned(1e-12);

    report["instance"] = circuit_path;
    report["clock"] = {{"m", clock.clock_size},
                       {"dim", clock.dim()},
                       {"start_index", clock.start_index},
                       {"eigenvalue_scale", ClockHermitian::eigenvalue_scale},
                       {"integer_rows", clock.two_sparse_layers},
                       {"rows_not_four_entries", rows.rows_not_four_entries},
                       {"rows_noninteger", rows.rows_noninteger}};

    const double alpha1 = involution_alpha1_sq(u);
    SpectralMeasure analytic = analytic_measure(clock.clock_size, alpha1)
                                   .measure()
                                   .scaled(ClockHermitian::eigenvalue_scale);
    report["alpha1_sq"] = alpha1;
    report["analytic"] = measure_json(analytic);
    report["max_deviation"] = measure_distance(numeric, analytic);
  } else {
    SparseSymmetricMatrix m = load_symmetric_matrix(matrix_path);
    if (j < 0 || j >= m.dim())
      throw std::runtime_error("spectral: --j out of range");
    EigenSystem es = eig(materialize(m));
    CVec psi = CVec::Zero(m.dim());
    psi[j] = 1.0;
    numeric = project_state(es, psi).pruned(1e-12);
    report["instance"] = matrix_path;
    report["j"] = j;
  }
  report["measure"] = measure_json(numeric);

  if (!csv_path.empty()) {
    std::string csv = "value,weight\n";
    for (std::size_t k = 0; k < numeric.values.size(); ++k) {
      json row = json::array({numeric.values[k], numeric.weights[k]});
      csv += row[0].dump() + "," + row[1].dump() + "\n";
    }
    write_text(csv_path, csv);
  }
  emit_report(report, out_path);
  return exit_ok;
}

// -------------------------------------------------------------- diag-entry

int run_diag_entry(const std::string& matrix_path, Index j, Index m, double g,
                   double epsilon, double bound, const std::string& method_name_in,
                   std::uint64_t seed, const MeasureOptions& opts, double theta,
                   double eta, const std::string& dist_csv,
                   const std::string& out_path) {
  SparseSymmetricMatrix loaded = load_symmetric_matrix(matrix_path);
  double b = bound > 0.0 ? bound : loaded.norm_bound();
  DiagonalEntryInstance inst{
      SparseSymmetricMatrix(loaded.dim(),
                            [loaded](Index i) { return loaded.row(i); },
                            loaded.max_row_nonzeros(), b),
      j, m, g, epsilon};
  Method method = parse_method(method_name_in);
  DiagonalDecision d = decide_diagonal_entry(inst, method, seed, opts);

  json report{{"schema", 1},
              {"subcommand", "diag-entry"},
              {"instance", matrix_path},
              {"method", method_name(method)},
              {"seed", seed},
              {"params", {{"j", j}, {"m", m}, {"g", g}, {"epsilon", epsilon}, {"b", b}}},
              {"verdict", verdict_name(d.verdict)},
              {"estimate", d.estimate}};
  if (d.budget) report["budget"] = budget_json(*d.budget);

  // Outcome-distribution export for the rescaled observable at |j>, with
  // explicit resolution parameters.
  if (!dist_csv.empty()) {
    if (!(theta > 0.0) || !(eta > 0.0))
      throw std::runtime_error("diag-entry: --dist-csv needs --theta and --eta");
    PEConfig cfg = pe_config(theta, eta, opts.delta, opts.alpha, seed);
    DenseHermitian rescaled(RMat(materialize(inst.matrix).real_part() / b));
    CVec psi = CVec::Zero(inst.matrix.dim());
    psi[j] = 1.0;
    OutcomeDistribution dist = exact_outcome_distribution(rescaled, psi, cfg);
    std::string csv = "x,probability\n";
    for (Index a = 0; a < dist.grid_size(); ++a) {
      json row = json::array({dist.x_of(a), dist.probabilities[a]});
      csv += row[0].dump() + "," + row[1].dump() + "\n";
    }
    write_text(dist_csv, csv);
    report["distribution"] = {{"theta", theta}, {"eta", eta}, {"p", cfg.p},
                              {"csv", dist_csv}};
  }
  emit_report(report, out_path);
  return d.verdict == PathVerdict::promise_violated ? exit_promise_violated : exit_ok;
}

// ------------------------------------------------------------------- paths

int run_paths(const std::string& graph_path, const std::string& perm_path, Index q,
              Index r, Index m, double g, double epsilon, double b,
              const std::string& method_name_in, std::uint64_t seed,
              const MeasureOptions& opts, const std::string& out_path) {
  PathDifferenceInstance inst;
  inst.graph = load_graph(graph_path);
  inst.automorphism = perm_path.empty() ? Permutation::pair_swap(inst.graph.dim())
                                        : load_permutation(perm_path);
  inst.q = q;
  inst.r = r;
  inst.m = m;
  inst.g = g;
  inst.epsilon = epsilon;
  inst.growth_bound = b;
  Method method = parse_method(method_name_in);
  PathDecision d = decide_path_difference(inst, method, seed, opts);

  json report{{"schema", 1},
              {"subcommand", "paths"},
              {"instance", graph_path},
              {"method", method_name(method)},
              {"seed", seed},
              {"params",
               {{"q", q}, {"r", r}, {"m", m}, {"g", g}, {"epsilon", epsilon}, {"b", b}}},
              {"verdict", verdict_name(d.verdict)},
              {"delta_estimate", d.estimate}};
  if (d.budget) report["budget"] = budget_json(*d.budget);
  emit_report(report, out_path);
  return d.verdict == PathVerdict::promise_violated ? exit_promise_violated : exit_ok;
}

// -------------------------------------------------------------------- walk

int run_walk(const std::string& graph_path, const std::string& perm_path, Index q,
             Index r, double mu, double a, double b, double t_query, double t_eval,
             const std::string& sweep, const std::string& csv_path,
             const std::string& method_name_in, std::uint64_t seed,
             const MeasureOptions& opts, const std::string& out_path) {
  WalkInstance inst;
  inst.graph = load_graph(graph_path);
  inst.automorphism = perm_path.empty() ? Permutation::pair_swap(inst.graph.dim())
                                        : load_permutation(perm_path);
  inst.q = q;
  inst.r = r;
  inst.mu = mu;
  inst.a_const = a;
  inst.b_const = b;
  inst.t_query = t_query;

  json report{{"schema", 1},
              {"subcommand", "walk"},
              {"instance", graph_path},
              {"seed", seed},
              {"params",
               {{"q", q},
                {"r", r},
                {"mu", mu},
                {"a", a},
                {"b", b},
                {"T", t_query}}}};

  if (!sweep.empty()) {
    double t0 = 0.0, t1 = 0.0;
    int steps = 0;
    if (std::sscanf(sweep.c_str(), "%lf:%lf:%d", &t0, &t1, &steps) != 3 || steps < 1)
      throw std::runtime_error("walk: --sweep expects t0:t1:steps");
    LaplacianSpectrum s = laplacian_spectrum(inst.graph);
    // Envelopes from the pair's spectral data: bottom-mass decay below,
    // bottom plus the next mode above.
    std::vector<std::pair<double, double>> support;  // (eigenvalue, weight)
    for (Index i = 0; i < s.eigenvalues.size(); ++i) {
      const double amp = (s.eigenvectors(q, i) - s.eigenvectors(r, i)) / std::sqrt(2.0);
      const double w = amp * amp;
      if (w > 1e-12) {
        if (!support.empty() && s.eigenvalues[i] - support.back().first < 1e-9)
          support.back().second += w;
        else
          support.emplace_back(s.eigenvalues[i], w);
      }
    }
    const double lambda0 = support.front().first;
    const double w0 = support.front().second;
    const double lambda1 = support.size() > 1 ? support[1].first : lambda0;

    std::string csv = "t,c_exact,lower_envelope,upper_envelope\n";
    for (int k = 0; k <= steps; ++k) {
      const double t = t0 + (t1 - t0) * static_cast<double>(k) / steps;
      const double c = c_exact(s, q, r, t);
      const double lower = w0 * std::exp(-lambda0 * t);
      const double upper = lower + (1.0 - w0) * std::exp(-lambda1 * t);
      json row = json::array({t, c, lower, upper});
      csv += row[0].dump() + "," + row[1].dump() + "," + row[2].dump() + "," +
             row[3].dump() + "\n";
    }
    if (csv_path.empty()) throw std::runtime_error("walk: --sweep requires --csv");
    write_text(csv_path, csv);
    report["sweep"] = sweep;
    report["csv"] = csv_path;
    report["pair_support_min"] = lambda0;
    emit_report(report, out_path);
    return exit_ok;
  }

  if (t_eval >= 0.0) {
    // Plain evaluation of c_qr at one time, no decision.
    LaplacianSpectrum s = laplacian_spectrum(inst.graph);
    report["t"] = t_eval;
    report["c_exact"] = c_exact(s, q, r, t_eval);
    report["pair_support_min"] = pair_support_min(s, q, r);
    emit_report(report, out_path);
    return exit_ok;
  }

  Method method = parse_method(method_name_in);
  DecayDecision d = decide_decay(inst, method, seed, opts);
  report["method"] = method_name(method);
  report["verdict"] = verdict_name(d.verdict);
  report["c_estimate"] = d.c_estimate;
  report["threshold_a"] = d.threshold_a;
  report["threshold_b"] = d.threshold_b;
  if (d.budget) report["budget"] = budget_json(*d.budget);
  emit_report(report, out_path);
  return d.verdict == DecayVerdict::promise_violated ? exit_promise_violated : exit_ok;
}

// ----------------------------------------------------------------- witness

int run_witness(const std::string& graph_path, const std::string& circuit_path,
                int witness_bits, Index n_tilde, double mu, double a, double b,
                double t_query, const std::string& method_name_in, std::uint64_t seed,
                double alpha, const std::string& out_path) {
  WitnessInstance inst;
  json source;
  if (!circuit_path.empty()) {
    WitnessConstruction c =
        build_witness_instance(load_circuit(circuit_path), witness_bits);
    inst = c.instance;
    if (n_tilde >= 0) inst.n_tilde = n_tilde;
    source = {{"circuit", circuit_path},
              {"witness_bits", witness_bits},
              {"clock_size", c.clock_size}};
  } else {
    inst.graph = load_graph(graph_path);
    inst.n_tilde = n_tilde >= 0 ? n_tilde : inst.graph.dim() / 2;
    inst.mu = mu;
    inst.a_const = a;
    inst.b_const = b;
    inst.t_query = t_query;
    source = {{"graph", graph_path}};
  }
  Method method = parse_method(method_name_in);
  WitnessReport r = decide_witness(inst, method, seed, alpha);

  json report{{"schema", 1},
              {"subcommand", "witness"},
              {"instance", source},
              {"method", method_name(method)},
              {"seed", seed},
              {"params",
               {{"n_tilde", inst.n_tilde},
                {"mu", inst.mu},
                {"a", inst.a_const},
                {"b", inst.b_const},
                {"T", inst.t_query}}}};
  switch (r.kind) {
    case WitnessVerdictKind::exists:
      report["verdict"] = "EXISTS";
      report["witness_index"] = r.witness_index;
      break;
    case WitnessVerdictKind::none:
      report["verdict"] = "NONE";
      break;
    case WitnessVerdictKind::promise_violated:
      report["verdict"] = "promise-violated";
      break;
  }
  report["pair_c"] = r.pair_c;
  emit_report(report, out_path);
  return r.kind == WitnessVerdictKind::promise_violated ? exit_promise_violated
                                                        : exit_ok;
}

// ------------------------------------------------------------------ reduce

int run_reduce(const std::string& circuit_path, const std::string& form,
               const std::string& out_dir, const std::string& prefix,
               const std::string& out_path) {
  GateCircuit u = load_involution(circuit_path, form);
  ClockHermitian clock = build_clock_hermitian(u);
  ClockRowReport rows = verify_clock_rows(clock);
  const std::string base = out_dir + "/" + prefix;

  json report{{"schema", 1}, {"subcommand", "reduce"}, {"instance", circuit_path}};
  report["clock"] = {{"m", clock.clock_size},
                     {"dim", clock.dim()},
                     {"start_index", clock.start_index},
                     {"eigenvalue_scale", ClockHermitian::eigenvalue_scale},
                     {"integer_rows", clock.two_sparse_layers},
                     {"rows_not_four_entries", rows.rows_not_four_entries},
                     {"rows_noninteger", rows.rows_noninteger}};
  report["alpha1_sq"] = involution_alpha1_sq(u);

  const std::string matrix_path = base + ".matrix.txt";
  save_symmetric_matrix(clock.a_matrix, matrix_path);
  json files{{"matrix", matrix_path}};

  if (clock.two_sparse_layers) {
    GadgetGraph gadget = signed_to_adjacency(SignedSparseMatrix(clock.a_matrix, true));
    const std::string graph_path = base + ".graph.txt";
    const std::string perm_path = base + ".perm.txt";
    save_graph(gadget.graph.materialized(), graph_path);
    save_permutation(gadget.pair_exchange, perm_path);
    files["graph"] = graph_path;
    files["perm"] = perm_path;
    const auto [q, r] = gadget.pair_of(clock.start_index);
    report["pair"] = {{"q", q}, {"r", r}};
    HardnessParameters hp =
        hardness_parameters(clock.clock_size, ClockHermitian::eigenvalue_scale);
    report["walk_params"] = {{"mu", hp.mu},
                             {"nu", hp.nu},
                             {"T", hp.t_star},
                             {"a", hp.reject_threshold},
                             {"b", hp.accept_threshold}};
  } else {
    report["note"] = "bare z layer: entries outside {-1,0,+1}, no 0/1 gadget emitted";
  }
  report["files"] = files;
  emit_report(report, out_path);
  return exit_ok;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& circuit_path, const std::string& form,
               const std::string& matrix_path, Index j, Index m,
               const std::string& out_path) {
  json report{{"schema", 1}, {"subcommand", "verify"}};
  bool all_ok = true;

  if (!circuit_path.empty()) {
    GateCircuit u = load_involution(circuit_path, form);
    ClockHermitian clock = build_clock_hermitian(u);
    ClockRowReport rows = verify_clock_rows(clock);
    report["instance"] = circuit_path;
    report["clock_rows"] = {{"checked", rows.rows_checked},
                            {"not_four_entries", rows.rows_not_four_entries},
                            {"noninteger", rows.rows_noninteger},
                            {"clean", rows.clean()}};

    DecayReductionReport decay = verify_decay_reduction(u);
    report["decay_reduction"] = {
        {"alpha1_sq", decay.alpha1_sq},
        {"gadget_built", decay.gadget_built},
        {"chain_identity_deviation", decay.chain_identity_deviation},
        {"envelope_violation", decay.envelope_violation},
        {"separation_checked", decay.separation_checked},
        {"separation_holds", decay.separation_holds},
        {"c_at_t_star", decay.c_at_t_star},
        {"mu", decay.params.mu},
        {"nu", decay.params.nu},
        {"t_star", decay.params.t_star}};
    all_ok = all_ok && decay.ok();

    if (clock.two_sparse_layers) {
      SignedSparseMatrix signed_clock(clock.a_matrix, true);
      DirectSumReport ds = direct_sum_check(signed_clock);
      report["direct_sum"] = {{"max_entry_deviation", ds.max_entry_deviation},
                              {"spectrum_deviation", ds.spectrum_deviation},
                              {"norm_gadget", ds.norm_gadget},
                              {"norm_expected", ds.norm_expected},
                              {"ok", ds.ok()}};
      ReductionIdentityReport ri =
          verify_reduction_identity(signed_clock, clock.start_index, m);
      report["reduction_identity"] = {{"m", m},
                                      {"identity_holds", ri.identity_holds},
                                      {"growth_bound_holds", ri.growth_bound_holds},
                                      {"matrix_norm", ri.matrix_norm}};
      all_ok = all_ok && ds.ok() && ri.ok();
    }
  } else {
    SignedSparseMatrix a(load_symmetric_matrix(matrix_path));
    report["instance"] = matrix_path;
    DirectSumReport ds = direct_sum_check(a);
    report["direct_sum"] = {{"max_entry_deviation", ds.max_entry_deviation},
                            {"spectrum_deviation", ds.spectrum_deviation},
                            {"norm_gadget", ds.norm_gadget},
                            {"norm_expected", ds.norm_expected},
                            {"ok", ds.ok()}};
    ReductionIdentityReport ri = verify_reduction_identity(a, j, m);
    report["reduction_identity"] = {{"m", m},
                                    {"identity_holds", ri.identity_holds},
                                    {"growth_bound_holds", ri.growth_bound_holds},
                                    {"matrix_norm", ri.matrix_norm}};
    all_ok = ds.ok() && ri.ok();
  }

  report["ok"] = all_ok;
  emit_report(report, out_path);
  return all_ok ? exit_ok : exit_error;
}

// ----------------------------------------------------------------- fixture

int run_fixture(const std::string& kind, Index n, Index degree,
                const std::string& circuit_path, std::uint64_t seed,
                const std::string& out_dir, const std::string& prefix,
                const std::string& out_path) {
  const std::string base = out_dir + "/" + prefix;
  json files;
  if (kind == "k-complete") {
    RegularGraph g = complete_graph(n);
    save_graph(g, base + ".graph.txt");
    save_permutation(Permutation::transposition(n, 0, 1), base + ".perm.txt");
    files = {{"graph", base + ".graph.txt"}, {"perm", base + ".perm.txt"}};
  } else if (kind == "cycle") {
    save_graph(cycle_graph(n), base + ".graph.txt");
    save_permutation(cycle_reflection(n), base + ".perm.txt");
    files = {{"graph", base + ".graph.txt"}, {"perm", base + ".perm.txt"}};
  } else if (kind == "random-regular") {
    save_graph(random_regular_graph(n, degree, seed), base + ".graph.txt");
    files = {{"graph", base + ".graph.txt"}};
  } else if (kind == "clock") {
    if (circuit_path.empty())
      throw std::runtime_error("fixture: kind clock requires --circuit");
    return run_reduce(circuit_path, "u", out_dir, prefix, out_path);
  } else {
    throw std::runtime_error("fixture: unknown kind " + kind);
  }
  json report{{"schema", 1},
              {"subcommand", "fixture"},
              {"kind", kind},
              {"seed", seed},
              {"files", files}};
  emit_report(report, out_path);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral measures, path differences and walk decay on sparse instances"};
  app.require_subcommand(1);

  std::string circuit, matrix, graph, perm, out, csv, out_dir = ".", prefix = "instance";
  std::string method = "exact", sweep, kind, form = "u";
  Index j = 0, m = 1, q = 0, r = 1, n = 5, degree = 3, n_tilde = -1;
  int witness_bits = 1;
  double g = 0.0, epsilon = 0.1, b = 0.0, mu = 1.0, a_const = 0.9, b_const = 0.5;
  double t_query = 1.0, t_eval = -1.0, theta = 0.0, eta = 0.0;
  std::string dist_csv;
  MeasureOptions opts;
  std::uint64_t seed = 0;

  auto* sp = app.add_subcommand("spectral", "spectral measure of a clock or matrix");
  sp->add_option("--circuit", circuit);
  sp->add_option("--form", form, "u: as-is, z: close with PauliZ, h: close with Hadamard");
  sp->add_option("--matrix", matrix);
  sp->add_option("--j", j);
  sp->add_option("--csv", csv);
  sp->add_option("--out", out);

  auto* de = app.add_subcommand("diag-entry", "decide (A^m)_jj against g +/- eps b^m");
  de->add_option("--matrix", matrix)->required();
  de->add_option("--j", j);
  de->add_option("--m", m);
  de->add_option("--g", g);
  de->add_option("--epsilon", epsilon);
  de->add_option("--b", b);
  de->add_option("--method", method);
  de->add_option("--seed", seed);
  de->add_option("--alpha", opts.alpha);
  de->add_option("--pe-epsilon", opts.epsilon_override);
  de->add_option("--delta", opts.delta);
  de->add_option("--repetitions", opts.repetitions_override);
  de->add_option("--theta", theta);
  de->add_option("--eta", eta);
  de->add_option("--dist-csv", dist_csv);
  de->add_option("--out", out);

  auto* pa = app.add_subcommand("paths", "decide the walk-count difference Delta^m_qr");
  pa->add_option("--graph", graph)->required();
  pa->add_option("--perm", perm);
  pa->add_option("--q", q);
  pa->add_option("--r", r);
  pa->add_option("--m", m);
  pa->add_option("--g", g);
  pa->add_option("--epsilon", epsilon);
  pa->add_option("--b", b)->required();
  pa->add_option("--method", method);
  pa->add_option("--seed", seed);
  pa->add_option("--alpha", opts.alpha);
  pa->add_option("--pe-epsilon", opts.epsilon_override);
  pa->add_option("--delta", opts.delta);
  pa->add_option("--repetitions", opts.repetitions_override);
  pa->add_option("--out", out);

  auto* wa = app.add_subcommand("walk", "continuous-time decay c_qr(T) or a t-sweep");
  wa->add_option("--graph", graph)->required();
  wa->add_option("--perm", perm);
  wa->add_option("--q", q);
  wa->add_option("--r", r);
  wa->add_option("--mu", mu);
  wa->add_option("--a", a_const);
  wa->add_option("--b", b_const);
  wa->add_option("--T", t_query);
  wa->add_option("--t", t_eval, "evaluate c_qr at one time instead of deciding");
  wa->add_option("--sweep", sweep, "t0:t1:steps");
  wa->add_option("--csv", csv);
  wa->add_option("--method", method);
  wa->add_option("--seed", seed);
  wa->add_option("--alpha", opts.alpha);
  wa->add_option("--pe-epsilon", opts.epsilon_override);
  wa->add_option("--delta", opts.delta);
  wa->add_option("--repetitions", opts.repetitions_override);
  wa->add_option("--out", out);

  auto* wi = app.add_subcommand("witness", "search paired nodes for slow decay");
  wi->add_option("--graph", graph);
  wi->add_option("--circuit", circuit);
  wi->add_option("--witness-bits", witness_bits);
  wi->add_option("--n-tilde", n_tilde);
  wi->add_option("--mu", mu);
  wi->add_option("--a", a_const);
  wi->add_option("--b", b_const);
  wi->add_option("--T", t_query);
  wi->add_option("--method", method);
  wi->add_option("--seed", seed);
  wi->add_option("--alpha", opts.alpha);
  wi->add_option("--out", out);

  auto* re = app.add_subcommand("reduce", "circuit -> clock matrix, gadget graph, params");
  re->add_option("--circuit", circuit)->required();
  re->add_option("--form", form, "u: as-is, z: close with PauliZ, h: close with Hadamard");
  re->add_option("--out-dir", out_dir);
  re->add_option("--prefix", prefix);
  re->add_option("--out", out);

  auto* ve = app.add_subcommand("verify", "verification suites for an instance");
  ve->add_option("--circuit", circuit);
  ve->add_option("--form", form, "u: as-is, z: close with PauliZ, h: close with Hadamard");
  ve->add_option("--matrix", matrix);
  ve->add_option("--j", j);
  ve->add_option("--m", m);
  ve->add_option("--out", out);

  auto* fi = app.add_subcommand("fixture", "generate deterministic instance files");
  fi->add_option("--kind", kind)->required();
  fi->add_option("--n", n);
  fi->add_option("--degree", degree);
  fi->add_option("--circuit", circuit);
  fi->add_option("--seed", seed);
  fi->add_option("--out-dir", out_dir);
  fi->add_option("--prefix", prefix);
  fi->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  int status = exit_error;
  try {
    if (sp->parsed()) {
      if (circuit.empty() == matrix.empty())
        throw std::runtime_error("spectral: exactly one of --circuit/--matrix");
      status = run_spectral(circuit, form, matrix, j, csv, out);
    } else if (de->parsed()) {
      status = run_diag_entry(matrix, j, m, g, epsilon, b, method, seed, opts,
                              theta, eta, dist_csv, out);
    } else if (pa->parsed()) {
      status = run_paths(graph, perm, q, r, m, g, epsilon, b, method, seed, opts, out);
    } else if (wa->parsed()) {
      status = run_walk(graph, perm, q, r, mu, a_const, b_const, t_query, t_eval,
                        sweep, csv, method, seed, opts, out);
    } else if (wi->parsed()) {
      if (graph.empty() == circuit.empty())
        throw std::runtime_error("witness: exactly one of --graph/--circuit");
      status = run_witness(graph, circuit, witness_bits, n_tilde, mu, a_const, b_const,
                           t_query, method, seed, opts.alpha, out);
    } else if (re->parsed()) {
      status = run_reduce(circuit, form, out_dir, prefix, out);
    } else if (ve->parsed()) {
      if (circuit.empty() == matrix.empty())
        throw std::runtime_error("verify: exactly one of --circuit/--matrix");
      status = run_verify(circuit, form, matrix, j, m, out);
    } else if (fi->parsed()) {
      status = run_fixture(kind, n, degree, circuit, seed, out_dir, prefix, out);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_error;
  }
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed: " << elapsed.count() << " s\n";
  return status;
}
