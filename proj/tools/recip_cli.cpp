// Command-line front end for the recip library. Every subcommand is a thin
// wrapper over one library call; vertices are printed 1-based.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "recip/recip.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

double default_eps() {
  if (const char* env = std::getenv("RECIP_EPS")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size() && v >= 0.0) return v;
    } catch (const std::exception&) {
    }
    throw recip::InputError("RECIP_EPS is not a non-negative number");
  }
  return recip::kDefaultEdgeEps;
}

std::vector<double> parse_list(const std::string& text) {
  std::istringstream in(text);
  const auto rows = recip::read_csv(in);
  if (rows.size() != 1) throw recip::InputError("expected a comma-separated list");
  return rows.front();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw recip::InputError("cannot write " + path);
  out << text;
}

recip::ReciprocityMode mode_of(bool symmetrize) {
  return symmetrize ? recip::ReciprocityMode::symmetrize : recip::ReciprocityMode::validate;
}

nlohmann::json verdict_json(const recip::RegionVerdict& v) {
  nlohmann::json j;
  j["guaranteed_efficient"] = v.guaranteed_efficient;
  j["matched_exception"] = v.matched_exception ? nlohmann::json(*v.matched_exception) : nlohmann::json();
  j["reduction_used"] = v.reduction_used;
  return j;
}

nlohmann::json z_json(const recip::ZParams& p, double eps) {
  const auto a = recip::z_matrix(p);
  const auto report = recip::analyze(a, std::nullopt, eps);
  nlohmann::json j;
  j["params"] = {{"n", p.n}, {"x", p.x}, {"y", p.y}, {"z", p.z}, {"a", p.a}};
  j["report"] = recip::to_json(report);
  if (p.n >= 5) {
    j["region"] = verdict_json(recip::guarantee_n5plus(p));
    const auto sink = recip::sink_characterization(p, eps);
    j["sink_present"] = sink.sink_present;
    j["sink_vertex"] = sink.sink_vertex ? nlohmann::json(*sink.sink_vertex + 1) : nlohmann::json();
    j["sink_agrees"] = sink.agrees;
    j["block_sink_agrees"] = sink.block_agrees;
    const auto res = recip::eigen_identity_residuals(p);
    j["max_identity_residual"] = res.max_derived();
    j["middle_collapse"] = res.middle_collapse;
    auto predicted = nlohmann::json::array();
    for (const auto& e : recip::predicted_edges(p))
      predicted.push_back({{"edge", {e.edge.first + 1, e.edge.second + 1}}, {"clause", e.clause}});
    j["predicted_edges"] = std::move(predicted);
    if (const auto* row = recip::table_oracle(p)) {
      const auto g = recip::build_digraph(a, report.vector, eps);
      j["table_row"] = {{"kind", recip::to_string(row->kind)},
                        {"index", row->index},
                        {"relation", std::string(row->relation)},
                        {"claimed_edges_present", recip::check_table_row(*row, g).empty()}};
    } else {
      j["table_row"] = nullptr;
    }
  } else if (p.n == 4 && p.a == 1.0) {
    j["n4_guaranteed"] = recip::guarantee_n4(p.x, p.y, p.z, recip::N4Form::six_cases);
  }
  return j;
}

nlohmann::json extension_json(const recip::ReciprocalMatrix& base,
                              const recip::ReciprocalMatrix& ext, double target_sum,
                              double eps) {
  const auto report = recip::analyze(ext, std::nullopt, eps);
  nlohmann::json j;
  j["base_order"] = base.size();
  j["target_sum"] = target_sum;
  std::vector<double> column;
  for (std::size_t i = 0; i < base.size(); ++i) column.push_back(ext(i, base.size()));
  j["appended_column"] = column;
  j["perron_vector"] = recip::to_json(report.vector);
  j["efficient"] = report.efficient;
  j["order_preserved"] = recip::order_preservation_check(base, ext).preserved;
  return j;
}

int print_summary(const recip::VerificationSummary& s) {
  std::cout << "suite " << s.suite << ": " << s.checks << " checks, " << s.failures.size()
            << " failures, " << s.wall_seconds << " s\n";
  for (const auto& f : s.failures) std::cout << "  FAIL " << f.id << "  " << f.detail << '\n';
  return s.ok() ? kExitOk : kExitVerifyFailed;
}

int run_worked_example(double eps) {
  namespace ref = recip::reference;
  bool ok = true;
  auto mark = [&](bool pass, const std::string& what) {
    ok &= pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << what << '\n';
  };
  const auto b = ref::ordering_base();
  std::cout << "B (symmetrized from printed upper triangle):\n";
  recip::write_matrix(std::cout, b);
  const auto wb = recip::perron(b);
  std::cout << "Perron value " << wb.value << ", vector ";
  recip::write_vector(std::cout, wb.vector);
  const auto printed_w = ref::ordering_base_perron();
  double dev = 0.0;
  for (std::size_t i = 0; i < 5; ++i) dev = std::max(dev, std::abs(wb.vector[i] - printed_w[i]));
  mark(dev <= 5e-4, "Perron vector matches printed W within 5e-4");

  const auto d = ref::ordering_scaling();
  const auto scaled = recip::monomial_similarity(b, recip::MonomialTransform::diagonal(d));
  std::cout << "D B D^-1:\n";
  recip::write_matrix(std::cout, scaled);
  const auto printed = ref::ordering_scaled_printed();
  dev = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) dev = std::max(dev, std::abs(scaled(i, j) - printed(i, j)));
  mark(dev <= 1e-3, "D B D^-1 matches printed B' within 1e-3");

  const auto rep = recip::analyze(printed, std::nullopt, eps);
  std::cout << "B' Perron digraph: " << rep.scc_count << " strong component(s)\n";
  mark(!rep.efficient, "Perron vector of B' is inefficient");
  mark(recip::analyze(printed, recip::PositiveVector::ones(5), eps).efficient,
       "e_5 is efficient for B'");
  mark(recip::well_behaved_type_I(printed), "B' is well-behaved of type I");

  const auto ext = recip::constant_row_sum_extension(printed);
  std::cout << "A' (constant row sum " << recip::format_double(ext.target_sum) << "):\n";
  recip::write_matrix(std::cout, ext.matrix);
  mark(ext.perron_check <= 1e-10, "e_6 is the Perron vector of A'");

  const auto conj = recip::conjugated_extension(b, d);
  std::cout << "A = (D^-1 + [1]) A' (D + [1]):\n";
  recip::write_matrix(std::cout, conj.matrix);
  mark(recip::remove_index(conj.matrix, 5) == b, "A(6) = B");
  const auto v = recip::perron(conj.matrix).vector;
  std::cout << "Perron vector of A: ";
  recip::write_vector(std::cout, v);
  const auto expected = ref::ordering_extension_perron();
  dev = 0.0;
  for (std::size_t i = 0; i < 6; ++i) dev = std::max(dev, std::abs(v[i] - expected[i]));
  mark(dev <= 1e-9, "Perron vector of A is [1,1,1,1.5,2,0.5]");
  mark(recip::analyze(conj.matrix, std::nullopt, eps).efficient, "Perron vector of A is efficient");
  mark(!recip::order_preservation_check(b, conj.matrix).preserved,
       "weight ordering of B changes in A");
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficiency analysis of Perron vectors of reciprocal matrices"};
  app.require_subcommand(1);

  double eps = -1.0;
  app.add_option("--eps", eps, "relative edge tolerance (default RECIP_EPS or 1e-9)");

  std::string matrix_path, vector_path, out_path;
  bool symmetrize = false;
  double recip_tol = 1e-12;

  auto* analyze = app.add_subcommand("analyze", "efficiency report for a matrix [and vector]");
  analyze->add_option("matrix", matrix_path, "CSV matrix")->required();
  analyze->add_option("--vector", vector_path, "CSV vector (default: Perron vector)");
  analyze->add_flag("--symmetrize", symmetrize, "rebuild the lower triangle from the upper");
  analyze->add_option("--reciprocity-tol", recip_tol, "validate-mode tolerance");
  analyze->add_option("-o,--out", out_path, "write JSON here instead of stdout");

  recip::ZParams zp;
  auto* z = app.add_subcommand("z", "report and region verdict for Z_n(x,y,z,a)");
  z->add_option("--n", zp.n, "order")->required();
  z->add_option("--x", zp.x)->required();
  z->add_option("--y", zp.y)->required();
  z->add_option("--z", zp.z)->required();
  z->add_option("--a", zp.a)->required();
  z->add_option("-o,--out", out_path);

  std::size_t sweep_n = 5;
  std::string axis_text = "0.25,0.5,1,2,4";
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "grid sweep over (x,y,z,a), CSV output");
  sweep->add_option("--n", sweep_n, "order (>= 5)");
  sweep->add_option("--axis", axis_text, "comma-separated axis values");
  sweep->add_option("--threads", threads, "worker threads (0 = hardware)");
  sweep->add_option("-o,--out", out_path);

  std::string method = "constant-row-sum", diag_text, matrix_out;
  auto* extend = app.add_subcommand("extend", "constant-row-sum extension, JSON output");
  extend->add_option("matrix", matrix_path, "CSV matrix")->required();
  extend->add_option("--method", method)->check(CLI::IsMember({"constant-row-sum"}));
  extend->add_option("--conjugate-diag", diag_text, "d1,...,dn: extend D A D^-1 and map back");
  extend->add_flag("--symmetrize", symmetrize);
  extend->add_option("--reciprocity-tol", recip_tol);
  extend->add_option("--matrix-out", matrix_out, "also write the extension as CSV");
  extend->add_option("-o,--out", out_path);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite name or 'all'");

  auto* example = app.add_subcommand("example-ee1", "walk through the 5x5 extension example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (eps < 0.0) eps = default_eps();
    if (*analyze) {
      const auto a = recip::load_matrix(matrix_path, mode_of(symmetrize), recip_tol);
      std::optional<recip::PositiveVector> w;
      if (!vector_path.empty()) w = recip::load_vector(vector_path);
      emit(recip::to_json(recip::analyze(a, w, eps)).dump(2) + "\n", out_path);
    } else if (*z) {
      emit(z_json(zp, eps).dump(2) + "\n", out_path);
    } else if (*sweep) {
      std::ostringstream csv;
      recip::write_sweep_csv(csv, recip::grid_sweep(sweep_n, parse_list(axis_text), eps, threads));
      emit(csv.str(), out_path);
    } else if (*extend) {
      const auto a = recip::load_matrix(matrix_path, mode_of(symmetrize), recip_tol);
      recip::ReciprocalMatrix b;
      double s = 0.0;
      if (diag_text.empty()) {
        const auto ext = recip::constant_row_sum_extension(a);
        b = ext.matrix;
        s = ext.target_sum;
      } else {
        const auto conj = recip::conjugated_extension(a, recip::PositiveVector(parse_list(diag_text)));
        b = conj.matrix;
        s = conj.scaled.target_sum;
      }
      if (!matrix_out.empty()) recip::save_matrix(matrix_out, b);
      emit(extension_json(a, b, s, eps).dump(2) + "\n", out_path);
    } else if (*verify) {
      recip::SuiteOptions opts;
      opts.eps_rel = eps;
      return print_summary(recip::verify_suite(suite, opts));
    } else if (*example) {
      return run_worked_example(eps);
    }
  } catch (const recip::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const recip::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitInputError;
  }
  return kExitOk;
}
