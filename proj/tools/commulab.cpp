// commulab: exact matrix-commutator equations over commutative rings.
//
// Subcommands: list, verify, solve, jordan-fiber, generic-check,
// groebner-dim, st-check. All output is JSON (or CSV for verify --format
// csv) on stdout; exit codes follow the verification semantics
// (0 all pass, 1 any fail, 2 inconclusive).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commulab/equations.hpp"
#include "commulab/groebner.hpp"
#include "commulab/matrix.hpp"
#include "commulab/registry.hpp"
#include "commulab/ring.hpp"
#include "commulab/spectral.hpp"

namespace {

using nlohmann::ordered_json;

commulab::Matrix matrix_from_json(const commulab::RingSpec& ring,
                                  const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    rows.emplace_back();
    for (const auto& cell : row) rows.back().push_back(cell.get<std::string>());
  }
  return commulab::Matrix::from_strings(ring, rows);
}

ordered_json matrix_to_json(const commulab::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

commulab::EquationId equation_from_flags(const std::string& name, int k,
                                         int alpha,
                                         const std::optional<std::string>& g,
                                         const commulab::RingSpec& ring) {
  using commulab::EquationId;
  if (name == "square") return EquationId::square();
  if (name == "cube") return EquationId::cube();
  if (name == "simN") return EquationId::sim_n();
  if (name == "lieSquare") return EquationId::lie_square();
  if (name == "genBinom") return EquationId::gen_binom(k);
  if (name == "powerA") return EquationId::power_a(alpha);
  if (name == "powerX") return EquationId::power_x(alpha);
  if (name == "powerXg") {
    if (!g)
      throw CLI::ValidationError(
          "--g", "powerXg needs --g with ascending coefficients c0,c1,...");
    return EquationId::power_xg(alpha, commulab::parse_unipoly(ring, *g));
  }
  throw CLI::ValidationError("--eq", "unknown equation '" + name + "'");
}

int emit_and_exit_code(const std::vector<commulab::CheckReport>& reports,
                       const std::string& format, bool timings,
                       const std::optional<std::string>& out_path) {
  std::string payload = format == "csv"
                            ? commulab::emit_report_csv(reports)
                            : commulab::emit_report_json(reports, timings);
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << *out_path << " for writing\n";
      return 3;
    }
    f << payload;
  } else {
    std::cout << payload;
  }
  return commulab::aggregate_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact solvers and machine checks for the matrix equations "
      "AX-XA = X^a g(X) and their binomial relatives over commutative rings"};
  app.require_subcommand(1);

  // --- list ---------------------------------------------------------------
  auto* list_cmd = app.add_subcommand("list", "print the check registry");

  // --- verify -------------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "run registered checks and report");
  std::string verify_id, verify_profile = "quick", verify_format = "json";
  std::string verify_ring, verify_out;
  std::uint64_t verify_seed = 0;
  bool verify_all = false, verify_timings = false;
  bool seed_set = false;
  int verify_jobs = 1;
  std::uint64_t verify_budget = 0;
  verify_cmd->add_option("--id", verify_id, "single check id (e.g. T13)");
  verify_cmd->add_flag("--all", verify_all, "run a whole profile");
  verify_cmd->add_option("--profile", verify_profile,
                         "quick | full | extended");
  verify_cmd->add_option("--ring", verify_ring, "ring override");
  verify_cmd
      ->add_option("--seed", verify_seed, "seed override")
      ->each([&](const std::string&) { seed_set = true; });
  verify_cmd->add_option("--out", verify_out, "write the report to a file");
  verify_cmd->add_option("--format", verify_format, "json | csv");
  verify_cmd->add_flag("--timings", verify_timings,
                       "include wall-clock ms in the JSON report");
  verify_cmd->add_option("--jobs", verify_jobs, "concurrent checks");
  verify_cmd->add_option("--budget", verify_budget,
                         "enumeration budget override");

  // --- solve --------------------------------------------------------------
  auto* solve_cmd =
      app.add_subcommand("solve", "enumerate solutions over a finite ring");
  std::string solve_eq = "powerX", solve_ring, solve_a, solve_g;
  int solve_alpha = 2, solve_k = 2;
  bool solve_nilpotent = false;
  std::uint64_t solve_budget = 20000000;
  solve_cmd->add_option("--eq", solve_eq,
                        "square|cube|simN|lieSquare|genBinom|powerA|powerX|"
                        "powerXg");
  solve_cmd->add_option("--alpha", solve_alpha, "exponent alpha");
  solve_cmd->add_option("--k", solve_k, "binomial k for genBinom");
  solve_cmd->add_option("--ring", solve_ring, "ring spec")->required();
  solve_cmd->add_option("--A", solve_a, "matrix A as JSON rows")->required();
  solve_cmd->add_option("--g", solve_g,
                        "polynomial g as ascending coefficients c0,c1,...");
  solve_cmd->add_flag("--nilpotent-only", solve_nilpotent,
                      "keep only nilpotent X");
  solve_cmd->add_option("--budget", solve_budget, "candidate budget");

  // --- jordan-fiber -------------------------------------------------------
  auto* fiber_cmd = app.add_subcommand(
      "jordan-fiber", "solve X J_n - J_n X = X^alpha for given first row");
  int fiber_n = 3, fiber_alpha = 2;
  std::string fiber_ring, fiber_params;
  fiber_cmd->add_option("--n", fiber_n, "dimension")->required();
  fiber_cmd->add_option("--alpha", fiber_alpha, "exponent");
  fiber_cmd->add_option("--ring", fiber_ring, "field ring spec")->required();
  fiber_cmd
      ->add_option("--params", fiber_params,
                   "comma-separated x_12,...,x_1n values")
      ->required();

  // --- generic-check ------------------------------------------------------
  auto* generic_cmd = app.add_subcommand(
      "generic-check", "ideal membership for the generic 2x2 system");
  int gc_n = 2, gc_alpha = 2, gc_exponent = 3;
  long gc_char = 0;
  generic_cmd->add_option("--n", gc_n, "matrix dimension");
  generic_cmd->add_option("--alpha", gc_alpha, "exponent alpha");
  generic_cmd->add_option("--exponent", gc_exponent,
                          "claimed nilpotency exponent of x_ij");
  generic_cmd->add_option("--char", gc_char,
                          "coefficient characteristic (0 = rationals)");

  // --- groebner-dim -------------------------------------------------------
  auto* dim_cmd = app.add_subcommand(
      "groebner-dim", "Hilbert dimension of an equation variety");
  std::string dim_system = "Y", dim_order = "degrevlex";
  int dim_n = 3, dim_alpha = 2;
  long dim_char = 32003;
  std::size_t dim_pairs = 1000000;
  dim_cmd->add_option("--system", dim_system, "Y | S | N | V4 | V4W | W");
  dim_cmd->add_option("--n", dim_n, "matrix dimension");
  dim_cmd->add_option("--alpha", dim_alpha, "exponent alpha");
  dim_cmd->add_option("--char", dim_char, "coefficient characteristic");
  dim_cmd->add_option("--order", dim_order, "degrevlex | lex");
  dim_cmd->add_option("--max-pairs", dim_pairs, "S-pair budget");

  // --- st-check -----------------------------------------------------------
  auto* st_cmd = app.add_subcommand(
      "st-check", "simultaneous triangularization decision");
  std::string st_ring, st_a, st_b;
  st_cmd->add_option("--ring", st_ring, "field ring spec")->required();
  st_cmd->add_option("--A", st_a, "matrix A as JSON rows")->required();
  st_cmd->add_option("--B", st_b, "matrix B as JSON rows")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list_cmd) {
      ordered_json out = ordered_json::array();
      for (const auto& e : commulab::registry_entries()) {
        ordered_json j;
        j["id"] = e.id;
        j["claim"] = e.claim;
        j["default_seed"] = e.default_seed;
        j["profile"] = e.in_quick_profile ? "quick" : "extended";
        out.push_back(std::move(j));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*verify_cmd) {
      commulab::CheckConfig cfg;
      if (!verify_ring.empty()) cfg.ring_override = verify_ring;
      if (seed_set) cfg.seed_override = verify_seed;
      if (verify_budget) cfg.enumeration_budget = verify_budget;
      std::vector<commulab::CheckReport> reports;
      if (verify_all) {
        reports = commulab::run_all(
            commulab::profile_from_name(verify_profile), cfg, verify_jobs);
      } else if (!verify_id.empty()) {
        reports.push_back(commulab::run_check(verify_id, cfg));
      } else {
        std::cerr << "verify needs --id or --all\n";
        return 3;
      }
      std::optional<std::string> out_path;
      if (!verify_out.empty()) out_path = verify_out;
      return emit_and_exit_code(reports, verify_format, verify_timings,
                                out_path);
    }

    if (*solve_cmd) {
      commulab::RingSpec ring = commulab::parse_ring(solve_ring);
      std::optional<std::string> g;
      if (!solve_g.empty()) g = solve_g;
      commulab::EquationId eq =
          equation_from_flags(solve_eq, solve_k, solve_alpha, g, ring);
      commulab::Matrix a = matrix_from_json(ring, solve_a);
      ordered_json out;
      out["equation"] = eq.name();
      out["ring"] = ring.str();
      try {
        commulab::SolutionFamily fam = commulab::brute_force_solutions(
            eq, a, solve_nilpotent, solve_budget);
        ordered_json sols = ordered_json::array();
        for (const auto& x : fam.matrices) sols.push_back(matrix_to_json(x));
        out["solutions"] = std::move(sols);
        out["count"] = fam.matrices.size();
        out["budget_exhausted"] = false;
      } catch (const commulab::budget_exceeded& e) {
        out["solutions"] = ordered_json::array();
        out["count"] = 0;
        out["budget_exhausted"] = true;
        out["detail"] = e.what();
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*fiber_cmd) {
      commulab::RingSpec ring = commulab::parse_ring(fiber_ring);
      std::vector<commulab::RingValue> params;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= fiber_params.size(); ++i) {
        if (i == fiber_params.size() || fiber_params[i] == ',') {
          params.push_back(
              ring.parse_element(fiber_params.substr(start, i - start)));
          start = i + 1;
        }
      }
      ordered_json out;
      try {
        commulab::SolutionFamily fam =
            commulab::solve_jordan_fiber(fiber_n, fiber_alpha, params);
        out["x"] = matrix_to_json(fam.matrices.front());
        out["params"] = fam.param_names;
        out["trace"] = fam.derivation_trace;
        out["similar_to_jordan_block"] =
            commulab::jordan_fiber_similarity_check(fam.matrices.front());
      } catch (const commulab::pivot_failure& e) {
        out["error"] = "pivot_failure";
        out["entry"] = {e.row() + 1, e.col() + 1};
        out["detail"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 1;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*generic_cmd) {
      commulab::CheckReport r = commulab::generic_membership_check(
          gc_n, gc_alpha, gc_exponent, gc_char);
      std::cout << r.to_json(true).dump(2) << "\n";
      return r.status == commulab::CheckReport::Status::Inconclusive ? 2 : 0;
    }

    if (*dim_cmd) {
      commulab::VarietyDimensionConfig cfg;
      cfg.n = dim_n;
      cfg.alpha = dim_alpha;
      cfg.characteristic = dim_char;
      cfg.order = dim_order == "lex" ? commulab::MonomialOrder::lex()
                                     : commulab::MonomialOrder::degrevlex();
      cfg.groebner.max_pairs = dim_pairs;
      commulab::CheckReport r = commulab::variety_dimension_experiment(
          commulab::variety_system_from_name(dim_system), cfg);
      ordered_json out;
      out["system"] = dim_system;
      out["n"] = dim_n;
      out["alpha"] = dim_alpha;
      if (r.status == commulab::CheckReport::Status::Pass) {
        out["dimension"] = r.metric_int("dimension");
        out["basis_size"] = r.metric_int("basis_size");
        for (const auto& [k, v] : r.metrics)
          if (k == "total_dimension")
            out["total_dimension"] = std::get<std::int64_t>(v);
      } else {
        out["inconclusive"] = r.detail;
      }
      out["ms"] = r.elapsed_ms;
      std::cout << out.dump(2) << "\n";
      return r.status == commulab::CheckReport::Status::Pass ? 0 : 2;
    }

    if (*st_cmd) {
      commulab::RingSpec ring = commulab::parse_ring(st_ring);
      commulab::Matrix a = matrix_from_json(ring, st_a);
      commulab::Matrix b = matrix_from_json(ring, st_b);
      commulab::TriangularizationResult res =
          commulab::simultaneous_triangularization(a, b);
      ordered_json out;
      switch (res.status) {
        case commulab::TriangularizationResult::Status::ST:
          out["status"] = "ST";
          out["P"] = matrix_to_json(*res.p);
          break;
        case commulab::TriangularizationResult::Status::NotST:
          out["status"] = "NotST";
          out["stage"] = res.stage;
          break;
        case commulab::TriangularizationResult::Status::Incomplete:
          out["status"] = "Incomplete";
          out["reason"] = res.reason;
          break;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
