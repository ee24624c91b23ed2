// Command-line front end: obstruction pipeline for symmetric checkerboard
// presentations, the determinant census, and lens-space correction terms.

#include "eqslice/embeddings.hpp"
#include "eqslice/knot_table.hpp"
#include "eqslice/lens.hpp"
#include "eqslice/obstructions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace eqslice;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 = success / inconclusive, 2 = an obstruction (or scan
// counterexample) was found, 1 = error.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitObstructed = 2;

json int_to_json(const Int& x) {
  static const Int kMax = (Int(1) << 53);
  if (abs_int(x) < kMax) return json(x.template convert_to<long long>());
  return json(x.str());
}

json vec_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

json validation_to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"passed", report.passed()}, {"checks", checks}};
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["verdict"] = to_string(v.level);
  json det;
  det["det"] = int_to_json(v.det_stage.det);
  det["sum_of_two_squares"] = v.det_stage.det_is_two_squares;
  if (!v.det_stage.det_is_two_squares)
    det["blocking_prime"] = int_to_json(v.det_stage.det_blocking_prime);
  det["perfect_square"] = v.det_stage.det_is_square;
  if (v.det_stage.det_is_square) {
    det["root"] = int_to_json(v.det_stage.root);
    det["root_sum_of_two_squares"] = v.det_stage.root_is_two_squares;
    if (!v.det_stage.root_is_two_squares)
      det["root_blocking_prime"] = int_to_json(v.det_stage.root_blocking_prime);
    if (v.det_stage.root_decomposition) {
      det["root_decomposition"] = {int_to_json(v.det_stage.root_decomposition->first),
                                   int_to_json(v.det_stage.root_decomposition->second)};
    }
  }
  out["determinant_stage"] = det;
  if (v.embeddings_enumerated) {
    json embs = json::array();
    for (const auto& e : v.embeddings) {
      json je;
      je["matrix"] = matrix_to_json(e.matrix);
      je["metabolizer_size"] = e.metabolizer_size;
      je["invariant"] = e.invariant;
      json viol = json::array();
      for (const auto& w : e.violations) viol.push_back(vec_to_json(w));
      je["violations"] = viol;
      embs.push_back(je);
    }
    out["embeddings"] = embs;
  }
  return out;
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
}

void print_verdict_text(const Verdict& v) {
  const DetStageEvidence& d = v.det_stage;
  std::cout << "determinant stage: det = " << d.det;
  if (!d.det_is_two_squares) {
    std::cout << " is not a sum of two squares (prime " << d.det_blocking_prime
              << " appears to an odd power)\n";
  } else if (!d.det_is_square) {
    std::cout << " is a sum of two squares but not a perfect square\n";
  } else {
    std::cout << " = " << d.root << "^2; ";
    if (!d.root_is_two_squares) {
      std::cout << d.root << " is not a sum of two squares (blocking prime "
                << d.root_blocking_prime << ")\n";
    } else {
      std::cout << d.root << " is a sum of two squares";
      if (d.root_decomposition)
        std::cout << " (" << d.root_decomposition->first << "^2 + "
                  << d.root_decomposition->second << "^2)";
      std::cout << "\n";
    }
  }
  if (v.embeddings_enumerated) {
    std::cout << "embedding stage: " << v.embeddings.size()
              << " lattice embedding class(es) with A^T A = Goeritz form\n";
    for (std::size_t i = 0; i < v.embeddings.size(); ++i) {
      const auto& e = v.embeddings[i];
      std::cout << "  embedding " << i + 1 << ": metabolizer classes = " << e.metabolizer_size
                << ", sigma-invariant: " << (e.invariant ? "yes" : "no");
      if (!e.violations.empty())
        std::cout << ", first violating class " << to_string(e.violations.front());
      std::cout << "\n";
      print_matrix(std::cout, e.matrix, "    ");
    }
  }
  std::cout << "verdict: " << to_string(v.level) << "\n";
}

int finish(const json& out, bool as_json, int code) {
  if (as_json) std::cout << out.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant-slice obstruction calculator for strongly negative "
               "amphichiral alternating knots, plus lens-space correction terms"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a structured JSON report on stdout");
  int threads = 1;
  app.add_option("--threads", threads, "worker thread cap for parallel stages")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto* cmd_validate = app.add_subcommand("validate", "validate a presentation file");
  cmd_validate->add_option("file", file, "presentation JSON file")->required();

  auto* cmd_obstruct =
      app.add_subcommand("obstruct", "run the full obstruction pipeline on a presentation");
  std::string det_arg;
  cmd_obstruct->add_option("file", file, "presentation JSON file");
  cmd_obstruct->add_option("--det", det_arg,
                           "determinant-only mode: test an odd determinant, no file needed");

  auto* cmd_table =
      app.add_subcommand("table", "determinant stage over the bundled knot census");
  std::string table_file;
  cmd_table->add_option("--file", table_file, "knot table JSON (defaults to the built-in census)");

  auto* cmd_embeddings =
      app.add_subcommand("embeddings", "enumerate lattice embeddings of the Goeritz form");
  cmd_embeddings->add_option("file", file, "presentation JSON file")->required();

  auto* cmd_orbits =
      app.add_subcommand("sigma-orbits", "orbit structure of the sigma action on Spin^c classes");
  cmd_orbits->add_option("file", file, "presentation JSON file")->required();

  auto* cmd_lens = app.add_subcommand("lens", "correction terms of the lens space L(p, q)");
  long long lens_p = 0, lens_q = 0;
  cmd_lens->add_option("p", lens_p, "order of H_1, odd positive")->required();
  cmd_lens->add_option("q", lens_q, "0 < q < p, coprime to p")->required();

  auto* cmd_scan = app.add_subcommand(
      "scan", "compare the correction-term partition test with q^2 = -1 (mod p) for all odd p");
  long long p_max = 0;
  cmd_scan->add_option("p_max", p_max, "scan all odd p up to this bound")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_validate) {
      CheckerboardPresentation p = load_presentation(file);
      ValidationReport report = validate(p);
      json out{{"command", "validate"}, {"name", p.name}, {"n", p.n},
               {"validation", validation_to_json(report)}};
      if (!as_json) {
        std::cout << "presentation: " << p.name << " (n = " << p.n << ")\n";
        for (const auto& c : report.checks)
          std::cout << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name
                    << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
        std::cout << (report.passed() ? "valid" : "invalid") << "\n";
      }
      return finish(out, as_json, report.passed() ? kExitOk : kExitError);
    }

    if (*cmd_obstruct) {
      if (!det_arg.empty()) {
        Verdict v = det_obstruction(Int(det_arg));
        json out{{"command", "obstruct"}, {"mode", "determinant-only"}};
        out.update(verdict_to_json(v));
        if (!as_json) print_verdict_text(v);
        return finish(out, as_json, v.level == VerdictLevel::Inconclusive ? kExitOk
                                                                          : kExitObstructed);
      }
      if (file.empty()) throw CLI::ValidationError("obstruct", "need a file or --det");
      CheckerboardPresentation p = load_presentation(file);
      Verdict v = full_pipeline(p, threads);
      json out{{"command", "obstruct"}, {"name", p.name}, {"n", p.n}};
      out.update(verdict_to_json(v));
      if (!as_json) {
        std::cout << "presentation: " << p.name << " (n = " << p.n << ")\n";
        std::cout << "validation: passed\n";
        print_verdict_text(v);
      }
      return finish(out, as_json,
                    v.level == VerdictLevel::Inconclusive ? kExitOk : kExitObstructed);
    }

    if (*cmd_table) {
      auto records = table_file.empty() ? builtin_knot_table() : load_knot_table(table_file);
      auto rows = run_knot_table(records);
      json jrows = json::array();
      bool all_match = true;
      std::size_t obstructed = 0;
      for (const auto& r : rows) {
        all_match = all_match && r.matches_category;
        if (r.det_stage == VerdictLevel::DetObstructed) ++obstructed;
        jrows.push_back({{"name", r.record.name},
                         {"det", int_to_json(r.record.determinant)},
                         {"category", r.record.category},
                         {"det_stage", to_string(r.det_stage)},
                         {"matches_category", r.matches_category}});
        if (!as_json)
          std::cout << r.record.name << "\tdet " << r.record.determinant << "\t("
                    << r.record.category << ")\t" << to_string(r.det_stage) << "\t"
                    << (r.matches_category ? "ok" : "MISMATCH") << "\n";
      }
      if (!as_json)
        std::cout << obstructed << " of " << rows.size()
                  << " records obstructed at the determinant stage\n";
      json out{{"command", "table"}, {"rows", jrows}, {"all_match", all_match}};
      return finish(out, as_json, all_match ? kExitOk : kExitError);
    }

    if (*cmd_embeddings) {
      CheckerboardPresentation p = load_presentation(file);
      ValidationReport report = validate(p);
      if (!report.passed()) throw ValidationError(report);
      IntMatrix q = goeritz(p, Side::plus).matrix;
      auto embeddings = enumerate_embeddings(q, threads);
      json jembs = json::array();
      for (const auto& a : embeddings) jembs.push_back(matrix_to_json(a));
      json out{{"command", "embeddings"}, {"name", p.name},
               {"goeritz", matrix_to_json(q)}, {"count", embeddings.size()},
               {"embeddings", jembs}};
      if (!as_json) {
        std::cout << embeddings.size() << " embedding class(es) of the Goeritz form of " << p.name
                  << "\n";
        for (std::size_t i = 0; i < embeddings.size(); ++i) {
          std::cout << "embedding " << i + 1 << ":\n";
          print_matrix(std::cout, embeddings[i], "  ");
        }
      }
      return finish(out, as_json, kExitOk);
    }

    if (*cmd_orbits) {
      CheckerboardPresentation p = load_presentation(file);
      ValidationReport report = validate(p);
      if (!report.passed()) throw ValidationError(report);
      SigmaAction act = SigmaAction::from_presentation(p);
      OrbitStructure orbits = sigma_orbit_structure(act);
      json hist = json::array();
      for (const auto& [size, count] : orbits.orbit_size_counts)
        hist.push_back({{"orbit_size", size}, {"count", count}});
      json out{{"command", "sigma-orbits"},
               {"name", p.name},
               {"classes", int_to_json(act.lattice().class_count())},
               {"bijection", orbits.bijection},
               {"square_is_negation", orbits.square_is_negation},
               {"fixed_classes", orbits.fixed_classes},
               {"orbit_sizes", hist}};
      if (orbits.fixed_classes == 1) out["fixed_class"] = vec_to_json(orbits.fixed_class_rep);
      if (!as_json) {
        std::cout << "Spin^c classes: " << act.lattice().class_count() << "\n";
        std::cout << "sigma action is a bijection: " << (orbits.bijection ? "yes" : "no")
                  << "; square acts as negation: " << (orbits.square_is_negation ? "yes" : "no")
                  << "\n";
        std::cout << "cycle structure:";
        for (const auto& [size, count] : orbits.orbit_size_counts)
          std::cout << " " << count << " orbit(s) of size " << size;
        std::cout << "\n";
        if (orbits.fixed_classes == 1)
          std::cout << "fixed class: " << to_string(orbits.fixed_class_rep) << "\n";
      }
      return finish(out, as_json, kExitOk);
    }

    if (*cmd_lens) {
      CorrectionTerms terms = lens_d_invariants(make_lens(lens_p, lens_q));
      OrbitCheck check = orbit_structure_check(terms.values);
      json values = json::array();
      for (const Rat& r : terms.values) values.push_back(r.str());
      json out{{"command", "lens"},      {"p", lens_p},
               {"q", lens_q},            {"correction_terms", values},
               {"partition_ok", check.ok}, {"reason", check.reason},
               {"qsq_condition", qsq_condition(lens_p, lens_q)}};
      if (!as_json) {
        std::cout << "L(" << lens_p << ", " << lens_q << ") correction terms:\n";
        for (long long i = 0; i < lens_p; ++i)
          std::cout << "  d[" << i << "] = " << terms.values[i].str() << "\n";
        std::cout << "partition into {r,-r,r,-r} quadruples plus {0}: "
                  << (check.ok ? "yes" : "no (" + check.reason + ")") << "\n";
        std::cout << "q^2 = -1 (mod p): " << (qsq_condition(lens_p, lens_q) ? "yes" : "no")
                  << "\n";
      }
      return finish(out, as_json, kExitOk);
    }

    if (*cmd_scan) {
      ScanReport report = conjecture_scan(p_max, threads);
      json jrows = json::array();
      for (const auto& r : report.rows)
        jrows.push_back({{"p", r.p}, {"q", r.q}, {"partition_ok", r.partition_ok},
                         {"qsq_ok", r.qsq_ok}});
      json out{{"command", "scan"},
               {"p_max", report.p_max},
               {"pairs", report.rows.size()},
               {"disagreements", report.disagreements.size()},
               {"forward_violations", report.forward_violations.size()},
               {"orientation_sanity_ok", report.orientation_sanity_ok},
               {"rows", jrows}};
      if (!as_json) {
        for (const auto& r : report.rows)
          std::cout << r.p << " " << r.q << " partition=" << (r.partition_ok ? 1 : 0)
                    << " qsq=" << (r.qsq_ok ? 1 : 0)
                    << (r.partition_ok == r.qsq_ok ? "" : " DISAGREE") << "\n";
        std::cout << "pairs: " << report.rows.size()
                  << ", disagreements: " << report.disagreements.size()
                  << ", forward violations: " << report.forward_violations.size()
                  << ", orientation sanity: " << (report.orientation_sanity_ok ? "ok" : "FAILED")
                  << "\n";
      }
      bool clean = report.disagreements.empty() && report.forward_violations.empty() &&
                   report.orientation_sanity_ok;
      return finish(out, as_json, clean ? kExitOk : kExitObstructed);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
