#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nary/algebra.hpp"
#include "nary/catalog.hpp"
#include "nary/cohomology.hpp"
#include "nary/gla.hpp"
#include "nary/io.hpp"
#include "nary/polynomial.hpp"
#include "nary/report.hpp"
#include "nary/structure.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

constexpr int kMaxPrintedWitnesses = 5;

std::string join_args(int argc, char** argv) {
  std::ostringstream out;
  for (int i = 0; i < argc; ++i) out << (i ? " " : "") << argv[i];
  return out.str();
}

std::string format_tuple(const std::vector<int>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string format_vector(const std::vector<nary::Rational>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << nary::to_string(v[i]);
  out << ')';
  return out.str();
}

void emit(const nary::Report& report, bool as_json) {
  if (as_json)
    std::cout << report.json().dump(2) << "\n";
  else
    std::cout << report.text();
}

void add_algebra_header(nary::Report& report, const nary::NAryAlgebra& a, const std::string& input) {
  report.add("input", input);
  report.add("name", a.name());
  report.add("digest", nary::digest(a));
  report.add("arity", a.arity());
  report.add("dim", a.dim());
  report.add("symmetry", nary::to_string(a.symmetry()));
}

int cmd_verify(const std::string& command, const std::string& input, std::vector<std::string> checks,
               bool as_json) {
  nary::NAryAlgebra a = nary::resolve_algebra(input);
  if (checks.empty()) {
    checks = {"fi", "symmetry"};
    if (a.metric()) checks.push_back("metric");
  }

  nary::Report report;
  report.add("command", command);
  add_algebra_header(report, a, input);

  bool all_pass = true;
  for (const std::string& check : checks) {
    if (check == "fi") {
      nary::FiReport fi = nary::fi_residual(a);
      report.add("check.fi.max_violation", nary::to_string(fi.max_violation));
      report.add("check.fi.witness_count", static_cast<long long>(fi.witnesses.size()));
      for (std::size_t i = 0; i < fi.witnesses.size() && i < kMaxPrintedWitnesses; ++i) {
        const nary::FiWitness& w = fi.witnesses[i];
        report.add("check.fi.witness." + std::to_string(i + 1),
                   "b=" + format_tuple(w.b_block) + " a=" + format_tuple(w.a_block) +
                       " target=" + std::to_string(w.target) + " violation=" + nary::to_string(w.violation));
      }
      report.add_status("check.fi", fi.ok());
      all_pass = all_pass && fi.ok();
    } else if (check == "gji") {
      if (a.symmetry() != nary::Symmetry::FullSkew)
        throw nary::InputError("gji check needs fully antisymmetric constants");
      nary::GjiReport gji = nary::gji_residual(nary::GLATensor(a));
      report.add("check.gji.max_violation", nary::to_string(gji.max_violation));
      report.add("check.gji.witness_count", static_cast<long long>(gji.witnesses.size()));
      for (std::size_t i = 0; i < gji.witnesses.size() && i < kMaxPrintedWitnesses; ++i) {
        const nary::GjiWitness& w = gji.witnesses[i];
        report.add("check.gji.witness." + std::to_string(i + 1),
                   "block=" + format_tuple(w.block) + " target=" + std::to_string(w.target) +
                       " violation=" + nary::to_string(w.violation));
      }
      report.add_status("check.gji", gji.ok());
      all_pass = all_pass && gji.ok();
    } else if (check == "symmetry") {
      nary::SymmetryAuditReport audit = nary::symmetry_audit(a);
      report.add("check.symmetry.violation_count", static_cast<long long>(audit.violations.size()));
      for (std::size_t i = 0; i < audit.violations.size() && i < kMaxPrintedWitnesses; ++i) {
        const nary::SymmetryViolation& v = audit.violations[i];
        report.add("check.symmetry.violation." + std::to_string(i + 1),
                   "args=" + format_tuple(v.args) + " target=" + std::to_string(v.target) + " slots=(" +
                       std::to_string(v.slot_i + 1) + "," + std::to_string(v.slot_j + 1) +
                       ") value=" + nary::to_string(v.value) + " swapped=" + nary::to_string(v.swapped_value));
      }
      report.add_status("check.symmetry", audit.ok);
      all_pass = all_pass && audit.ok;
    } else if (check == "metric") {
      if (!a.metric()) throw nary::InputError("metric check requested but no metric present");
      nary::MetricReport m = nary::metric_checks(a);
      report.add("check.metric.invariance", m.invariance);
      report.add("check.metric.lowered_antisymmetric", m.lowered_antisymmetric);
      report.add("check.metric.invariant_tensor", m.invariant_tensor);
      report.add_status("check.metric", m.all_ok());
      all_pass = all_pass && m.all_ok();
    } else {
      throw nary::InputError("unknown check '" + check + "' (expected fi, gji, symmetry, metric)");
    }
  }
  report.add_status("status", all_pass);
  report.add("exit", all_pass ? kExitPass : kExitCheckFailed);
  emit(report, as_json);
  return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_h1(const std::string& command, const std::string& input, const std::string& action_name,
           const std::string& symmetry_name, bool as_json) {
  nary::NAryAlgebra a = nary::resolve_algebra(input);
  nary::Action action;
  if (action_name == "trivial")
    action = nary::Action::Trivial;
  else if (action_name == "adjoint")
    action = nary::Action::Adjoint;
  else
    throw nary::InputError("--action must be trivial or adjoint");
  nary::Symmetry symmetry;
  if (symmetry_name == "full")
    symmetry = nary::Symmetry::FullSkew;
  else if (symmetry_name == "restricted")
    symmetry = nary::Symmetry::SkewFirstNMinus1;
  else
    throw nary::InputError("--symmetry must be full or restricted");

  if (a.symmetry() != nary::Symmetry::FullSkew)
    throw nary::InputError("h1 complexes are built over fully skew algebras");

  nary::Report report;
  report.add("command", command);
  add_algebra_header(report, a, input);
  report.add("action", action_name);
  report.add("cochain_symmetry", symmetry_name);

  if (!nary::fi_residual(a).ok()) {
    report.add("error", "Filippov identity fails: the complex is undefined");
    report.add_status("status", false);
    report.add("exit", kExitCheckFailed);
    emit(report, as_json);
    return kExitCheckFailed;
  }

  nary::ComplexSpec spec(a, action, symmetry);
  nary::CohomologyReport h = nary::h1(spec);
  report.add("h1.C1", h.c1);
  report.add("h1.Z1", h.z1);
  report.add("h1.B1", h.b1);
  report.add("h1.H1", h.h1);
  for (std::size_t i = 0; i < h.representatives.size(); ++i) {
    std::ostringstream line;
    bool first = true;
    for (int c = 0; c < spec.cochain_dim(); ++c) {
      const nary::Rational& v = h.representatives[i].coeffs[c];
      if (v == 0) continue;
      line << (first ? "" : " ") << spec.coordinate_label(c) << "=" << nary::to_string(v);
      first = false;
    }
    report.add("h1.rep." + std::to_string(i + 1), line.str());
    report.add("h1.rep." + std::to_string(i + 1) + ".exact_fi", static_cast<bool>(h.exact_fi_ok[i]));
  }
  report.add_status("status", true);
  report.add("exit", kExitPass);
  emit(report, as_json);
  return kExitPass;
}

int cmd_structure(const std::string& command, const std::string& input, bool as_json) {
  nary::NAryAlgebra a = nary::resolve_algebra(input);

  nary::Report report;
  report.add("command", command);
  add_algebra_header(report, a, input);

  if (!nary::fi_residual(a).ok()) {
    report.add("error", "Filippov identity fails: structure theory undefined");
    report.add_status("status", false);
    report.add("exit", kExitCheckFailed);
    emit(report, as_json);
    return kExitCheckFailed;
  }

  nary::DerivedSeriesReport series = nary::derived_series(a);
  std::ostringstream dims;
  for (std::size_t i = 0; i < series.dims.size(); ++i) dims << (i ? "," : "") << series.dims[i];
  report.add("derived_series", dims.str());
  report.add("solvable", series.solvable);

  nary::SemisimpleReport ss = nary::is_semisimple(a);
  report.add("semisimple", ss.semisimple);
  report.add("kasymov_kernel_dim", static_cast<long long>(ss.kernel.size()));
  for (std::size_t i = 0; i < ss.kernel.size() && i < kMaxPrintedWitnesses; ++i)
    report.add("kasymov_kernel." + std::to_string(i + 1), format_vector(ss.kernel[i]));

  nary::LieAlgebraReport lie = nary::lie_algebra_of(a);
  report.add("lie_algebra_dim", lie.dim);
  report.add("lie_algebra_closure", lie.closure_ok);

  if (a.metric()) {
    nary::MetricReport m = nary::metric_checks(a);
    report.add("metric.invariance", m.invariance);
    report.add("metric.lowered_antisymmetric", m.lowered_antisymmetric);
    report.add("metric.invariant_tensor", m.invariant_tensor);
  }
  report.add_status("status", true);
  report.add("exit", kExitPass);
  emit(report, as_json);
  return kExitPass;
}

int cmd_nambu(const std::string& command, const std::vector<std::string>& vars,
              const std::vector<std::string>& fs_text, const std::vector<std::string>& gs_text,
              const std::string& check, bool as_json) {
  if (vars.empty()) throw nary::InputError("--vars must list at least one variable");
  const int n = static_cast<int>(vars.size());

  auto parse_list = [&](const std::vector<std::string>& texts, const char* flag) {
    std::vector<nary::Polynomial> out;
    for (const std::string& t : texts) {
      try {
        out.push_back(nary::parse_polynomial(t, vars));
      } catch (const nary::PolynomialParseError& e) {
        throw nary::InputError(std::string(flag) + " '" + t + "': " + e.what() + " at position " +
                               std::to_string(e.position()));
      }
    }
    return out;
  };
  std::vector<nary::Polynomial> fs = parse_list(fs_text, "--fs");
  std::vector<nary::Polynomial> gs = parse_list(gs_text, "--gs");

  nary::Report report;
  report.add("command", command);
  report.add("arity", n);

  bool pass = false;
  if (check == "fi") {
    if (static_cast<int>(fs.size()) != n - 1 || static_cast<int>(gs.size()) != n)
      throw nary::InputError("fi check needs n-1 polynomials in --fs and n in --gs");
    nary::Polynomial r = nary::np_fi_residual(fs, gs);
    report.add("residual", r.str(vars));
    pass = r.is_zero();
  } else if (check == "leibniz") {
    if (static_cast<int>(fs.size()) != n - 1 || gs.size() != 2)
      throw nary::InputError("leibniz check needs n-1 polynomials in --fs and exactly g,h in --gs");
    nary::Polynomial r = nary::leibniz_rule_residual(fs, gs[0], gs[1]);
    report.add("residual", r.str(vars));
    pass = r.is_zero();
  } else if (check == "skew") {
    if (static_cast<int>(fs.size()) != n) throw nary::InputError("skew check needs n polynomials in --fs");
    pass = nary::bracket_skew_check(fs);
    report.add("skew", pass);
  } else {
    throw nary::InputError("--check must be fi, leibniz or skew");
  }
  report.add_status("status", pass);
  report.add("exit", pass ? kExitPass : kExitCheckFailed);
  emit(report, as_json);
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_dump(const std::string& input, const std::string& output) {
  nary::NAryAlgebra a = nary::resolve_algebra(input);
  if (output.empty()) {
    std::cout << nary::algebra_to_json(a).dump(2) << "\n";
  } else {
    nary::save_algebra_file(a, output);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant engine for n-ary algebras"};
  app.require_subcommand(1);
  std::string command = join_args(argc, argv);

  std::string input;
  std::vector<std::string> checks;
  bool as_json = false;

  CLI::App* verify = app.add_subcommand("verify", "run residual checks (fi, gji, symmetry, metric)");
  verify->add_option("input", input, "catalog name or algebra file")->required();
  verify->add_option("--checks", checks, "subset of fi,gji,symmetry,metric")->delimiter(',');
  verify->add_flag("--json", as_json, "emit JSON");

  std::string action = "trivial";
  std::string cochain_symmetry = "full";
  CLI::App* h1cmd = app.add_subcommand("h1", "first cohomology group with representatives");
  h1cmd->add_option("input", input, "catalog name or algebra file")->required();
  h1cmd->add_option("--action", action, "trivial | adjoint")->required();
  h1cmd->add_option("--symmetry", cochain_symmetry, "full | restricted")->required();
  h1cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* structure = app.add_subcommand("structure", "derived series, semisimplicity, Lie algebra, metric");
  structure->add_option("input", input, "catalog name or algebra file")->required();
  structure->add_flag("--json", as_json, "emit JSON");

  std::vector<std::string> vars, fs_text, gs_text;
  std::string nambu_check = "fi";
  CLI::App* nambu = app.add_subcommand("nambu", "Jacobian bracket identities on polynomials");
  nambu->add_option("--vars", vars, "comma-separated variables")->required()->delimiter(',');
  nambu->add_option("--fs", fs_text, "comma-separated polynomials")->delimiter(',');
  nambu->add_option("--gs", gs_text, "comma-separated polynomials")->delimiter(',');
  nambu->add_option("--check", nambu_check, "fi | leibniz | skew")->required();
  nambu->add_flag("--json", as_json, "emit JSON");

  std::string dump_output;
  CLI::App* dump = app.add_subcommand("dump", "write an algebra in canonical JSON form");
  dump->add_option("input", input, "catalog name or algebra file")->required();
  dump->add_option("-o,--output", dump_output, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(command, input, checks, as_json);
    if (h1cmd->parsed()) return cmd_h1(command, input, action, cochain_symmetry, as_json);
    if (structure->parsed()) return cmd_structure(command, input, as_json);
    if (nambu->parsed()) return cmd_nambu(command, vars, fs_text, gs_text, nambu_check, as_json);
    if (dump->parsed()) return cmd_dump(input, dump_output);
  } catch (const nary::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nary::PolynomialParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}
