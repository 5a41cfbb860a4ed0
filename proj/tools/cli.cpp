#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "magrep/catalog.hpp"
#include "magrep/error.hpp"
#include "magrep/records.hpp"

namespace magrep::cli {

namespace {

constexpr double kConstructionTolerance = 1e-10;
constexpr double kEndToEndTolerance = 1e-8;
constexpr double kPrintThreshold = 1e-12;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownLabel:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::LengthMismatch:
    case ErrorKind::DimensionMismatch:
      return true;
    default:
      return false;
  }
}

std::string prefix_for(const GroupModel& m, std::size_t k) {
  return m.systems.size() == 1 ? "" : m.systems[k].name + ":";
}

/// Loads a file or a builtin ("catalog:<name>") and builds coreps for every
/// factor system that has none embedded.
GroupModel load_model(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw Error(ErrorKind::ParseError, "missing input file");
  const std::string& in = cfg.inputs.front();
  GroupModel m = in.rfind("catalog:", 0) == 0
                     ? catalog_entry(in.substr(8))
                     : load_group_file(in, cfg.tolerance.value_or(kDefaultTolerance));
  for (std::size_t k = 0; k < m.systems.size(); ++k)
    if (m.systems[k].coreps.empty()) m.systems[k].coreps = irreducible_coreps(m.systems[k].fs, prefix_for(m, k), cfg.seed);
  return m;
}

const Corepresentation& find_corep(const GroupModel& m, const std::string& label) {
  const Corepresentation* d = m.corep(label);
  if (!d) throw Error(ErrorKind::UnknownLabel, "no corep labelled '" + label + "'");
  return *d;
}

std::string type_of(const Corepresentation& d) {
  if (d.wigner_type()) return std::string(1, to_char(*d.wigner_type()));
  return is_irreducible(d) ? std::string(1, to_char(classify_wigner_type(d))) : "reducible";
}

std::string triple_text(const std::array<std::string, 3>& t) { return "(" + t[0] + ", " + t[1] + ", " + t[2] + ")"; }

Record triple_record(const std::array<std::string, 3>& t) { return Record::array({t[0], t[1], t[2]}); }

Record complex_record(cplx z) { return Record::array({z.real(), z.imag()}); }

struct Output {
  Format format;
  std::ostringstream text;
  void line(const std::string& s) { text << s << "\n"; }
  void record(const Record& r) { text << render_record(r) << "\n"; }
};

}  // namespace

Report cmd_catalog(const RunConfig& cfg) {
  Output out{cfg.format, {}};
  std::vector<std::string> written;
  for (const auto& m : catalog()) {
    const MagneticGroup& g = *m.group;
    const ElementId a0 = *g.coset_representative();
    if (out.format == Format::Text)
      out.line(m.name + "  order " + std::to_string(g.order()) + "  unitary half " +
               std::to_string(g.unitary_subgroup().size()));
    for (const auto& s : m.systems) {
      const cplx l = (*s.fs)(a0, a0);
      if (out.format == Format::Text) {
        out.line("  factor system " + s.name + (s.fs->is_trivial() ? "  trivial" : "") + "  lambda(" + g.name(a0) +
                 "," + g.name(a0) + ") = " + full(l.real()) + (l.imag() != 0.0 ? " + " + full(l.imag()) + "i" : ""));
        for (const auto& d : s.coreps)
          out.line("    " + d.label() + "  dim " + std::to_string(d.dimension()) + "  type " + type_of(d));
      } else {
        Record r;
        r["command"] = "catalog";
        r["group"] = m.name;
        r["order"] = g.order();
        r["unitary_order"] = g.unitary_subgroup().size();
        r["factor_system"] = s.name;
        r["trivial"] = s.fs->is_trivial();
        r["lambda_a0_a0"] = complex_record(l);
        Record cs = Record::array();
        for (const auto& d : s.coreps) {
          Record c;
          c["label"] = d.label();
          c["dim"] = d.dimension();
          c["type"] = type_of(d);
          cs.push_back(c);
        }
        r["coreps"] = cs;
        out.record(r);
      }
    }
    if (!cfg.dump_dir.empty()) {
      std::filesystem::create_directories(cfg.dump_dir);
      const auto path = std::filesystem::path(cfg.dump_dir) / (m.name + ".grp");
      std::ofstream(path, std::ios::binary) << write_group_file(m);
      written.push_back(path.string());
    }
  }
  if (out.format == Format::Text)
    for (const auto& w : written) out.line("wrote " + w);
  return {out.text.str(), 0};
}

Report cmd_validate(const RunConfig& cfg) {
  Output out{cfg.format, {}};
  if (cfg.inputs.empty()) throw Error(ErrorKind::ParseError, "missing input file");
  const std::string& in = cfg.inputs.front();
  GroupModel m;
  try {
    if (in.rfind("catalog:", 0) == 0) {
      m = catalog_entry(in.substr(8));
    } else {
      std::ifstream f(in, std::ios::binary);
      if (!f) throw Error(ErrorKind::ParseError, "cannot read " + in);
      std::stringstream buf;
      buf << f.rdbuf();
      const GroupFileData data = parse_group_file(buf.str(), std::filesystem::path(in).stem().string());
      m = assemble(data, cfg.tolerance.value_or(kDefaultTolerance));
    }
  } catch (const Error& e) {
    if (is_input_error(e.kind())) throw;
    if (out.format == Format::Text) {
      out.line("group: FAIL");
      out.line("  " + std::string(e.what()));
    } else {
      Record r;
      r["command"] = "validate";
      r["item"] = "group";
      r["status"] = "fail";
      r["error"] = std::string(to_string(e.kind()));
      r["message"] = e.what();
      out.record(r);
    }
    return {out.text.str(), 1};
  }

  bool ok = true;
  const MagneticGroup& g = *m.group;
  if (out.format == Format::Text)
    out.line("group " + m.name + ": PASS  order " + std::to_string(g.order()) + "  unitary half " +
             std::to_string(g.unitary_subgroup().size()));
  else {
    Record r;
    r["command"] = "validate";
    r["item"] = "group";
    r["status"] = "pass";
    r["order"] = g.order();
    out.record(r);
  }
  for (const auto& s : m.systems) {
    const ValidationReport v = validate_factor_system(*s.fs);
    ok = ok && v.passed;
    if (out.format == Format::Text) {
      out.line("factor system " + s.name + ": " + (v.passed ? "PASS" : "FAIL") + "  cocycle residual " +
               sci(v.max_cocycle_residual) + "  modulus deviation " + sci(v.max_modulus_deviation));
      if (!v.violations.empty()) {
        const auto& t = v.violations.front();
        out.line("  first violation at (" + g.name(t[0]) + ", " + g.name(t[1]) + ", " + g.name(t[2]) + ")");
      }
    } else {
      Record r;
      r["command"] = "validate";
      r["item"] = "factor_system " + s.name;
      r["status"] = v.passed ? "pass" : "fail";
      r["cocycle_residual"] = v.max_cocycle_residual;
      r["modulus_deviation"] = v.max_modulus_deviation;
      r["violations"] = v.violations.size();
      out.record(r);
    }
    for (const auto& d : s.coreps) {
      const CorepReport c = verify_corep(d, cfg.tolerance);
      ok = ok && c.passed;
      if (out.format == Format::Text) {
        out.line("corep " + d.label() + ": " + (c.passed ? "PASS" : "FAIL") + "  product residual " +
                 sci(c.max_product_residual) + "  unitarity " + sci(c.max_unitarity_defect));
      } else {
        Record r;
        r["command"] = "validate";
        r["item"] = "corep " + d.label();
        r["status"] = c.passed ? "pass" : "fail";
        r["product_residual"] = c.max_product_residual;
        r["unitarity_defect"] = c.max_unitarity_defect;
        out.record(r);
      }
    }
  }
  return {out.text.str(), ok ? 0 : 1};
}

Report cmd_coreps(const RunConfig& cfg) {
  Output out{cfg.format, {}};
  const GroupModel m = load_model(cfg);
  bool ok = true;
  for (const auto& s : m.systems) {
    if (out.format == Format::Text) out.line("factor system " + s.name);
    for (const auto& d : s.coreps) {
      const CorepReport c = verify_corep(d, cfg.tolerance);
      const bool irr = is_irreducible(d);
      ok = ok && c.passed;
      const std::string type = irr ? std::string(1, to_char(classify_wigner_type(d))) : "reducible";
      if (out.format == Format::Text) {
        std::string line = "  " + d.label() + "  dim " + std::to_string(d.dimension()) + "  type " + type +
                           "  product residual " + sci(c.max_product_residual);
        if (s.fs->is_trivial() && irr) line += "  indicator " + full(std::round(wigner_indicator(d) * 1e9) / 1e9);
        out.line(line);
      } else {
        Record r;
        r["command"] = "coreps";
        r["factor_system"] = s.name;
        r["label"] = d.label();
        r["dim"] = d.dimension();
        r["type"] = type;
        r["product_residual"] = c.max_product_residual;
        r["status"] = c.passed ? "pass" : "fail";
        out.record(r);
      }
    }
  }
  return {out.text.str(), ok ? 0 : 1};
}

Report cmd_cg(const RunConfig& cfg) {
  if (!cfg.triple) throw Error(ErrorKind::ParseError, "cg needs --triple L1,L2,L3");
  Output out{cfg.format, {}};
  const GroupModel m = load_model(cfg);
  const auto& t = *cfg.triple;
  const Corepresentation& d1 = find_corep(m, t[0]);
  const Corepresentation& d2 = find_corep(m, t[1]);
  const Corepresentation& d3 = find_corep(m, t[2]);

  Record head;
  head["command"] = "cg";
  head["group"] = m.name;
  head["labels"] = triple_record(t);
  if (!factor_compatible(d1.factor_system(), d2.factor_system(), d3.factor_system())) {
    const std::string note = "selection rule: lambda3 differs from lambda1 lambda2, all coefficients vanish";
    if (out.format == Format::Text) {
      out.line("cg " + m.name + " " + triple_text(t));
      out.line(note);
    } else {
      head["compatible"] = false;
      head["note"] = note;
      out.record(head);
    }
    return {out.text.str(), 0};
  }

  const CGSystem sys = build_cg_system(d1, d2, d3);
  const UniquenessVerdict v = uniqueness_test(sys);
  const auto families = solve_cg(sys, d3);
  double eq_res = 0.0;
  for (const auto& f : families) eq_res = std::max(eq_res, cg_equation_residual(sys, f.coefficients));
  const OrthogonalityReport orth =
      families.empty() ? OrthogonalityReport{0.0, 0.0, true} : orthogonality_check(families, kEndToEndTolerance);
  const bool ok = eq_res <= cfg.tolerance.value_or(kConstructionTolerance) &&
                  orth.max_residual <= cfg.tolerance.value_or(kEndToEndTolerance);

  if (out.format == Format::Text) {
    out.line("cg " + m.name + " " + triple_text(t));
    out.line("det_plus " + sci(v.det_plus));
    out.line("det_minus " + sci(v.det_minus));
    out.line("kernel_dim_real " + std::to_string(v.kernel_dim_real));
    out.line("complex_rank " + std::to_string(v.complex_rank));
    out.line("multiplicity " + std::to_string(families.size()));
    out.line("essentially_unique " + std::string(yes_no(v.essentially_unique)));
    out.line("determinant_test_consistent " + std::string(yes_no(v.consistent)));
    out.line("note " + v.note);
    out.line("equation_residual " + sci(eq_res));
    out.line("orthogonality_residual " + sci(orth.max_residual));
  } else {
    head["compatible"] = true;
    head["det_plus"] = v.det_plus;
    head["det_minus"] = v.det_minus;
    head["kernel_dim_real"] = v.kernel_dim_real;
    head["complex_rank"] = v.complex_rank;
    head["multiplicity"] = families.size();
    head["essentially_unique"] = v.essentially_unique;
    head["determinant_test_consistent"] = v.consistent;
    head["note"] = v.note;
    head["equation_residual"] = eq_res;
    head["orthogonality_residual"] = orth.max_residual;
    head["status"] = ok ? "pass" : "fail";
    out.record(head);
  }
  for (const auto& f : families) {
    Record coeffs = Record::array();
    if (out.format == Format::Text)
      out.line("[cg " + t[0] + " " + t[1] + " " + t[2] + " " + std::to_string(f.tau) + "]");
    for (std::size_t m3 = 0; m3 < f.dims[2]; ++m3)
      for (std::size_t m1 = 0; m1 < f.dims[0]; ++m1)
        for (std::size_t m2 = 0; m2 < f.dims[1]; ++m2) {
          const cplx z = f(m1, m2, m3);
          if (std::abs(z) < kPrintThreshold) continue;
          if (out.format == Format::Text)
            out.line(std::to_string(m1) + " " + std::to_string(m2) + " " + std::to_string(m3) + " " + full(z.real()) +
                     " " + full(z.imag()));
          else
            coeffs.push_back(Record::array({m1, m2, m3, z.real(), z.imag()}));
        }
    if (out.format == Format::Records) {
      Record r;
      r["command"] = "cg";
      r["group"] = m.name;
      r["labels"] = triple_record(t);
      r["tau"] = f.tau;
      r["coefficients"] = coeffs;
      out.record(r);
    }
  }
  if (out.format == Format::Text) out.line(std::string("status ") + (ok ? "PASS" : "FAIL"));
  return {out.text.str(), ok ? 0 : 1};
}

Report cmd_we(const RunConfig& cfg) {
  if (!cfg.triple) throw Error(ErrorKind::ParseError, "we needs --triple L1,L2,L3");
  Output out{cfg.format, {}};
  const GroupModel m = load_model(cfg);
  const auto& t = *cfg.triple;
  const Corepresentation& d1 = find_corep(m, t[0]);
  const Corepresentation& d2 = find_corep(m, t[1]);
  const Corepresentation& d3 = find_corep(m, t[2]);
  const bool antilinear = cfg.variant == Variant::AL;
  const double tol = cfg.tolerance.value_or(kEndToEndTolerance);

  std::vector<std::pair<Corepresentation, std::size_t>> blocks{{d1, 1}};
  if (d3.label() != d1.label()) blocks.push_back({d3, 1});
  const ModelSpace space = build_model_space(blocks);

  TensorOperatorSet tensor{d2, {}, antilinear};
  if (cfg.tensor == "theta") {
    if (!antilinear) throw Error(ErrorKind::ParseError, "--tensor theta is antilinear and needs --variant AL");
    if (d2.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "--tensor theta needs a one-dimensional corep");
    if (!m.group->has_antiunitary()) throw Error(ErrorKind::ParseError, "--tensor theta needs an antiunitary element");
    tensor.components.push_back(space.wigner().matrix(*m.group->coset_representative()));
  } else if (cfg.tensor == "random") {
    const auto n = static_cast<Eigen::Index>(space.dimension());
    tensor = project_tensor_set(space, random_matrix(n, n, cfg.seed), d2, 0, antilinear).set;
  } else {
    throw Error(ErrorKind::ParseError, "unknown --tensor '" + cfg.tensor + "'");
  }
  const double covariance = verify_tensor_covariance(space, tensor);

  Record r;
  r["command"] = "we";
  r["group"] = m.name;
  r["labels"] = triple_record(t);
  r["variant"] = antilinear ? "AL" : "L";
  r["tensor"] = cfg.tensor;
  r["seed"] = cfg.seed;

  WignerEckartReport we;
  bool ok = covariance <= tol;
  try {
    we = verify_wigner_eckart(cfg.variant, d1, d2, d3, tensor, space);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SelectionRuleViolation) throw;
    r["status"] = "fail";
    r["note"] = e.what();
    if (out.format == Format::Text)
      out.line("we " + m.name + " " + triple_text(t) + " FAIL: " + e.what());
    else
      out.record(r);
    return {out.text.str(), 1};
  }
  SumRuleReport sums;
  const bool sum_rules = cfg.variant == Variant::L && we.multiplicity > 0;
  if (sum_rules) sums = sum_rule_check(d1, d2, d3, tensor, space);
  if (we.multiplicity > 0) ok = ok && we.max_defect <= tol;
  if (sum_rules) ok = ok && sums.symmetrized_residual <= tol && sums.reality_defect <= kConstructionTolerance;

  const ElementTable elements = matrix_elements(space, tensor, space.block_of(d1.label()), 0, space.block_of(d3.label()), 0);
  const std::string types{we.wigner_types[0], we.wigner_types[1], we.wigner_types[2]};

  r["wigner_types"] = types;
  r["compatible"] = we.compatible;
  r["multiplicity"] = we.multiplicity;
  r["kernel_dim_real"] = we.kernel_dim_real;
  r["essentially_unique"] = we.essentially_unique;
  r["type_b_involved"] = we.type_b_involved;
  r["covariance"] = covariance;
  r["max_element"] = we.max_element;
  r["max_defect"] = we.max_defect;
  r["factorization_defect"] = we.factorization_defect;
  r["span_residual"] = we.span_residual;
  r["reality_defect"] = sum_rules ? Record(sums.reality_defect) : Record(nullptr);
  r["symmetrized_residual"] = sum_rules ? Record(sums.symmetrized_residual) : Record(nullptr);
  Record reduced = Record::array();
  for (const auto& z : we.reduced) reduced.push_back(complex_record(z));
  r["reduced"] = reduced;
  Record els = Record::array();
  for (std::size_t m1 = 0; m1 < elements.dims[0]; ++m1)
    for (std::size_t m2 = 0; m2 < elements.dims[1]; ++m2)
      for (std::size_t m3 = 0; m3 < elements.dims[2]; ++m3) {
        const cplx z = elements.at(m1, m2, m3);
        if (std::abs(z) >= kPrintThreshold) els.push_back(Record::array({m1, m2, m3, z.real(), z.imag()}));
      }
  r["elements"] = els;
  r["note"] = we.note;
  r["status"] = ok ? "pass" : "fail";

  if (out.format == Format::Records) {
    out.record(r);
  } else {
    out.line("we " + m.name + " " + triple_text(t) + "  variant " + (antilinear ? "AL" : "L") + "  tensor " +
             cfg.tensor + "  seed " + std::to_string(cfg.seed));
    out.line("wigner_types " + types);
    out.line("compatible " + std::string(yes_no(we.compatible)));
    out.line("multiplicity " + std::to_string(we.multiplicity) + "  kernel_dim_real " +
             std::to_string(we.kernel_dim_real) + "  essentially_unique " + yes_no(we.essentially_unique));
    out.line("type_b_involved " + std::string(yes_no(we.type_b_involved)));
    out.line("covariance " + sci(covariance));
    out.line("max_element " + sci(we.max_element));
    out.line("factorization_defect " + sci(we.factorization_defect));
    out.line("span_residual " + sci(we.span_residual));
    out.line("max_defect " + sci(we.max_defect));
    if (sum_rules) {
      out.line("reality_defect " + sci(sums.reality_defect));
      out.line("symmetrized_residual " + sci(sums.symmetrized_residual));
    }
    for (std::size_t k = 0; k < we.reduced.size(); ++k)
      out.line("reduced[" + std::to_string(k) + "] " + full(we.reduced[k].real()) + " " + full(we.reduced[k].imag()));
    out.line("note " + we.note);
    out.line("elements (m1 m2 m3 re im)");
    for (const auto& e : els)
      out.line(std::to_string(e[0].get<std::size_t>()) + " " + std::to_string(e[1].get<std::size_t>()) + " " +
               std::to_string(e[2].get<std::size_t>()) + " " + full(e[3].get<double>()) + " " + full(e[4].get<double>()));
    out.line(std::string("status ") + (ok ? "PASS" : "FAIL"));
  }
  return {out.text.str(), ok ? 0 : 1};
}

Report run(const RunConfig& cfg) {
  try {
    if (cfg.command == "catalog") return cmd_catalog(cfg);
    if (cfg.command == "validate") return cmd_validate(cfg);
    if (cfg.command == "coreps") return cmd_coreps(cfg);
    if (cfg.command == "cg") return cmd_cg(cfg);
    if (cfg.command == "we") return cmd_we(cfg);
    return {"unknown command '" + cfg.command + "'\n", 2};
  } catch (const Error& e) {
    return {std::string("error: ") + e.what() + "\n", is_input_error(e.kind()) ? 2 : 1};
  } catch (const std::exception& e) {
    return {std::string("error: ") + e.what() + "\n", 2};
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corepresentations, Clebsch-Gordan coefficients and Wigner-Eckart checks for magnetic point groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  double tolerance = 0.0;
  std::string format = "text", triple, variant = "L";
  auto* tol_opt = app.add_option("--tolerance", tolerance, "Override check tolerances")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for generated tensors and decompositions (default 0)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));

  auto* catalog = app.add_subcommand("catalog", "List builtin groups");
  catalog->add_option("--dump", cfg.dump_dir, "Write builtin groups as group files into this directory");
  auto* validate = app.add_subcommand("validate", "Check a group file");
  auto* coreps = app.add_subcommand("coreps", "List irreducible coreps of a group file");
  auto* cg = app.add_subcommand("cg", "Solve Clebsch-Gordan coefficients for a triple");
  auto* we = app.add_subcommand("we", "Verify the Wigner-Eckart factorization for a triple");
  for (auto* sub : {validate, coreps, cg, we})
    sub->add_option("input", cfg.inputs, "Group file or catalog:<name>")->required();
  for (auto* sub : {cg, we}) sub->add_option("--triple", triple, "Corep labels L1,L2,L3")->required();
  we->add_option("--variant", variant, "L (linear) or AL (antilinear) tensor")->check(CLI::IsMember({"L", "AL"}));
  we->add_option("--tensor", cfg.tensor, "random or theta")->check(CLI::IsMember({"random", "theta"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (tol_opt->count() > 0) cfg.tolerance = tolerance;
  cfg.format = format == "records" ? Format::Records : Format::Text;
  cfg.variant = variant == "AL" ? Variant::AL : Variant::L;
  if (!triple.empty()) {
    std::array<std::string, 3> labels;
    std::size_t k = 0, start = 0;
    for (std::size_t i = 0; i <= triple.size(); ++i)
      if (i == triple.size() || triple[i] == ',') {
        if (k == 3) {
          err << "error: --triple takes exactly three labels\n";
          return 2;
        }
        labels[k++] = triple.substr(start, i - start);
        start = i + 1;
      }
    if (k != 3) {
      err << "error: --triple takes exactly three labels\n";
      return 2;
    }
    cfg.triple = labels;
  }
  const Report rep = run(cfg);
  (rep.exit_code == 2 ? err : out) << rep.output;
  return rep.exit_code;
}

}  // namespace magrep::cli
