#include "magrep/group_file.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "magrep/error.hpp"

namespace magrep {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

double number(const std::string& tok, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size()) fail(line, "expected a number, got '" + tok + "'");
  return v;
}

std::string format(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

const SystemModel* GroupModel::system(std::string_view n) const {
  for (const auto& s : systems)
    if (s.name == n) return &s;
  return nullptr;
}

const Corepresentation* GroupModel::corep(std::string_view label) const {
  for (const auto& s : systems)
    for (const auto& d : s.coreps)
      if (d.label() == label) return &d;
  return nullptr;
}

GroupFileData parse_group_file(std::string_view text, std::string name) {
  GroupFileData data;
  data.name = std::move(name);
  enum class Section { None, Elements, Table, System, Corep } section = Section::None;
  bool saw_elements = false, saw_table = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto toks = tokens(raw);
    if (toks.empty()) continue;
    if (toks.front().front() == '[') {
      std::string header = raw.substr(raw.find('[') + 1);
      const auto close = header.find(']');
      if (close == std::string::npos) fail(lineno, "unterminated section header");
      const auto parts = tokens(header.substr(0, close));
      if (parts.empty()) fail(lineno, "empty section header");
      const std::string& kind = parts[0];
      if (kind == "elements" && parts.size() == 1) {
        section = Section::Elements;
        saw_elements = true;
      } else if (kind == "table" && parts.size() == 1) {
        section = Section::Table;
        saw_table = true;
      } else if (kind == "factor_system" && parts.size() <= 2) {
        section = Section::System;
        data.systems.push_back({parts.size() == 2 ? parts[1] : "default", {}, lineno});
      } else if (kind == "corep" && (parts.size() == 2 || parts.size() == 3)) {
        section = Section::Corep;
        data.coreps.push_back({parts[1], parts.size() == 3 ? parts[2] : "", {}, lineno});
      } else {
        fail(lineno, "unknown section '" + header.substr(0, close) + "'");
      }
      continue;
    }
    switch (section) {
      case Section::None:
        fail(lineno, "content before the first section");
      case Section::Elements:
        if (toks.size() != 2 || (toks[1] != "L" && toks[1] != "A"))
          fail(lineno, "expected '<name> L' or '<name> A'");
        data.names.push_back(toks[0]);
        data.antiunitary.push_back(toks[1] == "A");
        break;
      case Section::Table:
        data.table.push_back(toks);
        break;
      case Section::System:
        if (toks.size() != 4) fail(lineno, "expected '<name> <name> <re> <im>'");
        data.systems.back().entries.emplace_back(toks[0], toks[1],
                                                 cplx(number(toks[2], lineno), number(toks[3], lineno)));
        break;
      case Section::Corep: {
        auto& c = data.coreps.back();
        if (toks[0] == "@") {
          if (toks.size() != 2) fail(lineno, "expected '@ <element>'");
          c.blocks.push_back({toks[1], {}});
          break;
        }
        if (c.blocks.empty()) fail(lineno, "matrix row before '@ <element>'");
        if (toks.size() % 2 != 0) fail(lineno, "matrix row needs re,im pairs");
        std::vector<cplx> row;
        for (std::size_t k = 0; k < toks.size(); k += 2)
          row.emplace_back(number(toks[k], lineno), number(toks[k + 1], lineno));
        c.blocks.back().second.push_back(std::move(row));
        break;
      }
    }
  }
  if (!saw_elements) fail(lineno, "missing [elements] section");
  if (!saw_table) fail(lineno, "missing [table] section");
  return data;
}

GroupModel assemble(const GroupFileData& data, double tolerance) {
  std::map<std::string, ElementId> ids;
  for (std::size_t k = 0; k < data.names.size(); ++k)
    if (!ids.emplace(data.names[k], k).second)
      throw Error(ErrorKind::ParseError, "duplicate element name '" + data.names[k] + "'");
  auto id_of = [&](const std::string& n) {
    const auto it = ids.find(n);
    if (it == ids.end()) throw Error(ErrorKind::ParseError, "unknown element '" + n + "'");
    return it->second;
  };

  GroupSpec spec;
  spec.names = data.names;
  spec.antiunitary = data.antiunitary;
  for (const auto& row : data.table) {
    std::vector<ElementId> r;
    for (const auto& n : row) r.push_back(id_of(n));
    spec.product_table.push_back(std::move(r));
  }
  GroupModel model;
  model.name = data.name;
  model.group = build_group(spec);
  const std::size_t n = model.group->order();

  for (const auto& raw : data.systems) {
    if (model.system(raw.name))
      throw Error(ErrorKind::ParseError, "duplicate factor system '" + raw.name + "'");
    std::vector<cplx> table(n * n, cplx(1.0, 0.0));
    for (const auto& [a, b, v] : raw.entries) table[id_of(a) * n + id_of(b)] = v;
    model.systems.push_back({raw.name, std::make_shared<const FactorSystem>(model.group, std::move(table), tolerance), {}});
  }
  if (model.systems.empty())
    model.systems.push_back(
        {"trivial", std::make_shared<const FactorSystem>(FactorSystem::trivial(model.group, tolerance)), {}});

  for (const auto& raw : data.coreps) {
    SystemModel* target = nullptr;
    if (raw.system.empty()) {
      if (model.systems.size() != 1)
        throw Error(ErrorKind::ParseError, "corep '" + raw.label + "' must name its factor system");
      target = &model.systems.front();
    } else {
      for (auto& s : model.systems)
        if (s.name == raw.system) target = &s;
      if (!target) throw Error(ErrorKind::ParseError, "corep '" + raw.label + "' names unknown factor system");
    }
    if (model.corep(raw.label)) throw Error(ErrorKind::ParseError, "duplicate corep label '" + raw.label + "'");
    std::vector<CMatrix> mats(n);
    std::vector<bool> seen(n, false);
    for (const auto& [el, rows] : raw.blocks) {
      const ElementId a = id_of(el);
      if (seen[a]) throw Error(ErrorKind::ParseError, "corep '" + raw.label + "' repeats element " + el);
      seen[a] = true;
      const Eigen::Index d = static_cast<Eigen::Index>(rows.size());
      CMatrix m(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        if (static_cast<Eigen::Index>(rows[r].size()) != d)
          throw Error(ErrorKind::DimensionMismatch, "corep '" + raw.label + "' block " + el + " is not square");
        for (Eigen::Index c = 0; c < d; ++c) m(r, c) = rows[r][c];
      }
      mats[a] = std::move(m);
    }
    for (ElementId a = 0; a < n; ++a)
      if (!seen[a]) throw Error(ErrorKind::ParseError, "corep '" + raw.label + "' lacks element " + data.names[a]);
    Corepresentation d(target->fs, std::move(mats), raw.label);
    if (verify_corep(d).passed && is_irreducible(d))
      d = Corepresentation(d.factor_system_ptr(), d.matrices(), d.label(), true, classify_wigner_type(d));
    target->coreps.push_back(std::move(d));
  }
  return model;
}

GroupModel load_group_file(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return assemble(parse_group_file(buf.str(), path.stem().string()), tolerance);
}

std::string write_group_file(const GroupModel& model) {
  const MagneticGroup& g = *model.group;
  std::ostringstream out;
  if (!model.name.empty()) out << "# " << model.name << "\n";
  out << "[elements]\n";
  for (const auto& e : g.elements()) out << e.name << (e.antiunitary ? " A" : " L") << "\n";
  out << "[table]\n";
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.name(g.product(a, b));
    out << "\n";
  }
  for (const auto& s : model.systems) {
    out << "[factor_system " << s.name << "]\n";
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b) {
        const cplx v = (*s.fs)(a, b);
        if (v != cplx(1.0, 0.0))
          out << g.name(a) << " " << g.name(b) << " " << format(v.real()) << " " << format(v.imag()) << "\n";
      }
  }
  for (const auto& s : model.systems)
    for (const auto& d : s.coreps) {
      out << "[corep " << d.label() << " " << s.name << "]\n";
      for (ElementId a = 0; a < g.order(); ++a) {
        out << "@ " << g.name(a) << "\n";
        const CMatrix& m = d.matrix(a);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << (c ? " " : "") << format(m(r, c).real()) << "," << format(m(r, c).imag());
          out << "\n";
        }
      }
    }
  return out.str();
}

}  // namespace magrep
