#include "magrep/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "magrep/error.hpp"
#include "magrep/spin.hpp"

namespace magrep {

namespace {

using std::numbers::pi;

struct Rotation {
  std::string name;
  EulerAngles angles;
};

/// Twofold axis in the xy-plane at azimuth phi.
EulerAngles twofold(double phi) { return {phi + pi, pi, -phi}; }

std::vector<Rotation> cyclic(int n) {
  std::vector<Rotation> r{{"E", {}}};
  for (int k = 1; k < n; ++k) {
    std::string name = "C" + std::to_string(n);
    if (k > 1) name += "^" + std::to_string(k);
    r.push_back({name, {2 * pi * k / n, 0, 0}});
  }
  return r;
}

std::vector<Rotation> rotations_of(const std::string& name) {
  if (name.rfind("gray-C", 0) == 0 && name.size() == 7 && name[6] >= '1' && name[6] <= '6')
    return cyclic(name[6] - '0');
  // Mirrors enter through their rotation part: a mirror normal to the axis
  // at azimuth phi acts on spin like the twofold rotation about that axis.
  if (name == "gray-C2v") return {{"E", {}}, {"C2", {pi, 0, 0}}, {"sx", twofold(0)}, {"sy", twofold(pi / 2)}};
  if (name == "gray-C4v") {
    auto r = cyclic(4);
    r.push_back({"sx", twofold(0)});
    r.push_back({"sy", twofold(pi / 2)});
    r.push_back({"sd", twofold(pi / 4)});
    r.push_back({"sd'", twofold(3 * pi / 4)});
    return r;
  }
  if (name == "gray-D3") {
    auto r = cyclic(3);
    r.push_back({"C2a", twofold(0)});
    r.push_back({"C2b", twofold(pi / 3)});
    r.push_back({"C2c", twofold(2 * pi / 3)});
    return r;
  }
  throw Error(ErrorKind::UnknownLabel, "no builtin group named '" + name + "'");
}

std::string letter_label(const std::string& prefix, std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return prefix + s;
}

/// Real part of sum over G of tr D(u), largest for the identity-like irrep.
double character_sum(const std::vector<CMatrix>& mats, const MagneticGroup& g) {
  double s = 0.0;
  for (ElementId u : g.unitary_subgroup()) s += mats[u].trace().real();
  return s;
}

}  // namespace

std::vector<Corepresentation> irreducible_coreps(const FactorSystemPtr& fs, const std::string& prefix,
                                                 std::uint64_t seed) {
  const MagneticGroup& g = fs->group();
  const auto irreps = regular_irreps_of_unitary_half(*fs, seed);
  std::vector<Corepresentation> built;
  if (g.has_antiunitary()) {
    built = induce_coreps(irreps, fs);
  } else {
    for (const auto& r : irreps) {
      std::vector<CMatrix> mats(g.order());
      for (std::size_t k = 0; k < g.unitary_subgroup().size(); ++k) mats[g.unitary_subgroup()[k]] = r[k];
      built.emplace_back(fs, std::move(mats), "D", true, WignerType::a);
    }
  }
  std::stable_sort(built.begin(), built.end(), [&](const Corepresentation& x, const Corepresentation& y) {
    if (x.dimension() != y.dimension()) return x.dimension() < y.dimension();
    return character_sum(x.matrices(), g) > character_sum(y.matrices(), g) + 1e-6;
  });
  std::vector<Corepresentation> out;
  for (std::size_t k = 0; k < built.size(); ++k) out.push_back(built[k].relabeled(letter_label(prefix, k)));
  return out;
}

std::vector<std::string> catalog_names() {
  return {"gray-C1", "gray-C2", "gray-C3", "gray-C4", "gray-C5", "gray-C6", "gray-C2v", "gray-C4v", "gray-D3"};
}

GroupModel catalog_entry(const std::string& name) {
  const auto rots = rotations_of(name);
  std::vector<EulerAngles> angles;
  std::vector<std::string> names;
  for (const auto& r : rots) {
    angles.push_back(r.angles);
    names.push_back(r.name);
  }
  const SpinExample spin = build_spin_example(1, angles, true, names);
  GroupModel model;
  model.name = name;
  model.group = spin.group;
  auto vector = std::make_shared<const FactorSystem>(FactorSystem::trivial(spin.group));
  model.systems.push_back({"vector", vector, irreducible_coreps(vector, "")});
  model.systems.push_back({"spinor", spin.factor_system, irreducible_coreps(spin.factor_system, "S")});
  return model;
}

std::vector<GroupModel> catalog() {
  std::vector<GroupModel> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_entry(n));
  return out;
}

GroupModel unitary_half(const GroupModel& model) {
  const MagneticGroup& g = *model.group;
  const auto& ids = g.unitary_subgroup();
  std::vector<std::size_t> pos(g.order(), 0);
  for (std::size_t k = 0; k < ids.size(); ++k) pos[ids[k]] = k;
  GroupSpec spec;
  for (ElementId u : ids) {
    spec.names.push_back(g.name(u));
    spec.antiunitary.push_back(false);
    std::vector<ElementId> row;
    for (ElementId v : ids) row.push_back(pos[g.product(u, v)]);
    spec.product_table.push_back(std::move(row));
  }
  GroupModel out;
  out.name = model.name + "/G";
  out.group = build_group(spec);
  for (const auto& s : model.systems) {
    std::vector<cplx> table;
    for (ElementId u : ids)
      for (ElementId v : ids) table.push_back((*s.fs)(u, v));
    auto fs = std::make_shared<const FactorSystem>(out.group, std::move(table), s.fs->tolerance());
    const std::string prefix = s.coreps.empty() ? "G:" : "G:" + s.coreps.front().label().substr(0, s.coreps.front().label().size() - 1);
    out.systems.push_back({s.name, fs, irreducible_coreps(fs, prefix)});
  }
  return out;
}

}  // namespace magrep
