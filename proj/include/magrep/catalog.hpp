#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magrep/group_file.hpp"

namespace magrep {

/// Irreducible coreps for fs, built from the lambda-regular representation of G
/// and labelled prefix + "A", "B", ... in order of dimension (identity-like
/// corep first). Works for purely unitary groups too, where the coreps are
/// the irreps of G.
std::vector<Corepresentation> irreducible_coreps(const FactorSystemPtr& fs, const std::string& prefix,
                                                 std::uint64_t seed = 0);

/// Names of the builtin groups: gray-C1 ... gray-C6, gray-C2v, gray-C4v, gray-D3.
std::vector<std::string> catalog_names();

/// Builtin gray group with two factor systems, "vector" (trivial) and
/// "spinor" (from spin-1/2 matrices), each with its irreducible coreps.
/// Vector coreps are labelled A, B, ...; spinor ones SA, SB, ....
/// UnknownLabel for an unknown name.
GroupModel catalog_entry(const std::string& name);

std::vector<GroupModel> catalog();

/// The unitary half G as a group of its own, with restricted factor systems
/// and their irreps (same labels prefixed by "G:").
GroupModel unitary_half(const GroupModel& model);

}  // namespace magrep
