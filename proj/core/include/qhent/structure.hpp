#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhent/builders.hpp"
#include "qhent/subgroup.hpp"

namespace qhent {

/// What is known about the subgroup-permutability class of a group. A field
/// holds a value only when decided by an exhaustive check or a structural
/// argument; sampling alone can only disprove.
struct ClassificationReport {
  std::optional<bool> abelian;
  std::optional<bool> quasihamiltonian; // all subgroups pairwise permute
  std::optional<bool> dedekind;         // all subgroups normal
  std::optional<bool> hamiltonian;      // dedekind and nonabelian
  std::string method;
  /// Pair of elements generating non-permuting / non-normal witnesses.
  std::optional<std::pair<ElementCode, ElementCode>> obstruction;
};

ClassificationReport classify(const GroupPtr& g, std::uint64_t seed = 0);

/// Internal direct decomposition Q8 x B x D of a finite hamiltonian group:
/// B elementary abelian 2, D abelian of odd order. nullopt when the group
/// has no such decomposition.
struct DedekindBaerDecomposition {
  FiniteSubgroup q8;
  FiniteSubgroup b;
  FiniteSubgroup d;
};
std::optional<DedekindBaerDecomposition> dedekind_baer_decompose(
    const FiniteSubgroup& G);

/// Derived subgroup of a finite semidirect A x| Z(p^m) with a -> a^(1+p^s)
/// action, against the prediction <a^(p^s) : a in A>.
struct IwasawaDerivedReport {
  FiniteSubgroup derived;
  FiniteSubgroup predicted;
  bool match = false;
};
IwasawaDerivedReport iwasawa_derived(
    const std::shared_ptr<const DescriptorGroup>& g);

/// Structural finite-conjugacy-class decision from the descriptor shape.
struct FCReport {
  std::optional<bool> fc;
  std::string reason;
};
FCReport fc_by_commutator(const std::shared_ptr<const DescriptorGroup>& g);

/// x split into commuting parts of pairwise coprime prime-power orders.
struct PrimaryPart {
  std::uint64_t prime = 0;
  ElementCode part;
  std::uint64_t order = 1;
};
struct PrimaryDecomposition {
  std::vector<PrimaryPart> parts;
  bool verified = false; // product reassembles x and parts commute
};
PrimaryDecomposition p_decompose_element(const GroupPtr& g,
                                         const ElementCode& x);

/// Elements of p-power order in a finite group. Throws StructureError when
/// that set fails to be a subgroup.
FiniteSubgroup p_component(const FiniteSubgroup& G, std::uint64_t p);

/// Prime factorization, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize_u64(
    std::uint64_t n);

} // namespace qhent
