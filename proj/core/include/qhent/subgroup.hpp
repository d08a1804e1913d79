#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhent/group.hpp"

namespace qhent {

inline constexpr std::size_t kDefaultClosureBudget = std::size_t{1} << 20;

/// Finite subgroup of an ambient group: a deterministically ordered element
/// set closed under the group operations, with a generator list.
class FiniteSubgroup {
public:
  /// Subgroup generated by `gens`, by worklist saturation. The empty
  /// generator list yields the trivial subgroup. Throws BudgetError when the
  /// element count would exceed `budget`.
  static FiniteSubgroup closure(GroupPtr ambient,
                                std::vector<ElementCode> gens,
                                std::size_t budget = kDefaultClosureBudget);

  static FiniteSubgroup trivial(GroupPtr ambient);

  /// Wraps an already-closed, sorted element set. The caller vouches for
  /// closure; use verify_closed() to re-check exhaustively.
  static FiniteSubgroup from_sorted_elements(GroupPtr ambient,
                                             std::vector<ElementCode> elements,
                                             std::vector<ElementCode> gens);

  /// The whole of a finite ambient group.
  static FiniteSubgroup whole_group(GroupPtr ambient);

  const GroupPtr& ambient() const { return ambient_; }
  const std::vector<ElementCode>& elements() const { return elements_; }
  const std::vector<ElementCode>& generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const ElementCode& g) const;
  bool verify_closed() const;

  friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
    return a.elements_ == b.elements_;
  }

private:
  FiniteSubgroup(GroupPtr ambient, std::vector<ElementCode> elements,
                 std::vector<ElementCode> gens);

  GroupPtr ambient_;
  std::vector<ElementCode> elements_;
  std::vector<ElementCode> generators_;
};

/// Exact set product of finite subgroups, in factor order. Not necessarily a
/// subgroup; factor generator lists are kept for the closure test.
struct ProductSet {
  GroupPtr ambient;
  std::vector<ElementCode> elements; // sorted
  std::vector<FiniteSubgroup> factors;

  std::size_t size() const { return elements.size(); }
  bool contains(const ElementCode& g) const;
};

ProductSet product_set(const FiniteSubgroup& X, const FiniteSubgroup& Y);

bool is_subgroup(const ProductSet& S);

/// Number of right cosets Ut composing T. Validates that T really is a
/// disjoint union of right cosets of U; throws StructureError otherwise.
std::uint64_t generalized_index(const std::vector<ElementCode>& T_sorted,
                                const FiniteSubgroup& U, GroupPtr ambient);
std::uint64_t generalized_index(const ProductSet& T, const FiniteSubgroup& U);
std::uint64_t generalized_index(const FiniteSubgroup& T,
                                const FiniteSubgroup& U);

/// gHg^-1 = H for every g in `scope` (exhaustive over the given elements).
bool is_normal_in(const FiniteSubgroup& H,
                  const std::vector<ElementCode>& scope);
bool is_normal_in(const FiniteSubgroup& H, const FiniteSubgroup& scope);

FiniteSubgroup commutator_subgroup(const FiniteSubgroup& g_fin,
                                   std::size_t budget = kDefaultClosureBudget);

FiniteSubgroup intersection(const FiniteSubgroup& H, const FiniteSubgroup& K);

/// A finite subgroup viewed as an ambient group in its own right. Element
/// codes are unchanged.
class SubgroupAsGroup final : public Group {
public:
  explicit SubgroupAsGroup(FiniteSubgroup sub);

  const FiniteSubgroup& subgroup() const { return sub_; }

  ElementCode identity() const override;
  ElementCode multiply(const ElementCode& a,
                       const ElementCode& b) const override;
  ElementCode inverse(const ElementCode& a) const override;
  bool contains(const ElementCode& a) const override;
  std::optional<std::uint64_t> order() const override;
  std::vector<ElementCode> elements() const override;
  bool abelian_hint() const override;
  std::string name() const override;

private:
  FiniteSubgroup sub_;
};

/// Quotient of a (possibly infinite) group by a finite normal subgroup.
/// Elements are canonical coset representatives: the byte-lexicographically
/// minimal element of each coset.
class CosetQuotientGroup final : public Group {
public:
  /// Normality of the kernel is the caller's responsibility for infinite
  /// bases; for finite bases use quotient() which checks it exhaustively.
  CosetQuotientGroup(GroupPtr base, FiniteSubgroup kernel);

  const GroupPtr& base() const { return base_; }
  const FiniteSubgroup& kernel() const { return kernel_; }

  /// Minimal representative of gH.
  ElementCode canonicalize(const ElementCode& g) const;

  ElementCode identity() const override;
  ElementCode multiply(const ElementCode& a,
                       const ElementCode& b) const override;
  ElementCode inverse(const ElementCode& a) const override;
  bool contains(const ElementCode& a) const override;
  std::optional<std::uint64_t> order() const override;
  std::vector<ElementCode> elements() const override;
  bool abelian_hint() const override;
  std::string name() const override;

private:
  GroupPtr base_;
  FiniteSubgroup kernel_;
};

/// Finite quotient with precomputed canonical coset table.
class FiniteQuotientGroup {
public:
  /// Checks normality of the kernel exhaustively and the Lagrange identity
  /// |cosets| * |kernel| = |base|. Throws StructureError on failure.
  FiniteQuotientGroup(FiniteSubgroup base, FiniteSubgroup kernel);

  const FiniteSubgroup& base() const { return base_; }
  const FiniteSubgroup& kernel() const { return kernel_; }
  const std::vector<ElementCode>& coset_representatives() const {
    return representatives_;
  }
  std::uint64_t order() const { return representatives_.size(); }

  ElementCode project(const ElementCode& g) const;
  ElementCode multiply(const ElementCode& a, const ElementCode& b) const;

  /// The quotient as an ambient Group over canonical representatives.
  GroupPtr as_group() const { return impl_; }

private:
  FiniteSubgroup base_;
  FiniteSubgroup kernel_;
  std::shared_ptr<const CosetQuotientGroup> impl_;
  std::vector<ElementCode> representatives_;
};

FiniteQuotientGroup quotient(const FiniteSubgroup& g_fin,
                             const FiniteSubgroup& H);

} // namespace qhent
