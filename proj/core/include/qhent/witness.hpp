#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "qhent/subgroup.hpp"

namespace qhent {

/// A subgroup of an ambient group, given either extensionally (a finite
/// element set) or structurally (a position in the descriptor tree). The
/// structural kinds carry exact embed/restrict maps into a standalone group
/// for the subgroup, and project/section maps for the quotient when it is
/// finite-presentable:
///  - full:              H = G.
///  - finite:            an explicit FiniteSubgroup.
///  - component_torsion: elements whose every cyclic component has order
///                       dividing e (cyclic/product/sum trees only).
///  - tail:              restricted sum over naturals, support >= start.
///  - product_factor:    one factor of a direct product.
class SubgroupWitness {
public:
  enum class Kind { full, finite, component_torsion, tail, product_factor };

  static SubgroupWitness full(GroupPtr ambient);
  static SubgroupWitness finite(FiniteSubgroup sub);
  static SubgroupWitness component_torsion(
      std::shared_ptr<const DescriptorGroup> ambient, std::uint64_t exponent);
  static SubgroupWitness tail(std::shared_ptr<const DescriptorGroup> ambient,
                              std::uint64_t start);
  static SubgroupWitness product_factor(
      std::shared_ptr<const DescriptorGroup> ambient, std::size_t index);

  Kind kind() const { return kind_; }
  const GroupPtr& ambient() const { return ambient_; }

  bool contains(const ElementCode& g) const;

  /// True when normality in the ambient group is certain: structural kinds
  /// are normal by construction; a finite witness is checked exhaustively
  /// when the ambient group is finite and on a conjugation sample otherwise.
  bool normal() const { return normal_; }

  const GroupPtr& sub_group() const { return sub_; }
  ElementCode embed(const ElementCode& h) const;
  /// Inverse of embed. The element must satisfy contains().
  ElementCode restrict_to_sub(const ElementCode& g) const;

  /// The quotient is unavailable for a non-normal finite witness.
  bool quotient_supported() const { return quotient_ != nullptr; }
  const GroupPtr& quotient_group() const;
  ElementCode project(const ElementCode& g) const;
  /// Right inverse of project (a fixed transversal).
  ElementCode section(const ElementCode& q) const;

  /// Materialize the witness as an element set when that set is finite.
  std::optional<FiniteSubgroup> as_finite_subgroup() const;

  std::string describe() const;

  /// Parameters, valid for the matching kind only.
  std::uint64_t torsion_exponent() const { return param_; }
  std::uint64_t tail_start() const { return param_; }
  std::size_t factor_index() const { return static_cast<std::size_t>(param_); }
  const FiniteSubgroup* finite_part() const {
    return fin_ ? &*fin_ : nullptr;
  }

private:
  SubgroupWitness() = default;

  Kind kind_ = Kind::full;
  GroupPtr ambient_;
  std::shared_ptr<const DescriptorGroup> desc_ambient_; // structural kinds
  std::optional<FiniteSubgroup> fin_;
  std::uint64_t param_ = 0;
  bool normal_ = false;

  GroupPtr sub_;
  GroupPtr quotient_;
  // descriptor-typed views of sub_ / quotient_ for the structural kinds
  std::shared_ptr<const DescriptorGroup> sub_dg_;
  std::shared_ptr<const DescriptorGroup> quot_dg_;
  std::shared_ptr<const CosetQuotientGroup> coset_quotient_;
};

} // namespace qhent
