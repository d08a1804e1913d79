#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhent/descriptor.hpp"
#include "qhent/element_code.hpp"
#include "qhent/value.hpp"

namespace qhent {

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

/// A (possibly infinite) locally finite group with computable arithmetic on
/// canonical element codes. Implementations are immutable; all operations are
/// pure.
class Group : public std::enable_shared_from_this<Group> {
public:
  virtual ~Group() = default;

  virtual ElementCode identity() const = 0;
  virtual ElementCode multiply(const ElementCode& a,
                               const ElementCode& b) const = 0;
  virtual ElementCode inverse(const ElementCode& a) const = 0;

  /// True iff the code is a valid canonical element of this group.
  virtual bool contains(const ElementCode& a) const = 0;

  /// Group order when finite.
  virtual std::optional<std::uint64_t> order() const = 0;

  /// All elements in canonical code order; throws DomainError when infinite.
  virtual std::vector<ElementCode> elements() const;

  /// True only when the group is known to be abelian by construction.
  virtual bool abelian_hint() const { return false; }

  virtual std::string name() const = 0;

  bool is_identity(const ElementCode& a) const { return a == identity(); }

  ElementCode pow(const ElementCode& a, std::int64_t e) const;

  /// Least n >= 1 with a^n = identity. Throws BudgetError past the cap;
  /// in-scope groups are torsion, so this terminates for valid input.
  std::uint64_t order_of(const ElementCode& a,
                         std::uint64_t cap = kDefaultOrderCap) const;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Group built from a constructor-tree descriptor.
class DescriptorGroup final : public Group {
public:
  /// Validates descriptor parameters; throws DomainError when they are
  /// inconsistent (non-unit power action, bad table, ...).
  explicit DescriptorGroup(DescriptorPtr desc);

  const DescriptorPtr& descriptor() const { return desc_; }

  ElementCode encode(const Value& v) const;
  Value decode(const ElementCode& code) const;

  ElementCode identity() const override;
  ElementCode multiply(const ElementCode& a,
                       const ElementCode& b) const override;
  ElementCode inverse(const ElementCode& a) const override;
  bool contains(const ElementCode& a) const override;
  std::optional<std::uint64_t> order() const override;
  std::vector<ElementCode> elements() const override;
  bool abelian_hint() const override { return abelian_; }
  std::string name() const override;

private:
  DescriptorPtr desc_;
  bool abelian_ = false;
  std::optional<std::uint64_t> order_;
  ElementCode identity_code_;
};

inline std::shared_ptr<const DescriptorGroup> make_group(DescriptorPtr d) {
  return std::make_shared<const DescriptorGroup>(std::move(d));
}

/// Downcast helper; returns nullptr when the group is not descriptor-built.
const DescriptorGroup* as_descriptor_group(const Group& g);

} // namespace qhent
