#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qhent/witness.hpp"

namespace qhent {

class Endomorphism;
using EndoPtr = std::shared_ptr<const Endomorphism>;

/// What is known about phi relative to a witnessed subgroup H. Each field is
/// nullopt when neither an exhaustive check nor a structural rule decides it;
/// sampling alone never certifies a positive answer.
struct InvarianceReport {
  std::optional<bool> invariant;        // phi(H) <= H
  std::optional<bool> stable;           // phi(H) = H
  std::optional<bool> kernel_contained; // ker(phi) <= H
  /// h in H with phi(h) outside H, when invariance fails.
  std::optional<std::pair<ElementCode, ElementCode>> escape;
};

/// An endomorphism of a locally finite group, as an immutable expression
/// tree over a fixed set of primitive kinds.
class Endomorphism : public std::enable_shared_from_this<Endomorphism> {
public:
  static EndoPtr identity(GroupPtr g);
  static EndoPtr trivial(GroupPtr g);
  /// Index shift on a restricted sum: support index += k. Over the naturals
  /// k must be >= 0; over the integers any k (then an automorphism).
  static EndoPtr shift(std::shared_ptr<const DescriptorGroup> g,
                       std::int64_t k);
  /// x -> x^u on an abelian group.
  static EndoPtr power_map(GroupPtr g, std::uint64_t u);
  /// Partial element table on the domain; unlisted elements are fixed. The
  /// table is not required to be a homomorphism: verify_homomorphism reports
  /// a witness pair when it is not.
  static EndoPtr element_table(
      GroupPtr g, std::vector<std::pair<ElementCode, ElementCode>> images);
  /// On a direct product: coordinate i of the argument moves to coordinate
  /// perm[i] of the result. Factor descriptors must match along the moves.
  static EndoPtr coordinate_permutation(
      std::shared_ptr<const DescriptorGroup> g, std::vector<std::size_t> perm);
  /// Componentwise endomorphisms of a direct product.
  static EndoPtr diagonal(std::shared_ptr<const DescriptorGroup> g,
                          std::vector<EndoPtr> components);
  /// f after g (same domain).
  static EndoPtr compose(EndoPtr f, EndoPtr g);
  /// Automorphism given by a forward/backward pair; the round trip is
  /// checked on a deterministic sample at construction.
  static EndoPtr declared_automorphism(EndoPtr fwd, EndoPtr bwd,
                                       std::uint64_t seed = 0);

  const GroupPtr& domain() const { return domain_; }

  ElementCode apply(const ElementCode& g) const;

  /// phi^m; m = 0 is the identity. Shift and power iterates collapse to a
  /// single primitive.
  EndoPtr iterate(std::uint64_t m) const;

  /// Two-sided inverse when one is derivable from the structure.
  std::optional<EndoPtr> inverse() const;

  /// First multiplicativity violation found: exhaustive over all pairs for
  /// small finite domains, a deterministic 1000-pair sample otherwise.
  std::optional<std::pair<ElementCode, ElementCode>> verify_homomorphism(
      std::uint64_t seed = 0) const;

  FiniteSubgroup image_of(const FiniteSubgroup& F,
                          std::size_t budget = kDefaultClosureBudget) const;
  FiniteSubgroup kernel_in(const FiniteSubgroup& F) const;

  InvarianceReport invariance(const SubgroupWitness& w,
                              std::uint64_t seed = 0) const;

  bool known_injective() const;
  bool known_surjective() const;

  std::string describe() const;

  // -- kind payloads -------------------------------------------------------
  struct Identity {};
  struct Trivial {};
  struct Shift {
    std::int64_t k;
  };
  struct Power {
    std::uint64_t u;
  };
  struct Table {
    std::vector<std::pair<ElementCode, ElementCode>> images; // sorted by key
    bool bijective;
  };
  struct CoordPerm {
    std::vector<std::size_t> perm;
  };
  struct Diagonal {
    std::vector<EndoPtr> components;
  };
  struct Compose {
    EndoPtr outer, inner;
  };
  struct Declared {
    EndoPtr fwd, bwd;
  };
  struct Iterated {
    EndoPtr base;
    std::uint64_t m;
  };
  struct OnSubgroup {
    EndoPtr base;
    std::shared_ptr<const SubgroupWitness> w;
  };
  struct OnQuotient {
    EndoPtr base;
    std::shared_ptr<const SubgroupWitness> w;
  };
  using Kind = std::variant<Identity, Trivial, Shift, Power, Table, CoordPerm,
                            Diagonal, Compose, Declared, Iterated, OnSubgroup,
                            OnQuotient>;
  const Kind& kind() const { return kind_; }

private:
  Endomorphism(GroupPtr domain, Kind kind)
      : domain_(std::move(domain)), kind_(std::move(kind)) {}

  friend EndoPtr restrict_endomorphism(EndoPtr, SubgroupWitness);
  friend EndoPtr induced_quotient_map(EndoPtr, SubgroupWitness);

  GroupPtr domain_;
  Kind kind_;
};

/// phi restricted to a phi-invariant witnessed subgroup, as an endomorphism
/// of w.sub_group(). Throws StructureError when invariance fails or cannot
/// be established.
EndoPtr restrict_endomorphism(EndoPtr phi, SubgroupWitness w);

/// The map induced by phi on the quotient by a normal phi-invariant
/// witnessed subgroup, as an endomorphism of w.quotient_group(). Same
/// invariance requirement as restrict_endomorphism.
EndoPtr induced_quotient_map(EndoPtr phi, SubgroupWitness w);

} // namespace qhent
