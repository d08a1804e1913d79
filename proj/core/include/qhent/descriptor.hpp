#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qhent/element_code.hpp"
#include "qhent/value.hpp"

namespace qhent {

struct Descriptor;
using DescriptorPtr = std::shared_ptr<const Descriptor>;

enum class IndexSet { naturals, integers };

/// Z(n), additive cyclic group of order n. n = 1 is the trivial group.
struct CyclicDesc {
  std::uint64_t modulus = 1;
};

/// The quaternion group of order 8.
struct QuaternionDesc {};

/// Finite direct product of the factor groups.
struct ProductDesc {
  std::vector<DescriptorPtr> factors;
};

/// Restricted direct sum of copies of one component group, indexed by N or Z.
/// Elements carry finitely many non-identity coordinates.
struct SumDesc {
  DescriptorPtr component;
  IndexSet indices = IndexSet::naturals;
};

/// a -> a^u applied componentwise on an abelian normal part.
struct PowerActionDesc {
  std::uint64_t exponent = 1;
};

/// Explicit automorphism of a finite normal part, as a full element table.
struct TableActionDesc {
  std::vector<std::pair<ElementCode, ElementCode>> images;
};

using ActionDesc = std::variant<PowerActionDesc, TableActionDesc>;

/// A x| Z(m): the generator of the acting cyclic group acts by `action`.
struct SemidirectDesc {
  DescriptorPtr normal_part;
  std::uint64_t acting_modulus = 1;
  ActionDesc action;
};

struct Descriptor {
  std::variant<CyclicDesc, QuaternionDesc, ProductDesc, SumDesc, SemidirectDesc>
      node;
};

DescriptorPtr cyclic(std::uint64_t n);
DescriptorPtr quaternion8();
DescriptorPtr product(std::vector<DescriptorPtr> factors);
DescriptorPtr restricted_sum(DescriptorPtr component, IndexSet idx);
DescriptorPtr semidirect(DescriptorPtr normal_part, std::uint64_t m,
                         ActionDesc action);

bool descriptor_abelian(const Descriptor& d);

/// Group order when finite, nullopt for infinite groups.
std::optional<std::uint64_t> descriptor_order(const Descriptor& d);

/// Least common multiple of element orders of an abelian descriptor.
/// Throws DomainError on non-abelian input.
std::uint64_t abelian_exponent(const Descriptor& d);

/// Structured identity element of the described group.
Value identity_value(const Descriptor& d);

bool descriptor_equal(const Descriptor& a, const Descriptor& b);
std::string descriptor_to_string(const Descriptor& d);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

} // namespace qhent
