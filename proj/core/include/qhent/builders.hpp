#pragma once

#include <cstdint>
#include <random>

#include "qhent/group.hpp"

namespace qhent {

/// Build a group from its descriptor and property-check the arithmetic
/// (associativity, identity, inverses) on a deterministic element sample.
std::shared_ptr<const DescriptorGroup> build_group(DescriptorPtr desc,
                                                   std::uint64_t seed = 0);

/// Q8 x B x D per the Dedekind--Baer classification. B must have exponent
/// <= 2 and every element order in D must be odd.
std::shared_ptr<const DescriptorGroup> build_hamiltonian(DescriptorPtr b_spec,
                                                         DescriptorPtr d_spec);

/// A x| Z(p^m) with the generator acting as a -> a^(1+p^s). Enforces the
/// parameter constraints s >= 1, s < n, n <= s + m, and s >= 2 when p = 2;
/// A must be abelian of exponent exactly p^n.
std::shared_ptr<const DescriptorGroup> build_iwasawa(std::uint64_t p,
                                                     std::uint64_t n,
                                                     std::uint64_t m,
                                                     std::uint64_t s,
                                                     DescriptorPtr a_spec);

/// Descriptor parameters of an Iwasawa build, recovered for structural laws.
struct IwasawaParams {
  std::uint64_t p, n, m, s;
  DescriptorPtr a_spec;
};
std::optional<IwasawaParams> iwasawa_params(const Descriptor& d);

/// Quotient by the componentwise subgroup of elements of order dividing
/// `exponent`: each cyclic component Z(n) becomes Z(n / gcd(n, exponent)).
/// Only defined for componentwise constructors (no Q8, no table actions).
DescriptorPtr structural_quotient(const DescriptorPtr& base,
                                  std::uint64_t exponent);

/// Finite truncation: every restricted sum becomes a product of `k` copies
/// of its component (naturals indices 0..k-1).
DescriptorPtr truncate_descriptor(const DescriptorPtr& d, std::size_t k);

/// Deterministic element sampler for descriptor-built groups.
class ElementSampler {
public:
  ElementSampler(std::shared_ptr<const DescriptorGroup> group,
                 std::uint64_t seed);
  ElementCode next();

private:
  std::shared_ptr<const DescriptorGroup> group_;
  std::mt19937_64 rng_;
};

/// Deterministic element sample from any group that supports it: descriptor
/// groups through ElementSampler, finite groups from their element list,
/// coset quotients by sampling the base and canonicalizing.
std::vector<ElementCode> sample_elements(const GroupPtr& g, std::size_t count,
                                         std::uint64_t seed);

bool is_prime_u64(std::uint64_t n);
std::uint64_t ipow_u64(std::uint64_t base, std::uint64_t exp);

} // namespace qhent
