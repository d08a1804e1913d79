#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhent/entropy.hpp"
#include "qhent/structure.hpp"

namespace qhent {

enum class Verdict {
  holds_exactly,              // exact equality under certified hypotheses
  holds_within_certification, // equality observed, some hypothesis uncertified
  inequality_observed,        // only the one-sided bound was claimed and holds
  inconclusive,               // computation did not stabilize
  violation,                  // a claimed exact identity failed
};

std::string verdict_name(Verdict v);

struct LawReport {
  std::string law;
  Verdict verdict = Verdict::inconclusive;
  std::uint64_t lhs = 1; // compared as exact integers beta, value = log beta
  std::uint64_t rhs = 1;
  std::string detail;
};

/// Hypotheses of the addition identity for (phi, H), with the rule that
/// grants equality when one applies.
struct HypothesisProfile {
  std::optional<bool> invariant;
  std::optional<bool> stable;
  std::optional<bool> kernel_contained;
  std::optional<bool> normal;
  std::optional<bool> quasihamiltonian;
  std::optional<bool> fc;
  std::optional<bool> finite_sub;
  std::optional<bool> finite_quotient;
  bool expects_equality = false;
  std::string basis; // which hypothesis set fired
};

struct ATInstance {
  EndoPtr phi;
  SubgroupWitness H;
  std::vector<FiniteSubgroup> bases; // trajectory bases in the ambient group
};

HypothesisProfile addition_profile(const ATInstance& inst,
                                   std::uint64_t seed = 0);

/// beta(phi) against beta(induced on G/H) * beta(restriction to H), supremum
/// over the given bases. Equality is claimed only when the profile grants
/// it; otherwise the >= bound is checked.
LawReport check_addition(const ATInstance& inst, const EntropyConfig& cfg = {});

/// Per-base bound beta(phi, U) >= beta(quotient map, pi U) * beta(phi|H, U n H).
LawReport check_monotonicity(const ATInstance& inst,
                             const EntropyConfig& cfg = {});

/// The identity map has entropy 0 along every base.
LawReport check_identity_zero(const GroupPtr& g,
                              const std::vector<FiniteSubgroup>& bases,
                              const EntropyConfig& cfg = {});

/// beta(phi, K) = beta(alpha phi alpha^-1, alpha K) per base.
LawReport check_conjugation(const EndoPtr& phi, const EndoPtr& alpha,
                            const std::vector<FiniteSubgroup>& bases,
                            const EntropyConfig& cfg = {});

/// beta_sup(phi^m) = beta_sup(phi)^m, matching bases through the trajectory
/// levels T_j(phi, F), j <= m.
LawReport check_log_law(const EndoPtr& phi, std::uint64_t m,
                        const std::vector<FiniteSubgroup>& bases,
                        const EntropyConfig& cfg = {});

/// On an abelian domain: beta(phi, U) = prod over primes p of
/// beta(phi, U_p) with U_p the p-part of U.
LawReport check_prime_sum(const EndoPtr& phi,
                          const std::vector<FiniteSubgroup>& bases,
                          const EntropyConfig& cfg = {});

/// For an automorphism: beta(phi, U) = beta(phi^-1, U) * Delta(phi, U),
/// compared as the cross-multiplied integer identity.
LawReport check_inverse_modulus(const EndoPtr& phi, const FiniteSubgroup& U,
                                const EntropyConfig& cfg = {});

} // namespace qhent
