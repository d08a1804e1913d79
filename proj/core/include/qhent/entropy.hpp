#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qhent/morphism.hpp"

namespace qhent {

struct EntropyConfig {
  std::uint64_t n_max = 32;              // deepest trajectory / chain level
  std::uint64_t window = 3;              // equal values needed to stop
  std::size_t size_budget = std::size_t{1} << 20; // largest level size
};

enum class EntropyStatus {
  certified_zero,    // the trajectory stopped growing: value exactly 0
  stabilized_window, // index constant across the window
  budget_exhausted,  // level or size budget hit first; beta is an upper bound
  non_subgroup_mode, // some level failed the subgroup check; no convergence
                     // claim, beta is the last ceiling ratio
};

std::string entropy_status_name(EntropyStatus s);

/// Levels T_n = F phi(F) ... phi^(n-1)(F) with their sizes and the index
/// sequence beta_n = |T_(n+1)| / |T_n| (ceiling ratio once a level fails
/// the subgroup check).
struct Trajectory {
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> betas;
  std::vector<bool> subgroup_flags; // per computed extension step
  bool subgroups = true;            // all flags true
  bool verified_exhaustively = true; // false once levels grew past the cap
  bool budget_exhausted = false;
  std::vector<ElementCode> last;    // elements of the deepest level, sorted
};

Trajectory trajectory(const EndoPtr& phi, const FiniteSubgroup& F,
                      const EntropyConfig& cfg = {});

/// Entropy along one base: the exact integer beta with value log(beta).
/// beta is never reported as a float.
struct EntropyEstimate {
  std::uint64_t beta = 1;
  EntropyStatus status = EntropyStatus::certified_zero;
  std::uint64_t reached_at = 0; // trajectory levels (or chain levels) used
  std::uint64_t window = 0;     // stabilization window that was applied
  std::vector<std::uint64_t> betas;
};

EntropyEstimate entropy_along(const EndoPtr& phi, const FiniteSubgroup& F,
                              const EntropyConfig& cfg = {});

/// Supremum over the supplied bases: a lower bound for the group-wide value,
/// since the true supremum ranges over all finite subgroups.
struct SupEntropyResult {
  std::uint64_t beta = 1;
  EntropyStatus status = EntropyStatus::certified_zero; // worst across bases
  std::vector<EntropyEstimate> per_base;
};

SupEntropyResult entropy_sup(const EndoPtr& phi,
                             const std::vector<FiniteSubgroup>& bases,
                             const EntropyConfig& cfg = {});

/// The chain U^(1) = U, U^(n+1) = U phi^-1(U^(n)), explored through the
/// membership recursion x in U^(n+1) iff phi(u^-1 x) in U^(n) for some u in
/// U, with memoization per (element, level). D_n = U n phi^-1(U^(n)) is an
/// increasing subgroup chain inside the finite U.
class UminChain {
public:
  UminChain(EndoPtr phi, FiniteSubgroup U);

  bool member(const ElementCode& x, std::uint64_t n);

  /// Elements of D_n, sorted.
  std::vector<ElementCode> level_d(std::uint64_t n);

  const FiniteSubgroup& base() const { return U_; }

private:
  EndoPtr phi_;
  FiniteSubgroup U_;
  std::map<std::pair<std::uint64_t, ElementCode>, bool> memo_;
};

bool umin_membership(const EndoPtr& phi, const FiniteSubgroup& U,
                     const ElementCode& x, std::uint64_t n);

/// Limit-free value along U: beta = [U : D_n] once the chain D_n holds
/// still. D_n = U is promoted to certified (the chain only increases).
EntropyEstimate limit_free_entropy(const EndoPtr& phi, const FiniteSubgroup& U,
                                   const EntropyConfig& cfg = {});

struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// [U phi(U) : U] / [U phi(U) : phi(U)], reduced. Throws StructureError
/// when U phi(U) is not a subgroup.
Rational modulus(const EndoPtr& phi, const FiniteSubgroup& U);

/// beta(phi, U) = beta(phi^-1, U) * Delta(phi, U) for an invertible phi,
/// cross-multiplied into an exact integer identity.
struct InverseEntropyReport {
  EntropyEstimate forward;
  EntropyEstimate backward;
  Rational delta;
  bool certified = false; // both estimates certified or window-stable
  bool holds = false;     // forward.beta * delta.den == backward.beta * delta.num
};

InverseEntropyReport inverse_entropy_check(const EndoPtr& phi,
                                           const FiniteSubgroup& U,
                                           const EntropyConfig& cfg = {});

} // namespace qhent
