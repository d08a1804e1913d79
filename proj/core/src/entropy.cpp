#include "qhent/entropy.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qhent {
namespace {

constexpr std::size_t kExhaustiveLevelCap = 20000; // full subgroup check bound

bool sorted_contains(const std::vector<ElementCode>& v, const ElementCode& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

/// T * g for every g in gens stays inside T, likewise inverses: the closure
/// test specialized to an already-collected candidate set.
bool level_is_subgroup(const GroupPtr& g, const std::vector<ElementCode>& T,
                       const std::vector<ElementCode>& gens,
                       bool exhaustive, std::uint64_t seed) {
  if (exhaustive) {
    for (const auto& x : gens) {
      for (const auto& t : T)
        if (!sorted_contains(T, g->multiply(t, x))) return false;
      if (!sorted_contains(T, g->inverse(x))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 64; ++i) {
    const auto& a = T[rng() % T.size()];
    const auto& b = T[rng() % T.size()];
    if (!sorted_contains(T, g->multiply(a, b))) return false;
    if (!sorted_contains(T, g->inverse(a))) return false;
  }
  return true;
}

} // namespace

std::string entropy_status_name(EntropyStatus s) {
  switch (s) {
    case EntropyStatus::certified_zero: return "certified_zero";
    case EntropyStatus::stabilized_window: return "stabilized_window";
    case EntropyStatus::budget_exhausted: return "budget_exhausted";
    case EntropyStatus::non_subgroup_mode: return "non_subgroup_mode";
  }
  return "?";
}

Trajectory trajectory(const EndoPtr& phi, const FiniteSubgroup& F,
                      const EntropyConfig& cfg) {
  const GroupPtr& g = phi->domain();
  if (F.ambient().get() != g.get()) {
    const auto* da = as_descriptor_group(*F.ambient());
    const auto* db = as_descriptor_group(*g);
    if (!da || !db || !descriptor_equal(*da->descriptor(), *db->descriptor()))
      throw DomainError("base subgroup lives in a different group");
  }

  Trajectory out;
  std::vector<ElementCode> T = F.elements(); // sorted
  std::vector<ElementCode> level_gens = F.generators();
  std::vector<ElementCode> image = T; // phi^n(F), elementwise
  std::vector<ElementCode> image_gens = F.generators();

  out.sizes.push_back(T.size());

  for (std::uint64_t n = 1; n < cfg.n_max; ++n) {
    // advance the image one application of phi
    for (auto& x : image) x = phi->apply(x);
    {
      std::vector<ElementCode> dedup = image;
      std::sort(dedup.begin(), dedup.end());
      dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
      image.swap(dedup);
    }
    for (auto& x : image_gens) x = phi->apply(x);

    std::set<ElementCode> next(T.begin(), T.end());
    if (out.subgroups) {
      // T is a subgroup: T*x cosets are disjoint or equal, so one membership
      // probe per x decides whether a whole coset is new
      for (const auto& x : image) {
        if (next.count(x)) continue;
        for (const auto& t : T) next.insert(g->multiply(t, x));
        if (next.size() > cfg.size_budget) {
          out.budget_exhausted = true;
          break;
        }
      }
    } else {
      for (const auto& t : T) {
        for (const auto& x : image) next.insert(g->multiply(t, x));
        if (next.size() > cfg.size_budget) {
          out.budget_exhausted = true;
          break;
        }
      }
    }
    if (out.budget_exhausted) break;

    std::vector<ElementCode> Tn(next.begin(), next.end());
    for (const auto& x : image_gens) level_gens.push_back(x);

    if (out.subgroups) {
      bool exhaustive = Tn.size() <= kExhaustiveLevelCap;
      if (!exhaustive) out.verified_exhaustively = false;
      bool ok = level_is_subgroup(g, Tn, level_gens, exhaustive, n);
      out.subgroup_flags.push_back(ok);
      if (!ok) out.subgroups = false;
    } else {
      out.subgroup_flags.push_back(false);
    }

    std::uint64_t prev = T.size();
    out.sizes.push_back(Tn.size());
    if (out.subgroups) {
      if (Tn.size() % prev != 0)
        throw StructureError(
            "level size does not divide the next one in subgroup mode");
      std::uint64_t beta = Tn.size() / prev;
      if (!out.betas.empty() && beta > out.betas.back())
        throw StructureError("index sequence increased in subgroup mode");
      out.betas.push_back(beta);
    } else {
      // no index to speak of: record the ceiling of the size ratio
      out.betas.push_back((Tn.size() + prev - 1) / prev);
    }
    T.swap(Tn);

    // early exits: growth stopped, or the window of equal indices is full
    if (out.subgroups && out.betas.back() == 1) break;
    if (out.subgroups && cfg.window > 0 &&
        out.betas.size() >= cfg.window) {
      bool flat = true;
      for (std::uint64_t i = 1; i < cfg.window; ++i)
        flat &= out.betas[out.betas.size() - 1 - i] == out.betas.back();
      if (flat) break;
    }
  }

  out.last = std::move(T);
  return out;
}

EntropyEstimate entropy_along(const EndoPtr& phi, const FiniteSubgroup& F,
                              const EntropyConfig& cfg) {
  Trajectory tr = trajectory(phi, F, cfg);
  EntropyEstimate e;
  e.reached_at = tr.sizes.size();
  e.window = cfg.window;
  e.betas = tr.betas;
  if (!tr.subgroups) {
    e.status = EntropyStatus::non_subgroup_mode;
    e.beta = tr.betas.empty() ? 1 : tr.betas.back();
    return e;
  }
  if (tr.budget_exhausted) {
    e.status = EntropyStatus::budget_exhausted;
    e.beta = tr.betas.empty() ? 1 : tr.betas.back();
    return e;
  }
  if (tr.betas.empty() || tr.betas.back() == 1) {
    // growth stopped entirely; soundness: the last level must actually be
    // carried into itself by phi
    const GroupPtr& g = phi->domain();
    for (const auto& x : tr.last)
      if (!std::binary_search(tr.last.begin(), tr.last.end(), phi->apply(x)))
        throw StructureError("flat trajectory level is not carried into itself");
    (void)g;
    e.status = EntropyStatus::certified_zero;
    e.beta = 1;
    return e;
  }
  bool flat = tr.betas.size() >= cfg.window;
  for (std::uint64_t i = 1; flat && i < cfg.window; ++i)
    flat = tr.betas[tr.betas.size() - 1 - i] == tr.betas.back();
  e.beta = tr.betas.back();
  e.status =
      flat ? EntropyStatus::stabilized_window : EntropyStatus::budget_exhausted;
  return e;
}

namespace {

/// Worse statuses dominate when aggregating over bases.
int status_rank(EntropyStatus s) {
  switch (s) {
    case EntropyStatus::certified_zero: return 0;
    case EntropyStatus::stabilized_window: return 1;
    case EntropyStatus::budget_exhausted: return 2;
    case EntropyStatus::non_subgroup_mode: return 3;
  }
  return 3;
}

} // namespace

SupEntropyResult entropy_sup(const EndoPtr& phi,
                             const std::vector<FiniteSubgroup>& bases,
                             const EntropyConfig& cfg) {
  SupEntropyResult r;
  for (const auto& F : bases) {
    r.per_base.push_back(entropy_along(phi, F, cfg));
    const auto& e = r.per_base.back();
    r.beta = std::max(r.beta, e.beta);
    if (status_rank(e.status) > status_rank(r.status)) r.status = e.status;
  }
  return r;
}

UminChain::UminChain(EndoPtr phi, FiniteSubgroup U)
    : phi_(std::move(phi)), U_(std::move(U)) {}

bool UminChain::member(const ElementCode& x, std::uint64_t n) {
  if (n <= 1) return U_.contains(x);
  auto key = std::make_pair(n, x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  memo_.emplace(key, false); // cycle guard; overwritten below
  const GroupPtr& g = phi_->domain();
  bool in = false;
  for (const auto& u : U_.elements()) {
    // x = u * y with phi(y) one level down
    if (member(phi_->apply(g->multiply(g->inverse(u), x)), n - 1)) {
      in = true;
      break;
    }
  }
  memo_[key] = in;
  return in;
}

std::vector<ElementCode> UminChain::level_d(std::uint64_t n) {
  std::vector<ElementCode> d;
  for (const auto& u : U_.elements())
    if (member(phi_->apply(u), n)) d.push_back(u);
  return d;
}

bool umin_membership(const EndoPtr& phi, const FiniteSubgroup& U,
                     const ElementCode& x, std::uint64_t n) {
  UminChain chain(phi, U);
  return chain.member(x, n);
}

EntropyEstimate limit_free_entropy(const EndoPtr& phi, const FiniteSubgroup& U,
                                   const EntropyConfig& cfg) {
  UminChain chain(phi, U);

  EntropyEstimate r;
  r.window = cfg.window;
  std::vector<ElementCode> prev_d;
  std::uint64_t flat_run = 0;
  for (std::uint64_t n = 1; n <= cfg.n_max; ++n) {
    std::vector<ElementCode> d = chain.level_d(n);
    r.reached_at = n;
    if (U.size() % d.size() != 0)
      throw StructureError("chain level is not a subgroup of the base");
    r.beta = U.size() / d.size();
    r.betas.push_back(r.beta);
    if (d.size() == U.size()) {
      // the chain only grows, so D = U holds from here on
      r.status = EntropyStatus::certified_zero;
      return r;
    }
    if (d == prev_d) {
      ++flat_run;
      if (flat_run + 1 >= cfg.window) {
        r.status = EntropyStatus::stabilized_window;
        return r;
      }
    } else {
      flat_run = 0;
    }
    prev_d = std::move(d);
  }
  r.status = EntropyStatus::budget_exhausted;
  return r;
}

Rational modulus(const EndoPtr& phi, const FiniteSubgroup& U) {
  FiniteSubgroup img = phi->image_of(U);
  ProductSet v = product_set(U, img);
  if (!is_subgroup(v))
    throw StructureError("U * phi(U) is not a subgroup");
  Rational r;
  r.num = generalized_index(v, U);
  r.den = generalized_index(v, img);
  std::uint64_t d = gcd_u64(r.num, r.den);
  r.num /= d;
  r.den /= d;
  return r;
}

InverseEntropyReport inverse_entropy_check(const EndoPtr& phi,
                                           const FiniteSubgroup& U,
                                           const EntropyConfig& cfg) {
  auto inv = phi->inverse();
  if (!inv) throw DomainError("map has no computable inverse");
  InverseEntropyReport rep;
  rep.forward = entropy_along(phi, U, cfg);
  rep.backward = entropy_along(*inv, U, cfg);
  rep.delta = modulus(phi, U);
  auto ok = [](EntropyStatus s) {
    return s == EntropyStatus::certified_zero ||
           s == EntropyStatus::stabilized_window;
  };
  rep.certified = ok(rep.forward.status) && ok(rep.backward.status);
  rep.holds = rep.forward.beta * rep.delta.den ==
              rep.backward.beta * rep.delta.num;
  return rep;
}

} // namespace qhent
