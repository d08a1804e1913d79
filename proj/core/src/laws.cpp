#include "qhent/laws.hpp"

#include <algorithm>

namespace qhent {
namespace {

bool certified(EntropyStatus s) {
  return s == EntropyStatus::certified_zero ||
         s == EntropyStatus::stabilized_window;
}

std::string status_word(EntropyStatus s) { return entropy_status_name(s); }

/// Map a subgroup of the ambient group into the witness sub-group's own
/// element codes.
FiniteSubgroup meet_witness(const FiniteSubgroup& U, const SubgroupWitness& w) {
  std::vector<ElementCode> inside;
  for (const auto& x : U.elements())
    if (w.contains(x)) inside.push_back(w.restrict_to_sub(x));
  std::sort(inside.begin(), inside.end());
  std::vector<ElementCode> gens = inside;
  return FiniteSubgroup::from_sorted_elements(w.sub_group(), std::move(inside),
                                              std::move(gens));
}

/// Image of a subgroup under the quotient projection.
FiniteSubgroup push_witness(const FiniteSubgroup& U, const SubgroupWitness& w) {
  std::vector<ElementCode> img;
  for (const auto& x : U.elements()) img.push_back(w.project(x));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  std::vector<ElementCode> gens = img;
  return FiniteSubgroup::from_sorted_elements(w.quotient_group(),
                                              std::move(img), std::move(gens));
}

} // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds_exactly: return "holds_exactly";
    case Verdict::holds_within_certification:
      return "holds_within_certification";
    case Verdict::inequality_observed: return "inequality_observed";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::violation: return "violation";
  }
  return "?";
}

HypothesisProfile addition_profile(const ATInstance& inst, std::uint64_t seed) {
  HypothesisProfile p;
  auto rep = inst.phi->invariance(inst.H, seed);
  p.invariant = rep.invariant;
  p.stable = rep.stable;
  p.kernel_contained = rep.kernel_contained;
  p.normal = inst.H.normal() ? std::optional<bool>(true) : std::nullopt;

  auto cls = classify(inst.phi->domain(), seed);
  p.quasihamiltonian = cls.quasihamiltonian;
  if (const auto* dg = as_descriptor_group(*inst.phi->domain())) {
    auto fr = fc_by_commutator(std::static_pointer_cast<const DescriptorGroup>(
        dg->shared_from_this()));
    p.fc = fr.fc;
  }
  if (inst.H.sub_group()->order()) p.finite_sub = true;
  if (inst.H.quotient_supported() && inst.H.quotient_group()->order())
    p.finite_quotient = true;

  if (p.normal == true && p.invariant == true && p.stable == true &&
      p.kernel_contained == true) {
    p.expects_equality = true;
    p.basis = "stable normal subgroup containing the kernel";
  } else if (p.normal == true && p.invariant == true &&
             p.quasihamiltonian == true && p.fc == true) {
    p.expects_equality = true;
    p.basis = "quasihamiltonian torsion FC ambient group";
  } else if (p.invariant == true &&
             (p.finite_sub == true || p.finite_quotient == true)) {
    p.expects_equality = true;
    p.basis = p.finite_sub == true ? "finite invariant subgroup"
                                   : "finite-index invariant subgroup";
  }
  return p;
}

namespace {

struct SideResult {
  std::uint64_t beta = 1;
  bool all_certified = true;
  std::string statuses;
};

SideResult sup_side(const EndoPtr& phi, const std::vector<FiniteSubgroup>& bs,
                    const EntropyConfig& cfg) {
  SideResult s;
  for (const auto& F : bs) {
    auto e = entropy_along(phi, F, cfg);
    s.beta = std::max(s.beta, e.beta);
    s.all_certified &= certified(e.status);
    if (!s.statuses.empty()) s.statuses += ",";
    s.statuses += status_word(e.status);
  }
  return s;
}

} // namespace

LawReport check_addition(const ATInstance& inst, const EntropyConfig& cfg) {
  LawReport r;
  r.law = "addition";
  HypothesisProfile prof = addition_profile(inst);
  if (prof.invariant != true) {
    r.verdict = Verdict::inconclusive;
    r.detail = "invariance of the subgroup was not established";
    return r;
  }

  EndoPtr down = restrict_endomorphism(inst.phi, inst.H);
  EndoPtr up = induced_quotient_map(inst.phi, inst.H);

  std::vector<FiniteSubgroup> sub_bases, quot_bases;
  for (const auto& U : inst.bases) {
    sub_bases.push_back(meet_witness(U, inst.H));
    quot_bases.push_back(push_witness(U, inst.H));
  }

  SideResult whole = sup_side(inst.phi, inst.bases, cfg);
  SideResult sub = sup_side(down, sub_bases, cfg);
  SideResult quot = sup_side(up, quot_bases, cfg);

  r.lhs = whole.beta;
  r.rhs = sub.beta * quot.beta;
  bool cert = whole.all_certified && sub.all_certified && quot.all_certified;
  r.detail = "beta(phi)=" + std::to_string(whole.beta) +
             ", beta(phi|H)=" + std::to_string(sub.beta) +
             ", beta(quotient)=" + std::to_string(quot.beta) +
             (prof.expects_equality ? "; equality via " + prof.basis
                                    : "; no equality hypothesis applies");
  if (!cert) {
    r.verdict = r.lhs >= r.rhs ? Verdict::inconclusive : Verdict::violation;
    r.detail += "; uncertified levels: " + whole.statuses + " | " +
                sub.statuses + " | " + quot.statuses;
    return r;
  }
  if (prof.expects_equality) {
    if (r.lhs == r.rhs)
      r.verdict = Verdict::holds_exactly;
    else
      r.verdict = Verdict::violation;
  } else {
    r.verdict = r.lhs >= r.rhs ? Verdict::inequality_observed
                               : Verdict::violation;
  }
  return r;
}

LawReport check_monotonicity(const ATInstance& inst, const EntropyConfig& cfg) {
  LawReport r;
  r.law = "monotonicity";
  auto rep = inst.phi->invariance(inst.H);
  if (rep.invariant != true) {
    r.verdict = Verdict::inconclusive;
    r.detail = "invariance of the subgroup was not established";
    return r;
  }
  EndoPtr down = restrict_endomorphism(inst.phi, inst.H);
  EndoPtr up = induced_quotient_map(inst.phi, inst.H);
  bool cert = true;
  for (const auto& U : inst.bases) {
    auto whole = entropy_along(inst.phi, U, cfg);
    auto sub = entropy_along(down, meet_witness(U, inst.H), cfg);
    auto quot = entropy_along(up, push_witness(U, inst.H), cfg);
    cert &= certified(whole.status) && certified(sub.status) &&
            certified(quot.status);
    r.lhs = whole.beta;
    r.rhs = sub.beta * quot.beta;
    if (cert && r.lhs < r.rhs) {
      r.verdict = Verdict::violation;
      r.detail = "per-base bound fails";
      return r;
    }
  }
  r.verdict = cert ? Verdict::inequality_observed : Verdict::inconclusive;
  return r;
}

LawReport check_identity_zero(const GroupPtr& g,
                              const std::vector<FiniteSubgroup>& bases,
                              const EntropyConfig& cfg) {
  LawReport r;
  r.law = "identity_zero";
  SideResult s = sup_side(Endomorphism::identity(g), bases, cfg);
  r.lhs = s.beta;
  r.rhs = 1;
  if (!s.all_certified)
    r.verdict = Verdict::inconclusive;
  else
    r.verdict = s.beta == 1 ? Verdict::holds_exactly : Verdict::violation;
  return r;
}

LawReport check_conjugation(const EndoPtr& phi, const EndoPtr& alpha,
                            const std::vector<FiniteSubgroup>& bases,
                            const EntropyConfig& cfg) {
  LawReport r;
  r.law = "conjugation";
  auto ainv = alpha->inverse();
  if (!ainv) {
    r.verdict = Verdict::inconclusive;
    r.detail = "conjugator is not invertible";
    return r;
  }
  EndoPtr psi = Endomorphism::compose(
      Endomorphism::compose(alpha, phi), *ainv);
  bool cert = true;
  for (const auto& K : bases) {
    auto left = entropy_along(phi, K, cfg);
    auto right = entropy_along(psi, alpha->image_of(K), cfg);
    cert &= certified(left.status) && certified(right.status);
    r.lhs = left.beta;
    r.rhs = right.beta;
    if (cert && left.beta != right.beta) {
      r.verdict = Verdict::violation;
      r.detail = "per-base values differ";
      return r;
    }
  }
  r.verdict = cert ? Verdict::holds_exactly : Verdict::inconclusive;
  return r;
}

LawReport check_log_law(const EndoPtr& phi, std::uint64_t m,
                        const std::vector<FiniteSubgroup>& bases,
                        const EntropyConfig& cfg) {
  LawReport r;
  r.law = "logarithmic";
  if (m == 0) {
    r.verdict = Verdict::holds_exactly;
    r.detail = "phi^0 is the identity";
    return r;
  }
  SideResult base_side = sup_side(phi, bases, cfg);
  EndoPtr pm = phi->iterate(m);

  // match bases through trajectory levels T_j(phi, F), 1 <= j <= m
  std::vector<FiniteSubgroup> expanded;
  bool cert = base_side.all_certified;
  for (const auto& F : bases) {
    expanded.push_back(F);
    for (std::uint64_t j = 2; j <= m; ++j) {
      EntropyConfig jcfg = cfg;
      jcfg.n_max = j;
      jcfg.window = 0; // no early stop: the level itself is wanted
      Trajectory t = trajectory(phi, F, jcfg);
      if (!t.subgroups || t.budget_exhausted) {
        cert = false;
        break;
      }
      std::vector<ElementCode> elems = t.last;
      std::vector<ElementCode> gens = elems;
      expanded.push_back(FiniteSubgroup::from_sorted_elements(
          phi->domain(), std::move(elems), std::move(gens)));
    }
  }
  SideResult power_side = sup_side(pm, expanded, cfg);
  cert &= power_side.all_certified;

  r.lhs = power_side.beta;
  std::uint64_t expect = 1;
  for (std::uint64_t i = 0; i < m; ++i) expect *= base_side.beta;
  r.rhs = expect;
  r.detail = "beta(phi)=" + std::to_string(base_side.beta) + ", m=" +
             std::to_string(m);
  if (!cert)
    r.verdict = Verdict::inconclusive;
  else
    r.verdict = r.lhs == r.rhs ? Verdict::holds_exactly : Verdict::violation;
  return r;
}

LawReport check_prime_sum(const EndoPtr& phi,
                          const std::vector<FiniteSubgroup>& bases,
                          const EntropyConfig& cfg) {
  LawReport r;
  r.law = "prime_sum";
  bool cert = true;
  for (const auto& U : bases) {
    auto whole = entropy_along(phi, U, cfg);
    cert &= certified(whole.status);
    std::uint64_t prod = 1;
    std::string parts;
    for (const auto& [p, e] : factorize_u64(U.size())) {
      FiniteSubgroup Up = p_component(U, p);
      auto ep = entropy_along(phi, Up, cfg);
      cert &= certified(ep.status);
      prod *= ep.beta;
      if (!parts.empty()) parts += " * ";
      parts += std::to_string(ep.beta) + " (p=" + std::to_string(p) + ")";
    }
    r.lhs = whole.beta;
    r.rhs = prod;
    r.detail = parts;
    if (cert && whole.beta != prod) {
      r.verdict = Verdict::violation;
      return r;
    }
  }
  r.verdict = cert ? Verdict::holds_exactly : Verdict::inconclusive;
  return r;
}

LawReport check_inverse_modulus(const EndoPtr& phi, const FiniteSubgroup& U,
                                const EntropyConfig& cfg) {
  LawReport r;
  r.law = "inverse_modulus";
  auto pinv = phi->inverse();
  if (!pinv) {
    r.verdict = Verdict::inconclusive;
    r.detail = "map is not invertible";
    return r;
  }
  auto fwd = entropy_along(phi, U, cfg);
  auto bwd = entropy_along(*pinv, U, cfg);
  Rational d = modulus(phi, U);
  // beta(phi) = beta(phi^-1) * delta, cross-multiplied
  r.lhs = fwd.beta * d.den;
  r.rhs = bwd.beta * d.num;
  r.detail = "delta=" + std::to_string(d.num) + "/" + std::to_string(d.den);
  if (!certified(fwd.status) || !certified(bwd.status))
    r.verdict = Verdict::inconclusive;
  else
    r.verdict = r.lhs == r.rhs ? Verdict::holds_exactly : Verdict::violation;
  return r;
}

} // namespace qhent
