#include "qhent/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qhent {
namespace {

constexpr std::uint64_t kExhaustiveOrderCap = 4096;

std::uint64_t inv_mod(std::uint64_t u, std::uint64_t m) {
  std::int64_t r0 = static_cast<std::int64_t>(m),
               r1 = static_cast<std::int64_t>(u % m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw DomainError("unit expected in modular inverse");
  return static_cast<std::uint64_t>(((t0 % static_cast<std::int64_t>(m)) +
                                     static_cast<std::int64_t>(m)) %
                                    static_cast<std::int64_t>(m));
}

/// Distinct cyclic subgroups of a finite group.
std::vector<FiniteSubgroup> cyclic_subgroups(const FiniteSubgroup& whole) {
  std::set<std::vector<ElementCode>> seen;
  std::vector<FiniteSubgroup> out;
  for (const auto& a : whole.elements()) {
    FiniteSubgroup c = FiniteSubgroup::closure(whole.ambient(), {a});
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  return out;
}

void classify_finite(ClassificationReport& r, const FiniteSubgroup& whole) {
  const GroupPtr& g = whole.ambient();
  if (!r.abelian) {
    bool ab = true;
    for (const auto& a : whole.elements()) {
      for (const auto& b : whole.elements())
        if (g->multiply(a, b) != g->multiply(b, a)) {
          ab = false;
          r.obstruction = std::make_pair(a, b);
          break;
        }
      if (!ab) break;
    }
    r.abelian = ab;
  }
  if (*r.abelian) {
    r.quasihamiltonian = true;
    r.dedekind = true;
    r.hamiltonian = false;
    return;
  }
  auto cyc = cyclic_subgroups(whole);
  bool qh = true, dede = true;
  for (std::size_t i = 0; i < cyc.size() && qh; ++i)
    for (std::size_t j = i + 1; j < cyc.size(); ++j)
      if (!is_subgroup(product_set(cyc[i], cyc[j]))) {
        qh = false;
        r.obstruction =
            std::make_pair(cyc[i].generators()[0], cyc[j].generators()[0]);
        break;
      }
  for (const auto& c : cyc)
    if (!is_normal_in(c, whole)) {
      dede = false;
      break;
    }
  r.quasihamiltonian = qh;
  r.dedekind = dede;
  r.hamiltonian = dede && !*r.abelian;
}

} // namespace

ClassificationReport classify(const GroupPtr& g, std::uint64_t seed) {
  ClassificationReport r;
  if (g->abelian_hint()) {
    r.abelian = true;
    r.quasihamiltonian = true;
    r.dedekind = true;
    r.hamiltonian = false;
    r.method = "constructor";
    return r;
  }
  if (auto n = g->order(); n && *n <= kExhaustiveOrderCap) {
    classify_finite(r, FiniteSubgroup::whole_group(g));
    r.method = "exhaustive";
    return r;
  }
  const auto* dg = as_descriptor_group(*g);
  if (!dg) {
    r.method = "undecided: group too large and not descriptor-built";
    return r;
  }

  // sampled disproof on the group itself
  auto xs = sample_elements(g, 64, seed);
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    FiniteSubgroup X = FiniteSubgroup::closure(g, {xs[i]});
    FiniteSubgroup Y = FiniteSubgroup::closure(g, {xs[i + 1]});
    if (!is_subgroup(product_set(X, Y))) {
      r.quasihamiltonian = false;
      r.dedekind = false; // permutability fails, so normality fails too
      r.obstruction = std::make_pair(xs[i], xs[i + 1]);
      r.method = "sampled counterexample";
      if (g->multiply(xs[i], xs[i + 1]) != g->multiply(xs[i + 1], xs[i]))
        r.abelian = false;
      return r;
    }
  }

  // structural transfer through a finite truncation of the sums
  for (int k = 3; k >= 1; --k) {
    DescriptorPtr trunc =
        truncate_descriptor(dg->descriptor(), static_cast<std::size_t>(k));
    auto tn = descriptor_order(*trunc);
    if (!tn || *tn > kExhaustiveOrderCap) continue;
    auto tg = make_group(trunc);
    ClassificationReport tr;
    if (tg->abelian_hint())
      tr.abelian = true;
    classify_finite(tr, FiniteSubgroup::whole_group(tg));
    r.abelian = g->abelian_hint() ? std::optional<bool>(true) : tr.abelian;
    r.quasihamiltonian = tr.quasihamiltonian;
    r.dedekind = tr.dedekind;
    r.hamiltonian = tr.hamiltonian;
    r.method = "truncation(k=" + std::to_string(k) + ") + sampling";
    return r;
  }
  r.method = "undecided: no tractable truncation";
  return r;
}

std::optional<DedekindBaerDecomposition> dedekind_baer_decompose(
    const FiniteSubgroup& G) {
  const GroupPtr& g = G.ambient();
  const ElementCode e = g->identity();

  // odd part
  std::vector<ElementCode> odd;
  for (const auto& x : G.elements())
    if (g->order_of(x) % 2 == 1) odd.push_back(x);
  FiniteSubgroup d = FiniteSubgroup::closure(g, odd);
  for (const auto& x : d.elements())
    if (g->order_of(x) % 2 == 0) return std::nullopt;

  // quaternion part: x, y of order 4 with x^2 = y^2 and y x y^-1 = x^-1
  std::optional<FiniteSubgroup> q8;
  for (const auto& x : G.elements()) {
    if (g->order_of(x) != 4) continue;
    for (const auto& y : G.elements()) {
      if (g->order_of(y) != 4) continue;
      if (g->multiply(x, x) != g->multiply(y, y)) continue;
      if (g->multiply(g->multiply(y, x), g->inverse(y)) != g->inverse(x))
        continue;
      FiniteSubgroup cand = FiniteSubgroup::closure(g, {x, y});
      if (cand.size() == 8) {
        q8 = std::move(cand);
        break;
      }
    }
    if (q8) break;
  }
  if (!q8) return std::nullopt;
  const ElementCode z = g->multiply((*q8).generators()[0],
                                    (*q8).generators()[0]); // the -1

  // elementary 2-part basis avoiding z
  FiniteSubgroup b = FiniteSubgroup::trivial(g);
  for (const auto& t : G.elements()) {
    if (t == e || g->multiply(t, t) != e) continue;
    std::vector<ElementCode> span = b.generators();
    span.push_back(z);
    if (FiniteSubgroup::closure(g, span).contains(t)) continue;
    std::vector<ElementCode> gens = b.generators();
    gens.push_back(t);
    b = FiniteSubgroup::closure(g, gens);
  }

  // internal direct product certificate
  if (std::uint64_t(8) * b.size() * d.size() != G.size()) return std::nullopt;
  auto commutes = [&](const FiniteSubgroup& X, const FiniteSubgroup& Y) {
    for (const auto& x : X.elements())
      for (const auto& y : Y.elements())
        if (g->multiply(x, y) != g->multiply(y, x)) return false;
    return true;
  };
  if (!commutes(*q8, b) || !commutes(*q8, d) || !commutes(b, d))
    return std::nullopt;
  if (intersection(b, d).size() != 1) return std::nullopt;
  ProductSet bd = product_set(b, d);
  for (const auto& x : (*q8).elements())
    if (x != e && bd.contains(x)) return std::nullopt;
  return DedekindBaerDecomposition{std::move(*q8), std::move(b), std::move(d)};
}

IwasawaDerivedReport iwasawa_derived(
    const std::shared_ptr<const DescriptorGroup>& g) {
  auto params = iwasawa_params(*g->descriptor());
  if (!params)
    throw StructureError("descriptor is not a recognizable A x| Z(p^m) with "
                         "a 1+p^s power action");
  if (!g->order())
    throw DomainError("derived subgroup comparison needs a finite group");

  IwasawaDerivedReport r{commutator_subgroup(FiniteSubgroup::whole_group(g)),
                         FiniteSubgroup::trivial(g), false};

  auto a_group = make_group(params->a_spec);
  std::uint64_t q = ipow_u64(params->p, params->s);
  std::vector<ElementCode> gens;
  for (const auto& a : a_group->elements()) {
    Value v = a_group->decode(a_group->pow(a, static_cast<std::int64_t>(q)));
    gens.push_back(g->encode(tuple_value({std::move(v), scalar_value(0)})));
  }
  r.predicted = FiniteSubgroup::closure(g, gens);
  r.match = r.derived == r.predicted;
  return r;
}

FCReport fc_by_commutator(const std::shared_ptr<const DescriptorGroup>& g) {
  const Descriptor& d = *g->descriptor();
  if (g->order()) return {true, "finite"};
  if (descriptor_abelian(d)) return {true, "abelian"};
  return std::visit(
      [&](const auto& node) -> FCReport {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ProductDesc>) {
          for (const auto& f : node.factors) {
            FCReport fr = fc_by_commutator(make_group(f));
            if (fr.fc != true) return fr;
          }
          return {true, "finite product of FC factors"};
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          if (descriptor_order(*node.component))
            return {true, "restricted sum of a finite component: conjugation "
                          "acts within finite supports"};
          return fc_by_commutator(make_group(node.component));
        } else if constexpr (std::is_same_v<T, SemidirectDesc>) {
          if (descriptor_order(*node.normal_part))
            return {true, "finite normal part under a finite cyclic action"};
          const auto* pa = std::get_if<PowerActionDesc>(&node.action);
          if (pa && pa->exponent != 1)
            return {false,
                    "infinite abelian normal part with a nontrivial power "
                    "action: commutators [b, x] = b^(u^x - 1) range over an "
                    "infinite set"};
          return {true, "trivial action on the normal part"};
        } else {
          return {std::nullopt, "unhandled shape"};
        }
      },
      d.node);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize_u64(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

PrimaryDecomposition p_decompose_element(const GroupPtr& g,
                                         const ElementCode& x) {
  PrimaryDecomposition r;
  std::uint64_t n = g->order_of(x);
  if (n == 1) {
    r.verified = true;
    return r;
  }
  auto fac = factorize_u64(n);
  for (const auto& [p, e] : fac) {
    std::uint64_t pe = ipow_u64(p, e);
    std::uint64_t m = n / pe;
    // s * m = 1 mod p^e makes x^(s m) the p-part
    std::uint64_t s = inv_mod(m % pe, pe);
    ElementCode part = g->pow(x, static_cast<std::int64_t>(s * m % n));
    r.parts.push_back(PrimaryPart{p, part, g->order_of(part)});
  }
  // certificate: prime-power orders, commuting parts, product reassembly
  r.verified = true;
  ElementCode acc = g->identity();
  for (const auto& part : r.parts) {
    auto pf = factorize_u64(part.order);
    if (pf.size() != 1 || pf[0].first != part.prime) r.verified = false;
    acc = g->multiply(acc, part.part);
  }
  for (const auto& a : r.parts)
    for (const auto& b : r.parts)
      if (g->multiply(a.part, b.part) != g->multiply(b.part, a.part))
        r.verified = false;
  if (acc != x) r.verified = false;
  return r;
}

FiniteSubgroup p_component(const FiniteSubgroup& G, std::uint64_t p) {
  const GroupPtr& g = G.ambient();
  std::vector<ElementCode> elems;
  for (const auto& x : G.elements()) {
    std::uint64_t n = g->order_of(x);
    while (n % p == 0) n /= p;
    if (n == 1) elems.push_back(x);
  }
  std::vector<ElementCode> gens = elems;
  FiniteSubgroup out = FiniteSubgroup::from_sorted_elements(
      g, std::move(elems), std::move(gens));
  if (!out.verify_closed())
    throw StructureError("p-power-order elements do not form a subgroup for "
                         "p = " +
                         std::to_string(p));
  return out;
}

} // namespace qhent
