#include "qhent/builders.hpp"

#include <algorithm>
#include <string>

#include "qhent/subgroup.hpp"

namespace qhent {
namespace {

Value sample_value(const Descriptor& d, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return scalar_value(rng() % node.modulus);
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return scalar_value(rng() % 8);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<Value> xs;
          xs.reserve(node.factors.size());
          for (const auto& f : node.factors) xs.push_back(sample_value(*f, rng));
          return tuple_value(std::move(xs));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          const Value comp_id = identity_value(*node.component);
          // small random support over a fixed index window
          std::size_t count = rng() % 4;
          Value::Support s;
          for (std::size_t i = 0; i < count; ++i) {
            std::int64_t idx =
                node.indices == IndexSet::naturals
                    ? static_cast<std::int64_t>(rng() % 8)
                    : static_cast<std::int64_t>(rng() % 9) - 4;
            bool dup = false;
            for (const auto& [j, c] : s) dup = dup || j == idx;
            if (dup) continue;
            Value c = sample_value(*node.component, rng);
            if (c == comp_id) continue;
            s.emplace_back(idx, std::move(c));
          }
          std::sort(s.begin(), s.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          return support_value(std::move(s));
        } else {
          Value a = sample_value(*node.normal_part, rng);
          return tuple_value({std::move(a),
                              scalar_value(rng() % node.acting_modulus)});
        }
      },
      d.node);
}

} // namespace

ElementSampler::ElementSampler(std::shared_ptr<const DescriptorGroup> group,
                               std::uint64_t seed)
    : group_(std::move(group)), rng_(seed) {}

ElementCode ElementSampler::next() {
  return group_->encode(sample_value(*group_->descriptor(), rng_));
}

std::shared_ptr<const DescriptorGroup> build_group(DescriptorPtr desc,
                                                   std::uint64_t seed) {
  auto g = std::make_shared<const DescriptorGroup>(std::move(desc));
  ElementSampler sampler(g, seed);
  const ElementCode e = g->identity();
  for (int i = 0; i < 32; ++i) {
    ElementCode a = sampler.next();
    ElementCode b = sampler.next();
    ElementCode c = sampler.next();
    if (g->multiply(g->multiply(a, b), c) != g->multiply(a, g->multiply(b, c)))
      throw StructureError("associativity self-check failed on " + g->name());
    if (g->multiply(a, e) != a || g->multiply(e, a) != a)
      throw StructureError("identity self-check failed on " + g->name());
    if (g->multiply(a, g->inverse(a)) != e)
      throw StructureError("inverse self-check failed on " + g->name());
  }
  return g;
}

std::shared_ptr<const DescriptorGroup> build_hamiltonian(DescriptorPtr b_spec,
                                                         DescriptorPtr d_spec) {
  if (!b_spec || !d_spec)
    throw DomainError("hamiltonian builder requires both B and D descriptors");
  std::uint64_t exp_b = abelian_exponent(*b_spec);
  if (exp_b > 2)
    throw DomainError("B must have exponent <= 2, got exponent " +
                      std::to_string(exp_b));
  std::uint64_t exp_d = abelian_exponent(*d_spec);
  if (exp_d % 2 == 0)
    throw DomainError("D must have only odd element orders, got exponent " +
                      std::to_string(exp_d));
  return build_group(product({quaternion8(), b_spec, d_spec}));
}

std::shared_ptr<const DescriptorGroup> build_iwasawa(std::uint64_t p,
                                                     std::uint64_t n,
                                                     std::uint64_t m,
                                                     std::uint64_t s,
                                                     DescriptorPtr a_spec) {
  if (!is_prime_u64(p)) throw DomainError("p must be prime");
  if (s < 1) throw DomainError("constraint violated: s >= 1");
  if (!(s < n)) throw DomainError("constraint violated: s < n");
  if (!(n <= s + m)) throw DomainError("constraint violated: n <= s + m");
  if (p == 2 && s < 2) throw DomainError("constraint violated: if p = 2 then s >= 2");
  if (!a_spec) throw DomainError("missing normal part descriptor");
  std::uint64_t exp_a = abelian_exponent(*a_spec);
  if (exp_a != ipow_u64(p, n))
    throw DomainError("A must have exponent exactly p^n = " +
                      std::to_string(ipow_u64(p, n)) + ", got " +
                      std::to_string(exp_a));
  std::uint64_t u = 1 + ipow_u64(p, s);
  // well-definedness of the action: u^(p^m) = 1 mod p^n
  if (pow_mod(u, ipow_u64(p, m), ipow_u64(p, n)) != 1)
    throw DomainError("action is not well-defined: (1+p^s)^(p^m) != 1 mod p^n");
  return build_group(
      semidirect(std::move(a_spec), ipow_u64(p, m), PowerActionDesc{u}));
}

std::optional<IwasawaParams> iwasawa_params(const Descriptor& d) {
  const auto* sd = std::get_if<SemidirectDesc>(&d.node);
  if (!sd) return std::nullopt;
  const auto* pa = std::get_if<PowerActionDesc>(&sd->action);
  if (!pa || pa->exponent < 2) return std::nullopt;
  std::uint64_t exp_a = abelian_exponent(*sd->normal_part);
  // exp_a = p^n, acting modulus = p^m, exponent - 1 = p^s for one prime p
  std::uint64_t q = exp_a;
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  auto log_p = [p](std::uint64_t x) -> std::optional<std::uint64_t> {
    std::uint64_t k = 0;
    while (x > 1) {
      if (x % p != 0) return std::nullopt;
      x /= p;
      ++k;
    }
    return k;
  };
  auto n = log_p(exp_a);
  auto m = log_p(sd->acting_modulus);
  auto s = log_p(pa->exponent - 1);
  if (!n || !m || !s || *s < 1 || !(*s < *n)) return std::nullopt;
  return IwasawaParams{p, *n, *m, *s, sd->normal_part};
}

DescriptorPtr structural_quotient(const DescriptorPtr& base,
                                  std::uint64_t exponent) {
  if (!base) throw DomainError("null descriptor");
  if (exponent == 0) throw DomainError("divisor exponent must be >= 1");
  return std::visit(
      [&](const auto& node) -> DescriptorPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return cyclic(node.modulus / gcd_u64(node.modulus, exponent));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<DescriptorPtr> fs;
          fs.reserve(node.factors.size());
          for (const auto& f : node.factors)
            fs.push_back(structural_quotient(f, exponent));
          return product(std::move(fs));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return restricted_sum(structural_quotient(node.component, exponent),
                                node.indices);
        } else if constexpr (std::is_same_v<T, SemidirectDesc>) {
          const auto* pa = std::get_if<PowerActionDesc>(&node.action);
          if (!pa)
            throw DomainError(
                "structural quotient of a table-action semidirect product is "
                "not componentwise");
          auto reduced = structural_quotient(node.normal_part, exponent);
          std::uint64_t new_exp = abelian_exponent(*reduced);
          // gcd(u, exp) = 1 and new_exp | exp, so the residue stays a unit
          std::uint64_t u = new_exp <= 1 ? 1 : pa->exponent % new_exp;
          return semidirect(std::move(reduced), node.acting_modulus,
                            PowerActionDesc{u});
        } else {
          throw DomainError(
              "structural quotient divisor is not componentwise for " +
              descriptor_to_string(*base));
        }
      },
      base->node);
}

DescriptorPtr truncate_descriptor(const DescriptorPtr& d, std::size_t k) {
  if (!d) throw DomainError("null descriptor");
  return std::visit(
      [&](const auto& node) -> DescriptorPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SumDesc>) {
          std::vector<DescriptorPtr> fs(k, node.component);
          return product(std::move(fs));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<DescriptorPtr> fs;
          fs.reserve(node.factors.size());
          for (const auto& f : node.factors)
            fs.push_back(truncate_descriptor(f, k));
          return product(std::move(fs));
        } else if constexpr (std::is_same_v<T, SemidirectDesc>) {
          return semidirect(truncate_descriptor(node.normal_part, k),
                            node.acting_modulus, node.action);
        } else {
          return d;
        }
      },
      d->node);
}

std::vector<ElementCode> sample_elements(const GroupPtr& g, std::size_t count,
                                         std::uint64_t seed) {
  std::vector<ElementCode> out;
  out.reserve(count);
  if (const auto* dg = as_descriptor_group(*g)) {
    ElementSampler sampler(std::static_pointer_cast<const DescriptorGroup>(
                               dg->shared_from_this()),
                           seed);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
  }
  if (const auto* cq = dynamic_cast<const CosetQuotientGroup*>(g.get())) {
    for (auto& e : sample_elements(cq->base(), count, seed))
      out.push_back(cq->canonicalize(e));
    return out;
  }
  if (g->order()) {
    auto elems = g->elements();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(elems[rng() % elems.size()]);
    return out;
  }
  throw StructureError("cannot sample elements of " + g->name());
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::uint64_t ipow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace qhent
