#include "qhent/morphism.hpp"

#include <algorithm>

#include "qhent/builders.hpp"

namespace qhent {
namespace {

constexpr std::size_t kExhaustivePairCap = 512;   // |G| bound for all-pairs
constexpr std::size_t kExhaustiveSubCap = 4096;   // |H| bound for witnesses

std::uint64_t inv_mod(std::uint64_t u, std::uint64_t m) {
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(u % m);
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

std::shared_ptr<const DescriptorGroup> require_descriptor(const GroupPtr& g,
                                                          const char* what) {
  const auto* dg = as_descriptor_group(*g);
  if (!dg) throw DomainError(std::string(what) + " requires a descriptor-built group");
  return std::static_pointer_cast<const DescriptorGroup>(dg->shared_from_this());
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  const auto* da = as_descriptor_group(*a);
  const auto* db = as_descriptor_group(*b);
  return da && db && descriptor_equal(*da->descriptor(), *db->descriptor());
}

/// Exponent of an abelian descriptor-built group, when available.
std::optional<std::uint64_t> group_exponent(const GroupPtr& g) {
  const auto* dg = as_descriptor_group(*g);
  if (!dg || !descriptor_abelian(*dg->descriptor())) return std::nullopt;
  return abelian_exponent(*dg->descriptor());
}

} // namespace

EndoPtr Endomorphism::identity(GroupPtr g) {
  return EndoPtr(new Endomorphism(std::move(g), Identity{}));
}

EndoPtr Endomorphism::trivial(GroupPtr g) {
  return EndoPtr(new Endomorphism(std::move(g), Trivial{}));
}

EndoPtr Endomorphism::shift(std::shared_ptr<const DescriptorGroup> g,
                            std::int64_t k) {
  const auto* sum = std::get_if<SumDesc>(&g->descriptor()->node);
  if (!sum) throw DomainError("shift requires a restricted sum");
  if (sum->indices == IndexSet::naturals && k < 0)
    throw DomainError("shift over the naturals requires k >= 0");
  return EndoPtr(new Endomorphism(std::move(g), Shift{k}));
}

EndoPtr Endomorphism::power_map(GroupPtr g, std::uint64_t u) {
  bool abelian = g->abelian_hint();
  if (!abelian && g->order() && *g->order() <= kExhaustivePairCap) {
    abelian = true;
    auto elems = g->elements();
    for (const auto& a : elems) {
      for (const auto& b : elems)
        if (g->multiply(a, b) != g->multiply(b, a)) {
          abelian = false;
          break;
        }
      if (!abelian) break;
    }
  }
  if (!abelian)
    throw DomainError("power map requires an abelian domain");
  return EndoPtr(new Endomorphism(std::move(g), Power{u}));
}

EndoPtr Endomorphism::element_table(
    GroupPtr g, std::vector<std::pair<ElementCode, ElementCode>> images) {
  std::sort(images.begin(), images.end());
  std::vector<ElementCode> keys, vals;
  for (const auto& [k, v] : images) {
    if (!g->contains(k) || !g->contains(v))
      throw DomainError("table entry outside the domain");
    keys.push_back(k);
    vals.push_back(v);
  }
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw DomainError("duplicate table key");
  std::sort(vals.begin(), vals.end());
  // with unlisted elements fixed, the map is bijective exactly when the
  // listed values permute the listed keys
  bool bijective = vals == keys;
  return EndoPtr(
      new Endomorphism(std::move(g), Table{std::move(images), bijective}));
}

EndoPtr Endomorphism::coordinate_permutation(
    std::shared_ptr<const DescriptorGroup> g, std::vector<std::size_t> perm) {
  const auto* prod = std::get_if<ProductDesc>(&g->descriptor()->node);
  if (!prod) throw DomainError("coordinate permutation requires a product");
  std::vector<bool> seen(perm.size(), false);
  if (perm.size() != prod->factors.size())
    throw DomainError("permutation length does not match the factor count");
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]])
      throw DomainError("not a permutation");
    seen[perm[i]] = true;
    if (!descriptor_equal(*prod->factors[i], *prod->factors[perm[i]]))
      throw DomainError("permuted factors have different descriptors");
  }
  return EndoPtr(new Endomorphism(std::move(g), CoordPerm{std::move(perm)}));
}

EndoPtr Endomorphism::diagonal(std::shared_ptr<const DescriptorGroup> g,
                               std::vector<EndoPtr> components) {
  const auto* prod = std::get_if<ProductDesc>(&g->descriptor()->node);
  if (!prod) throw DomainError("diagonal requires a product");
  if (components.size() != prod->factors.size())
    throw DomainError("component count does not match the factor count");
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto* dg = as_descriptor_group(*components[i]->domain());
    if (!dg || !descriptor_equal(*dg->descriptor(), *prod->factors[i]))
      throw DomainError("component domain does not match factor " +
                        std::to_string(i));
  }
  return EndoPtr(
      new Endomorphism(std::move(g), Diagonal{std::move(components)}));
}

EndoPtr Endomorphism::compose(EndoPtr f, EndoPtr g) {
  if (!same_group(f->domain(), g->domain()))
    throw DomainError("composition requires a common domain");
  GroupPtr d = g->domain();
  return EndoPtr(
      new Endomorphism(std::move(d), Compose{std::move(f), std::move(g)}));
}

EndoPtr Endomorphism::declared_automorphism(EndoPtr fwd, EndoPtr bwd,
                                            std::uint64_t seed) {
  if (!same_group(fwd->domain(), bwd->domain()))
    throw DomainError("forward and backward maps must share a domain");
  GroupPtr d = fwd->domain();
  for (const auto& x : sample_elements(d, 32, seed)) {
    if (bwd->apply(fwd->apply(x)) != x || fwd->apply(bwd->apply(x)) != x)
      throw DomainError("declared automorphism fails its round trip");
  }
  return EndoPtr(
      new Endomorphism(std::move(d), Declared{std::move(fwd), std::move(bwd)}));
}

ElementCode Endomorphism::apply(const ElementCode& g) const {
  return std::visit(
      [&](const auto& k) -> ElementCode {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return g;
        } else if constexpr (std::is_same_v<T, Trivial>) {
          return domain_->identity();
        } else if constexpr (std::is_same_v<T, Shift>) {
          const auto* dg = as_descriptor_group(*domain_);
          Value v = dg->decode(g);
          for (auto& [idx, c] : std::get<Value::Support>(v.v)) idx += k.k;
          return dg->encode(v);
        } else if constexpr (std::is_same_v<T, Power>) {
          return domain_->pow(g, static_cast<std::int64_t>(k.u));
        } else if constexpr (std::is_same_v<T, Table>) {
          auto it = std::lower_bound(
              k.images.begin(), k.images.end(), g,
              [](const auto& p, const ElementCode& x) { return p.first < x; });
          if (it != k.images.end() && it->first == g) return it->second;
          return g;
        } else if constexpr (std::is_same_v<T, CoordPerm>) {
          const auto* dg = as_descriptor_group(*domain_);
          Value v = dg->decode(g);
          const auto& xs = std::get<std::vector<Value>>(v.v);
          std::vector<Value> out(xs.size());
          for (std::size_t i = 0; i < xs.size(); ++i) out[k.perm[i]] = xs[i];
          return dg->encode(tuple_value(std::move(out)));
        } else if constexpr (std::is_same_v<T, Diagonal>) {
          const auto* dg = as_descriptor_group(*domain_);
          Value v = dg->decode(g);
          const auto& xs = std::get<std::vector<Value>>(v.v);
          std::vector<Value> out;
          out.reserve(xs.size());
          for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto* fg = as_descriptor_group(*k.components[i]->domain());
            out.push_back(
                fg->decode(k.components[i]->apply(fg->encode(xs[i]))));
          }
          return dg->encode(tuple_value(std::move(out)));
        } else if constexpr (std::is_same_v<T, Compose>) {
          return k.outer->apply(k.inner->apply(g));
        } else if constexpr (std::is_same_v<T, Declared>) {
          return k.fwd->apply(g);
        } else if constexpr (std::is_same_v<T, Iterated>) {
          ElementCode x = g;
          for (std::uint64_t i = 0; i < k.m; ++i) x = k.base->apply(x);
          return x;
        } else if constexpr (std::is_same_v<T, OnSubgroup>) {
          return k.w->restrict_to_sub(k.base->apply(k.w->embed(g)));
        } else {
          return k.w->project(k.base->apply(k.w->section(g)));
        }
      },
      kind_);
}

EndoPtr Endomorphism::iterate(std::uint64_t m) const {
  if (m == 0) return identity(domain_);
  if (m == 1) return shared_from_this();
  if (const auto* s = std::get_if<Shift>(&kind_)) {
    return shift(require_descriptor(domain_, "shift"),
                 s->k * static_cast<std::int64_t>(m));
  }
  if (const auto* p = std::get_if<Power>(&kind_)) {
    if (auto e = group_exponent(domain_))
      return EndoPtr(
          new Endomorphism(domain_, Power{pow_mod(p->u, m, *e)}));
  }
  if (std::holds_alternative<Identity>(kind_)) return shared_from_this();
  if (std::holds_alternative<Trivial>(kind_)) return shared_from_this();
  if (const auto* it = std::get_if<Iterated>(&kind_))
    return EndoPtr(new Endomorphism(domain_, Iterated{it->base, it->m * m}));
  return EndoPtr(new Endomorphism(domain_, Iterated{shared_from_this(), m}));
}

std::optional<EndoPtr> Endomorphism::inverse() const {
  return std::visit(
      [&](const auto& k) -> std::optional<EndoPtr> {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return shared_from_this();
        } else if constexpr (std::is_same_v<T, Trivial>) {
          if (domain_->order() == 1) return identity(domain_);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Shift>) {
          const auto* sum = std::get_if<SumDesc>(
              &as_descriptor_group(*domain_)->descriptor()->node);
          if (sum->indices == IndexSet::integers)
            return shift(require_descriptor(domain_, "shift"), -k.k);
          if (k.k == 0) return identity(domain_);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Power>) {
          auto e = group_exponent(domain_);
          if (!e || gcd_u64(k.u, *e) != 1) return std::nullopt;
          return EndoPtr(new Endomorphism(domain_, Power{inv_mod(k.u, *e)}));
        } else if constexpr (std::is_same_v<T, Table>) {
          if (!k.bijective) return std::nullopt;
          std::vector<std::pair<ElementCode, ElementCode>> rev;
          rev.reserve(k.images.size());
          for (const auto& [a, b] : k.images) rev.emplace_back(b, a);
          return element_table(domain_, std::move(rev));
        } else if constexpr (std::is_same_v<T, CoordPerm>) {
          std::vector<std::size_t> inv(k.perm.size());
          for (std::size_t i = 0; i < k.perm.size(); ++i) inv[k.perm[i]] = i;
          return coordinate_permutation(
              require_descriptor(domain_, "coordinate permutation"),
              std::move(inv));
        } else if constexpr (std::is_same_v<T, Diagonal>) {
          std::vector<EndoPtr> inv;
          inv.reserve(k.components.size());
          for (const auto& c : k.components) {
            auto ci = c->inverse();
            if (!ci) return std::nullopt;
            inv.push_back(*ci);
          }
          return diagonal(require_descriptor(domain_, "diagonal"),
                          std::move(inv));
        } else if constexpr (std::is_same_v<T, Compose>) {
          auto oi = k.outer->inverse();
          auto ii = k.inner->inverse();
          if (!oi || !ii) return std::nullopt;
          return compose(*ii, *oi);
        } else if constexpr (std::is_same_v<T, Declared>) {
          return EndoPtr(new Endomorphism(domain_, Declared{k.bwd, k.fwd}));
        } else if constexpr (std::is_same_v<T, Iterated>) {
          auto bi = k.base->inverse();
          if (!bi) return std::nullopt;
          return (*bi)->iterate(k.m);
        } else {
          return std::nullopt;
        }
      },
      kind_);
}

std::optional<std::pair<ElementCode, ElementCode>>
Endomorphism::verify_homomorphism(std::uint64_t seed) const {
  auto violates = [&](const ElementCode& a, const ElementCode& b) {
    return apply(domain_->multiply(a, b)) !=
           domain_->multiply(apply(a), apply(b));
  };
  auto n = domain_->order();
  if (n && *n <= kExhaustivePairCap) {
    auto elems = domain_->elements();
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (violates(a, b)) return std::make_pair(a, b);
    return std::nullopt;
  }
  auto xs = sample_elements(domain_, 2000, seed);
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2)
    if (violates(xs[i], xs[i + 1])) return std::make_pair(xs[i], xs[i + 1]);
  return std::nullopt;
}

FiniteSubgroup Endomorphism::image_of(const FiniteSubgroup& F,
                                      std::size_t budget) const {
  std::vector<ElementCode> img;
  img.reserve(F.size());
  for (const auto& x : F.elements()) img.push_back(apply(x));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (img.size() > budget) throw BudgetError("image exceeds budget");
  std::vector<ElementCode> gens;
  for (const auto& g : F.generators()) gens.push_back(apply(g));
  return FiniteSubgroup::from_sorted_elements(domain_, std::move(img),
                                              std::move(gens));
}

FiniteSubgroup Endomorphism::kernel_in(const FiniteSubgroup& F) const {
  std::vector<ElementCode> ker;
  const ElementCode e = domain_->identity();
  for (const auto& x : F.elements())
    if (apply(x) == e) ker.push_back(x);
  std::vector<ElementCode> gens = ker;
  return FiniteSubgroup::from_sorted_elements(F.ambient(), std::move(ker),
                                              std::move(gens));
}

bool Endomorphism::known_injective() const {
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return true;
        } else if constexpr (std::is_same_v<T, Trivial>) {
          return domain_->order() == 1;
        } else if constexpr (std::is_same_v<T, Shift>) {
          return true;
        } else if constexpr (std::is_same_v<T, Power>) {
          auto e = group_exponent(domain_);
          return e && gcd_u64(k.u, *e) == 1;
        } else if constexpr (std::is_same_v<T, Table>) {
          return k.bijective;
        } else if constexpr (std::is_same_v<T, CoordPerm>) {
          return true;
        } else if constexpr (std::is_same_v<T, Diagonal>) {
          for (const auto& c : k.components)
            if (!c->known_injective()) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Compose>) {
          return k.outer->known_injective() && k.inner->known_injective();
        } else if constexpr (std::is_same_v<T, Declared>) {
          return true;
        } else if constexpr (std::is_same_v<T, Iterated>) {
          return k.base->known_injective();
        } else {
          return false;
        }
      },
      kind_);
}

bool Endomorphism::known_surjective() const {
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return true;
        } else if constexpr (std::is_same_v<T, Trivial>) {
          return domain_->order() == 1;
        } else if constexpr (std::is_same_v<T, Shift>) {
          const auto* sum = std::get_if<SumDesc>(
              &as_descriptor_group(*domain_)->descriptor()->node);
          return sum->indices == IndexSet::integers || k.k == 0;
        } else if constexpr (std::is_same_v<T, Power>) {
          auto e = group_exponent(domain_);
          return e && gcd_u64(k.u, *e) == 1;
        } else if constexpr (std::is_same_v<T, Table>) {
          return k.bijective;
        } else if constexpr (std::is_same_v<T, CoordPerm>) {
          return true;
        } else if constexpr (std::is_same_v<T, Diagonal>) {
          for (const auto& c : k.components)
            if (!c->known_surjective()) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Compose>) {
          return k.outer->known_surjective() && k.inner->known_surjective();
        } else if constexpr (std::is_same_v<T, Declared>) {
          return true;
        } else if constexpr (std::is_same_v<T, Iterated>) {
          return k.base->known_surjective();
        } else {
          return false;
        }
      },
      kind_);
}

InvarianceReport Endomorphism::invariance(const SubgroupWitness& w,
                                          std::uint64_t seed) const {
  InvarianceReport r;

  // exhaustive route for small materializable witnesses
  if (auto fs = w.as_finite_subgroup(); fs && fs->size() <= kExhaustiveSubCap) {
    r.invariant = true;
    std::vector<ElementCode> image;
    image.reserve(fs->size());
    for (const auto& h : fs->elements()) {
      ElementCode y = apply(h);
      if (!fs->contains(y)) {
        r.invariant = false;
        r.escape = std::make_pair(h, y);
        break;
      }
      image.push_back(y);
    }
    if (*r.invariant) {
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      r.stable = image == fs->elements();
    } else {
      r.stable = false;
    }
    if (known_injective()) {
      r.kernel_contained = true;
    } else if (auto n = domain_->order(); n && *n <= kExhaustiveSubCap) {
      r.kernel_contained = true;
      const ElementCode e = domain_->identity();
      for (const auto& x : domain_->elements())
        if (apply(x) == e && !fs->contains(x)) {
          r.kernel_contained = false;
          break;
        }
    }
    return r;
  }

  // structural rules
  const bool inj = known_injective();
  switch (w.kind()) {
    case SubgroupWitness::Kind::full: {
      r.invariant = true;
      r.kernel_contained = true;
      if (known_surjective()) r.stable = true;
      return r;
    }
    case SubgroupWitness::Kind::tail:
    case SubgroupWitness::Kind::component_torsion: {
      // resolve an effective shift amount, unwrapping iteration
      const Endomorphism* base = this;
      std::uint64_t mult = 1;
      if (const auto* it = std::get_if<Iterated>(&kind_)) {
        base = it->base.get();
        mult = it->m;
      }
      if (const auto* s = std::get_if<Shift>(&base->kind_)) {
        std::int64_t k = s->k * static_cast<std::int64_t>(mult);
        r.invariant = true;
        r.kernel_contained = true; // shifts are injective
        if (w.kind() == SubgroupWitness::Kind::component_torsion)
          r.stable = (k == 0) || std::get_if<SumDesc>(
                                     &as_descriptor_group(*domain_)
                                          ->descriptor()
                                          ->node)
                                         ->indices == IndexSet::integers;
        else
          r.stable = (k == 0);
        return r;
      }
      if (const auto* p = std::get_if<Power>(&base->kind_)) {
        r.invariant = true; // subgroups of abelian groups absorb powers
        if (inj) {
          r.kernel_contained = true;
          if (auto e = group_exponent(w.sub_group());
              e && gcd_u64(pow_mod(p->u, mult, *e), *e) == 1)
            r.stable = true;
        }
        return r;
      }
      if (std::holds_alternative<Identity>(base->kind_)) {
        r.invariant = r.stable = r.kernel_contained = true;
        return r;
      }
      if (std::holds_alternative<Trivial>(base->kind_) && mult >= 1) {
        r.invariant = true;
        r.stable = w.sub_group()->order() == 1;
        r.kernel_contained = false; // the full kernel is G here
        return r;
      }
      break;
    }
    case SubgroupWitness::Kind::product_factor: {
      std::size_t i = w.factor_index();
      if (const auto* d = std::get_if<Diagonal>(&kind_)) {
        r.invariant = true;
        if (d->components[i]->known_surjective()) r.stable = true;
        bool others_inj = true;
        for (std::size_t j = 0; j < d->components.size(); ++j)
          if (j != i) others_inj &= d->components[j]->known_injective();
        if (others_inj) r.kernel_contained = true;
        return r;
      }
      if (const auto* cp = std::get_if<CoordPerm>(&kind_)) {
        r.invariant = r.stable = (cp->perm[i] == i);
        r.kernel_contained = true;
        return r;
      }
      break;
    }
    case SubgroupWitness::Kind::finite:
      break;
  }

  if (std::holds_alternative<Identity>(kind_)) {
    r.invariant = r.stable = r.kernel_contained = true;
    return r;
  }

  // fallback: a disproof-only sample
  try {
    auto hs = sample_elements(w.sub_group(), 64, seed);
    for (const auto& h : hs) {
      ElementCode g = w.embed(h);
      ElementCode y = apply(g);
      if (!w.contains(y)) {
        r.invariant = false;
        r.stable = false;
        r.escape = std::make_pair(g, y);
        return r;
      }
    }
  } catch (const StructureError&) {
  }
  if (inj) r.kernel_contained = true;
  return r;
}

std::string Endomorphism::describe() const {
  return std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Identity>) {
          return "identity";
        } else if constexpr (std::is_same_v<T, Trivial>) {
          return "trivial";
        } else if constexpr (std::is_same_v<T, Shift>) {
          return "shift(" + std::to_string(k.k) + ")";
        } else if constexpr (std::is_same_v<T, Power>) {
          return "power(" + std::to_string(k.u) + ")";
        } else if constexpr (std::is_same_v<T, Table>) {
          return "table(" + std::to_string(k.images.size()) + " entries)";
        } else if constexpr (std::is_same_v<T, CoordPerm>) {
          return "coordinate_permutation";
        } else if constexpr (std::is_same_v<T, Diagonal>) {
          std::string s = "diagonal(";
          for (std::size_t i = 0; i < k.components.size(); ++i)
            s += (i ? ", " : "") + k.components[i]->describe();
          return s + ")";
        } else if constexpr (std::is_same_v<T, Compose>) {
          return k.outer->describe() + " . " + k.inner->describe();
        } else if constexpr (std::is_same_v<T, Declared>) {
          return "automorphism(" + k.fwd->describe() + ")";
        } else if constexpr (std::is_same_v<T, Iterated>) {
          return k.base->describe() + "^" + std::to_string(k.m);
        } else if constexpr (std::is_same_v<T, OnSubgroup>) {
          return k.base->describe() + " | " + k.w->describe();
        } else {
          return k.base->describe() + " mod " + k.w->describe();
        }
      },
      kind_);
}

EndoPtr restrict_endomorphism(EndoPtr phi, SubgroupWitness w) {
  if (!same_group(phi->domain(), w.ambient()))
    throw DomainError("witness ambient differs from the endomorphism domain");
  auto rep = phi->invariance(w);
  if (rep.invariant != true)
    throw StructureError(rep.invariant == false
                             ? "subgroup is not invariant under the map"
                             : "invariance could not be established");
  GroupPtr sub = w.sub_group();
  return EndoPtr(new Endomorphism(
      std::move(sub),
      Endomorphism::OnSubgroup{
          std::move(phi),
          std::make_shared<const SubgroupWitness>(std::move(w))}));
}

EndoPtr induced_quotient_map(EndoPtr phi, SubgroupWitness w) {
  if (!same_group(phi->domain(), w.ambient()))
    throw DomainError("witness ambient differs from the endomorphism domain");
  if (!w.quotient_supported())
    throw StructureError("witness has no usable quotient");
  auto rep = phi->invariance(w);
  if (rep.invariant != true)
    throw StructureError(rep.invariant == false
                             ? "subgroup is not invariant under the map"
                             : "invariance could not be established");
  GroupPtr q = w.quotient_group();
  return EndoPtr(new Endomorphism(
      std::move(q),
      Endomorphism::OnQuotient{
          std::move(phi),
          std::make_shared<const SubgroupWitness>(std::move(w))}));
}

} // namespace qhent
