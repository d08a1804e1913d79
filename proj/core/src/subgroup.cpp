#include "qhent/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qhent {
namespace {

bool sorted_contains(const std::vector<ElementCode>& v, const ElementCode& g) {
  return std::binary_search(v.begin(), v.end(), g);
}

void require_same_ambient(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  if (a.ambient().get() != b.ambient().get())
    throw StructureError("ambient group mismatch between subgroups");
}

} // namespace

FiniteSubgroup::FiniteSubgroup(GroupPtr ambient,
                               std::vector<ElementCode> elements,
                               std::vector<ElementCode> gens)
    : ambient_(std::move(ambient)),
      elements_(std::move(elements)),
      generators_(std::move(gens)) {}

FiniteSubgroup FiniteSubgroup::closure(GroupPtr ambient,
                                       std::vector<ElementCode> gens,
                                       std::size_t budget) {
  if (!ambient) throw DomainError("null ambient group");
  if (budget < 1) throw DomainError("closure budget must be >= 1");
  std::vector<ElementCode> step;
  step.reserve(gens.size() * 2);
  for (const auto& g : gens) {
    if (!ambient->contains(g))
      throw DomainError("generator is not an element of the ambient group");
    step.push_back(g);
    step.push_back(ambient->inverse(g));
  }
  std::set<ElementCode> seen;
  std::deque<ElementCode> queue;
  seen.insert(ambient->identity());
  queue.push_back(ambient->identity());
  while (!queue.empty()) {
    ElementCode x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : step) {
      ElementCode y = ambient->multiply(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > budget)
          throw BudgetError("closure exceeded its element budget of " +
                            std::to_string(budget));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<ElementCode> elements(seen.begin(), seen.end());
  return FiniteSubgroup(std::move(ambient), std::move(elements),
                        std::move(gens));
}

FiniteSubgroup FiniteSubgroup::trivial(GroupPtr ambient) {
  return closure(std::move(ambient), {});
}

FiniteSubgroup FiniteSubgroup::from_sorted_elements(
    GroupPtr ambient, std::vector<ElementCode> elements,
    std::vector<ElementCode> gens) {
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw DomainError("element list must be sorted");
  if (!std::binary_search(elements.begin(), elements.end(),
                          ambient->identity()))
    throw StructureError("subgroup element set is missing the identity");
  return FiniteSubgroup(std::move(ambient), std::move(elements),
                        std::move(gens));
}

FiniteSubgroup FiniteSubgroup::whole_group(GroupPtr ambient) {
  auto elems = ambient->elements();
  std::vector<ElementCode> gens = elems;
  return FiniteSubgroup(std::move(ambient), std::move(elems),
                        std::move(gens));
}

bool FiniteSubgroup::contains(const ElementCode& g) const {
  return sorted_contains(elements_, g);
}

bool FiniteSubgroup::verify_closed() const {
  if (!contains(ambient_->identity())) return false;
  for (const auto& a : elements_) {
    if (!contains(ambient_->inverse(a))) return false;
    for (const auto& b : elements_)
      if (!contains(ambient_->multiply(a, b))) return false;
  }
  return true;
}

bool ProductSet::contains(const ElementCode& g) const {
  return sorted_contains(elements, g);
}

ProductSet product_set(const FiniteSubgroup& X, const FiniteSubgroup& Y) {
  require_same_ambient(X, Y);
  const auto& G = X.ambient();
  std::set<ElementCode> out;
  for (const auto& x : X.elements())
    for (const auto& y : Y.elements()) out.insert(G->multiply(x, y));
  return ProductSet{G, std::vector<ElementCode>(out.begin(), out.end()),
                    {X, Y}};
}

bool is_subgroup(const ProductSet& S) {
  if (S.elements.empty()) return false;
  const auto& G = S.ambient;
  if (!S.contains(G->identity())) return false;
  if (!S.factors.empty()) {
    // |<gens of all factors>| == |S| iff the product set is that subgroup.
    std::vector<ElementCode> gens;
    for (const auto& f : S.factors)
      gens.insert(gens.end(), f.generators().begin(), f.generators().end());
    try {
      auto closed = FiniteSubgroup::closure(G, std::move(gens),
                                            S.elements.size());
      return closed.size() == S.elements.size();
    } catch (const BudgetError&) {
      return false;
    }
  }
  for (const auto& a : S.elements) {
    if (!S.contains(G->inverse(a))) return false;
    for (const auto& b : S.elements)
      if (!S.contains(G->multiply(a, b))) return false;
  }
  return true;
}

std::uint64_t generalized_index(const std::vector<ElementCode>& T_sorted,
                                const FiniteSubgroup& U, GroupPtr ambient) {
  const auto& G = ambient;
  for (const auto& u : U.elements())
    if (!sorted_contains(T_sorted, u))
      throw StructureError("U is not contained in T");
  std::vector<bool> covered(T_sorted.size(), false);
  std::uint64_t cosets = 0;
  for (std::size_t p = 0; p < T_sorted.size(); ++p) {
    if (covered[p]) continue;
    ++cosets;
    for (const auto& u : U.elements()) {
      ElementCode ut = G->multiply(u, T_sorted[p]);
      auto it = std::lower_bound(T_sorted.begin(), T_sorted.end(), ut);
      if (it == T_sorted.end() || *it != ut)
        throw StructureError(
            "T is not a union of right cosets of U (coset escapes T)");
      std::size_t q = static_cast<std::size_t>(it - T_sorted.begin());
      if (covered[q] && !(q == p && U.size() == 1))
        throw StructureError("right cosets of U overlap inside T");
      covered[q] = true;
    }
  }
  if (cosets * U.size() != T_sorted.size())
    throw StructureError("coset partition does not cover T exactly");
  return cosets;
}

std::uint64_t generalized_index(const ProductSet& T, const FiniteSubgroup& U) {
  if (T.ambient.get() != U.ambient().get())
    throw StructureError("ambient group mismatch");
  return generalized_index(T.elements, U, T.ambient);
}

std::uint64_t generalized_index(const FiniteSubgroup& T,
                                const FiniteSubgroup& U) {
  require_same_ambient(T, U);
  return generalized_index(T.elements(), U, T.ambient());
}

bool is_normal_in(const FiniteSubgroup& H,
                  const std::vector<ElementCode>& scope) {
  const auto& G = H.ambient();
  for (const auto& g : scope) {
    ElementCode ginv = G->inverse(g);
    for (const auto& h : H.elements())
      if (!H.contains(G->multiply(G->multiply(g, h), ginv))) return false;
  }
  return true;
}

bool is_normal_in(const FiniteSubgroup& H, const FiniteSubgroup& scope) {
  require_same_ambient(H, scope);
  return is_normal_in(H, scope.elements());
}

FiniteSubgroup commutator_subgroup(const FiniteSubgroup& g_fin,
                                   std::size_t budget) {
  const auto& G = g_fin.ambient();
  std::set<ElementCode> comms;
  for (const auto& a : g_fin.elements())
    for (const auto& b : g_fin.elements()) {
      ElementCode c = G->multiply(
          G->multiply(a, b),
          G->multiply(G->inverse(a), G->inverse(b)));
      comms.insert(c);
    }
  comms.erase(G->identity());
  return FiniteSubgroup::closure(
      G, std::vector<ElementCode>(comms.begin(), comms.end()), budget);
}

FiniteSubgroup intersection(const FiniteSubgroup& H, const FiniteSubgroup& K) {
  require_same_ambient(H, K);
  std::vector<ElementCode> out;
  std::set_intersection(H.elements().begin(), H.elements().end(),
                        K.elements().begin(), K.elements().end(),
                        std::back_inserter(out));
  std::vector<ElementCode> gens = out;
  return FiniteSubgroup::from_sorted_elements(H.ambient(), std::move(out),
                                              std::move(gens));
}

// ---- SubgroupAsGroup -------------------------------------------------------

SubgroupAsGroup::SubgroupAsGroup(FiniteSubgroup sub) : sub_(std::move(sub)) {}

ElementCode SubgroupAsGroup::identity() const {
  return sub_.ambient()->identity();
}

ElementCode SubgroupAsGroup::multiply(const ElementCode& a,
                                      const ElementCode& b) const {
  return sub_.ambient()->multiply(a, b);
}

ElementCode SubgroupAsGroup::inverse(const ElementCode& a) const {
  return sub_.ambient()->inverse(a);
}

bool SubgroupAsGroup::contains(const ElementCode& a) const {
  return sub_.contains(a);
}

std::optional<std::uint64_t> SubgroupAsGroup::order() const {
  return sub_.size();
}

std::vector<ElementCode> SubgroupAsGroup::elements() const {
  return sub_.elements();
}

bool SubgroupAsGroup::abelian_hint() const {
  return sub_.ambient()->abelian_hint();
}

std::string SubgroupAsGroup::name() const {
  return "subgroup[" + std::to_string(sub_.size()) + "] of " +
         sub_.ambient()->name();
}

// ---- CosetQuotientGroup ----------------------------------------------------

CosetQuotientGroup::CosetQuotientGroup(GroupPtr base, FiniteSubgroup kernel)
    : base_(std::move(base)), kernel_(std::move(kernel)) {
  if (kernel_.ambient().get() != base_.get()) {
    // allow a kernel expressed in the same arithmetic via a subgroup view
    const auto* view = dynamic_cast<const SubgroupAsGroup*>(base_.get());
    if (!view || kernel_.ambient().get() != view->subgroup().ambient().get())
      throw StructureError("kernel does not live in the quotient base group");
  }
}

ElementCode CosetQuotientGroup::canonicalize(const ElementCode& g) const {
  ElementCode best = g;
  for (const auto& h : kernel_.elements()) {
    ElementCode gh = base_->multiply(g, h);
    if (gh < best) best = std::move(gh);
  }
  return best;
}

ElementCode CosetQuotientGroup::identity() const { return base_->identity(); }

ElementCode CosetQuotientGroup::multiply(const ElementCode& a,
                                         const ElementCode& b) const {
  return canonicalize(base_->multiply(a, b));
}

ElementCode CosetQuotientGroup::inverse(const ElementCode& a) const {
  return canonicalize(base_->inverse(a));
}

bool CosetQuotientGroup::contains(const ElementCode& a) const {
  return base_->contains(a) && canonicalize(a) == a;
}

std::optional<std::uint64_t> CosetQuotientGroup::order() const {
  auto b = base_->order();
  if (!b) return std::nullopt;
  return *b / kernel_.size();
}

std::vector<ElementCode> CosetQuotientGroup::elements() const {
  std::set<ElementCode> reps;
  for (const auto& g : base_->elements()) reps.insert(canonicalize(g));
  return std::vector<ElementCode>(reps.begin(), reps.end());
}

bool CosetQuotientGroup::abelian_hint() const { return base_->abelian_hint(); }

std::string CosetQuotientGroup::name() const {
  return base_->name() + " / [" + std::to_string(kernel_.size()) + "]";
}

// ---- FiniteQuotientGroup ---------------------------------------------------

FiniteQuotientGroup::FiniteQuotientGroup(FiniteSubgroup base,
                                         FiniteSubgroup kernel)
    : base_(std::move(base)), kernel_(std::move(kernel)) {
  require_same_ambient(base_, kernel_);
  for (const auto& h : kernel_.elements())
    if (!base_.contains(h))
      throw StructureError("kernel is not contained in the base subgroup");
  if (!is_normal_in(kernel_, base_))
    throw StructureError("kernel is not normal in the base subgroup");
  auto view = std::make_shared<const SubgroupAsGroup>(base_);
  impl_ = std::make_shared<const CosetQuotientGroup>(view, kernel_);
  representatives_ = impl_->elements();
  if (representatives_.size() * kernel_.size() != base_.size())
    throw StructureError("Lagrange identity failed in quotient construction");
}

ElementCode FiniteQuotientGroup::project(const ElementCode& g) const {
  if (!base_.contains(g))
    throw DomainError("element is outside the quotient base subgroup");
  return impl_->canonicalize(g);
}

ElementCode FiniteQuotientGroup::multiply(const ElementCode& a,
                                          const ElementCode& b) const {
  return impl_->multiply(a, b);
}

FiniteQuotientGroup quotient(const FiniteSubgroup& g_fin,
                             const FiniteSubgroup& H) {
  return FiniteQuotientGroup(g_fin, H);
}

} // namespace qhent
