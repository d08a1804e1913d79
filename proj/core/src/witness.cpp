#include "qhent/witness.hpp"

#include <algorithm>

#include "qhent/builders.hpp"

namespace qhent {
namespace {

// ---- component torsion transforms --------------------------------------
// For Z(n) and exponent e put d = gcd(n, e), step = n / d. The e-torsion
// part is <step> = {0, step, 2*step, ...} of order d; the quotient is Z(step)
// with transversal {0, ..., step-1}.

DescriptorPtr torsion_sub_desc(const Descriptor& d, std::uint64_t e) {
  return std::visit(
      [&](const auto& node) -> DescriptorPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return cyclic(gcd_u64(node.modulus, e));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<DescriptorPtr> fs;
          fs.reserve(node.factors.size());
          for (const auto& f : node.factors)
            fs.push_back(torsion_sub_desc(*f, e));
          return product(std::move(fs));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return restricted_sum(torsion_sub_desc(*node.component, e),
                                node.indices);
        } else {
          throw StructureError(
              "component torsion witness requires a cyclic/product/sum tree, "
              "got " +
              descriptor_to_string(d));
        }
      },
      d.node);
}

bool torsion_contains(const Descriptor& amb, std::uint64_t e, const Value& v) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          std::uint64_t step = node.modulus / gcd_u64(node.modulus, e);
          return std::get<std::uint64_t>(v.v) % step == 0;
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xs = std::get<std::vector<Value>>(v.v);
          for (std::size_t i = 0; i < xs.size(); ++i)
            if (!torsion_contains(*node.factors[i], e, xs[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          for (const auto& [idx, c] : std::get<Value::Support>(v.v))
            if (!torsion_contains(*node.component, e, c)) return false;
          return true;
        } else {
          throw StructureError("component torsion witness on unsupported node");
        }
      },
      amb.node);
}

Value torsion_embed(const Descriptor& amb, std::uint64_t e, const Value& v) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          std::uint64_t step = node.modulus / gcd_u64(node.modulus, e);
          return scalar_value(std::get<std::uint64_t>(v.v) * step);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xs = std::get<std::vector<Value>>(v.v);
          std::vector<Value> out;
          out.reserve(xs.size());
          for (std::size_t i = 0; i < xs.size(); ++i)
            out.push_back(torsion_embed(*node.factors[i], e, xs[i]));
          return tuple_value(std::move(out));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          Value::Support out;
          for (const auto& [idx, c] : std::get<Value::Support>(v.v))
            out.emplace_back(idx, torsion_embed(*node.component, e, c));
          return support_value(std::move(out));
        } else {
          throw StructureError("component torsion witness on unsupported node");
        }
      },
      amb.node);
}

Value torsion_restrict(const Descriptor& amb, std::uint64_t e, const Value& v) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          std::uint64_t step = node.modulus / gcd_u64(node.modulus, e);
          std::uint64_t x = std::get<std::uint64_t>(v.v);
          if (x % step != 0)
            throw StructureError("element is not in the torsion subgroup");
          return scalar_value(x / step);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xs = std::get<std::vector<Value>>(v.v);
          std::vector<Value> out;
          out.reserve(xs.size());
          for (std::size_t i = 0; i < xs.size(); ++i)
            out.push_back(torsion_restrict(*node.factors[i], e, xs[i]));
          return tuple_value(std::move(out));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          Value::Support out;
          for (const auto& [idx, c] : std::get<Value::Support>(v.v))
            out.emplace_back(idx, torsion_restrict(*node.component, e, c));
          return support_value(std::move(out));
        } else {
          throw StructureError("component torsion witness on unsupported node");
        }
      },
      amb.node);
}

Value torsion_project(const Descriptor& amb, std::uint64_t e, const Value& v) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          std::uint64_t step = node.modulus / gcd_u64(node.modulus, e);
          return scalar_value(std::get<std::uint64_t>(v.v) % step);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xs = std::get<std::vector<Value>>(v.v);
          std::vector<Value> out;
          out.reserve(xs.size());
          for (std::size_t i = 0; i < xs.size(); ++i)
            out.push_back(torsion_project(*node.factors[i], e, xs[i]));
          return tuple_value(std::move(out));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          const Value comp_id =
              identity_value(*structural_quotient(node.component, e));
          Value::Support out;
          for (const auto& [idx, c] : std::get<Value::Support>(v.v)) {
            Value pc = torsion_project(*node.component, e, c);
            if (pc == comp_id) continue;
            out.emplace_back(idx, std::move(pc));
          }
          return support_value(std::move(out));
        } else {
          throw StructureError("component torsion witness on unsupported node");
        }
      },
      amb.node);
}

// The quotient residues are already transversal representatives.
Value torsion_section(const Value& v) { return v; }

} // namespace

SubgroupWitness SubgroupWitness::full(GroupPtr ambient) {
  SubgroupWitness w;
  w.kind_ = Kind::full;
  w.ambient_ = ambient;
  w.normal_ = true;
  w.sub_ = ambient;
  w.quot_dg_ = make_group(cyclic(1));
  w.quotient_ = w.quot_dg_;
  return w;
}

SubgroupWitness SubgroupWitness::finite(FiniteSubgroup sub) {
  SubgroupWitness w;
  w.kind_ = Kind::finite;
  w.ambient_ = sub.ambient();
  w.fin_ = std::move(sub);
  w.sub_ = std::make_shared<const SubgroupAsGroup>(*w.fin_);
  if (w.ambient_->order()) {
    w.normal_ = is_normal_in(*w.fin_, FiniteSubgroup::whole_group(w.ambient_));
  } else if (const auto* dg = as_descriptor_group(*w.ambient_)) {
    // best-effort conjugation sample; an escape disproves normality, no
    // escape across the sample is taken as evidence
    ElementSampler sampler(
        std::static_pointer_cast<const DescriptorGroup>(
            dg->shared_from_this()),
        1);
    w.normal_ = true;
    for (int i = 0; i < 32 && w.normal_; ++i) {
      ElementCode g = sampler.next();
      for (const auto& h : w.fin_->elements())
        if (!w.fin_->contains(w.ambient_->multiply(
                w.ambient_->multiply(g, h), w.ambient_->inverse(g)))) {
          w.normal_ = false;
          break;
        }
    }
  } else {
    w.normal_ = w.fin_->size() == 1;
  }
  if (w.normal_) {
    w.coset_quotient_ =
        std::make_shared<const CosetQuotientGroup>(w.ambient_, *w.fin_);
    w.quotient_ = w.coset_quotient_;
  }
  return w;
}

SubgroupWitness SubgroupWitness::component_torsion(
    std::shared_ptr<const DescriptorGroup> ambient, std::uint64_t exponent) {
  if (exponent == 0) throw DomainError("torsion exponent must be >= 1");
  SubgroupWitness w;
  w.kind_ = Kind::component_torsion;
  w.ambient_ = ambient;
  w.desc_ambient_ = std::move(ambient);
  w.param_ = exponent;
  w.normal_ = true; // cyclic trees are abelian
  w.sub_dg_ =
      make_group(torsion_sub_desc(*w.desc_ambient_->descriptor(), exponent));
  w.quot_dg_ = make_group(
      structural_quotient(w.desc_ambient_->descriptor(), exponent));
  w.sub_ = w.sub_dg_;
  w.quotient_ = w.quot_dg_;
  return w;
}

SubgroupWitness SubgroupWitness::tail(
    std::shared_ptr<const DescriptorGroup> ambient, std::uint64_t start) {
  const auto* sum = std::get_if<SumDesc>(&ambient->descriptor()->node);
  if (!sum || sum->indices != IndexSet::naturals)
    throw StructureError(
        "tail witness requires a restricted sum over the naturals");
  SubgroupWitness w;
  w.kind_ = Kind::tail;
  w.ambient_ = ambient;
  w.desc_ambient_ = std::move(ambient);
  w.param_ = start;
  w.normal_ = true; // componentwise, so conjugation is per-coordinate
  w.sub_dg_ = w.desc_ambient_; // index shift identifies the tail with G itself
  w.quot_dg_ = make_group(product(std::vector<DescriptorPtr>(
      static_cast<std::size_t>(start), sum->component)));
  w.sub_ = w.sub_dg_;
  w.quotient_ = w.quot_dg_;
  return w;
}

SubgroupWitness SubgroupWitness::product_factor(
    std::shared_ptr<const DescriptorGroup> ambient, std::size_t index) {
  const auto* prod = std::get_if<ProductDesc>(&ambient->descriptor()->node);
  if (!prod || index >= prod->factors.size())
    throw StructureError("factor witness requires a product descriptor and a "
                         "valid factor position");
  SubgroupWitness w;
  w.kind_ = Kind::product_factor;
  w.ambient_ = ambient;
  w.desc_ambient_ = std::move(ambient);
  w.param_ = index;
  w.normal_ = true; // direct factors are normal
  w.sub_dg_ = make_group(prod->factors[index]);
  std::vector<DescriptorPtr> rest;
  for (std::size_t i = 0; i < prod->factors.size(); ++i)
    if (i != index) rest.push_back(prod->factors[i]);
  // a single remaining factor stands alone rather than as a 1-fold product
  w.quot_dg_ = make_group(rest.size() == 1 ? rest[0]
                                           : product(std::move(rest)));
  w.sub_ = w.sub_dg_;
  w.quotient_ = w.quot_dg_;
  return w;
}

bool SubgroupWitness::contains(const ElementCode& g) const {
  switch (kind_) {
    case Kind::full:
      return ambient_->contains(g);
    case Kind::finite:
      return fin_->contains(g);
    case Kind::component_torsion:
      return ambient_->contains(g) &&
             torsion_contains(*desc_ambient_->descriptor(), param_,
                              desc_ambient_->decode(g));
    case Kind::tail: {
      if (!ambient_->contains(g)) return false;
      Value v = desc_ambient_->decode(g);
      for (const auto& [idx, c] : std::get<Value::Support>(v.v))
        if (idx < static_cast<std::int64_t>(param_)) return false;
      return true;
    }
    case Kind::product_factor: {
      if (!ambient_->contains(g)) return false;
      const auto& prod =
          std::get<ProductDesc>(desc_ambient_->descriptor()->node);
      Value v = desc_ambient_->decode(g);
      const auto& xs = std::get<std::vector<Value>>(v.v);
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (i != param_ && !(xs[i] == identity_value(*prod.factors[i])))
          return false;
      return true;
    }
  }
  return false;
}

ElementCode SubgroupWitness::embed(const ElementCode& h) const {
  switch (kind_) {
    case Kind::full:
    case Kind::finite:
      return h;
    case Kind::component_torsion:
      return desc_ambient_->encode(torsion_embed(
          *desc_ambient_->descriptor(), param_, sub_dg_->decode(h)));
    case Kind::tail: {
      Value v = sub_dg_->decode(h);
      auto& s = std::get<Value::Support>(v.v);
      for (auto& [idx, c] : s) idx += static_cast<std::int64_t>(param_);
      return desc_ambient_->encode(v);
    }
    case Kind::product_factor: {
      const auto& prod =
          std::get<ProductDesc>(desc_ambient_->descriptor()->node);
      std::vector<Value> xs;
      xs.reserve(prod.factors.size());
      for (std::size_t i = 0; i < prod.factors.size(); ++i)
        xs.push_back(i == param_ ? sub_dg_->decode(h)
                                 : identity_value(*prod.factors[i]));
      return desc_ambient_->encode(tuple_value(std::move(xs)));
    }
  }
  throw StructureError("unreachable witness kind");
}

ElementCode SubgroupWitness::restrict_to_sub(const ElementCode& g) const {
  if (!contains(g))
    throw StructureError("element is outside the witnessed subgroup");
  switch (kind_) {
    case Kind::full:
    case Kind::finite:
      return g;
    case Kind::component_torsion:
      return sub_dg_->encode(torsion_restrict(
          *desc_ambient_->descriptor(), param_, desc_ambient_->decode(g)));
    case Kind::tail: {
      Value v = desc_ambient_->decode(g);
      auto& s = std::get<Value::Support>(v.v);
      for (auto& [idx, c] : s) idx -= static_cast<std::int64_t>(param_);
      return sub_dg_->encode(v);
    }
    case Kind::product_factor: {
      Value v = desc_ambient_->decode(g);
      return sub_dg_->encode(std::get<std::vector<Value>>(v.v)[param_]);
    }
  }
  throw StructureError("unreachable witness kind");
}

const GroupPtr& SubgroupWitness::quotient_group() const {
  if (!quotient_)
    throw StructureError(
        "no quotient: witness subgroup is not known to be normal");
  return quotient_;
}

ElementCode SubgroupWitness::project(const ElementCode& g) const {
  quotient_group();
  switch (kind_) {
    case Kind::full:
      return quotient_->identity();
    case Kind::finite:
      return coset_quotient_->canonicalize(g);
    case Kind::component_torsion:
      return quot_dg_->encode(torsion_project(
          *desc_ambient_->descriptor(), param_, desc_ambient_->decode(g)));
    case Kind::tail: {
      Value v = desc_ambient_->decode(g);
      const auto& sum = std::get<SumDesc>(desc_ambient_->descriptor()->node);
      std::vector<Value> head(static_cast<std::size_t>(param_),
                              identity_value(*sum.component));
      for (const auto& [idx, c] : std::get<Value::Support>(v.v))
        if (idx < static_cast<std::int64_t>(param_))
          head[static_cast<std::size_t>(idx)] = c;
      return quot_dg_->encode(tuple_value(std::move(head)));
    }
    case Kind::product_factor: {
      Value v = desc_ambient_->decode(g);
      auto& xs = std::get<std::vector<Value>>(v.v);
      xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(param_));
      if (xs.size() == 1) return quot_dg_->encode(xs[0]);
      return quot_dg_->encode(v);
    }
  }
  throw StructureError("unreachable witness kind");
}

ElementCode SubgroupWitness::section(const ElementCode& q) const {
  quotient_group();
  switch (kind_) {
    case Kind::full:
      return ambient_->identity();
    case Kind::finite:
      // canonical coset representatives are ambient elements already
      return q;
    case Kind::component_torsion:
      return desc_ambient_->encode(torsion_section(quot_dg_->decode(q)));
    case Kind::tail: {
      const auto& sum = std::get<SumDesc>(desc_ambient_->descriptor()->node);
      const Value comp_id = identity_value(*sum.component);
      Value qv = quot_dg_->decode(q);
      const auto& xs = std::get<std::vector<Value>>(qv.v);
      Value::Support s;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] == comp_id))
          s.emplace_back(static_cast<std::int64_t>(i), xs[i]);
      return desc_ambient_->encode(support_value(std::move(s)));
    }
    case Kind::product_factor: {
      const auto& prod =
          std::get<ProductDesc>(desc_ambient_->descriptor()->node);
      Value v = quot_dg_->decode(q);
      if (prod.factors.size() == 2) v = tuple_value({std::move(v)});
      auto& xs = std::get<std::vector<Value>>(v.v);
      xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(param_),
                identity_value(*prod.factors[param_]));
      return desc_ambient_->encode(v);
    }
  }
  throw StructureError("unreachable witness kind");
}

std::optional<FiniteSubgroup> SubgroupWitness::as_finite_subgroup() const {
  if (kind_ == Kind::finite) return fin_;
  auto n = sub_->order();
  if (!n || *n > kDefaultClosureBudget) return std::nullopt;
  std::vector<ElementCode> elems;
  elems.reserve(static_cast<std::size_t>(*n));
  for (const auto& h : sub_->elements()) elems.push_back(embed(h));
  std::sort(elems.begin(), elems.end());
  std::vector<ElementCode> gens(elems.begin(), elems.end());
  return FiniteSubgroup::from_sorted_elements(ambient_, std::move(elems),
                                              std::move(gens));
}

std::string SubgroupWitness::describe() const {
  switch (kind_) {
    case Kind::full:
      return "full";
    case Kind::finite:
      return "finite(" + std::to_string(fin_->size()) + " elements)";
    case Kind::component_torsion:
      return "component_torsion(" + std::to_string(param_) + ")";
    case Kind::tail:
      return "tail(" + std::to_string(param_) + ")";
    case Kind::product_factor:
      return "product_factor(" + std::to_string(param_) + ")";
  }
  return "?";
}

} // namespace qhent
