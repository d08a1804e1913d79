#include "qhent/descriptor.hpp"

#include <numeric>
#include <sstream>

namespace qhent {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

DescriptorPtr cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic group modulus must be >= 1");
  return std::make_shared<const Descriptor>(Descriptor{CyclicDesc{n}});
}

DescriptorPtr quaternion8() {
  return std::make_shared<const Descriptor>(Descriptor{QuaternionDesc{}});
}

DescriptorPtr product(std::vector<DescriptorPtr> factors) {
  for (const auto& f : factors)
    if (!f) throw DomainError("null factor in product descriptor");
  return std::make_shared<const Descriptor>(
      Descriptor{ProductDesc{std::move(factors)}});
}

DescriptorPtr restricted_sum(DescriptorPtr component, IndexSet idx) {
  if (!component) throw DomainError("null component in restricted sum");
  return std::make_shared<const Descriptor>(
      Descriptor{SumDesc{std::move(component), idx}});
}

DescriptorPtr semidirect(DescriptorPtr normal_part, std::uint64_t m,
                         ActionDesc action) {
  if (!normal_part) throw DomainError("null normal part in semidirect");
  if (m == 0) throw DomainError("semidirect acting modulus must be >= 1");
  return std::make_shared<const Descriptor>(
      Descriptor{SemidirectDesc{std::move(normal_part), m, std::move(action)}});
}

bool descriptor_abelian(const Descriptor& d) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return true;
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return false;
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          for (const auto& f : node.factors)
            if (!descriptor_abelian(*f)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return descriptor_abelian(*node.component);
        } else {
          // Semidirect: abelian iff the action is trivial and A abelian.
          if (!descriptor_abelian(*node.normal_part)) return false;
          if (const auto* pa = std::get_if<PowerActionDesc>(&node.action)) {
            std::uint64_t exp = abelian_exponent(*node.normal_part);
            return exp <= 1 || pa->exponent % exp == 1 % exp;
          }
          const auto& table = std::get<TableActionDesc>(node.action).images;
          for (const auto& [from, to] : table)
            if (from != to) return false;
          return true;
        }
      },
      d.node);
}

std::optional<std::uint64_t> descriptor_order(const Descriptor& d) {
  return std::visit(
      [](const auto& node) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return node.modulus;
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return 8;
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::uint64_t total = 1;
          for (const auto& f : node.factors) {
            auto o = descriptor_order(*f);
            if (!o) return std::nullopt;
            total *= *o;
          }
          return total;
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          auto o = descriptor_order(*node.component);
          if (o && *o == 1) return 1; // sum of trivial groups
          return std::nullopt;
        } else {
          auto o = descriptor_order(*node.normal_part);
          if (!o) return std::nullopt;
          return *o * node.acting_modulus;
        }
      },
      d.node);
}

std::uint64_t abelian_exponent(const Descriptor& d) {
  return std::visit(
      [&d](const auto& node) -> std::uint64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return node.modulus;
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::uint64_t e = 1;
          for (const auto& f : node.factors) e = lcm_u64(e, abelian_exponent(*f));
          return e;
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return abelian_exponent(*node.component);
        } else {
          throw DomainError("abelian_exponent on non-abelian descriptor: " +
                            descriptor_to_string(d));
        }
      },
      d.node);
}

Value identity_value(const Descriptor& d) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc> ||
                      std::is_same_v<T, QuaternionDesc>) {
          return scalar_value(0);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<Value> xs;
          xs.reserve(node.factors.size());
          for (const auto& f : node.factors) xs.push_back(identity_value(*f));
          return tuple_value(std::move(xs));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return support_value({});
        } else {
          return tuple_value(
              {identity_value(*node.normal_part), scalar_value(0)});
        }
      },
      d.node);
}

bool descriptor_equal(const Descriptor& a, const Descriptor& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ca = std::get_if<CyclicDesc>(&a.node))
    return ca->modulus == std::get<CyclicDesc>(b.node).modulus;
  if (std::holds_alternative<QuaternionDesc>(a.node)) return true;
  if (const auto* pa = std::get_if<ProductDesc>(&a.node)) {
    const auto& pb = std::get<ProductDesc>(b.node);
    if (pa->factors.size() != pb.factors.size()) return false;
    for (std::size_t i = 0; i < pa->factors.size(); ++i)
      if (!descriptor_equal(*pa->factors[i], *pb.factors[i])) return false;
    return true;
  }
  if (const auto* sa = std::get_if<SumDesc>(&a.node)) {
    const auto& sb = std::get<SumDesc>(b.node);
    return sa->indices == sb.indices &&
           descriptor_equal(*sa->component, *sb.component);
  }
  const auto& da = std::get<SemidirectDesc>(a.node);
  const auto& db = std::get<SemidirectDesc>(b.node);
  if (da.acting_modulus != db.acting_modulus) return false;
  if (!descriptor_equal(*da.normal_part, *db.normal_part)) return false;
  if (da.action.index() != db.action.index()) return false;
  if (const auto* paa = std::get_if<PowerActionDesc>(&da.action))
    return paa->exponent == std::get<PowerActionDesc>(db.action).exponent;
  return std::get<TableActionDesc>(da.action).images ==
         std::get<TableActionDesc>(db.action).images;
}

std::string descriptor_to_string(const Descriptor& d) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          os << "Z(" << node.modulus << ")";
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          os << "Q8";
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            if (i) os << " x ";
            os << descriptor_to_string(*node.factors[i]);
          }
          if (node.factors.empty()) os << "1";
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          os << "Sum_" << (node.indices == IndexSet::naturals ? "N" : "Z")
             << "(" << descriptor_to_string(*node.component) << ")";
        } else {
          os << "(" << descriptor_to_string(*node.normal_part) << " x| Z("
             << node.acting_modulus << "))";
        }
        return os.str();
      },
      d.node);
}

} // namespace qhent
