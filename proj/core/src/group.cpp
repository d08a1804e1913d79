#include "qhent/group.hpp"

#include <algorithm>
#include <cassert>

namespace qhent {
namespace {

constexpr std::int64_t kMaxSumIndex = std::int64_t{1} << 31;

// ---- quaternion basis arithmetic ------------------------------------------
// index = 2*axis + sign with axes {1, i, j, k}; sign 1 means negated.

struct Quat {
  unsigned axis;
  unsigned sign;
};

Quat q8_split(std::uint64_t idx) { return {unsigned(idx) / 2, unsigned(idx) % 2}; }
std::uint64_t q8_join(Quat q) { return std::uint64_t(q.axis) * 2 + q.sign; }

Quat q8_basis_mul(unsigned a, unsigned b) {
  // product of basis units, returns (axis, sign)
  if (a == 0) return {b, 0};
  if (b == 0) return {a, 0};
  if (a == b) return {0, 1}; // ii = jj = kk = -1
  // i*j=k, j*k=i, k*i=j and odd permutations flip sign
  static constexpr unsigned next[4] = {0, 2, 3, 1};
  return {6u - a - b, next[a] == b ? 0u : 1u};
}

std::uint64_t q8_mul(std::uint64_t x, std::uint64_t y) {
  Quat a = q8_split(x), b = q8_split(y);
  Quat r = q8_basis_mul(a.axis, b.axis);
  r.sign = (r.sign + a.sign + b.sign) % 2;
  return q8_join(r);
}

std::uint64_t q8_inv(std::uint64_t x) {
  Quat a = q8_split(x);
  if (a.axis == 0) return x;     // 1 and -1 are involutions or identity
  a.sign = 1 - a.sign;           // i^-1 = -i etc.
  return q8_join(a);
}

unsigned cyclic_width(std::uint64_t n) {
  unsigned w = 0;
  std::uint64_t top = n - 1;
  while (top > 0) {
    ++w;
    top >>= 8;
  }
  return w;
}

// ---- structured value arithmetic ------------------------------------------

Value value_identity(const Descriptor& d);
Value value_multiply(const Descriptor& d, const Value& a, const Value& b);
Value value_inverse(const Descriptor& d, const Value& a);

Value value_power(const Descriptor& d, const Value& a, std::uint64_t e) {
  Value acc = value_identity(d);
  Value base = a;
  while (e > 0) {
    if (e & 1) acc = value_multiply(d, acc, base);
    base = value_multiply(d, base, base);
    e >>= 1;
  }
  return acc;
}

void encode_value(const Descriptor& d, const Value& v,
                  std::vector<std::uint8_t>& out);
Value decode_value(const Descriptor& d, const std::vector<std::uint8_t>& in,
                   std::size_t& pos);

Value decode_full(const Descriptor& d, const ElementCode& code) {
  std::size_t pos = 0;
  Value v = decode_value(d, code.bytes, pos);
  if (pos != code.bytes.size())
    throw DecodeError("trailing bytes in element code");
  return v;
}

Value table_apply(const SemidirectDesc& sd, const TableActionDesc& t,
                  const Value& a) {
  std::vector<std::uint8_t> bytes;
  encode_value(*sd.normal_part, a, bytes);
  ElementCode code{std::move(bytes)};
  for (const auto& [from, to] : t.images)
    if (from == code) return decode_full(*sd.normal_part, to);
  throw DomainError("table action has no image for element " + code.hex());
}

Value action_apply(const SemidirectDesc& sd, std::uint64_t x, const Value& a) {
  if (const auto* pa = std::get_if<PowerActionDesc>(&sd.action)) {
    std::uint64_t exp = abelian_exponent(*sd.normal_part);
    std::uint64_t e = exp <= 1 ? 0 : pow_mod(pa->exponent, x, exp);
    return value_power(*sd.normal_part, a, exp <= 1 ? 1 : e);
  }
  const auto& t = std::get<TableActionDesc>(sd.action);
  Value cur = a;
  for (std::uint64_t i = 0; i < x; ++i) cur = table_apply(sd, t, cur);
  return cur;
}

Value value_identity(const Descriptor& d) {
  return std::visit(
      [](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc> ||
                      std::is_same_v<T, QuaternionDesc>) {
          return scalar_value(0);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<Value> xs;
          xs.reserve(node.factors.size());
          for (const auto& f : node.factors) xs.push_back(value_identity(*f));
          return tuple_value(std::move(xs));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return support_value({});
        } else {
          return tuple_value(
              {value_identity(*node.normal_part), scalar_value(0)});
        }
      },
      d.node);
}

Value value_multiply(const Descriptor& d, const Value& a, const Value& b) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return scalar_value((std::get<std::uint64_t>(a.v) +
                               std::get<std::uint64_t>(b.v)) %
                              node.modulus);
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return scalar_value(
              q8_mul(std::get<std::uint64_t>(a.v), std::get<std::uint64_t>(b.v)));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xa = std::get<std::vector<Value>>(a.v);
          const auto& xb = std::get<std::vector<Value>>(b.v);
          std::vector<Value> out;
          out.reserve(node.factors.size());
          for (std::size_t i = 0; i < node.factors.size(); ++i)
            out.push_back(value_multiply(*node.factors[i], xa[i], xb[i]));
          return tuple_value(std::move(out));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          const auto& sa = std::get<Value::Support>(a.v);
          const auto& sb = std::get<Value::Support>(b.v);
          Value comp_id = value_identity(*node.component);
          Value::Support out;
          std::size_t i = 0, j = 0;
          while (i < sa.size() || j < sb.size()) {
            if (j == sb.size() || (i < sa.size() && sa[i].first < sb[j].first)) {
              out.push_back(sa[i++]);
            } else if (i == sa.size() || sb[j].first < sa[i].first) {
              out.push_back(sb[j++]);
            } else {
              Value m = value_multiply(*node.component, sa[i].second,
                                       sb[j].second);
              if (!(m == comp_id)) out.emplace_back(sa[i].first, std::move(m));
              ++i;
              ++j;
            }
          }
          return support_value(std::move(out));
        } else {
          const auto& xa = std::get<std::vector<Value>>(a.v);
          const auto& xb = std::get<std::vector<Value>>(b.v);
          std::uint64_t x1 = std::get<std::uint64_t>(xa[1].v);
          std::uint64_t x2 = std::get<std::uint64_t>(xb[1].v);
          Value acted = action_apply(node, x1, xb[0]);
          return tuple_value(
              {value_multiply(*node.normal_part, xa[0], acted),
               scalar_value((x1 + x2) % node.acting_modulus)});
        }
      },
      d.node);
}

Value value_inverse(const Descriptor& d, const Value& a) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          std::uint64_t r = std::get<std::uint64_t>(a.v);
          return scalar_value(r == 0 ? 0 : node.modulus - r);
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return scalar_value(q8_inv(std::get<std::uint64_t>(a.v)));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xs = std::get<std::vector<Value>>(a.v);
          std::vector<Value> out;
          out.reserve(xs.size());
          for (std::size_t i = 0; i < node.factors.size(); ++i)
            out.push_back(value_inverse(*node.factors[i], xs[i]));
          return tuple_value(std::move(out));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          const auto& s = std::get<Value::Support>(a.v);
          Value::Support out;
          out.reserve(s.size());
          for (const auto& [idx, c] : s)
            out.emplace_back(idx, value_inverse(*node.component, c));
          return support_value(std::move(out));
        } else {
          const auto& xs = std::get<std::vector<Value>>(a.v);
          std::uint64_t x = std::get<std::uint64_t>(xs[1].v);
          std::uint64_t xinv = x == 0 ? 0 : node.acting_modulus - x;
          Value ainv = value_inverse(*node.normal_part, xs[0]);
          return tuple_value(
              {action_apply(node, xinv, ainv), scalar_value(xinv)});
        }
      },
      d.node);
}

// ---- encode / decode -------------------------------------------------------

void encode_value(const Descriptor& d, const Value& v,
                  std::vector<std::uint8_t>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          unsigned w = cyclic_width(node.modulus);
          std::uint64_t r = std::get<std::uint64_t>(v.v);
          for (unsigned i = 0; i < w; ++i)
            out.push_back(
                static_cast<std::uint8_t>(r >> (8 * (w - 1 - i)) & 0xff));
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          out.push_back(static_cast<std::uint8_t>(std::get<std::uint64_t>(v.v)));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          const auto& xs = std::get<std::vector<Value>>(v.v);
          for (std::size_t i = 0; i < node.factors.size(); ++i)
            encode_value(*node.factors[i], xs[i], out);
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          const auto& s = std::get<Value::Support>(v.v);
          if (s.size() > 255)
            throw DomainError("restricted-sum support exceeds 255 coordinates");
          out.push_back(static_cast<std::uint8_t>(s.size()));
          for (const auto& [idx, c] : s) {
            std::uint64_t key =
                node.indices == IndexSet::naturals
                    ? static_cast<std::uint64_t>(idx)
                    : static_cast<std::uint64_t>(idx + kMaxSumIndex);
            for (unsigned i = 0; i < 4; ++i)
              out.push_back(
                  static_cast<std::uint8_t>(key >> (8 * (3 - i)) & 0xff));
            encode_value(*node.component, c, out);
          }
        } else {
          const auto& xs = std::get<std::vector<Value>>(v.v);
          encode_value(*node.normal_part, xs[0], out);
          unsigned w = cyclic_width(node.acting_modulus);
          std::uint64_t r = std::get<std::uint64_t>(xs[1].v);
          for (unsigned i = 0; i < w; ++i)
            out.push_back(
                static_cast<std::uint8_t>(r >> (8 * (w - 1 - i)) & 0xff));
        }
      },
      d.node);
}

Value decode_value(const Descriptor& d, const std::vector<std::uint8_t>& in,
                   std::size_t& pos) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          unsigned w = cyclic_width(node.modulus);
          if (pos + w > in.size()) throw DecodeError("truncated cyclic residue");
          std::uint64_t r = 0;
          for (unsigned i = 0; i < w; ++i) r = (r << 8) | in[pos++];
          if (r >= node.modulus) throw DecodeError("cyclic residue out of range");
          return scalar_value(r);
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          if (pos >= in.size()) throw DecodeError("truncated quaternion code");
          std::uint64_t r = in[pos++];
          if (r >= 8) throw DecodeError("quaternion index out of range");
          return scalar_value(r);
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<Value> xs;
          xs.reserve(node.factors.size());
          for (const auto& f : node.factors)
            xs.push_back(decode_value(*f, in, pos));
          return tuple_value(std::move(xs));
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          if (pos >= in.size()) throw DecodeError("truncated sum support count");
          std::size_t count = in[pos++];
          Value comp_id = value_identity(*node.component);
          Value::Support s;
          s.reserve(count);
          std::int64_t prev = 0;
          bool have_prev = false;
          for (std::size_t k = 0; k < count; ++k) {
            if (pos + 4 > in.size()) throw DecodeError("truncated sum index");
            std::uint64_t key = 0;
            for (unsigned i = 0; i < 4; ++i) key = (key << 8) | in[pos++];
            std::int64_t idx =
                node.indices == IndexSet::naturals
                    ? static_cast<std::int64_t>(key)
                    : static_cast<std::int64_t>(key) - kMaxSumIndex;
            if (have_prev && idx <= prev)
              throw DecodeError("sum support indices not strictly increasing");
            prev = idx;
            have_prev = true;
            Value c = decode_value(*node.component, in, pos);
            if (c == comp_id)
              throw DecodeError("sum support stores an identity component");
            s.emplace_back(idx, std::move(c));
          }
          return support_value(std::move(s));
        } else {
          Value a = decode_value(*node.normal_part, in, pos);
          unsigned w = cyclic_width(node.acting_modulus);
          if (pos + w > in.size())
            throw DecodeError("truncated semidirect cyclic part");
          std::uint64_t r = 0;
          for (unsigned i = 0; i < w; ++i) r = (r << 8) | in[pos++];
          if (r >= node.acting_modulus)
            throw DecodeError("semidirect cyclic part out of range");
          return tuple_value({std::move(a), scalar_value(r)});
        }
      },
      d.node);
}

void enumerate_values(const Descriptor& d, std::vector<Value>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          for (std::uint64_t r = 0; r < node.modulus; ++r)
            out.push_back(scalar_value(r));
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          for (std::uint64_t r = 0; r < 8; ++r) out.push_back(scalar_value(r));
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<std::vector<Value>> parts;
          for (const auto& f : node.factors) {
            parts.emplace_back();
            enumerate_values(*f, parts.back());
          }
          std::vector<Value> tuple(node.factors.size());
          std::vector<std::size_t> pick(node.factors.size(), 0);
          while (true) {
            for (std::size_t i = 0; i < parts.size(); ++i)
              tuple[i] = parts[i][pick[i]];
            out.push_back(tuple_value(tuple));
            std::size_t i = parts.size();
            while (i > 0) {
              --i;
              if (++pick[i] < parts[i].size()) break;
              pick[i] = 0;
              if (i == 0) return;
            }
            if (parts.empty()) return;
          }
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          auto o = descriptor_order(d);
          if (!o) throw DomainError("cannot enumerate an infinite group");
          out.push_back(support_value({}));
        } else {
          std::vector<Value> normals;
          enumerate_values(*node.normal_part, normals);
          for (std::uint64_t x = 0; x < node.acting_modulus; ++x)
            for (const auto& a : normals)
              out.push_back(tuple_value({a, scalar_value(x)}));
        }
      },
      d.node);
}

void validate_descriptor(const Descriptor& d) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          if (node.modulus == 0) throw DomainError("cyclic modulus must be >= 1");
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          for (const auto& f : node.factors) validate_descriptor(*f);
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          validate_descriptor(*node.component);
        } else if constexpr (std::is_same_v<T, SemidirectDesc>) {
          validate_descriptor(*node.normal_part);
          if (node.acting_modulus == 0)
            throw DomainError("semidirect acting modulus must be >= 1");
          if (const auto* pa = std::get_if<PowerActionDesc>(&node.action)) {
            if (!descriptor_abelian(*node.normal_part))
              throw DomainError("power action requires an abelian normal part");
            std::uint64_t exp = abelian_exponent(*node.normal_part);
            if (exp > 1) {
              if (gcd_u64(pa->exponent % exp, exp) != 1)
                throw DomainError(
                    "power action exponent is not a unit modulo the exponent "
                    "of the normal part");
              if (pow_mod(pa->exponent, node.acting_modulus, exp) != 1)
                throw DomainError(
                    "power action order does not divide the acting modulus");
            }
          } else {
            const auto& t = std::get<TableActionDesc>(node.action);
            auto o = descriptor_order(*node.normal_part);
            if (!o)
              throw DomainError("table action requires a finite normal part");
            std::vector<Value> all;
            enumerate_values(*node.normal_part, all);
            if (t.images.size() != all.size())
              throw DomainError("table action must list every element once");
            // bijectivity + homomorphism + order dividing m, all exhaustive
            auto img = [&](const Value& a) -> Value {
              std::vector<std::uint8_t> bytes;
              encode_value(*node.normal_part, a, bytes);
              ElementCode code{std::move(bytes)};
              for (const auto& [from, to] : t.images)
                if (from == code) {
                  std::size_t pos = 0;
                  Value v = decode_value(*node.normal_part, to.bytes, pos);
                  if (pos != to.bytes.size())
                    throw DecodeError("trailing bytes in table image");
                  return v;
                }
              throw DomainError("table action misses element " + code.hex());
            };
            for (const auto& a : all)
              for (const auto& b : all) {
                Value lhs = img(value_multiply(*node.normal_part, a, b));
                Value rhs = value_multiply(*node.normal_part, img(a), img(b));
                if (!(lhs == rhs))
                  throw DomainError("table action is not a homomorphism");
              }
            std::vector<ElementCode> seen;
            for (const auto& [from, to] : t.images) seen.push_back(to);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
              throw DomainError("table action is not injective");
            for (const auto& a : all) {
              Value cur = a;
              for (std::uint64_t i = 0; i < node.acting_modulus; ++i)
                cur = img(cur);
              if (!(cur == a))
                throw DomainError(
                    "table action order does not divide the acting modulus");
            }
          }
        }
      },
      d.node);
}

} // namespace

std::vector<ElementCode> Group::elements() const {
  throw DomainError("elements() on an infinite group: " + name());
}

ElementCode Group::pow(const ElementCode& a, std::int64_t e) const {
  ElementCode base = e < 0 ? inverse(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  ElementCode acc = identity();
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return acc;
}

std::uint64_t Group::order_of(const ElementCode& a, std::uint64_t cap) const {
  ElementCode e = identity();
  ElementCode cur = a;
  std::uint64_t n = 1;
  while (!(cur == e)) {
    cur = multiply(cur, a);
    if (++n > cap)
      throw BudgetError("order_of exceeded its cap of " + std::to_string(cap));
  }
  return n;
}

DescriptorGroup::DescriptorGroup(DescriptorPtr desc) : desc_(std::move(desc)) {
  if (!desc_) throw DomainError("null descriptor");
  validate_descriptor(*desc_);
  abelian_ = descriptor_abelian(*desc_);
  order_ = descriptor_order(*desc_);
  identity_code_ = encode(value_identity(*desc_));
}

ElementCode DescriptorGroup::encode(const Value& v) const {
  std::vector<std::uint8_t> out;
  encode_value(*desc_, v, out);
  return ElementCode{std::move(out)};
}

Value DescriptorGroup::decode(const ElementCode& code) const {
  return decode_full(*desc_, code);
}

ElementCode DescriptorGroup::identity() const { return identity_code_; }

ElementCode DescriptorGroup::multiply(const ElementCode& a,
                                      const ElementCode& b) const {
  return encode(value_multiply(*desc_, decode(a), decode(b)));
}

ElementCode DescriptorGroup::inverse(const ElementCode& a) const {
  return encode(value_inverse(*desc_, decode(a)));
}

bool DescriptorGroup::contains(const ElementCode& a) const {
  try {
    decode(a);
    return true;
  } catch (const DecodeError&) {
    return false;
  }
}

std::optional<std::uint64_t> DescriptorGroup::order() const { return order_; }

std::vector<ElementCode> DescriptorGroup::elements() const {
  if (!order_) return Group::elements();
  std::vector<Value> values;
  enumerate_values(*desc_, values);
  std::vector<ElementCode> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(encode(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string DescriptorGroup::name() const {
  return descriptor_to_string(*desc_);
}

const DescriptorGroup* as_descriptor_group(const Group& g) {
  return dynamic_cast<const DescriptorGroup*>(&g);
}

} // namespace qhent
