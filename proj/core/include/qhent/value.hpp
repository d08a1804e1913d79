#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace qhent {

/// Structured element of a descriptor-built group.
///  - Cyclic / Q8: a residue or table index.
///  - Product: one entry per factor. Semidirect: {normal part, residue}.
///  - Restricted sum: sorted (index, component) support, identity omitted.
struct Value {
  using Support = std::vector<std::pair<std::int64_t, Value>>;
  std::variant<std::uint64_t, std::vector<Value>, Support> v;

  friend bool operator==(const Value&, const Value&) = default;
};

inline Value scalar_value(std::uint64_t x) { return Value{x}; }
inline Value tuple_value(std::vector<Value> xs) { return Value{std::move(xs)}; }
inline Value support_value(Value::Support s) { return Value{std::move(s)}; }

} // namespace qhent
