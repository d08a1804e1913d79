#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhent {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range element encoding.
class DecodeError : public Error {
public:
  using Error::Error;
};

/// A resource cap was hit (closure budget, trajectory size budget, ...).
class BudgetError : public Error {
public:
  using Error::Error;
};

/// A structural precondition failed (not a subgroup, not normal, coset
/// partition broken, ambient mismatch).
class StructureError : public Error {
public:
  using Error::Error;
};

/// An element or morphism was used outside its domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Canonical byte encoding of a group element. Byte-lexicographic order on
/// codes is the total order used everywhere for deterministic set ordering
/// and minimal coset representatives.
struct ElementCode {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const ElementCode&) const = default;

  std::string hex() const;
  static ElementCode from_hex(const std::string& s);
};

} // namespace qhent
