#include "qhent/element_code.hpp"

namespace qhent {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
} // namespace

std::string ElementCode::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

ElementCode ElementCode::from_hex(const std::string& s) {
  if (s.size() % 2 != 0) throw DecodeError("hex string has odd length: " + s);
  ElementCode code;
  code.bytes.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    int hi = hex_nibble(s[i]);
    int lo = hex_nibble(s[i + 1]);
    if (hi < 0 || lo < 0) throw DecodeError("invalid hex digit in: " + s);
    code.bytes.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return code;
}

} // namespace qhent
