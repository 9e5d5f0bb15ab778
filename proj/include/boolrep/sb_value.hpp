#pragma once

#include <cstdint>
#include <string_view>

namespace boolrep {

// Superboolean values: 1 + 1 saturates to OneNu.
enum class SBValue : std::uint8_t { Zero, One, OneNu };

constexpr SBValue operator+(SBValue a, SBValue b) {
  if (a == SBValue::Zero) return b;
  if (b == SBValue::Zero) return a;
  return SBValue::OneNu;
}

constexpr SBValue operator*(SBValue a, SBValue b) {
  if (a == SBValue::Zero || b == SBValue::Zero) return SBValue::Zero;
  if (a == SBValue::One) return b;
  return SBValue::OneNu;
}

constexpr SBValue& operator+=(SBValue& a, SBValue b) { return a = a + b; }
constexpr SBValue& operator*=(SBValue& a, SBValue b) { return a = a * b; }

constexpr std::string_view to_string(SBValue v) {
  switch (v) {
    case SBValue::Zero: return "0";
    case SBValue::One: return "1";
    case SBValue::OneNu: return "1nu";
  }
  return "?";
}

}  // namespace boolrep
