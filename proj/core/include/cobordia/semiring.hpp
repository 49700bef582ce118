#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cobordia/checked.hpp"

namespace cobordia {

/// Arbitrary-precision exact rational; the default carrier for anything that
/// must hold identities on the nose.
using Rational = boost::multiprecision::cpp_rational;

/// A commutative semiring presented through static operations on a value
/// type. The laws themselves are not expressible in the type system; a law
/// suite asserts them per instance in the tests.
template <class S>
concept Semiring = requires(const typename S::Value& a, const typename S::Value& b) {
  typename S::Value;
  { S::zero() } -> std::convertible_to<typename S::Value>;
  { S::one() } -> std::convertible_to<typename S::Value>;
  { S::add(a, b) } -> std::convertible_to<typename S::Value>;
  { S::mul(a, b) } -> std::convertible_to<typename S::Value>;
  { S::eq(a, b) } -> std::convertible_to<bool>;
  { S::name() } -> std::convertible_to<std::string_view>;
};

/// 64-bit integers with overflow-checked arithmetic; never wraps silently.
struct IntSemiring {
  using Value = std::int64_t;
  static constexpr Value zero() noexcept { return 0; }
  static constexpr Value one() noexcept { return 1; }
  static Value add(Value a, Value b) { return checked_add(a, b); }
  static Value mul(Value a, Value b) { return checked_mul(a, b); }
  static constexpr bool eq(Value a, Value b) noexcept { return a == b; }
  static constexpr std::string_view name() noexcept { return "int"; }
};

/// Checked 64-bit naturals.
struct NaturalSemiring {
  using Value = std::uint64_t;
  static constexpr Value zero() noexcept { return 0; }
  static constexpr Value one() noexcept { return 1; }
  static Value add(Value a, Value b) { return checked_add(a, b); }
  static Value mul(Value a, Value b) { return checked_mul(a, b); }
  static constexpr bool eq(Value a, Value b) noexcept { return a == b; }
  static constexpr std::string_view name() noexcept { return "natural"; }
};

/// Exact rationals of unbounded size.
struct RationalSemiring {
  using Value = Rational;
  static Value zero() { return Value(0); }
  static Value one() { return Value(1); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static bool eq(const Value& a, const Value& b) { return a == b; }
  static constexpr std::string_view name() noexcept { return "rational"; }
};

/// Doubles compared with an absolute tolerance of 1e-9. Not exact; never used
/// where identities must hold on the nose.
struct DoubleSemiring {
  using Value = double;
  static constexpr double kTolerance = 1e-9;
  static constexpr Value zero() noexcept { return 0.0; }
  static constexpr Value one() noexcept { return 1.0; }
  static constexpr Value add(Value a, Value b) noexcept { return a + b; }
  static constexpr Value mul(Value a, Value b) noexcept { return a * b; }
  static bool eq(Value a, Value b) noexcept { return std::fabs(a - b) <= kTolerance; }
  static constexpr std::string_view name() noexcept { return "double"; }
};

/// n as a semiring element: 1 + 1 + ... + 1, n times.
template <Semiring S>
typename S::Value semiring_from_count(std::uint64_t n) {
  typename S::Value acc = S::zero();
  for (std::uint64_t i = 0; i < n; ++i) acc = S::add(acc, S::one());
  return acc;
}

/// base^exponent by repeated multiplication.
template <Semiring S>
typename S::Value semiring_pow(const typename S::Value& base, std::uint64_t exponent) {
  typename S::Value acc = S::one();
  for (std::uint64_t i = 0; i < exponent; ++i) acc = S::mul(acc, base);
  return acc;
}

}  // namespace cobordia
