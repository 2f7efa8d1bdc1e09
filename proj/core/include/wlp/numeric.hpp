#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace wlp {

// Expression templates off: results bind cleanly to auto and overloads.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// 2^e as an exact rational. Throws ResourceError when |e| exceeds kMaxShift.
Rational pow2(const BigInt& e);
Rational pow2(std::int64_t e);

inline constexpr std::int64_t kMaxShift = 1 << 20;

/// |x|
BigInt abs(const BigInt& x);
Rational abs(const Rational& x);

/// Integer power of a rational, exponent >= 0.
Rational ipow(const Rational& base, unsigned exponent);

/// Number of bits in |x| (0 for x == 0).
std::size_t bit_length(const BigInt& x);

/// Exact log2 when x is a positive power of two.
bool is_power_of_two(const BigInt& x);

/// Parse "p", "p/q" (decimal integers, optional sign). Throws ValidationError.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// "p/q" or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& x);

/// Narrowing with range check (throws ResourceError).
std::int64_t to_int64(const BigInt& x);

double to_double(const Rational& q);

std::size_t hash_value(const BigInt& x) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace wlp
