#pragma once

#include "wlp/numeric.hpp"

#include <compare>
#include <string>

namespace wlp {

/// Strictly positive weight value. Every weight built into the library
/// takes values 2^e; user tables may supply an arbitrary positive rational,
/// and non-integer Salas exponents fall back to a double (inexact track).
class DyadicValue {
public:
    enum class Kind { Dyadic, Rational, Real };

    /// 1 = 2^0
    DyadicValue() = default;

    static DyadicValue pow2(BigInt exponent);
    /// Normalises to Dyadic when q is an exact power of two. q must be > 0.
    static DyadicValue from_rational(const Rational& q);
    static DyadicValue from_real(double x);

    Kind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ != Kind::Real; }
    bool is_dyadic() const noexcept { return kind_ == Kind::Dyadic; }

    /// Exponent of 2; only for Dyadic values.
    const BigInt& exponent() const;
    /// Exact value; throws UsageError on the Real track.
    Rational to_rational() const;
    double to_double() const;

    /// log2 of the value (exact for Dyadic).
    double log2() const;

    DyadicValue pow(unsigned p) const;

    friend DyadicValue operator*(const DyadicValue& a, const DyadicValue& b);
    friend DyadicValue operator/(const DyadicValue& a, const DyadicValue& b);

    friend bool operator==(const DyadicValue& a, const DyadicValue& b);
    friend std::strong_ordering operator<=>(const DyadicValue& a, const DyadicValue& b);

    /// "2^-3", "3/5" or a decimal for the Real track.
    std::string str() const;

private:
    Kind kind_ = Kind::Dyadic;
    BigInt exp_ = 0;
    Rational q_ = 1;
    double x_ = 1.0;
};

}  // namespace wlp
