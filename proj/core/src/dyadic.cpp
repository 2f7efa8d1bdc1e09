#include "wlp/dyadic.hpp"

#include "wlp/errors.hpp"

#include <cmath>
#include <sstream>

namespace wlp {

DyadicValue DyadicValue::pow2(BigInt exponent) {
    DyadicValue v;
    v.exp_ = std::move(exponent);
    return v;
}

DyadicValue DyadicValue::from_rational(const Rational& q) {
    if (q <= 0) throw UsageError("weight values must be strictly positive, got " + to_string(q));
    const BigInt& num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1 && is_power_of_two(num)) return pow2(BigInt(boost::multiprecision::msb(num)));
    if (num == 1 && is_power_of_two(den)) return pow2(-BigInt(boost::multiprecision::msb(den)));
    DyadicValue v;
    v.kind_ = Kind::Rational;
    v.q_ = q;
    return v;
}

DyadicValue DyadicValue::from_real(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw UsageError("weight values must be finite and strictly positive");
    DyadicValue v;
    v.kind_ = Kind::Real;
    v.x_ = x;
    return v;
}

const BigInt& DyadicValue::exponent() const {
    if (kind_ != Kind::Dyadic) throw UsageError("value " + str() + " is not a power of two");
    return exp_;
}

Rational DyadicValue::to_rational() const {
    switch (kind_) {
        case Kind::Dyadic: return wlp::pow2(exp_);
        case Kind::Rational: return q_;
        case Kind::Real: break;
    }
    throw UsageError("value " + str() + " is on the floating-point track and has no exact rational form");
}

double DyadicValue::to_double() const {
    switch (kind_) {
        case Kind::Dyadic: {
            if (exp_ > 100000) return HUGE_VAL;
            if (exp_ < -100000) return 0.0;
            return std::ldexp(1.0, static_cast<int>(exp_));
        }
        case Kind::Rational: return wlp::to_double(q_);
        case Kind::Real: return x_;
    }
    return x_;
}

double DyadicValue::log2() const {
    if (kind_ == Kind::Dyadic) return exp_.convert_to<double>();
    return std::log2(to_double());
}

DyadicValue DyadicValue::pow(unsigned p) const {
    switch (kind_) {
        case Kind::Dyadic: return pow2(exp_ * p);
        case Kind::Rational: return from_rational(ipow(q_, p));
        case Kind::Real: return from_real(std::pow(x_, static_cast<double>(p)));
    }
    return *this;
}

DyadicValue operator*(const DyadicValue& a, const DyadicValue& b) {
    using K = DyadicValue::Kind;
    if (a.kind_ == K::Dyadic && b.kind_ == K::Dyadic) return DyadicValue::pow2(a.exp_ + b.exp_);
    if (a.is_exact() && b.is_exact()) return DyadicValue::from_rational(a.to_rational() * b.to_rational());
    return DyadicValue::from_real(a.to_double() * b.to_double());
}

DyadicValue operator/(const DyadicValue& a, const DyadicValue& b) {
    using K = DyadicValue::Kind;
    if (a.kind_ == K::Dyadic && b.kind_ == K::Dyadic) return DyadicValue::pow2(a.exp_ - b.exp_);
    if (a.is_exact() && b.is_exact()) return DyadicValue::from_rational(a.to_rational() / b.to_rational());
    return DyadicValue::from_real(a.to_double() / b.to_double());
}

std::strong_ordering operator<=>(const DyadicValue& a, const DyadicValue& b) {
    using K = DyadicValue::Kind;
    auto cmp = [](const auto& x, const auto& y) {
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    };
    if (a.kind_ == K::Dyadic && b.kind_ == K::Dyadic) return cmp(a.exp_, b.exp_);
    if (a.is_exact() && b.is_exact()) return cmp(a.to_rational(), b.to_rational());
    return cmp(a.to_double(), b.to_double());
}

bool operator==(const DyadicValue& a, const DyadicValue& b) { return (a <=> b) == 0; }

std::string DyadicValue::str() const {
    switch (kind_) {
        case Kind::Dyadic: return "2^" + exp_.str();
        case Kind::Rational: return to_string(q_);
        case Kind::Real: break;
    }
    std::ostringstream os;
    os.precision(17);
    os << x_;
    return os.str();
}

}  // namespace wlp
