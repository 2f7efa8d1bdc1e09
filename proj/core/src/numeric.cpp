#include "wlp/numeric.hpp"

#include "wlp/errors.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace wlp {

Rational pow2(const BigInt& e) {
    if (e > kMaxShift || e < -kMaxShift) {
        throw ResourceError("dyadic exponent " + e.str() + " is too large to materialise as a rational");
    }
    return pow2(static_cast<std::int64_t>(e));
}

Rational pow2(std::int64_t e) {
    if (e > kMaxShift || e < -kMaxShift) {
        throw ResourceError("dyadic exponent " + std::to_string(e) + " is too large to materialise as a rational");
    }
    BigInt one = 1;
    if (e >= 0) return Rational(one << static_cast<unsigned>(e));
    return Rational(one, one << static_cast<unsigned>(-e));
}

BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational ipow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return boost::multiprecision::msb(abs(x)) + 1;
}

bool is_power_of_two(const BigInt& x) {
    if (x <= 0) return false;
    return boost::multiprecision::lsb(x) == boost::multiprecision::msb(x);
}

BigInt parse_bigint(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    bool neg = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    if (t.empty()) throw ValidationError("empty integer literal");
    BigInt value = 0;
    for (char c : t) {
        if (c < '0' || c > '9') throw ValidationError("malformed integer literal '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return neg ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_string(const BigInt& x) { return x.str(); }

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw ResourceError("integer " + x.str() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(x);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::size_t hash_value(const BigInt& x) noexcept {
    const auto& backend = x.backend();
    std::size_t seed = backend.sign() ? 0x51ed27ULL : 0x2545f4ULL;
    const auto* limbs = backend.limbs();
    for (unsigned i = 0; i < backend.size(); ++i) {
        hash_combine(seed, static_cast<std::size_t>(limbs[i]));
    }
    return seed;
}

}  // namespace wlp
