#include "wlp/group.hpp"

#include "wlp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace wlp {

LatticePoint::LatticePoint(std::initializer_list<long long> c) {
    coords.reserve(c.size());
    for (long long v : c) coords.emplace_back(v);
}

// ---------------------------------------------------------------- FreeWord

void FreeWord::append(const Syllable& s) {
    if (s.exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == s.gen) {
        syl_.back().exp += s.exp;
        if (syl_.back().exp == 0) syl_.pop_back();
        return;
    }
    syl_.push_back(s);
}

FreeWord FreeWord::from_syllables(std::vector<Syllable> syllables) {
    FreeWord w;
    w.syl_.reserve(syllables.size());
    for (auto& s : syllables) {
        if (s.gen < 1) throw UsageError("generator index must be >= 1, got " + std::to_string(s.gen));
        w.append(s);
    }
    return w;
}

FreeWord FreeWord::generator(int gen, BigInt exp) {
    return from_syllables({Syllable{gen, std::move(exp)}});
}

FreeWord FreeWord::parse(std::string_view text) {
    std::vector<Syllable> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == 'e') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ValidationError("identity 'e' cannot be combined with letters: '" + std::string(text) + "'");
        return {};
    }
    while (i < text.size()) {
        char c = text[i];
        if (c < 'a' || c > 'd') {
            throw ValidationError("unexpected character '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
        }
        ++i;
        BigInt exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            exp = parse_bigint(text.substr(start, i - start));
        }
        out.push_back(Syllable{c - 'a' + 1, exp});
        skip_ws();
    }
    return from_syllables(std::move(out));
}

BigInt FreeWord::length() const {
    BigInt len = 0;
    for (const auto& s : syl_) len += wlp::abs(s.exp);
    return len;
}

int FreeWord::max_generator() const noexcept {
    int m = 0;
    for (const auto& s : syl_) m = std::max(m, s.gen);
    return m;
}

std::string FreeWord::str() const {
    if (syl_.empty()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << ' ';
        first = false;
        if (s.gen <= 4) {
            os << static_cast<char>('a' + s.gen - 1);
        } else {
            os << 'g' << s.gen;
        }
        if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
}

// ---------------------------------------------------------------- elements

std::string to_string(const GroupElement& g) {
    if (const auto* w = std::get_if<FreeWord>(&g)) return w->str();
    const auto& p = std::get<LatticePoint>(g);
    std::string out = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) out += ",";
        out += p.coords[i].str();
    }
    return out + ")";
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t seed = g.index();
    if (const auto* w = std::get_if<FreeWord>(&g)) {
        for (const auto& s : w->syllables()) {
            hash_combine(seed, static_cast<std::size_t>(s.gen));
            hash_combine(seed, hash_value(s.exp));
        }
    } else {
        for (const auto& c : std::get<LatticePoint>(g).coords) hash_combine(seed, hash_value(c));
    }
    return seed;
}

FiniteSet::FiniteSet(std::vector<GroupElement> elements) {
    elements_.reserve(elements.size());
    for (auto& e : elements) insert(e);
}

bool FiniteSet::insert(const GroupElement& g) {
    if (!index_.insert(g).second) return false;
    elements_.push_back(g);
    return true;
}

bool operator==(const FiniteSet& a, const FiniteSet& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const GroupElement& g) { return b.contains(g); });
}

bool disjoint(const FiniteSet& a, const FiniteSet& b) {
    const FiniteSet& small = a.size() <= b.size() ? a : b;
    const FiniteSet& large = a.size() <= b.size() ? b : a;
    return std::none_of(small.begin(), small.end(), [&](const GroupElement& g) { return large.contains(g); });
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) throw UsageError("cannot multiply a lattice point with a free word");
    if (const auto* pa = std::get_if<LatticePoint>(&a)) {
        const auto& pb = std::get<LatticePoint>(b);
        if (pa->dim() != pb.dim()) {
            throw UsageError("lattice dimension mismatch: " + std::to_string(pa->dim()) + " vs " + std::to_string(pb.dim()));
        }
        LatticePoint r;
        r.coords.resize(pa->dim());
        for (std::size_t i = 0; i < pa->dim(); ++i) r.coords[i] = pa->coords[i] + pb.coords[i];
        return r;
    }
    FreeWord r = std::get<FreeWord>(a);
    for (const auto& s : std::get<FreeWord>(b).syllables()) r.append(s);
    return r;
}

GroupElement invert(const GroupElement& a) {
    if (const auto* p = std::get_if<LatticePoint>(&a)) {
        LatticePoint r;
        r.coords.reserve(p->dim());
        for (const auto& c : p->coords) r.coords.push_back(-c);
        return r;
    }
    const auto& syl = std::get<FreeWord>(a).syllables();
    std::vector<Syllable> rev;
    rev.reserve(syl.size());
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) rev.push_back(Syllable{it->gen, -it->exp});
    return FreeWord::from_syllables(std::move(rev));
}

BigInt word_length(const GroupElement& a) {
    if (const auto* w = std::get_if<FreeWord>(&a)) return w->length();
    BigInt r = 0;
    for (const auto& c : std::get<LatticePoint>(a).coords) r = std::max(r, wlp::abs(c));
    return r;
}

std::size_t default_enumeration_cap() {
    if (const char* env = std::getenv("WLP_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultEnumerationCap;
}

// ---------------------------------------------------------------- Group

Group Group::lattice(int dim, std::size_t cap) {
    if (dim < 1) throw UsageError("lattice dimension must be >= 1");
    return Group(Kind::Lattice, dim, cap);
}

Group Group::free(int rank, std::size_t cap) {
    if (rank < 1) throw UsageError("free group rank must be >= 1");
    return Group(Kind::Free, rank, cap);
}

Group Group::parse(std::string_view name, std::size_t cap) {
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ValidationError("malformed group name '" + std::string(name) + "' (expected Z^d or F_r)");
        }
        return std::stoi(std::string(digits));
    };
    if (name == "Z") return lattice(1, cap);
    if (name.size() > 2 && name.substr(0, 2) == "Z^") return lattice(parse_int(name.substr(2)), cap);
    if (name.size() > 2 && name.substr(0, 2) == "F_") return free(parse_int(name.substr(2)), cap);
    throw ValidationError("unknown group '" + std::string(name) + "' (expected Z^d or F_r)");
}

Group Group::with_cap(std::size_t cap) const { return Group(kind_, rank_, cap); }

std::string Group::name() const {
    return (kind_ == Kind::Lattice ? "Z^" : "F_") + std::to_string(rank_);
}

bool Group::contains(const GroupElement& g) const noexcept {
    if (kind_ == Kind::Lattice) {
        const auto* p = std::get_if<LatticePoint>(&g);
        return p != nullptr && p->dim() == static_cast<std::size_t>(rank_);
    }
    const auto* w = std::get_if<FreeWord>(&g);
    return w != nullptr && w->max_generator() <= rank_;
}

void Group::require(const GroupElement& g) const {
    if (!contains(g)) throw UsageError("element " + to_string(g) + " does not belong to " + name());
}

GroupElement Group::identity() const {
    if (kind_ == Kind::Lattice) return LatticePoint(std::vector<BigInt>(static_cast<std::size_t>(rank_), BigInt(0)));
    return FreeWord{};
}

std::vector<GroupElement> Group::generators() const {
    std::vector<GroupElement> out;
    for (int i = 0; i < rank_; ++i) {
        if (kind_ == Kind::Lattice) {
            std::vector<BigInt> c(static_cast<std::size_t>(rank_), BigInt(0));
            c[static_cast<std::size_t>(i)] = 1;
            out.emplace_back(LatticePoint(std::move(c)));
        } else {
            out.emplace_back(FreeWord::generator(i + 1));
        }
    }
    return out;
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
    require(a);
    require(b);
    return wlp::multiply(a, b);
}

GroupElement Group::invert(const GroupElement& a) const {
    require(a);
    return wlp::invert(a);
}

GroupElement Group::power(const GroupElement& a, const BigInt& n) const {
    require(a);
    if (const auto* p = std::get_if<LatticePoint>(&a)) {
        LatticePoint r;
        for (const auto& c : p->coords) r.coords.push_back(c * n);
        return r;
    }
    GroupElement base = n < 0 ? wlp::invert(a) : a;
    BigInt k = wlp::abs(n);
    GroupElement result = identity();
    while (k != 0) {
        if ((k & 1) != 0) result = wlp::multiply(result, base);
        k >>= 1;
        if (k != 0) base = wlp::multiply(base, base);
    }
    return result;
}

BigInt Group::word_length(const GroupElement& a) const {
    require(a);
    return wlp::word_length(a);
}

BigInt Group::ball_size(unsigned radius) const {
    if (kind_ == Kind::Lattice) {
        BigInt side = 2 * BigInt(radius) + 1;
        return boost::multiprecision::pow(side, static_cast<unsigned>(rank_));
    }
    // 1 + sum_{m=1..n} 2r (2r-1)^(m-1)
    BigInt total = 1;
    BigInt shell = 2 * rank_;
    for (unsigned m = 1; m <= radius; ++m) {
        total += shell;
        shell *= (2 * rank_ - 1);
    }
    return total;
}

namespace {

void lattice_box(int dim, long long radius, bool sphere_only, const std::function<void(const GroupElement&)>& visit) {
    std::vector<BigInt> cur(static_cast<std::size_t>(dim));
    std::function<void(int, bool)> rec = [&](int i, bool on_boundary) {
        if (i == dim) {
            visit(LatticePoint(cur));
            return;
        }
        if (sphere_only && !on_boundary && i == dim - 1) {
            cur[static_cast<std::size_t>(i)] = -radius;
            rec(i + 1, true);
            if (radius != 0) {
                cur[static_cast<std::size_t>(i)] = radius;
                rec(i + 1, true);
            }
            return;
        }
        for (long long c = -radius; c <= radius; ++c) {
            cur[static_cast<std::size_t>(i)] = c;
            rec(i + 1, on_boundary || c == radius || c == -radius);
        }
    };
    rec(0, false);
}

// Words with length in [min_len, max_len]; DFS over syllables.
void free_words(int rank, unsigned min_len, unsigned max_len, const std::function<void(const GroupElement&)>& visit) {
    std::vector<Syllable> cur;
    std::function<void(unsigned, int)> rec = [&](unsigned len, int last_gen) {
        if (len >= min_len) visit(FreeWord::from_syllables(cur));
        if (len == max_len) return;
        for (int g = 1; g <= rank; ++g) {
            if (g == last_gen) continue;
            for (unsigned e = 1; len + e <= max_len; ++e) {
                for (int sign : {1, -1}) {
                    cur.push_back(Syllable{g, BigInt(sign) * e});
                    rec(len + e, g);
                    cur.pop_back();
                }
            }
        }
    };
    rec(0, 0);
}

}  // namespace

void Group::for_each_in_ball(unsigned radius, const std::function<void(const GroupElement&)>& visit) const {
    if (kind_ == Kind::Lattice) {
        lattice_box(rank_, radius, false, visit);
    } else {
        free_words(rank_, 0, radius, visit);
    }
}

void Group::for_each_in_sphere(unsigned radius, const std::function<void(const GroupElement&)>& visit) const {
    if (kind_ == Kind::Lattice) {
        lattice_box(rank_, radius, true, visit);
    } else {
        free_words(rank_, radius, radius, visit);
    }
}

FiniteSet Group::ball(unsigned radius) const {
    BigInt size = ball_size(radius);
    if (size > cap_) {
        throw ResourceError("ball(" + std::to_string(radius) + ") in " + name() + " has " + size.str() +
                            " elements, exceeding the enumeration cap of " + std::to_string(cap_));
    }
    FiniteSet out;
    for_each_in_ball(radius, [&](const GroupElement& g) { out.insert(g); });
    return out;
}

FiniteSet Group::set_product(const FiniteSet& a, const FiniteSet& b) const {
    FiniteSet out;
    for (const auto& x : a) {
        require(x);
        for (const auto& y : b) {
            out.insert(wlp::multiply(x, y));
            if (out.size() > cap_) {
                throw ResourceError("set product in " + name() + " exceeds the enumeration cap of " + std::to_string(cap_));
            }
        }
    }
    return out;
}

FiniteSet Group::translate_set(const GroupElement& s, const FiniteSet& a) const {
    require(s);
    FiniteSet out;
    for (const auto& x : a) out.insert(wlp::multiply(s, x));
    return out;
}

FiniteSet Group::right_translate_set(const FiniteSet& a, const GroupElement& s) const {
    require(s);
    FiniteSet out;
    for (const auto& x : a) out.insert(wlp::multiply(x, s));
    return out;
}

FiniteSet Group::inverse_set(const FiniteSet& a) const {
    FiniteSet out;
    for (const auto& x : a) out.insert(wlp::invert(x));
    return out;
}

}  // namespace wlp
