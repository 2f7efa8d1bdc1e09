#pragma once

// Exact arithmetic in Z^d and the free group F_r, plus the finite-set
// combinatorics (balls, set products, translates) the criteria need.

#include "wlp/numeric.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

namespace wlp {

/// A point of Z^d. The identity is the zero vector.
struct LatticePoint {
    std::vector<BigInt> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<BigInt> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<long long> c);

    std::size_t dim() const noexcept { return coords.size(); }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords < b.coords; }
};

/// One maximal power of a single generator: gen^exp, exp != 0.
struct Syllable {
    int gen = 1;  // 1-based generator index
    BigInt exp = 1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend bool operator<(const Syllable& a, const Syllable& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.exp < b.exp;
    }
};

/// Reduced word of a free group in run-length form. Adjacent syllables
/// always carry distinct generators and no exponent is zero, so exponents
/// like 2^(2^k) cost one limb rather than 2^(2^k) letters.
class FreeWord {
public:
    FreeWord() = default;

    /// Reduces arbitrary syllable input (merges neighbours, drops zeros).
    static FreeWord from_syllables(std::vector<Syllable> syllables);
    static FreeWord generator(int gen, BigInt exp = 1);

    /// Parses "a^4 b a^-12" style text. Letters a..d name generators 1..4,
    /// "e" or the empty string is the identity.
    static FreeWord parse(std::string_view text);

    const std::vector<Syllable>& syllables() const noexcept { return syl_; }
    std::size_t syllable_count() const noexcept { return syl_.size(); }
    bool is_identity() const noexcept { return syl_.empty(); }

    /// Sum of |exponent| over syllables.
    BigInt length() const;
    int max_generator() const noexcept;

    std::string str() const;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.syl_ < b.syl_; }

    // Appends with cancellation against the current tail.
    void append(const Syllable& s);

private:
    std::vector<Syllable> syl_;
};

using GroupElement = std::variant<LatticePoint, FreeWord>;

std::string to_string(const GroupElement& g);

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Duplicate-free finite collection of group elements in insertion order.
class FiniteSet {
public:
    FiniteSet() = default;
    explicit FiniteSet(std::vector<GroupElement> elements);

    bool insert(const GroupElement& g);
    bool contains(const GroupElement& g) const { return index_.count(g) != 0; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    /// Same members, order ignored.
    friend bool operator==(const FiniteSet& a, const FiniteSet& b);

private:
    std::vector<GroupElement> elements_;
    std::unordered_set<GroupElement, GroupElementHash> index_;
};

bool disjoint(const FiniteSet& a, const FiniteSet& b);

/// Variant-level operations. These detect mixed lattice/free operands and
/// lattice dimension mismatches; Group's members additionally check rank.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);

/// Free words: total exponent length. Lattice points: l-infinity radius,
/// so that ball(n) is the box [-n, n]^d.
BigInt word_length(const GroupElement& a);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Cap from the WLP_CAP environment variable, or kDefaultEnumerationCap.
std::size_t default_enumeration_cap();

/// A group instance: Z^d or F_r, with the enumeration cap guarding ball()
/// and set_product().
class Group {
public:
    enum class Kind { Lattice, Free };

    static Group lattice(int dim, std::size_t cap = default_enumeration_cap());
    static Group free(int rank, std::size_t cap = default_enumeration_cap());
    /// "Z^d", "Z" (= Z^1) or "F_r".
    static Group parse(std::string_view name, std::size_t cap = default_enumeration_cap());

    Kind kind() const noexcept { return kind_; }
    int rank() const noexcept { return rank_; }
    std::size_t cap() const noexcept { return cap_; }
    Group with_cap(std::size_t cap) const;
    std::string name() const;

    bool is_lattice() const noexcept { return kind_ == Kind::Lattice; }
    bool is_free() const noexcept { return kind_ == Kind::Free; }

    bool contains(const GroupElement& g) const noexcept;
    /// Throws UsageError when g is not an element of this group.
    void require(const GroupElement& g) const;

    GroupElement identity() const;
    /// Standard generators (not their inverses): unit vectors or letters.
    std::vector<GroupElement> generators() const;

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement invert(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, const BigInt& n) const;
    BigInt word_length(const GroupElement& a) const;

    /// Exact |ball(radius)|, without enumerating.
    BigInt ball_size(unsigned radius) const;
    /// Elements with word_length <= radius. Throws ResourceError over cap.
    FiniteSet ball(unsigned radius) const;
    /// Streaming variants; no cap applies since nothing is stored.
    void for_each_in_ball(unsigned radius, const std::function<void(const GroupElement&)>& visit) const;
    void for_each_in_sphere(unsigned radius, const std::function<void(const GroupElement&)>& visit) const;

    /// {ab : a in A, b in B}. Throws ResourceError when the result exceeds cap.
    FiniteSet set_product(const FiniteSet& a, const FiniteSet& b) const;
    /// {s a : a in A}
    FiniteSet translate_set(const GroupElement& s, const FiniteSet& a) const;
    /// {a s : a in A}
    FiniteSet right_translate_set(const FiniteSet& a, const GroupElement& s) const;
    /// {a^-1 : a in A}
    FiniteSet inverse_set(const FiniteSet& a) const;

    friend bool operator==(const Group& a, const Group& b) {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_;
    }

private:
    Group(Kind kind, int rank, std::size_t cap) : kind_(kind), rank_(rank), cap_(cap) {}

    Kind kind_;
    int rank_;
    std::size_t cap_;
};

}  // namespace wlp
