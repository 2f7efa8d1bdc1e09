#pragma once

// Weights on F_2 = <a, b> built from the doubly exponential sequence
// n_k = 2^(2^k): a non-dense weight concentrated near a^(+-n_k), and a
// semigroup weight supported on the translates S * s_l s_k^-1 U^k.

#include "wlp/weight.hpp"

#include <optional>
#include <vector>

namespace wlp {

/// n_k = 2^(2^k), k >= 1.
BigInt tower(unsigned k);
/// k >= 1 with x == n_k, if any.
std::optional<unsigned> tower_index(const BigInt& x);

/// s_j = a^(n_j) b, the generators of the semigroup S.
FreeWord semigroup_generator(unsigned j);

enum class SuffixClass { Identity, A, B, AInverse, BInverse };

/// Class of the final letter of the reduced word.
SuffixClass suffix_class(const FreeWord& w);
std::string to_string(SuffixClass c);

/// Where w sits in (U^j \ U^(j-1)) a^(sign n_k), if j <= k <= k_max.
struct NondenseShell {
    unsigned j;
    unsigned k;
    int sign;
};
std::optional<NondenseShell> nondense_shell(const FreeWord& w, unsigned k_max);

/// 2^(j-k) on (U^j \ U^(j-1)) a^(+-n_k) for 0 <= j <= k <= k_max, else 1.
DyadicValue eval_f2_nondense(const FreeWord& w, unsigned k_max = 4);

class F2NondenseWeight final : public Weight {
public:
    explicit F2NondenseWeight(unsigned k_max = 4);
    std::string id() const override { return "f2_nondense"; }
    std::string describe() const override;
    unsigned k_max() const noexcept { return k_max_; }
    DyadicValue eval(const GroupElement& g) const override;
    /// w(ug) <= 2 w(g) for every letter u, hence ||T_g|| <= 2^|g|.
    std::optional<DeclaredBound> left_bound(const GroupElement& g) const override;

private:
    unsigned k_max_;
};

/// Normal form of a member of S * V_(l,k), V_(l,k) = s_l s_k^-1 U^k:
/// s_(j1) ... s_(jm) a^power remainder, with remainder not starting in a^(+-1).
struct SemigroupPrefixParse {
    std::vector<unsigned> prefix_factors;  // j_1 .. j_m
    unsigned l = 0;
    unsigned k = 0;
    BigInt power;
    FreeWord remainder;

    FreeWord reassemble() const;
    friend bool operator==(const SemigroupPrefixParse&, const SemigroupPrefixParse&) = default;
};

/// Decides membership of w in S * V_(l,k) for some l != k (S includes the
/// empty product). Returns nullopt when w is definitely not a member.
/// Throws SearchExhausted when w is a member only through indices l, k
/// beyond l_max or a prefix longer than depth_max.
std::optional<SemigroupPrefixParse> parse_sv_membership(const FreeWord& w, unsigned l_max, unsigned depth_max);

/// 8^(-l-k) = 2^(-3(l+k)) on S * V_(l,k), 1 elsewhere.
DyadicValue eval_f2_semigroup(const FreeWord& w, unsigned l_max = 4, unsigned depth_max = 8);

/// True when w is a (possibly empty) product of the s_j.
bool in_semigroup(const FreeWord& w);

class F2SemigroupWeight final : public Weight {
public:
    F2SemigroupWeight(unsigned l_max = 4, unsigned depth_max = 8);
    std::string id() const override { return "f2_semigroup"; }
    std::string describe() const override;
    unsigned l_max() const noexcept { return l_max_; }
    unsigned depth_max() const noexcept { return depth_max_; }
    DyadicValue eval(const GroupElement& g) const override;
    /// Left translation by s in S maps every S * V_(l,k) into itself, so ||T_s|| <= 1.
    std::optional<DeclaredBound> left_bound(const GroupElement& g) const override;

private:
    unsigned l_max_;
    unsigned depth_max_;
};

}  // namespace wlp
