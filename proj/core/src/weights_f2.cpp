#include "wlp/weights_f2.hpp"

#include "wlp/errors.hpp"

namespace wlp {

namespace {

constexpr int kA = 1;
constexpr int kB = 2;
constexpr unsigned kMaxTowerIndex = 24;

const FreeWord& as_f2_word(const Group& group, const GroupElement& g) {
    group.require(g);
    return std::get<FreeWord>(g);
}

}  // namespace

BigInt tower(unsigned k) {
    if (k == 0 || k > kMaxTowerIndex) throw UsageError("tower index must be in 1.." + std::to_string(kMaxTowerIndex));
    return BigInt(1) << (1U << k);
}

std::optional<unsigned> tower_index(const BigInt& x) {
    if (!is_power_of_two(x)) return std::nullopt;
    auto bits = boost::multiprecision::msb(x);  // x = 2^bits
    if (bits < 2 || (bits & (bits - 1)) != 0) return std::nullopt;
    unsigned k = 0;
    while ((std::size_t{1} << k) < bits) ++k;
    return k;
}

FreeWord semigroup_generator(unsigned j) {
    return FreeWord::from_syllables({Syllable{kA, tower(j)}, Syllable{kB, 1}});
}

SuffixClass suffix_class(const FreeWord& w) {
    if (w.is_identity()) return SuffixClass::Identity;
    const Syllable& last = w.syllables().back();
    if (last.gen == kA) return last.exp > 0 ? SuffixClass::A : SuffixClass::AInverse;
    if (last.gen == kB) return last.exp > 0 ? SuffixClass::B : SuffixClass::BInverse;
    throw UsageError("suffix_class is defined on F_2 words only");
}

std::string to_string(SuffixClass c) {
    switch (c) {
        case SuffixClass::Identity: return "identity";
        case SuffixClass::A: return "F_a";
        case SuffixClass::B: return "F_b";
        case SuffixClass::AInverse: return "F_a^-1";
        case SuffixClass::BInverse: return "F_b^-1";
    }
    return "?";
}

// ---------------------------------------------------------------- non-dense weight

std::optional<NondenseShell> nondense_shell(const FreeWord& w, unsigned k_max) {
    const auto& syl = w.syllables();
    BigInt tail = 0;
    BigInt head_len = w.length();
    if (!syl.empty() && syl.back().gen == kA) {
        tail = syl.back().exp;
        head_len -= wlp::abs(tail);
    }
    // w a^(-sign n_k) = head a^(tail - sign n_k) has length head_len + |tail - sign n_k|.
    // n_k > k and n_(k+1) - n_k > 2k keep the match unique.
    for (unsigned k = 1; k <= k_max; ++k) {
        if (head_len > k) continue;
        const BigInt nk = tower(k);
        for (int sign : {1, -1}) {
            BigInt j = head_len + wlp::abs(tail - sign * nk);
            if (j <= k) return NondenseShell{static_cast<unsigned>(j), k, sign};
        }
    }
    return std::nullopt;
}

DyadicValue eval_f2_nondense(const FreeWord& w, unsigned k_max) {
    if (auto shell = nondense_shell(w, k_max)) {
        return DyadicValue::pow2(BigInt(static_cast<long>(shell->j)) - static_cast<long>(shell->k));
    }
    return {};
}

F2NondenseWeight::F2NondenseWeight(unsigned k_max) : Weight(Group::free(2)), k_max_(k_max) {
    if (k_max_ < 1 || k_max_ > kMaxTowerIndex) throw ValidationError("f2_nondense k_max must be in 1..24");
}

std::string F2NondenseWeight::describe() const { return "f2_nondense{k_max=" + std::to_string(k_max_) + "}"; }

DyadicValue F2NondenseWeight::eval(const GroupElement& g) const {
    return eval_f2_nondense(as_f2_word(group(), g), k_max_);
}

std::optional<DeclaredBound> F2NondenseWeight::left_bound(const GroupElement& g) const {
    group().require(g);
    return DeclaredBound{DyadicValue::pow2(word_length(g)), "one-letter growth w(ug) <= 2 w(g), iterated |g| times"};
}

// ---------------------------------------------------------------- semigroup weight

FreeWord SemigroupPrefixParse::reassemble() const {
    FreeWord w;
    for (unsigned j : prefix_factors) {
        w.append(Syllable{kA, tower(j)});
        w.append(Syllable{kB, 1});
    }
    w.append(Syllable{kA, power});
    for (const auto& s : remainder.syllables()) w.append(s);
    return w;
}

std::optional<SemigroupPrefixParse> parse_sv_membership(const FreeWord& w, unsigned l_max, unsigned depth_max) {
    const auto& syl = w.syllables();
    if (w.max_generator() > kB) throw UsageError("parse_sv_membership expects an F_2 word");

    // Leading blocks a^(n_j) b. The central power p never equals any n_nu
    // (it lies strictly between n_l / 2 and n_l), so greedy matching is exact.
    std::vector<unsigned> factors;
    std::size_t idx = 0;
    while (idx + 1 < syl.size() && syl[idx].gen == kA && syl[idx + 1].gen == kB && syl[idx + 1].exp == 1) {
        auto j = tower_index(syl[idx].exp);
        if (!j) break;
        factors.push_back(*j);
        idx += 2;
    }
    if (idx >= syl.size() || syl[idx].gen != kA) return std::nullopt;

    const BigInt& p = syl[idx].exp;
    FreeWord remainder = FreeWord::from_syllables(std::vector<Syllable>(syl.begin() + static_cast<std::ptrdiff_t>(idx) + 1, syl.end()));
    const BigInt rem_len = remainder.length();

    // |p| lies within max(l, k) of n_d - n_o with d = max(l, k) and n_o <= sqrt(n_d),
    // so its bit length is 2^d or 2^d + 1 (the latter only when |p| >= n_d).
    const std::size_t bits = bit_length(p);
    std::optional<SemigroupPrefixParse> found;
    for (unsigned dominant = 2; dominant <= kMaxTowerIndex; ++dominant) {
        const std::size_t width = std::size_t{1} << dominant;
        if (bits != width && bits != width + 1) continue;
        const BigInt n_dom = tower(dominant);
        for (unsigned other = 1; other < dominant; ++other) {
            const BigInt n_other = tower(other);
            unsigned l = p > 0 ? dominant : other;
            unsigned k = p > 0 ? other : dominant;
            BigInt centre = p > 0 ? BigInt(n_dom - n_other) : BigInt(n_other - n_dom);
            // a^p r lies in a^centre U^k iff a^(p - centre) r has length <= k.
            if (wlp::abs(p - centre) + rem_len <= k) {
                if (found) {
                    throw InvariantViolation("word " + w.str() + " has two S*V parses: (" + std::to_string(found->l) + "," +
                                             std::to_string(found->k) + ") and (" + std::to_string(l) + "," +
                                             std::to_string(k) + ")");
                }
                found = SemigroupPrefixParse{factors, l, k, p, remainder};
            }
        }
    }
    if (!found) return std::nullopt;
    if (found->l > l_max || found->k > l_max) {
        throw SearchExhausted("word " + w.str() + " lies in S*V_(" + std::to_string(found->l) + "," + std::to_string(found->k) +
                              "), beyond l_max = " + std::to_string(l_max));
    }
    if (found->prefix_factors.size() > depth_max) {
        throw SearchExhausted("word " + w.str() + " needs an S-prefix of length " + std::to_string(found->prefix_factors.size()) +
                              ", beyond depth_max = " + std::to_string(depth_max));
    }
    return found;
}

DyadicValue eval_f2_semigroup(const FreeWord& w, unsigned l_max, unsigned depth_max) {
    if (auto parse = parse_sv_membership(w, l_max, depth_max)) {
        return DyadicValue::pow2(-3 * BigInt(parse->l + parse->k));
    }
    return {};
}

bool in_semigroup(const FreeWord& w) {
    const auto& syl = w.syllables();
    if (syl.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < syl.size(); i += 2) {
        if (syl[i].gen != kA || !tower_index(syl[i].exp)) return false;
        if (syl[i + 1].gen != kB || syl[i + 1].exp != 1) return false;
    }
    return true;
}

F2SemigroupWeight::F2SemigroupWeight(unsigned l_max, unsigned depth_max)
    : Weight(Group::free(2)), l_max_(l_max), depth_max_(depth_max) {
    if (l_max_ < 2 || l_max_ > kMaxTowerIndex) throw ValidationError("f2_semigroup l_max must be in 2..24");
}

std::string F2SemigroupWeight::describe() const {
    return "f2_semigroup{l_max=" + std::to_string(l_max_) + ",depth_max=" + std::to_string(depth_max_) + "}";
}

DyadicValue F2SemigroupWeight::eval(const GroupElement& g) const {
    return eval_f2_semigroup(as_f2_word(group(), g), l_max_, depth_max_);
}

std::optional<DeclaredBound> F2SemigroupWeight::left_bound(const GroupElement& g) const {
    if (!in_semigroup(as_f2_word(group(), g))) return std::nullopt;
    return DeclaredBound{DyadicValue{}, "s * (S V_(l,k)) is contained in S V_(l,k) for s in S, and w <= 1 elsewhere"};
}

}  // namespace wlp
