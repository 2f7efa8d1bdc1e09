#pragma once

// Brute-force reference implementations. They share no algorithm with the
// library: free words are plain letter vectors, weights are built by forward
// enumeration of the sets that define them, and Z^2 values come from a
// straight scan over n.

#include "wlp/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

/// Letters +-1 (a^+-1), +-2 (b^+-1), ...
using Letters = std::vector<int>;

Letters reduce(const Letters& w);
Letters concat(const Letters& a, const Letters& b);
Letters inverse(const Letters& w);
Letters power(int letter, long long n);  // letter^n, n may be negative
wlp::FreeWord to_word(const Letters& w);
Letters from_word(const wlp::FreeWord& w);

/// All reduced words of length exactly n in F_rank.
std::vector<Letters> sphere(int rank, unsigned n);

/// Random reduced word of length <= max_len.
Letters random_word(std::mt19937_64& rng, int rank, unsigned max_len);

/// log2 of the Z^2 weight by scanning every n in 1..62.
int z2_log2(std::int64_t l, std::int64_t m);

/// The F_2 non-dense weight as a table: every word of (U^j \ U^(j-1)) a^(+-n_k),
/// j <= k <= k_max, mapped to j - k. Words outside the table have log2 w = 0.
std::map<wlp::FreeWord, int> nondense_table(unsigned k_max);

/// s_j = a^(n_j) b as letters.
Letters semigroup_generator(unsigned j);

/// Forward enumeration of prefix * s_l s_k^-1 * U^k for prefixes of at most
/// max_prefix generators s_1 .. s_(l_max), l != k <= l_max, keeping words of
/// length <= max_len. Maps each word to every (prefix, l, k) that produced it.
struct SvTag {
    std::vector<unsigned> prefix;
    unsigned l;
    unsigned k;
    friend bool operator==(const SvTag&, const SvTag&) = default;
};
std::map<wlp::FreeWord, std::vector<SvTag>> sv_table(unsigned l_max, unsigned max_prefix, unsigned max_len);

/// Existence weight on Z with U = [-1, 1] and s_n = 10^n, n <= n_max: log2 w(t).
int existence_z_log2(std::int64_t t, unsigned n_max);

}  // namespace oracle
