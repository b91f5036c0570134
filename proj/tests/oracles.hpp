// Brute-force reference implementations, deliberately written along different
// algorithmic routes than the library so agreement is meaningful.
#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "insdel/core.hpp"
#include "insdel/rational.hpp"
#include "insdel/rng.hpp"

namespace oracle {

using insdel::Alphabet;
using insdel::Rational;
using insdel::Rng;
using insdel::Symbol;
using insdel::SymbolString;

inline std::vector<SymbolString> all_strings(int q, int len) {
    std::vector<SymbolString> out;
    std::vector<Symbol> cur(len, 1);
    for (;;) {
        out.emplace_back(Alphabet(q), cur);
        int pos = len - 1;
        while (pos >= 0 && cur[pos] == q) cur[pos--] = 1;
        if (pos < 0) break;
        ++cur[pos];
    }
    if (len == 0) out = {SymbolString(Alphabet(q), {})};
    return out;
}

inline SymbolString random_string(Rng& rng, int q, int len) {
    std::vector<Symbol> syms(len);
    for (int i = 0; i < len; ++i) syms[i] = rng.range(1, q);
    return SymbolString(Alphabet(q), std::move(syms));
}

inline bool greedy_subseq(const std::vector<Symbol>& a, const SymbolString& b) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
        if (a[i] == b[j]) ++i;
    return i == a.size();
}

// LCS by enumerating every subsequence of x (bitmask) and testing it in y.
inline int lcs_bruteforce(const SymbolString& x, const SymbolString& y) {
    const int n = static_cast<int>(x.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Symbol> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(x[i]);
        if (static_cast<int>(sub.size()) > best && greedy_subseq(sub, y))
            best = static_cast<int>(sub.size());
    }
    return best;
}

// Max off-diagonal self-matching by memoized max-over-next-pair recursion.
inline int self_matching_recursive(const SymbolString& s) {
    const int n = static_cast<int>(s.size());
    std::map<std::pair<int, int>, int> memo;
    std::function<int(int, int)> best = [&](int a0, int b0) -> int {
        auto it = memo.find({a0, b0});
        if (it != memo.end()) return it->second;
        int best_here = 0;
        for (int a = a0; a <= n; ++a)
            for (int b = b0; b <= n; ++b)
                if (a != b && s[a - 1] == s[b - 1])
                    best_here = std::max(best_here, 1 + best(a + 1, b + 1));
        memo[{a0, b0}] = best_here;
        return best_here;
    };
    return best(1, 1);
}

// Plain DFS over all monotone off-diagonal matchings, no memoization.
inline int self_matching_dfs(const SymbolString& s) {
    const int n = static_cast<int>(s.size());
    int best = 0;
    std::function<void(int, int, int)> go = [&](int a0, int b0, int depth) {
        best = std::max(best, depth);
        for (int a = a0; a <= n; ++a)
            for (int b = b0; b <= n; ++b)
                if (a != b && s[a - 1] == s[b - 1]) go(a + 1, b + 1, depth + 1);
    };
    go(1, 1, 0);
    return best;
}

// Per-triple recompute of the synchronization condition via edit_distance.
inline bool verify_sync_naive(const SymbolString& s, const Rational& eps) {
    const int n = static_cast<int>(s.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n + 1; ++k) {
                long long ed = insdel::edit_distance(s.substring(i - 1, j - i),
                                                     s.substring(j - 1, k - j));
                if (ed * eps.den <= (eps.den - eps.num) * (k - i)) return false;
            }
    return true;
}

// Reachability by enumerating deletion subsets, then insertion-completing.
inline bool reachable_bruteforce(const SymbolString& x, const SymbolString& z, int max_del,
                                 int max_ins) {
    const int n = static_cast<int>(x.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int dels = __builtin_popcount(mask);
        if (dels > max_del) continue;
        std::vector<Symbol> rest;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1u << i))) rest.push_back(x[i]);
        const int ins_needed = static_cast<int>(z.size()) - static_cast<int>(rest.size());
        if (ins_needed < 0 || ins_needed > max_ins) continue;
        if (greedy_subseq(rest, z)) return true;
    }
    return false;
}

// Distinct length-m subsequences by explicit enumeration into a set.
inline long long distinct_subsequences_enumerated(const SymbolString& z, int m) {
    const int n = static_cast<int>(z.size());
    std::set<std::vector<Symbol>> seen;
    std::vector<int> idx(m);
    std::function<void(int, int)> go = [&](int pos, int start) {
        if (pos == m) {
            std::vector<Symbol> sub(m);
            for (int i = 0; i < m; ++i) sub[i] = z[idx[i]];
            seen.insert(std::move(sub));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[pos] = i;
            go(pos + 1, i + 1);
        }
    };
    go(0, 0);
    if (m == 0) return 1;
    return static_cast<long long>(seen.size());
}

} // namespace oracle
