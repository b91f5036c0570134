#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace insdel {

using Symbol = int;
using BigInt = boost::multiprecision::cpp_int;

struct Alphabet {
    int size = 1;

    Alphabet() = default;
    explicit Alphabet(int q) : size(q) {
        if (q < 1) throw std::invalid_argument("alphabet: size must be >= 1");
    }
    bool contains(Symbol s) const { return s >= 1 && s <= size; }
    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.size == b.size; }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }
};

// Finite sequence over an explicit alphabet [1..q]. Carrier for codewords,
// synchronization strings and channel outputs alike.
class SymbolString {
public:
    SymbolString() = default;
    SymbolString(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(alphabet), symbols_(std::move(symbols)) {
        for (Symbol s : symbols_)
            if (!alphabet_.contains(s))
                throw std::invalid_argument("symbol string: symbol out of alphabet range");
    }

    // 'a' -> 1, 'b' -> 2, ...  Convenience for tests and small demos.
    static SymbolString from_letters(std::string_view letters, int q) {
        std::vector<Symbol> syms;
        syms.reserve(letters.size());
        for (char c : letters) syms.push_back(static_cast<Symbol>(c - 'a' + 1));
        return SymbolString(Alphabet(q), std::move(syms));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int q() const { return alphabet_.size; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }           // 0-based
    const std::vector<Symbol>& symbols() const { return symbols_; }

    SymbolString substring(std::size_t pos, std::size_t len) const {
        return SymbolString(alphabet_,
                            std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
    }

    std::string letters() const {
        std::string out;
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(s <= 26 ? static_cast<char>('a' + s - 1) : '?');
        return out;
    }

    friend bool operator==(const SymbolString& a, const SymbolString& b) {
        return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const SymbolString& a, const SymbolString& b) { return !(a == b); }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

// Monotone matching: both index sequences strictly increasing, 1-based.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    std::size_t size() const { return pairs.size(); }
};

struct LcsResult {
    int length = 0;
    Matching witness;
};

namespace detail {

inline void require_same_alphabet(const SymbolString& a, const SymbolString& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("alphabet mismatch");
}

// Suffix table F[a][b] = max monotone matching of positions {a..nx} x {b..ny}
// under `allowed`, flattened row-major with width ny+2.
template <class Allowed>
std::vector<int> monotone_suffix_table(int nx, int ny, Allowed&& allowed) {
    std::vector<int> f(static_cast<std::size_t>(nx + 2) * (ny + 2), 0);
    auto at = [&](int a, int b) -> int& { return f[static_cast<std::size_t>(a) * (ny + 2) + b]; };
    for (int a = nx; a >= 1; --a)
        for (int b = ny; b >= 1; --b) {
            int best = std::max(at(a + 1, b), at(a, b + 1));
            if (allowed(a, b)) best = std::max(best, 1 + at(a + 1, b + 1));
            at(a, b) = best;
        }
    return f;
}

// Maximum monotone matching plus a deterministic witness: among maximum
// matchings, the one whose a-sequence is lexicographically smallest (ties on
// a broken toward the smallest b). Greedy forward walk over the suffix table.
template <class Allowed>
LcsResult max_monotone_matching(int nx, int ny, Allowed&& allowed) {
    std::vector<int> f = monotone_suffix_table(nx, ny, allowed);
    auto at = [&](int a, int b) -> int { return f[static_cast<std::size_t>(a) * (ny + 2) + b]; };

    LcsResult res;
    res.length = at(1, 1);
    int a = 1, b = 1, r = res.length;
    while (r > 0) {
        bool took = false;
        for (int bp = b; bp <= ny; ++bp) {
            if (allowed(a, bp) && 1 + at(a + 1, bp + 1) >= r) {
                res.witness.pairs.emplace_back(a, bp);
                ++a;
                b = bp + 1;
                --r;
                took = true;
                break;
            }
        }
        if (!took) ++a;
    }
    return res;
}

} // namespace detail

// Longest common subsequence length, linear space.
inline int lcs_length(const SymbolString& x, const SymbolString& y) {
    detail::require_same_alphabet(x, y);
    const std::size_t nx = x.size(), ny = y.size();
    std::vector<int> prev(ny + 1, 0), cur(ny + 1, 0);
    for (std::size_t i = 1; i <= nx; ++i) {
        std::swap(prev, cur);
        cur[0] = 0;
        for (std::size_t j = 1; j <= ny; ++j)
            cur[j] = std::max({prev[j], cur[j - 1], x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : 0});
    }
    return cur[ny];
}

// LCS with a witness matching; deterministic tie-breaking (lexicographically
// smallest a-sequence) so decodes replay exactly.
inline LcsResult lcs(const SymbolString& x, const SymbolString& y) {
    detail::require_same_alphabet(x, y);
    return detail::max_monotone_matching(
        static_cast<int>(x.size()), static_cast<int>(y.size()),
        [&](int a, int b) { return x[a - 1] == y[b - 1]; });
}

// Insertion-deletion distance (no substitutions): |x| + |y| - 2 LCS(x, y).
// A substitution costs 2 under this metric.
inline int edit_distance(const SymbolString& x, const SymbolString& y) {
    detail::require_same_alphabet(x, y);
    return static_cast<int>(x.size() + y.size()) - 2 * lcs_length(x, y);
}

// Largest monotone matching of s against itself avoiding the diagonal
// (a_i != b_i), with witness.
inline LcsResult max_self_matching(const SymbolString& s) {
    const int n = static_cast<int>(s.size());
    return detail::max_monotone_matching(n, n, [&](int a, int b) {
        return a != b && s[a - 1] == s[b - 1];
    });
}

inline bool is_subsequence(const SymbolString& x, const SymbolString& z) {
    detail::require_same_alphabet(x, z);
    std::size_t i = 0;
    for (std::size_t j = 0; j < z.size() && i < x.size(); ++j)
        if (x[i] == z[j]) ++i;
    return i == x.size();
}

// Number of distinct length-m subsequences of z, exact. Classic DP with a
// last-occurrence correction; arbitrary precision so counts near n ~ 60 do
// not overflow.
inline BigInt count_distinct_subsequences(const SymbolString& z, int m) {
    const int n = static_cast<int>(z.size());
    if (m < 0 || m > n) throw std::invalid_argument("count_distinct_subsequences: m out of range");
    std::vector<std::vector<BigInt>> dp(n + 1, std::vector<BigInt>(m + 1, 0));
    for (int i = 0; i <= n; ++i) dp[i][0] = 1;
    std::vector<int> last(static_cast<std::size_t>(z.q()) + 1, 0); // last position of symbol, 1-based
    for (int i = 1; i <= n; ++i) {
        Symbol c = z[i - 1];
        for (int j = 1; j <= m; ++j) {
            dp[i][j] = dp[i - 1][j] + dp[i - 1][j - 1];
            if (last[c] > 0) dp[i][j] -= dp[last[c] - 1][j - 1];
        }
        last[c] = i;
    }
    return dp[n][m];
}

inline bool matching_is_valid(const SymbolString& x, const SymbolString& y, const Matching& m) {
    int prev_a = 0, prev_b = 0;
    for (auto [a, b] : m.pairs) {
        if (a <= prev_a || b <= prev_b) return false;
        if (a > static_cast<int>(x.size()) || b > static_cast<int>(y.size())) return false;
        if (x[a - 1] != y[b - 1]) return false;
        prev_a = a;
        prev_b = b;
    }
    return true;
}

inline bool self_matching_is_valid(const SymbolString& s, const Matching& m) {
    if (!matching_is_valid(s, s, m)) return false;
    for (auto [a, b] : m.pairs)
        if (a == b) return false;
    return true;
}

} // namespace insdel
