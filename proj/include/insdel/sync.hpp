#pragma once

#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "insdel/core.hpp"
#include "insdel/rational.hpp"
#include "insdel/rng.hpp"

namespace insdel {

// First violating triple in lexicographic order, 1-based, with k up to n+1.
struct SyncViolation {
    int i = 0, j = 0, k = 0;
};

struct SyncVerifyResult {
    bool ok = true;
    std::optional<SyncViolation> violation;
};

// Exact check that ED(s[i,j), s[j,k)) > (1-eps)(k-i) for every
// 1 <= i < j < k <= n+1. For each (i,j) anchor one LCS row is extended over
// k, so the whole scan is O(n^4) with small constants; all comparisons are
// rational.
inline SyncVerifyResult verify_sync(const SymbolString& s, const Rational& eps) {
    if (eps <= Rational(0) || eps > Rational(1))
        throw std::invalid_argument("verify_sync: epsilon must be in (0, 1]");
    const int n = static_cast<int>(s.size());
    const long long num = eps.num, den = eps.den;
    std::vector<int> row;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int len = j - i; // left interval s[i..j-1]
            row.assign(len + 1, 0);
            for (int k = j + 1; k <= n + 1; ++k) {
                const Symbol c = s[k - 2];
                int prev_diag = 0;
                for (int a = 1; a <= len; ++a) {
                    int tmp = row[a];
                    int best = std::max(row[a], row[a - 1]);
                    if (s[i + a - 2] == c) best = std::max(best, prev_diag + 1);
                    row[a] = best;
                    prev_diag = tmp;
                }
                const long long ed = len + (k - j) - 2LL * row[len];
                if (ed * den <= (den - num) * (k - i))
                    return {false, SyncViolation{i, j, k}};
            }
        }
    }
    return {true, std::nullopt};
}

// max_self_matching(s).k <= eps * |s|, exact.
inline bool verify_self_matching(const SymbolString& s, const Rational& eps) {
    if (eps < Rational(0))
        throw std::invalid_argument("verify_self_matching: epsilon must be >= 0");
    const long long k = max_self_matching(s).length;
    return k * eps.den <= eps.num * static_cast<long long>(s.size());
}

// Every contiguous substring passes verify_self_matching relative to its own
// length. The off-diagonal matching DP for s[i0..j0] is grown incrementally
// in j0 (one new row + column per step), so the full scan is O(n^3).
inline bool check_substrings_self_matching(const SymbolString& s, const Rational& eps) {
    if (eps < Rational(0))
        throw std::invalid_argument("check_substrings_self_matching: epsilon must be >= 0");
    const int n = static_cast<int>(s.size());
    if (n == 0) return true;
    std::vector<int> t(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    auto at = [&](int a, int b) -> int& { return t[static_cast<std::size_t>(a) * (n + 1) + b]; };
    for (int i0 = 0; i0 < n; ++i0) {
        for (std::size_t z = 0; z < t.size(); ++z) t[z] = 0;
        for (int len = 1; i0 + len <= n; ++len) {
            auto allowed = [&](int a, int b) {
                return a != b && s[i0 + a - 1] == s[i0 + b - 1];
            };
            for (int a = 1; a < len; ++a)
                at(a, len) = std::max({at(a - 1, len), at(a, len - 1),
                                       at(a - 1, len - 1) + (allowed(a, len) ? 1 : 0)});
            for (int b = 1; b <= len; ++b)
                at(len, b) = std::max({at(len - 1, b), at(len, b - 1),
                                       at(len - 1, b - 1) + (allowed(len, b) ? 1 : 0)});
            const long long k = at(len, len);
            if (k * eps.den > eps.num * static_cast<long long>(len)) return false;
        }
    }
    return true;
}

// A string together with the epsilon it was checked against. `certified` is
// only set by paths that ran the exact verifier.
struct SyncString {
    SymbolString s;
    Rational epsilon;
    bool certified = false;
};

struct SyncConstructionConfig {
    int n = 0;
    Rational epsilon;
    std::optional<int> alphabet_size; // default: max(4, ceil(eps^-2))
    std::uint64_t seed = 0;
    int max_attempts = 64;
};

struct SyncConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int default_sync_alphabet(const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("default_sync_alphabet: epsilon must be > 0");
    Rational inv_sq = (Rational(1) / eps) * (Rational(1) / eps);
    long long c = inv_sq.ceil();
    return static_cast<int>(std::max<long long>(4, c));
}

// Rejection sampling: draw uniform strings over the configured alphabet and
// keep the first one the exact verifier certifies. Deterministic per seed.
// Fails with SyncConstructionError once max_attempts samples are rejected;
// raising alphabet_size is the usual fix.
inline SyncString construct_sync(const SyncConstructionConfig& config) {
    if (config.n < 0) throw std::invalid_argument("construct_sync: negative length");
    if (config.epsilon <= Rational(0) || config.epsilon > Rational(1))
        throw std::invalid_argument("construct_sync: epsilon must be in (0, 1]");
    if (config.max_attempts < 1)
        throw std::invalid_argument("construct_sync: max_attempts must be >= 1");
    const int q = config.alphabet_size.value_or(default_sync_alphabet(config.epsilon));
    if (q < 1) throw std::invalid_argument("construct_sync: alphabet size must be >= 1");
    Rng rng(config.seed);
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        std::vector<Symbol> syms(config.n);
        for (int i = 0; i < config.n; ++i) syms[i] = rng.range(1, q);
        SymbolString cand(Alphabet(q), std::move(syms));
        if (verify_sync(cand, config.epsilon).ok)
            return SyncString{std::move(cand), config.epsilon, true};
    }
    throw SyncConstructionError(
        "construct_sync: no certified string after " + std::to_string(config.max_attempts) +
        " attempts at n=" + std::to_string(config.n) + ", eps=" + config.epsilon.str() +
        ", q=" + std::to_string(q) + " (consider a larger alphabet)");
}

// Text format: header "q n epsilon_num epsilon_den", then the symbols.
inline void save_sync(std::ostream& os, const SyncString& sync) {
    os << sync.s.q() << ' ' << sync.s.size() << ' ' << sync.epsilon.num << ' '
       << sync.epsilon.den << '\n';
    for (std::size_t i = 0; i < sync.s.size(); ++i) {
        if (i) os << ' ';
        os << sync.s[i];
    }
    os << '\n';
}

// Loads the string as stated in the file; certification is not assumed and
// must be re-established with verify_sync.
inline SyncString load_sync(std::istream& is) {
    long long q = 0, n = 0, num = 0, den = 0;
    if (!(is >> q >> n >> num >> den))
        throw std::runtime_error("load_sync: malformed header");
    if (q < 1 || n < 0 || den <= 0) throw std::runtime_error("load_sync: invalid header values");
    std::vector<Symbol> syms(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        if (!(is >> syms[i])) throw std::runtime_error("load_sync: truncated symbol list");
    return SyncString{SymbolString(Alphabet(static_cast<int>(q)), std::move(syms)),
                      Rational(num, den), false};
}

} // namespace insdel
