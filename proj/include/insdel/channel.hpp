#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "insdel/core.hpp"
#include "insdel/rational.hpp"
#include "insdel/rng.hpp"

namespace insdel {

// Explicit corruption script. Both deletions and insertions are anchored to
// sent-string coordinates, so budget accounting and composition stay exact
// and order of application is unambiguous. Gap g means "after sent position
// g" (gap 0 = before the first symbol); several insertions in one gap keep
// list order.
struct CorruptionPattern {
    int n = 0;
    std::vector<int> deletions;                     // sorted, distinct, 1..n
    std::vector<std::pair<int, Symbol>> insertions; // (gap 0..n, symbol)

    int deletion_count() const { return static_cast<int>(deletions.size()); }
    int insertion_count() const { return static_cast<int>(insertions.size()); }
};

struct ChannelBudget {
    Rational delta;
    Rational gamma;
    int n = 0;

    ChannelBudget(Rational d, Rational g, int len) : delta(d), gamma(g), n(len) {
        if (delta < Rational(0) || delta >= Rational(1))
            throw std::invalid_argument("channel budget: delta must be in [0, 1)");
        if (gamma < Rational(0))
            throw std::invalid_argument("channel budget: gamma must be >= 0");
        if (n < 0) throw std::invalid_argument("channel budget: negative length");
    }

    int max_deletions() const { return static_cast<int>(delta.floor_times(n)); }
    int max_insertions() const { return static_cast<int>(gamma.floor_times(n)); }
};

inline void validate_pattern(const CorruptionPattern& p, const Alphabet& alphabet) {
    int prev = 0;
    for (int d : p.deletions) {
        if (d < 1 || d > p.n) throw std::invalid_argument("pattern: deletion position out of range");
        if (d <= prev) throw std::invalid_argument("pattern: deletions must be sorted and distinct");
        prev = d;
    }
    for (auto [gap, sym] : p.insertions) {
        if (gap < 0 || gap > p.n) throw std::invalid_argument("pattern: insertion gap out of range");
        if (!alphabet.contains(sym)) throw std::invalid_argument("pattern: inserted symbol out of alphabet");
    }
}

inline SymbolString apply_pattern(const SymbolString& x, const CorruptionPattern& p) {
    if (p.n != static_cast<int>(x.size()))
        throw std::invalid_argument("apply_pattern: pattern length mismatch");
    validate_pattern(p, x.alphabet());
    std::vector<char> deleted(x.size() + 1, 0);
    for (int d : p.deletions) deleted[d] = 1;
    std::vector<std::vector<Symbol>> by_gap(x.size() + 1);
    for (auto [gap, sym] : p.insertions) by_gap[gap].push_back(sym);

    std::vector<Symbol> out;
    out.reserve(x.size() - p.deletions.size() + p.insertions.size());
    for (int i = 0; i <= p.n; ++i) {
        for (Symbol s : by_gap[i]) out.push_back(s);
        if (i < p.n && !deleted[i + 1]) out.push_back(x[i]);
    }
    return SymbolString(x.alphabet(), std::move(out));
}

// Exactly floor(delta n) uniform distinct deletions and floor(gamma n)
// insertions at uniform gaps with uniform symbols.
inline CorruptionPattern random_pattern(const ChannelBudget& budget, const Alphabet& alphabet,
                                        std::uint64_t seed) {
    Rng rng(seed);
    CorruptionPattern p;
    p.n = budget.n;
    const int del = budget.max_deletions();
    std::vector<int> positions(budget.n);
    for (int i = 0; i < budget.n; ++i) positions[i] = i + 1;
    for (int i = 0; i < del; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(budget.n - i)));
        std::swap(positions[i], positions[j]);
    }
    p.deletions.assign(positions.begin(), positions.begin() + del);
    std::sort(p.deletions.begin(), p.deletions.end());
    const int ins = budget.max_insertions();
    for (int i = 0; i < ins; ++i) {
        int gap = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget.n) + 1));
        Symbol sym = rng.range(1, alphabet.size);
        p.insertions.emplace_back(gap, sym);
    }
    return p;
}

// Deletion adversary: split the sent positions into a prefix of floor(n q d')
// positions and the rest, then wipe every occurrence of the d+1 (resp. d)
// least frequent symbols inside each part, d = floor(delta q),
// d' = delta - d/q. Frequency ties break toward the smaller symbol index;
// any leftover budget deletes the earliest surviving positions.
inline CorruptionPattern adversary_delete_least_frequent(const SymbolString& x,
                                                         const Rational& delta) {
    const int q = x.q();
    const int n = static_cast<int>(x.size());
    if (delta < Rational(0) || delta > Rational(q - 1, q))
        throw std::invalid_argument("adversary_delete_least_frequent: need 0 <= delta <= (q-1)/q");

    const long long d = (delta * Rational(q)).floor();
    const Rational delta_prime = delta - Rational(d, q);
    const long long part1_len = (delta_prime * Rational(q) * Rational(n)).floor();
    const int budget = static_cast<int>(delta.floor_times(n));

    std::vector<char> kill(n + 1, 0);
    auto wipe_part = [&](int begin, int end, long long count) { // positions [begin, end], 1-based
        if (begin > end || count <= 0) return;
        std::map<Symbol, int> freq;
        for (int pos = begin; pos <= end; ++pos) ++freq[x[pos - 1]];
        const long long absent = q - static_cast<long long>(freq.size());
        long long remaining = count - absent; // symbols of count 0 are wiped for free
        if (remaining <= 0) return;
        std::vector<std::pair<int, Symbol>> order; // (count, symbol), ascending
        order.reserve(freq.size());
        for (auto [sym, c] : freq) order.emplace_back(c, sym);
        std::sort(order.begin(), order.end());
        std::vector<char> selected(q + 1, 0);
        for (std::size_t i = 0; i < order.size() && remaining > 0; ++i, --remaining)
            selected[order[i].second] = 1;
        for (int pos = begin; pos <= end; ++pos)
            if (selected[x[pos - 1]]) kill[pos] = 1;
    };
    wipe_part(1, static_cast<int>(part1_len), d + 1);
    wipe_part(static_cast<int>(part1_len) + 1, n, d);

    CorruptionPattern p;
    p.n = n;
    for (int pos = 1; pos <= n; ++pos)
        if (kill[pos]) p.deletions.push_back(pos);
    if (static_cast<int>(p.deletions.size()) > budget)
        throw std::logic_error("adversary_delete_least_frequent: budget exceeded");
    // leftover budget: earliest surviving positions
    for (int pos = 1; pos <= n && static_cast<int>(p.deletions.size()) < budget; ++pos)
        if (!kill[pos]) {
            kill[pos] = 1;
            p.deletions.push_back(pos);
        }
    std::sort(p.deletions.begin(), p.deletions.end());
    return p;
}

// Insertion adversary: around each of the first floor(gamma n / (q-1))
// positions, insert the q-1 missing symbols so the local window reads
// 1, 2, ..., q and the original symbol carries no information.
inline CorruptionPattern adversary_insert_erasure(const SymbolString& x, const Rational& gamma) {
    if (gamma < Rational(0))
        throw std::invalid_argument("adversary_insert_erasure: gamma must be >= 0");
    const int q = x.q();
    const int n = static_cast<int>(x.size());
    CorruptionPattern p;
    p.n = n;
    if (q == 1 || n == 0) return p;
    long long t = (gamma * Rational(n) / Rational(q - 1)).floor();
    t = std::min<long long>(t, n);
    for (int i = 1; i <= t; ++i) {
        const Symbol s = x[i - 1];
        for (Symbol c = 1; c < s; ++c) p.insertions.emplace_back(i - 1, c);
        for (Symbol c = s + 1; c <= q; ++c) p.insertions.emplace_back(i, c);
    }
    return p;
}

// z obtainable from x with at most max_del deletions followed by at most
// max_ins insertions <=> some common subsequence keeps enough of both.
inline bool reachable_within(const SymbolString& x, const SymbolString& z, int max_del,
                             int max_ins) {
    detail::require_same_alphabet(x, z);
    const int need = std::max(static_cast<int>(x.size()) - max_del,
                              static_cast<int>(z.size()) - max_ins);
    if (need <= 0) return true;
    return lcs_length(x, z) >= need;
}

struct ConfusableTriple {
    SymbolString x, y, z;
};

// Two codewords sharing a prefix of length k-1 (k from the codebook size)
// plus a middle string z = s t v reachable from both within the
// (floor(delta n), floor(gamma n)) budget. Every candidate pair is checked
// with the reachability test rather than trusting the length accounting;
// nothing is returned if no pair passes.
inline std::optional<ConfusableTriple> find_confusable_pair(
    const std::vector<SymbolString>& codebook, const Rational& delta, const Rational& gamma) {
    if (codebook.size() < 2) return std::nullopt;
    const int n = static_cast<int>(codebook.front().size());
    const int q = codebook.front().q();
    for (const auto& w : codebook)
        if (static_cast<int>(w.size()) != n || w.q() != q)
            throw std::invalid_argument("find_confusable_pair: inconsistent codewords");

    long long k = 0, power = 1;
    while (power <= static_cast<long long>(codebook.size()) / q) {
        power *= q;
        ++k;
    }
    const int prefix_len = static_cast<int>(k) - 1;
    if (prefix_len < 0 || prefix_len > n) return std::nullopt;

    const int max_del = static_cast<int>(delta.floor_times(n));
    const int max_ins = static_cast<int>(gamma.floor_times(n));
    const int mid_len = std::min(max_ins, n - prefix_len);

    auto prefix_eq = [&](const SymbolString& a, const SymbolString& b) {
        for (int i = 0; i < prefix_len; ++i)
            if (a[i] != b[i]) return false;
        return true;
    };
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        for (std::size_t j = i + 1; j < codebook.size(); ++j) {
            const SymbolString& cx = codebook[i];
            const SymbolString& cy = codebook[j];
            if (!prefix_eq(cx, cy)) continue;
            std::vector<Symbol> zs;
            zs.reserve(prefix_len + 2 * mid_len);
            for (int t = 0; t < prefix_len; ++t) zs.push_back(cx[t]);
            for (int t = 0; t < mid_len; ++t) zs.push_back(cx[prefix_len + t]);
            for (int t = 0; t < mid_len; ++t) zs.push_back(cy[prefix_len + t]);
            SymbolString z(cx.alphabet(), std::move(zs));
            if (reachable_within(cx, z, max_del, max_ins) &&
                reachable_within(cy, z, max_del, max_ins))
                return ConfusableTriple{cx, cy, std::move(z)};
        }
    }
    return std::nullopt;
}

inline nlohmann::json pattern_to_json(const CorruptionPattern& p) {
    nlohmann::json ins = nlohmann::json::array();
    for (auto [gap, sym] : p.insertions) ins.push_back({gap, sym});
    return {{"n", p.n}, {"del", p.deletions}, {"ins", ins}};
}

inline CorruptionPattern pattern_from_json(const nlohmann::json& j) {
    CorruptionPattern p;
    p.n = j.at("n").get<int>();
    p.deletions = j.at("del").get<std::vector<int>>();
    for (const auto& entry : j.at("ins"))
        p.insertions.emplace_back(entry.at(0).get<int>(), entry.at(1).get<Symbol>());
    return p;
}

} // namespace insdel
