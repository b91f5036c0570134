#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "insdel/channel.hpp"
#include "insdel/core.hpp"
#include "insdel/rational.hpp"
#include "insdel/sync.hpp"

namespace insdel {

// Payload positionwise paired with a synchronization string over a product
// alphabet.
struct IndexedString {
    SymbolString payload;
    SymbolString index;

    IndexedString(SymbolString p, SymbolString s) : payload(std::move(p)), index(std::move(s)) {
        if (payload.size() != index.size())
            throw std::invalid_argument("indexed string: payload/index length mismatch");
    }
    std::size_t size() const { return payload.size(); }
};

inline IndexedString index_payload(const SymbolString& payload, const SyncString& sync) {
    return IndexedString(payload, sync.s);
}

inline Alphabet product_alphabet(const Alphabet& payload_a, const Alphabet& index_a) {
    return Alphabet(payload_a.size * index_a.size);
}

inline SymbolString product_encode(const IndexedString& xs) {
    const int qi = xs.index.q();
    std::vector<Symbol> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        out[i] = (xs.payload[i] - 1) * qi + (xs.index[i] - 1) + 1;
    return SymbolString(product_alphabet(xs.payload.alphabet(), xs.index.alphabet()),
                        std::move(out));
}

inline IndexedString product_decode(const SymbolString& prod, const Alphabet& payload_a,
                                    const Alphabet& index_a) {
    if (prod.alphabet() != product_alphabet(payload_a, index_a))
        throw std::invalid_argument("product_decode: alphabet mismatch");
    const int qi = index_a.size;
    std::vector<Symbol> pay(prod.size()), idx(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        const int v = prod[i] - 1;
        pay[i] = v / qi + 1;
        idx[i] = v % qi + 1;
    }
    return IndexedString(SymbolString(payload_a, std::move(pay)),
                         SymbolString(index_a, std::move(idx)));
}

// Reference into the received string: position (1-based) plus the payload
// symbol seen there.
struct CandidateRef {
    int received_pos = 0;
    Symbol payload = 0;
    friend bool operator==(const CandidateRef& a, const CandidateRef& b) {
        return a.received_pos == b.received_pos && a.payload == b.payload;
    }
};

struct CandidateLists {
    int n = 0;
    std::vector<std::vector<CandidateRef>> lists;

    int max_list_size() const {
        std::size_t m = 0;
        for (const auto& l : lists) m = std::max(m, l.size());
        return static_cast<int>(m);
    }
    long long total_refs() const {
        long long t = 0;
        for (const auto& l : lists) t += static_cast<long long>(l.size());
        return t;
    }
};

// K rounds of matching peeling: each round takes a maximum common
// subsequence matching between the (pre-shared) sync string and the
// still-unmatched received positions, files every matched received position
// into the list of its matched sync position, then removes it. Sync
// positions stay matchable in later rounds, which is what lets a list grow
// to K entries.
inline CandidateLists global_list_decode(const SymbolString& sync,
                                         const SymbolString& received_index,
                                         const SymbolString& received_payload, int K) {
    if (received_index.size() != received_payload.size())
        throw std::invalid_argument("global_list_decode: received track length mismatch");
    if (sync.alphabet() != received_index.alphabet())
        throw std::invalid_argument("global_list_decode: index alphabet mismatch");
    if (K < 1) throw std::invalid_argument("global_list_decode: K must be >= 1");

    const int n = static_cast<int>(sync.size());
    CandidateLists out;
    out.n = n;
    out.lists.assign(n, {});

    std::vector<int> unmatched(received_index.size());
    for (std::size_t j = 0; j < unmatched.size(); ++j) unmatched[j] = static_cast<int>(j) + 1;

    for (int round = 0; round < K && !unmatched.empty(); ++round) {
        LcsResult match = detail::max_monotone_matching(
            n, static_cast<int>(unmatched.size()), [&](int a, int b) {
                return sync[a - 1] == received_index[unmatched[b - 1] - 1];
            });
        if (match.length == 0) break; // later rounds can only be empty too
        std::vector<char> taken(unmatched.size() + 1, 0);
        for (auto [a, b] : match.witness.pairs) {
            const int j = unmatched[b - 1];
            out.lists[a - 1].push_back({j, received_payload[j - 1]});
            taken[b] = 1;
        }
        std::vector<int> rest;
        rest.reserve(unmatched.size() - match.witness.pairs.size());
        for (std::size_t b = 1; b <= unmatched.size(); ++b)
            if (!taken[b]) rest.push_back(unmatched[b - 1]);
        unmatched = std::move(rest);
    }
    return out;
}

struct DecoderParams {
    int K = 1;
    Rational epsilon_prime;
    Rational epsilon;
    Rational gamma;
};

// K = ceil(2(1+gamma)/epsilon), epsilon' = epsilon^2 / (4(1+gamma)).
inline DecoderParams choose_params(const Rational& epsilon, const Rational& gamma) {
    if (epsilon <= Rational(0) || epsilon >= Rational(1))
        throw std::invalid_argument("choose_params: epsilon must be in (0, 1)");
    if (gamma < Rational(0)) throw std::invalid_argument("choose_params: gamma must be >= 0");
    const Rational one_plus_gamma = Rational(1) + gamma;
    DecoderParams p;
    p.K = static_cast<int>(((Rational(2) * one_plus_gamma) / epsilon).ceil());
    p.epsilon_prime = (epsilon * epsilon) / (Rational(4) * one_plus_gamma);
    p.epsilon = epsilon;
    p.gamma = gamma;
    return p;
}

// Received position (1-based) of each surviving sent position; 0 if deleted.
inline std::vector<int> surviving_received_positions(const CorruptionPattern& p) {
    std::vector<char> deleted(p.n + 1, 0);
    for (int d : p.deletions) deleted[d] = 1;
    std::vector<int> ins_per_gap(p.n + 1, 0);
    for (auto [gap, sym] : p.insertions) ++ins_per_gap[gap];
    std::vector<int> pos(p.n + 1, 0);
    int cursor = 0;
    for (int i = 1; i <= p.n; ++i) {
        cursor += ins_per_gap[i - 1];
        if (!deleted[i]) pos[i] = ++cursor;
    }
    return pos;
}

struct HitStats {
    int exact_hits = 0;   // list i holds the surviving copy of position i itself
    int value_hits = 0;   // list i holds some reference carrying the sent payload symbol
    int max_list = 0;
    long long total_refs = 0;
    double avg_list = 0.0;
};

inline HitStats hit_statistics(const CandidateLists& lists, const CorruptionPattern& truth,
                               const IndexedString& sent) {
    if (lists.n != static_cast<int>(sent.size()) || truth.n != lists.n)
        throw std::invalid_argument("hit_statistics: dimension mismatch");
    const std::vector<int> survived = surviving_received_positions(truth);
    HitStats st;
    st.max_list = lists.max_list_size();
    st.total_refs = lists.total_refs();
    st.avg_list = lists.n == 0 ? 0.0 : static_cast<double>(st.total_refs) / lists.n;
    for (int i = 1; i <= lists.n; ++i) {
        const auto& list = lists.lists[i - 1];
        if (survived[i] != 0 &&
            std::any_of(list.begin(), list.end(),
                        [&](const CandidateRef& r) { return r.received_pos == survived[i]; }))
            ++st.exact_hits;
        const Symbol want = sent.payload[i - 1];
        if (std::any_of(list.begin(), list.end(),
                        [&](const CandidateRef& r) { return r.payload == want; }))
            ++st.value_hits;
    }
    return st;
}

inline nlohmann::json lists_to_json(const CandidateLists& lists) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& list : lists.lists) {
        nlohmann::json entry = nlohmann::json::array();
        for (const auto& ref : list) entry.push_back({ref.received_pos, ref.payload});
        arr.push_back(std::move(entry));
    }
    return {{"n", lists.n}, {"lists", arr}};
}

inline CandidateLists lists_from_json(const nlohmann::json& j) {
    CandidateLists out;
    out.n = j.at("n").get<int>();
    for (const auto& entry : j.at("lists")) {
        std::vector<CandidateRef> list;
        for (const auto& ref : entry)
            list.push_back({ref.at(0).get<int>(), ref.at(1).get<Symbol>()});
        out.lists.push_back(std::move(list));
    }
    return out;
}

} // namespace insdel
