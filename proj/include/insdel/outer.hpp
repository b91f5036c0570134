#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "insdel/core.hpp"
#include "insdel/decoder.hpp"
#include "insdel/gf.hpp"
#include "insdel/rational.hpp"
#include "insdel/sync.hpp"

namespace insdel {

struct ListRecoveryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reed-Solomon code evaluated at the first n field elements in index order.
// Deliberately small: the point is an exact, fully enumerable list-recovery
// oracle, so q^k is capped.
class RSCode {
public:
    RSCode(int field_size, int n, int k, long long enum_cap = 1LL << 20)
        : gf_(field_size), n_(n), k_(k), enum_cap_(enum_cap) {
        if (n < 1 || n > field_size) throw std::invalid_argument("rs code: need 1 <= n <= q");
        if (k < 0 || k > n) throw std::invalid_argument("rs code: need 0 <= k <= n");
        long long count = 1;
        for (int i = 0; i < k; ++i) {
            count *= field_size;
            if (count > enum_cap_)
                throw std::invalid_argument("rs code: q^k exceeds the enumeration cap");
        }
        message_count_ = count;
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const GaloisField& field() const { return gf_; }
    Alphabet alphabet() const { return Alphabet(gf_.size()); }
    Rational rate() const { return Rational(k_, n_); }
    long long message_count() const { return message_count_; }

    // Message = coefficient vector (constant term first), entries 0..q-1.
    SymbolString encode(const std::vector<int>& msg) const {
        if (static_cast<int>(msg.size()) != k_)
            throw std::invalid_argument("rs encode: wrong message length");
        std::vector<Symbol> out(n_);
        for (int i = 0; i < n_; ++i) {
            int acc = 0; // Horner at evaluation point i
            for (int j = k_ - 1; j >= 0; --j) acc = gf_.add(gf_.mul(acc, i), msg[j]);
            out[i] = acc + 1;
        }
        return SymbolString(alphabet(), std::move(out));
    }

    std::vector<int> message_from_ordinal(long long ordinal) const {
        std::vector<int> msg(k_);
        for (int i = 0; i < k_; ++i) {
            msg[i] = static_cast<int>(ordinal % gf_.size());
            ordinal /= gf_.size();
        }
        return msg;
    }

private:
    GaloisField gf_;
    int n_, k_;
    long long enum_cap_;
    long long message_count_ = 0;
};

// Exact (alpha, l, L)-list recovery by full enumeration: every message whose
// codeword places a symbol inside the per-position candidate set at >= alpha n
// positions. Exceeding l_cap is an error, never a silent truncation.
inline std::vector<std::vector<int>> brute_force_list_recover(
    const RSCode& code, const std::vector<std::vector<Symbol>>& position_sets,
    const Rational& alpha, long long l_cap) {
    if (static_cast<int>(position_sets.size()) != code.n())
        throw std::invalid_argument("list recover: wrong number of position sets");
    const int q = code.field().size();
    std::vector<char> member(static_cast<std::size_t>(code.n()) * q, 0);
    for (int i = 0; i < code.n(); ++i)
        for (Symbol s : position_sets[i]) {
            if (s < 1 || s > q) throw std::invalid_argument("list recover: symbol out of range");
            member[static_cast<std::size_t>(i) * q + (s - 1)] = 1;
        }

    std::vector<std::vector<int>> result;
    for (long long ord = 0; ord < code.message_count(); ++ord) {
        std::vector<int> msg = code.message_from_ordinal(ord);
        SymbolString cw = code.encode(msg);
        long long agree = 0;
        for (int i = 0; i < code.n(); ++i)
            if (member[static_cast<std::size_t>(i) * q + (cw[i] - 1)]) ++agree;
        if (agree * alpha.den >= alpha.num * static_cast<long long>(code.n())) {
            result.push_back(std::move(msg));
            if (static_cast<long long>(result.size()) > l_cap)
                throw ListRecoveryError("list recover: result exceeds the configured list cap");
        }
    }
    return result;
}

struct InsdelCodecConfig {
    int field_size = 0;
    int n = 0;
    int k = 0;
    Rational delta;
    Rational gamma;
    Rational epsilon;
    std::uint64_t seed = 1;
    std::optional<int> sync_alphabet; // default: max(4, ceil(eps'^-2))
    std::optional<int> list_input_cap; // l; default K
    std::optional<Rational> alpha;     // default 1 - delta - epsilon
    long long list_output_cap = 1024;  // L
    int max_attempts = 200;
    long long enum_cap = 1LL << 20;
};

// Outer list-recoverable code indexed with a synchronization string over the
// product alphabet.
struct InsdelCodec {
    RSCode outer;
    SyncString sync;
    DecoderParams params;
    int l = 0;
    Rational alpha;
    long long list_output_cap = 0;

    Alphabet payload_alphabet() const { return outer.alphabet(); }
    Alphabet index_alphabet() const { return sync.s.alphabet(); }
    Alphabet combined_alphabet() const {
        return product_alphabet(payload_alphabet(), index_alphabet());
    }
};

// Composed rate: R_outer * log|payload| / (log|payload| + log|index|).
inline double composed_rate(const InsdelCodec& codec) {
    const double lc = std::log(static_cast<double>(codec.outer.field().size()));
    const double ls = std::log(static_cast<double>(codec.sync.s.q()));
    return codec.outer.rate().value() * lc / (lc + ls);
}

inline InsdelCodec make_insdel_codec(const InsdelCodecConfig& config) {
    DecoderParams params = choose_params(config.epsilon, config.gamma);
    const int l = config.list_input_cap.value_or(params.K);
    // composition precondition: gamma <= l*eps/2 - 1
    if (config.gamma > Rational(l) * config.epsilon / Rational(2) - Rational(1))
        throw std::invalid_argument("codec: gamma exceeds l*eps/2 - 1");
    if (params.K > l)
        throw std::invalid_argument("codec: decoder round count exceeds the list input cap");
    RSCode outer(config.field_size, config.n, config.k, config.enum_cap);
    SyncConstructionConfig sync_config;
    sync_config.n = config.n;
    sync_config.epsilon = params.epsilon_prime;
    sync_config.alphabet_size = config.sync_alphabet;
    sync_config.seed = derive_seed(config.seed, 0x53594e43ull); // sync-construction stream
    sync_config.max_attempts = config.max_attempts;
    SyncString sync = construct_sync(sync_config);
    Rational alpha = config.alpha.value_or(Rational(1) - config.delta - config.epsilon);
    if (alpha <= Rational(0) || alpha > Rational(1))
        throw std::invalid_argument("codec: alpha out of (0, 1]");
    return InsdelCodec{std::move(outer), std::move(sync), params, l, alpha,
                       config.list_output_cap};
}

inline SymbolString insdel_encode(const InsdelCodec& codec, const std::vector<int>& msg) {
    return product_encode(index_payload(codec.outer.encode(msg), codec.sync));
}

// Split the received word into payload/index tracks, run the peeling decoder,
// collapse candidate lists to per-position symbol sets, and hand those to the
// outer code's list recovery.
inline std::vector<std::vector<int>> insdel_list_decode(const InsdelCodec& codec,
                                                        const SymbolString& received) {
    IndexedString tracks = product_decode(received, codec.payload_alphabet(),
                                          codec.index_alphabet());
    CandidateLists lists =
        global_list_decode(codec.sync.s, tracks.index, tracks.payload, codec.params.K);
    std::vector<std::vector<Symbol>> sets(lists.lists.size());
    for (std::size_t i = 0; i < lists.lists.size(); ++i) {
        std::vector<Symbol>& set = sets[i];
        for (const CandidateRef& ref : lists.lists[i])
            if (std::find(set.begin(), set.end(), ref.payload) == set.end())
                set.push_back(ref.payload);
        if (static_cast<int>(set.size()) > codec.l)
            throw ListRecoveryError("decode: candidate set exceeds the list input cap");
    }
    return brute_force_list_recover(codec.outer, sets, codec.alpha, codec.list_output_cap);
}

inline nlohmann::json codec_config_to_json(const InsdelCodecConfig& c) {
    nlohmann::json j{{"field", c.field_size}, {"n", c.n},         {"k", c.k},
                     {"delta", c.delta.str()}, {"gamma", c.gamma.str()},
                     {"epsilon", c.epsilon.str()}, {"seed", c.seed},
                     {"L_cap", c.list_output_cap}, {"max_attempts", c.max_attempts}};
    if (c.sync_alphabet) j["sync_alphabet"] = *c.sync_alphabet;
    if (c.list_input_cap) j["l"] = *c.list_input_cap;
    if (c.alpha) j["alpha"] = c.alpha->str();
    return j;
}

inline Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    return Rational::parse(v.dump());
}

inline InsdelCodecConfig codec_config_from_json(const nlohmann::json& j) {
    InsdelCodecConfig c;
    c.field_size = j.at("field").get<int>();
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.delta = json_rational(j.at("delta"));
    c.gamma = json_rational(j.at("gamma"));
    c.epsilon = json_rational(j.at("epsilon"));
    c.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("sync_alphabet")) c.sync_alphabet = j.at("sync_alphabet").get<int>();
    if (j.contains("l")) c.list_input_cap = j.at("l").get<int>();
    if (j.contains("alpha")) c.alpha = json_rational(j.at("alpha"));
    c.list_output_cap = j.value("L_cap", 1024LL);
    c.max_attempts = j.value("max_attempts", 200);
    return c;
}

// Encoded streams: header "payload_q index_q length", then one
// "payload,index" token per sent symbol.
inline void save_product_stream(std::ostream& os, const SymbolString& prod, int payload_q,
                                int index_q) {
    os << payload_q << ' ' << index_q << ' ' << prod.size() << '\n';
    for (std::size_t i = 0; i < prod.size(); ++i) {
        const int v = prod[i] - 1;
        if (i) os << ' ';
        os << (v / index_q + 1) << ',' << (v % index_q + 1);
    }
    os << '\n';
}

inline SymbolString load_product_stream(std::istream& is) {
    int payload_q = 0, index_q = 0;
    std::size_t len = 0;
    if (!(is >> payload_q >> index_q >> len))
        throw std::runtime_error("product stream: malformed header");
    std::vector<Symbol> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::string token;
        if (!(is >> token)) throw std::runtime_error("product stream: truncated");
        auto comma = token.find(',');
        if (comma == std::string::npos) throw std::runtime_error("product stream: bad token");
        const int p = std::stoi(token.substr(0, comma));
        const int s = std::stoi(token.substr(comma + 1));
        if (p < 1 || p > payload_q || s < 1 || s > index_q)
            throw std::runtime_error("product stream: symbol out of range");
        out[i] = (p - 1) * index_q + (s - 1) + 1;
    }
    return SymbolString(Alphabet(payload_q * index_q), std::move(out));
}

} // namespace insdel
