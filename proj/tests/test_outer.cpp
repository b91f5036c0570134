#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "insdel/outer.hpp"
#include "oracles.hpp"

using namespace insdel;

namespace {

// Independent list-recovery route: positions outer, messages inner,
// per-message counters accumulated column by column.
std::vector<std::vector<int>> list_recover_by_columns(const RSCode& code,
                                                      const std::vector<std::vector<Symbol>>& sets,
                                                      const Rational& alpha) {
    std::vector<long long> agree(static_cast<std::size_t>(code.message_count()), 0);
    for (int i = 0; i < code.n(); ++i) {
        for (long long ord = 0; ord < code.message_count(); ++ord) {
            SymbolString cw = code.encode(code.message_from_ordinal(ord));
            for (Symbol s : sets[i])
                if (cw[i] == s) {
                    ++agree[static_cast<std::size_t>(ord)];
                    break;
                }
        }
    }
    std::vector<std::vector<int>> out;
    for (long long ord = 0; ord < code.message_count(); ++ord)
        if (agree[static_cast<std::size_t>(ord)] * alpha.den >=
            alpha.num * static_cast<long long>(code.n()))
            out.push_back(code.message_from_ordinal(ord));
    return out;
}

InsdelCodecConfig small_codec_config() {
    InsdelCodecConfig cfg;
    cfg.field_size = 8;
    cfg.n = 8;
    cfg.k = 2;
    cfg.delta = Rational(1, 4);
    cfg.gamma = Rational(1, 4);
    cfg.epsilon = Rational(2, 5);
    cfg.sync_alphabet = 64;
    cfg.seed = 3;
    cfg.list_output_cap = 64;
    cfg.max_attempts = 2000;
    return cfg;
}

} // namespace

TEST_CASE("rs encoding fixed cases") {
    RSCode rs(5, 4, 2);
    CHECK(rs.encode({0, 0}).symbols() == std::vector<Symbol>{1, 1, 1, 1});
    CHECK(rs.encode({1, 1}).symbols() == std::vector<Symbol>{2, 3, 4, 5}); // 1+x at 0,1,2,3

    RSCode constant(5, 4, 1);
    auto cw = constant.encode({3});
    for (std::size_t i = 0; i < cw.size(); ++i) CHECK(cw[i] == 4);

    CHECK_THROWS_AS(rs.encode({1}), std::invalid_argument);
    CHECK_THROWS_AS(RSCode(5, 6, 2), std::invalid_argument);     // n > q
    CHECK_THROWS_AS(RSCode(16, 15, 10), std::invalid_argument);  // q^k over cap
}

TEST_CASE("rs encoding is injective at small sizes") {
    RSCode rs(8, 6, 2);
    std::set<std::vector<Symbol>> seen;
    for (long long ord = 0; ord < rs.message_count(); ++ord)
        CHECK(seen.insert(rs.encode(rs.message_from_ordinal(ord)).symbols()).second);
}

TEST_CASE("list recovery fixed cases") {
    RSCode rs(5, 4, 2);
    auto cw = rs.encode({2, 3});
    std::vector<std::vector<Symbol>> singletons(4);
    for (int i = 0; i < 4; ++i) singletons[i] = {cw[i]};
    auto got = brute_force_list_recover(rs, singletons, Rational(1), 16);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == std::vector<int>{2, 3});

    std::vector<std::vector<Symbol>> empties(4);
    CHECK(brute_force_list_recover(rs, empties, Rational(1, 2), 16).empty());

    // all messages agree with everything at alpha = 0
    CHECK(brute_force_list_recover(rs, empties, Rational(0), 32).size() == 25);

    // symbols present in 3 of 4 positions at alpha = 7/10 keeps the message
    std::vector<std::vector<Symbol>> partial(4);
    for (int i = 0; i < 3; ++i) partial[i] = {cw[i]};
    partial[3] = {};
    auto partial_got = brute_force_list_recover(rs, partial, Rational(7, 10), 16);
    bool contains = false;
    for (auto& m : partial_got)
        if (m == std::vector<int>{2, 3}) contains = true;
    CHECK(contains);

    CHECK_THROWS_AS(brute_force_list_recover(rs, empties, Rational(0), 3), ListRecoveryError);
    std::vector<std::vector<Symbol>> wrong(3);
    CHECK_THROWS_AS(brute_force_list_recover(rs, wrong, Rational(1), 16), std::invalid_argument);
}

TEST_CASE("list recovery agrees with the column-order route on random instances") {
    Rng rng(71);
    RSCode rs(8, 7, 2);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::vector<Symbol>> sets(7);
        for (auto& set : sets) {
            const int size = rng.range(0, 3);
            for (int t = 0; t < size; ++t) set.push_back(rng.range(1, 8));
        }
        const Rational alpha(rng.range(1, 4), 4);
        auto a = brute_force_list_recover(rs, sets, alpha, 1 << 12);
        auto b = list_recover_by_columns(rs, sets, alpha);
        CHECK(a == b);
    }
}

TEST_CASE("codec construction enforces the composition precondition") {
    InsdelCodecConfig cfg = small_codec_config();
    CHECK_NOTHROW(make_insdel_codec(cfg));

    InsdelCodecConfig bad = cfg;
    bad.list_input_cap = 3; // gamma = 1/4 > 3*(2/5)/2 - 1 = -2/5
    CHECK_THROWS_AS(make_insdel_codec(bad), std::invalid_argument);

    InsdelCodecConfig tight = cfg;
    tight.gamma = Rational(7, 5);
    tight.list_input_cap = 12; // 12*(2/5)/2 - 1 = 7/5 exactly
    CHECK_NOTHROW(make_insdel_codec(tight));
}

TEST_CASE("encode projects back to tracks and has block length n") {
    InsdelCodec codec = make_insdel_codec(small_codec_config());
    std::vector<int> msg = {5, 2};
    SymbolString sent = insdel_encode(codec, msg);
    CHECK(sent.size() == 8);
    IndexedString tracks = product_decode(sent, codec.payload_alphabet(), codec.index_alphabet());
    CHECK(tracks.index == codec.sync.s);
    CHECK(tracks.payload == codec.outer.encode(msg));
}

TEST_CASE("composed rate matches the dilution formula") {
    InsdelCodec codec = make_insdel_codec(small_codec_config());
    const double rate = composed_rate(codec);
    const double expect = (2.0 / 8.0) * std::log2(8.0) / (std::log2(8.0) + std::log2(64.0));
    CHECK(rate == Catch::Approx(expect).epsilon(1e-12));
}

TEST_CASE("identity channel decodes to a set containing the message") {
    InsdelCodec codec = make_insdel_codec(small_codec_config());
    std::vector<int> msg = {7, 1};
    SymbolString sent = insdel_encode(codec, msg);
    auto decoded = insdel_list_decode(codec, sent);
    bool contains = false;
    for (auto& m : decoded)
        if (m == msg) contains = true;
    CHECK(contains);
    CHECK(static_cast<long long>(decoded.size()) <= codec.list_output_cap);
}

TEST_CASE("end-to-end containment over all strategies within budget") {
    InsdelCodec codec = make_insdel_codec(small_codec_config());
    ChannelBudget budget(Rational(1, 4), Rational(1, 4), 8);
    Rng rng(83);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<int> msg = codec.outer.message_from_ordinal(
            static_cast<long long>(rng.below(static_cast<std::uint64_t>(
                codec.outer.message_count()))));
        SymbolString sent = insdel_encode(codec, msg);
        std::vector<CorruptionPattern> patterns = {
            random_pattern(budget, sent.alphabet(), derive_seed(83, iter)),
            adversary_delete_least_frequent(sent, budget.delta),
            adversary_insert_erasure(sent, budget.gamma)};
        for (const auto& p : patterns) {
            CHECK(p.deletion_count() <= budget.max_deletions());
            CHECK(p.insertion_count() <= budget.max_insertions());
            auto decoded = insdel_list_decode(codec, apply_pattern(sent, p));
            bool contains = false;
            for (auto& m : decoded)
                if (m == msg) contains = true;
            CHECK(contains);
            CHECK(static_cast<long long>(decoded.size()) <= codec.list_output_cap);
        }
    }
}

TEST_CASE("codec config JSON round-trips") {
    InsdelCodecConfig cfg = small_codec_config();
    auto j = codec_config_to_json(cfg);
    InsdelCodecConfig back = codec_config_from_json(j);
    CHECK(back.field_size == cfg.field_size);
    CHECK(back.n == cfg.n);
    CHECK(back.k == cfg.k);
    CHECK(back.delta == cfg.delta);
    CHECK(back.gamma == cfg.gamma);
    CHECK(back.epsilon == cfg.epsilon);
    CHECK(back.seed == cfg.seed);
    CHECK(back.sync_alphabet == cfg.sync_alphabet);
    CHECK(back.list_output_cap == cfg.list_output_cap);
}

TEST_CASE("product stream serialization round-trips") {
    InsdelCodec codec = make_insdel_codec(small_codec_config());
    SymbolString sent = insdel_encode(codec, {3, 4});
    std::ostringstream os;
    save_product_stream(os, sent, codec.payload_alphabet().size, codec.index_alphabet().size);
    std::istringstream is(os.str());
    SymbolString back = load_product_stream(is);
    CHECK(back == sent);
}
