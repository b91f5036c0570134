#include <catch2/catch_amalgamated.hpp>

#include "insdel/channel.hpp"
#include "oracles.hpp"

using namespace insdel;

namespace {
SymbolString L(std::string_view s, int q = 26) { return SymbolString::from_letters(s, q); }
} // namespace

TEST_CASE("apply_pattern fixed cases") {
    auto x = L("abc");
    CorruptionPattern identity;
    identity.n = 3;
    CHECK(apply_pattern(x, identity) == x);

    CorruptionPattern del;
    del.n = 3;
    del.deletions = {2};
    CHECK(apply_pattern(x, del).letters() == "ac");

    CorruptionPattern mixed;
    mixed.n = 3;
    mixed.deletions = {1};
    mixed.insertions = {{0, 26}};
    CHECK(apply_pattern(x, mixed).letters() == "zbc");

    CorruptionPattern same_gap;
    same_gap.n = 3;
    same_gap.insertions = {{1, 24}, {1, 25}}; // list order preserved within a gap
    CHECK(apply_pattern(x, same_gap).letters() == "axybc");
}

TEST_CASE("apply_pattern validates scripts") {
    auto x = L("abc");
    CorruptionPattern bad_pos;
    bad_pos.n = 3;
    bad_pos.deletions = {4};
    CHECK_THROWS_AS(apply_pattern(x, bad_pos), std::invalid_argument);

    CorruptionPattern bad_gap;
    bad_gap.n = 3;
    bad_gap.insertions = {{5, 1}};
    CHECK_THROWS_AS(apply_pattern(x, bad_gap), std::invalid_argument);

    CorruptionPattern bad_sym;
    bad_sym.n = 3;
    bad_sym.insertions = {{0, 27}};
    CHECK_THROWS_AS(apply_pattern(x, bad_sym), std::invalid_argument);

    CorruptionPattern wrong_n;
    wrong_n.n = 2;
    CHECK_THROWS_AS(apply_pattern(x, wrong_n), std::invalid_argument);
}

TEST_CASE("random_pattern spends exactly the floor budgets, deterministically") {
    ChannelBudget budget(Rational(3, 10), Rational(1, 2), 21);
    CHECK(budget.max_deletions() == 6);
    CHECK(budget.max_insertions() == 10);
    Alphabet a(5);
    auto p1 = random_pattern(budget, a, 77);
    auto p2 = random_pattern(budget, a, 77);
    CHECK(p1.deletions == p2.deletions);
    CHECK(p1.insertions == p2.insertions);
    CHECK(p1.deletion_count() == 6);
    CHECK(p1.insertion_count() == 10);

    ChannelBudget empty(Rational(0), Rational(0), 21);
    auto p0 = random_pattern(empty, a, 1);
    CHECK(p0.deletion_count() == 0);
    CHECK(p0.insertion_count() == 0);

    // n-1 deletions leave a single symbol
    ChannelBudget nearly_all(Rational(20, 21), Rational(0), 21);
    auto p3 = random_pattern(nearly_all, a, 3);
    Rng rng(5);
    auto x = oracle::random_string(rng, 5, 21);
    CHECK(apply_pattern(x, p3).size() == 1);
}

TEST_CASE("pattern outputs relate to the input as subsequences") {
    Rng rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = rng.range(1, 14);
        auto x = oracle::random_string(rng, 4, n);
        ChannelBudget budget(Rational(rng.range(0, 3), 10), Rational(rng.range(0, 12), 10), n);
        auto p = random_pattern(budget, x.alphabet(), derive_seed(23, iter));
        auto out = apply_pattern(x, p);
        CHECK(static_cast<int>(out.size()) ==
              n - p.deletion_count() + p.insertion_count());

        CorruptionPattern only_del = p;
        only_del.insertions.clear();
        CHECK(is_subsequence(apply_pattern(x, only_del), x));

        CorruptionPattern only_ins = p;
        only_ins.deletions.clear();
        CHECK(is_subsequence(x, apply_pattern(x, only_ins)));
    }
}

TEST_CASE("delete-least-frequent fixed cases") {
    // "aaab": d=0, delta'=1/4, first 2 positions lose their single least
    // frequent symbol ('b' is absent there), leftover budget deletes pos 1
    auto p = adversary_delete_least_frequent(L("aaab", 2), Rational(1, 4));
    CHECK(p.deletion_count() == 1);
    CHECK(p.deletions == std::vector<int>{1});

    auto empty = adversary_delete_least_frequent(L("abcabc", 3), Rational(0));
    CHECK(empty.deletion_count() == 0);

    // alternating string, delta=1/2, q=2: ties break toward symbol 'a'
    std::vector<Symbol> alt;
    for (int i = 0; i < 10; ++i) alt.push_back(i % 2 + 1);
    SymbolString x(Alphabet(2), alt);
    auto p2 = adversary_delete_least_frequent(x, Rational(1, 2));
    REQUIRE(p2.deletion_count() == 5);
    for (int d : p2.deletions) CHECK(x[d - 1] == 1);

    CHECK_THROWS_AS(adversary_delete_least_frequent(x, Rational(3, 4)), std::invalid_argument);
}

TEST_CASE("delete-least-frequent respects budget and thins each part") {
    Rng rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        const int q = rng.range(2, 6);
        const int n = rng.range(1, 24);
        auto x = oracle::random_string(rng, q, n);
        Rational delta(rng.range(0, q - 1), q);
        delta = delta + Rational(rng.range(0, 3), 4 * q); // exercise the fractional case
        if (delta > Rational(q - 1, q)) continue;
        auto p = adversary_delete_least_frequent(x, delta);
        const int budget = static_cast<int>(delta.floor_times(n));
        CHECK(p.deletion_count() <= budget);

        // surviving symbols per part stay within the distinct-count ceiling
        const long long d = (delta * Rational(q)).floor();
        const Rational delta_prime = delta - Rational(d, q);
        const long long part1 = (delta_prime * Rational(q) * Rational(n)).floor();
        std::vector<char> deleted(n + 1, 0);
        for (int del : p.deletions) deleted[del] = 1;
        std::set<Symbol> part1_syms, part2_syms;
        for (int pos = 1; pos <= n; ++pos) {
            if (deleted[pos]) continue;
            // leftover-budget deletions can only shrink these sets further,
            // so the ceilings still hold
            (pos <= part1 ? part1_syms : part2_syms).insert(x[pos - 1]);
        }
        CHECK(static_cast<long long>(part1_syms.size()) <= q - d - 1);
        CHECK(static_cast<long long>(part2_syms.size()) <= q - d);
    }
}

TEST_CASE("insert-erasure fixed cases") {
    auto p = adversary_insert_erasure(L("bb", 2), Rational(1));
    CHECK(apply_pattern(L("bb", 2), p).letters() == "abab");

    // gamma below (q-1)/n floors to zero wrapped positions
    auto none = adversary_insert_erasure(L("bbbb", 4), Rational(1, 8));
    CHECK(none.insertion_count() == 0);

    // q=3: first symbol gets wrapped into a 1,2,3 window
    auto p3 = adversary_insert_erasure(L("bac", 3), Rational(2, 3));
    auto out = apply_pattern(L("bac", 3), p3);
    CHECK(out.letters().substr(0, 3) == "abc");
    CHECK(p3.insertion_count() == 2);
}

TEST_CASE("insert-erasure spends at most the budget and wraps full windows") {
    Rng rng(37);
    for (int iter = 0; iter < 200; ++iter) {
        const int q = rng.range(2, 5);
        const int n = rng.range(1, 16);
        auto x = oracle::random_string(rng, q, n);
        Rational gamma(rng.range(0, 4 * (q - 1)), 4);
        auto p = adversary_insert_erasure(x, gamma);
        const long long budget = gamma.floor_times(n);
        CHECK(p.insertion_count() <= budget);
        CHECK(p.insertion_count() % (q - 1) == 0);
        CHECK(is_subsequence(x, apply_pattern(x, p)));
    }
}

TEST_CASE("reachability test agrees with brute force") {
    Rng rng(41);
    for (int iter = 0; iter < 300; ++iter) {
        const int q = rng.range(1, 3);
        auto x = oracle::random_string(rng, q, rng.range(0, 8));
        auto z = oracle::random_string(rng, q, rng.range(0, 8));
        const int max_del = rng.range(0, 3);
        const int max_ins = rng.range(0, 3);
        CHECK(reachable_within(x, z, max_del, max_ins) ==
              oracle::reachable_bruteforce(x, z, max_del, max_ins));
    }
}

TEST_CASE("find_confusable_pair fixed cases") {
    std::vector<SymbolString> cb = {L("aa", 2), L("ab", 2), L("ba", 2), L("bb", 2)};
    auto t = find_confusable_pair(cb, Rational(1, 2), Rational(1, 2));
    REQUIRE(t.has_value());
    CHECK(t->x == L("aa", 2));
    CHECK(t->y == L("ab", 2));
    CHECK(t->z == L("aab", 2));
    CHECK(oracle::reachable_bruteforce(t->x, t->z, 1, 1));
    CHECK(oracle::reachable_bruteforce(t->y, t->z, 1, 1));

    std::vector<SymbolString> single = {L("aa", 2)};
    CHECK_FALSE(find_confusable_pair(single, Rational(1, 2), Rational(1, 2)).has_value());

    // wholly distinct codewords and budgets too small to confuse: nothing
    std::vector<SymbolString> distinct = {L("aa", 2), L("bb", 2)};
    CHECK_FALSE(find_confusable_pair(distinct, Rational(1, 4), Rational(1, 4)).has_value());
    // ...but with a full budget the pair is genuinely confusable through "ab"
    auto wide = find_confusable_pair(distinct, Rational(1, 2), Rational(1, 2));
    REQUIRE(wide.has_value());
    CHECK(oracle::reachable_bruteforce(wide->x, wide->z, 1, 1));
    CHECK(oracle::reachable_bruteforce(wide->y, wide->z, 1, 1));

    std::vector<SymbolString> inconsistent = {L("aa", 2), L("aba", 2)};
    CHECK_THROWS_AS(find_confusable_pair(inconsistent, Rational(1, 2), Rational(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("confusable triples re-verify over random codebooks") {
    Rng rng(43);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = rng.range(3, 8);
        const int q = 2;
        const Rational delta(rng.range(1, 2), 4);
        const Rational gamma(rng.range(1, 2), 4);
        std::vector<SymbolString> cb;
        const int size = rng.range(4, 16);
        for (int i = 0; i < size; ++i) cb.push_back(oracle::random_string(rng, q, n));
        auto t = find_confusable_pair(cb, delta, gamma);
        if (!t) continue;
        const int max_del = static_cast<int>(delta.floor_times(n));
        const int max_ins = static_cast<int>(gamma.floor_times(n));
        CHECK(oracle::reachable_bruteforce(t->x, t->z, max_del, max_ins));
        CHECK(oracle::reachable_bruteforce(t->y, t->z, max_del, max_ins));
    }
}

TEST_CASE("pattern JSON round-trips") {
    CorruptionPattern p;
    p.n = 6;
    p.deletions = {2, 5};
    p.insertions = {{0, 3}, {4, 1}, {4, 2}};
    auto j = pattern_to_json(p);
    CHECK(j["n"] == 6);
    auto back = pattern_from_json(j);
    CHECK(back.n == p.n);
    CHECK(back.deletions == p.deletions);
    CHECK(back.insertions == p.insertions);
}
