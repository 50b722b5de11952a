#include <doctest.h>

#include "helpers.hpp"

using namespace pomine;
using testutil::ep;
using testutil::seq_of;

namespace {

CountResult count_one(const Episode& e, const EventSequence& seq,
                      std::optional<uint64_t> expiry, CounterStats* st = nullptr) {
    return count_frequencies({e}, seq, expiry, 1, st)[0];
}

} // namespace

TEST_CASE("worked sequence one: (B -> A, B -> C)") {
    CounterStats st;
    auto res = count_one(ep("A B C | B<A B<C"), testutil::paper_seq1(), std::nullopt, &st);
    CHECK(res.freq == 2);
    // occurrences were B,A,C then B,C,A: the unordered pair saw both orders once
    CHECK(res.fij[0 * 3 + 2] == 1);
    CHECK(res.fij[2 * 3 + 0] == 1);
    CHECK(res.fij[1 * 3 + 0] == 2);  // B before A in both
    CHECK(res.fij[0 * 3 + 1] == 0);
    CHECK(st.nesting_violations == 0);
    CHECK(st.order_violations == 0);
    CHECK(st.max_live <= 3);
}

TEST_CASE("worked sequence three: (A B) -> (C D) with and without expiry") {
    Episode e = ep("A B C D | A<C A<D B<C B<D");
    CHECK(count_one(e, testutil::paper_seq3(), std::nullopt).freq == 2);
    CHECK(count_one(e, testutil::paper_seq3(), 4).freq == 1);
    CHECK(count_one(e, testutil::paper_seq3(), 3).freq == 0);
}

TEST_CASE("a batch can feed several waited nodes but not chains") {
    auto tied = seq_of({{1, "A"}, {1, "B"}});
    CHECK(count_one(ep("A B |"), tied, std::nullopt).freq == 1);
    CHECK(count_one(ep("A B | A<B"), tied, std::nullopt).freq == 0);
    CHECK(count_one(ep("A B | A<B"), seq_of({{1, "A"}, {2, "B"}}), std::nullopt).freq == 1);
}

TEST_CASE("duplicate states keep the automaton that started later") {
    Episode e = ep("A B | A<B");
    auto seq = seq_of({{1, "A"}, {2, "A"}, {3, "B"}});
    CHECK(count_one(e, seq, 1).freq == 1);  // innermost occurrence spans 1
    CHECK(count_one(e, seq, std::nullopt).freq == 1);
}

TEST_CASE("an expired completion retires only that automaton") {
    Episode e = ep("A B | A<B");
    auto seq = seq_of({{1, "A"}, {3, "B"}, {4, "A"}, {5, "B"}});
    CHECK(count_one(e, seq, 1).freq == 1);  // first completion spans 2 and is dropped
    CHECK(count_one(e, seq, std::nullopt).freq == 2);
}

TEST_CASE("one-node episodes count ticks, not events") {
    CHECK(count_one(ep("A |"), testutil::paper_seq1(), std::nullopt).freq == 4);
    CHECK(count_one(ep("A |"), seq_of({{1, "A"}, {1, "A"}, {2, "A"}}), std::nullopt).freq == 2);
}

TEST_CASE("related pairs always agree with the frequency") {
    Episode e = ep("A B C | A<B B<C");
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        auto seq = testutil::random_stream(rng, 3, 30);
        auto res = count_one(e, seq, 5);
        CHECK(res.fij[0 * 3 + 1] == res.freq);
        CHECK(res.fij[1 * 3 + 2] == res.freq);
        CHECK(res.fij[0 * 3 + 2] == res.freq);
        CHECK(res.fij[1 * 3 + 0] == 0);
    }
}

TEST_CASE("counter equals oracle on random instances") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 150; ++it) {
        Episode e = testutil::random_episode(rng, 5, 2 + int(rng() % 3));
        auto seq = testutil::random_stream(rng, 5, 20 + int(rng() % 20));
        std::optional<uint64_t> expiry;
        if (rng() % 2) expiry = 2 + rng() % 5;
        CounterStats st;
        auto res = count_one(e, seq, expiry, &st);
        CAPTURE(format_episode(e, testutil::ab()));
        CHECK(res.freq == oracle_frequency(e, seq, expiry));
        CHECK(st.nesting_violations == 0);
        CHECK(st.order_violations == 0);
        CHECK(st.max_live <= uint64_t(e.size()));
    }
}

TEST_CASE("multi-candidate counting is independent and thread-stable") {
    std::mt19937_64 rng(31);
    std::vector<Episode> eps;
    for (int i = 0; i < 40; ++i) eps.push_back(testutil::random_episode(rng, 6, 3));
    auto seq = testutil::random_stream(rng, 6, 200);
    auto lone = count_frequencies(eps, seq, 4, 1);
    auto four = count_frequencies(eps, seq, 4, 4);
    REQUIRE(lone.size() == four.size());
    for (size_t i = 0; i < eps.size(); ++i) {
        CHECK(lone[i].freq == four[i].freq);
        CHECK(lone[i].fij == four[i].fij);
        CHECK(lone[i].freq == count_frequencies({eps[i]}, seq, 4, 1)[0].freq);
    }
}

TEST_CASE("decreasing ticks are rejected") {
    EventSequence bad{{0, 5}, {0, 4}};
    CHECK_THROWS_AS(count_frequencies({ep("A |")}, bad, std::nullopt, 1), ValidationError);
}
