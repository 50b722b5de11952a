#include <doctest.h>

#include "helpers.hpp"

using namespace pomine;
using testutil::ep;

TEST_CASE("initial state waits on minimal nodes") {
    CHECK(initial_state(ep("A B C | B<A B<C")).w == 0b010);
    CHECK(initial_state(ep("A B C |")).w == 0b111);
    CHECK(initial_state(ep("A B C | A<B B<C")).w == 0b001);
    CHECK(initial_state(ep("A B C D | A<C A<D B<C B<D")).w == 0b0011);
}

TEST_CASE("transition consumes the node and enables its ready children") {
    Episode e = ep("A B C D | A<C A<D B<C B<D");
    AutomatonState s = initial_state(e);
    s = transition(e, s, 0);  // accept A
    CHECK(s.q == 0b0001);
    CHECK(s.w == 0b0010);  // C, D still blocked by B
    s = transition(e, s, 1);  // accept B
    CHECK(s.q == 0b0011);
    CHECK(s.w == 0b1100);
    s = transition(e, s, 3);
    CHECK(s.w == 0b0100);
    s = transition(e, s, 2);
    CHECK(s.q == full_mask(4));
    CHECK(s.w == 0);
}

TEST_CASE("transition outside the wait set throws") {
    Episode e = ep("A B | A<B");
    CHECK_THROWS_AS(transition(e, initial_state(e), 1), ValidationError);
    CHECK_THROWS_AS(transition(e, initial_state(e), 7), ValidationError);
}

TEST_CASE("accepted sets are the parent-closed subsets") {
    Episode e = ep("A B C | A<B B<C");
    CHECK(is_valid_accepted_set(e, 0b000));
    CHECK(is_valid_accepted_set(e, 0b001));
    CHECK(is_valid_accepted_set(e, 0b011));
    CHECK(is_valid_accepted_set(e, 0b111));
    CHECK_FALSE(is_valid_accepted_set(e, 0b010));
    CHECK_FALSE(is_valid_accepted_set(e, 0b100));
    CHECK_FALSE(is_valid_accepted_set(e, 0b110));
}

TEST_CASE("wait sets are the antichains and pin down the accepted set") {
    Episode e = ep("A B C D | A<B A<C");
    CHECK(is_valid_wait_set(e, 0b1001));        // A with D
    CHECK(is_valid_wait_set(e, 0b0110));        // B with C
    CHECK_FALSE(is_valid_wait_set(e, 0b0011));  // A with B are ordered
    CHECK(is_valid_wait_set(e, 0));
    CHECK(accepted_from_wait(e, 0b1001) == 0);
    CHECK(accepted_from_wait(e, 0b0110) == 0b1001);  // A and D accepted
    CHECK(accepted_from_wait(e, 0) == full_mask(4));
    CHECK_THROWS_AS(accepted_from_wait(e, 0b0011), ValidationError);
}

TEST_CASE("full property suite on assorted shapes") {
    for (const char* text :
         {"A |", "A B |", "A B | A<B", "A B C | B<A B<C", "A B C | A<B B<C",
          "A B C D | A<C A<D B<C B<D", "A B C D | A<B A<C B<D C<D",
          "A B C D E | A<B B<C A<D", "A B C D E F | A<C B<C C<D D<E D<F"}) {
        CAPTURE(text);
        CHECK(testutil::check_fsa_properties(ep(text)) == 0);
    }
}

TEST_CASE("property suite on random episodes") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        Episode e = testutil::random_episode(rng, 8, 2 + int(rng() % 4));
        CHECK(testutil::check_fsa_properties(e) == 0);
    }
}
