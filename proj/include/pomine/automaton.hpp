#pragma once

#include <cstdint>
#include <utility>

#include "pomine/episode.hpp"

namespace pomine {

// States of the occurrence-tracking automaton of an episode, as bit masks over
// node indices. A state is (q, w): q the accepted set, w the wait set. The
// automaton starts at (0, minimal nodes), accepts a node only when every node
// ordered before it has been accepted, and is final at q = all nodes, w = 0.

struct AutomatonState {
    uint64_t q = 0;
    uint64_t w = 0;
};

inline uint64_t full_mask(int l) {
    return l == 64 ? ~uint64_t(0) : (uint64_t(1) << l) - 1;
}

// Wait set determined by an accepted set: nodes outside q all of whose parents
// are inside q.
uint64_t wait_set(const Episode& ep, uint64_t q);

AutomatonState initial_state(const Episode& ep);

// Accepts node `node` (which must be set in state.w) and returns the next
// state. Nodes newly enabled by the acceptance enter the wait set.
AutomatonState transition(const Episode& ep, AutomatonState state, int node);

// q is an accepted set of some reachable state iff it is parent-closed.
bool is_valid_accepted_set(const Episode& ep, uint64_t q);

// w is a wait set of some reachable state iff no two of its nodes are ordered.
bool is_valid_wait_set(const Episode& ep, uint64_t w);

// The unique accepted set whose state carries wait set w (w must be valid):
// the complement of the upward closure of w.
uint64_t accepted_from_wait(const Episode& ep, uint64_t w);

} // namespace pomine
