#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pomine/episode.hpp"

namespace pomine {

struct Event {
    TypeId type;
    uint64_t tick;
};

// Events sorted by non-decreasing tick. Ties are a batch: they carry the same
// timestamp and no order among themselves.
using EventSequence = std::vector<Event>;

// Throws ValidationError if ticks ever decrease.
void validate_sequence(const EventSequence& seq);

// One tracked automaton of one episode. Slots are pooled and reused; gen is
// bumped on every release so stale waits entries can be recognized lazily.
struct TrackerRecord {
    uint64_t q = 0;
    uint64_t w = 0;
    uint64_t t_init = 0;
    uint32_t gen = 0;
    bool alive = false;
    std::vector<uint64_t> acc;  // acceptance tick of node i, meaningful where q bit i is set
    std::vector<uint8_t> prec;  // l*l row-major: 1 iff node i was accepted strictly before node j
};

// Entry in the per-event-type waits index: "this automaton can accept this
// node". Entries issued during a tick only become active on the next tick;
// entries whose generation no longer matches their slot are dead and are
// dropped when next touched.
struct WaitsEntry {
    uint32_t ep;
    uint32_t slot;
    uint16_t node;
    uint32_t gen;
    uint64_t active_from;
};

struct CountResult {
    uint64_t freq = 0;
    // l*l row-major. fij[i*l+j] = number of counted occurrences in which node
    // i's event carried a strictly earlier tick than node j's.
    std::vector<uint32_t> fij;
};

// Always-on internal invariant monitoring, aggregated over all episodes.
struct CounterStats {
    uint64_t max_live = 0;            // peak live non-start automata of any one episode
    uint64_t nesting_violations = 0;  // live accepted sets not forming a strict chain
    uint64_t order_violations = 0;    // completed occurrence breaking an order constraint
};

// Counts, for every candidate, the maximal number of non-overlapped
// occurrences in the sequence, optionally keeping only occurrences whose span
// (last tick minus first tick) is at most `expiry`. Also accumulates the
// directional tick-order counts fij over the counted occurrences. Candidates
// never interact, so the work may be split over `threads` workers with
// identical results.
std::vector<CountResult> count_frequencies(const std::vector<Episode>& candidates,
                                           const EventSequence& seq,
                                           std::optional<uint64_t> expiry,
                                           unsigned threads = 1,
                                           CounterStats* stats = nullptr);

} // namespace pomine
