#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pomine/counter.hpp"
#include "pomine/episode.hpp"

namespace pomine {

// Brute-force reference implementations. Deliberately small-instance only:
// episodes up to 6 nodes, streams up to 60 events.

struct Occurrence {
    std::vector<uint32_t> h;  // stream index of each node, in node order
    uint64_t t_start = 0;
    uint64_t t_end = 0;
};

// Every occurrence of the episode in the sequence (span at most `expiry` when
// given), in lexicographic order of the h vector. Throws ValidationError when
// the instance exceeds the guards above.
std::vector<Occurrence> enumerate_occurrences(const Episode& ep, const EventSequence& seq,
                                              std::optional<uint64_t> expiry);

// Size of a largest subset of pairwise non-overlapped occurrences. Two
// occurrences are non-overlapped iff one ends strictly before the other
// starts.
uint64_t max_nonoverlapped(std::vector<Occurrence> occs);

uint64_t oracle_frequency(const Episode& ep, const EventSequence& seq,
                          std::optional<uint64_t> expiry);

// All canonical episodes of the given size over the given types (labeled
// strict partial orders). Guarded to size <= 4 and <= 8 types.
std::vector<Episode> enumerate_all_episodes(const std::vector<TypeId>& types, int size);

} // namespace pomine
