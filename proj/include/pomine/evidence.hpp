#pragma once

#include <cstdint>
#include <vector>

#include "pomine/counter.hpp"
#include "pomine/episode.hpp"

namespace pomine {

// Entropy, base 2, of the empirical direction estimate p = f_ij/(f_ij+f_ji)
// for one unordered node pair. Returns 1 when f_ij + f_ji = 0: no evidence
// either way is indistinguishable from a genuinely unordered pair.
double pair_evidence(uint64_t f_ij, uint64_t f_ji);

struct PairEvidence {
    int i = 0;
    int j = 0;  // i < j, nodes unordered in the episode
    uint64_t f_ij = 0;
    uint64_t f_ji = 0;
    double p = 0.5;  // reported as 0.5 when f_ij + f_ji = 0
    double h = 1.0;
};

struct EvidenceReport {
    double h = 1.0;  // min over unordered pairs; 1 for episodes with none
    int argmin_i = -1;
    int argmin_j = -1;
    std::vector<PairEvidence> pairs;
};

// Bidirectional evidence of an episode given its counting result: the minimum
// pair_evidence over all unordered node pairs. High values mean the data
// shows both orders of every unordered pair, so the missing edges are earned
// rather than an artifact of too little data.
EvidenceReport bidirectional_evidence(const Episode& ep, const CountResult& res);

} // namespace pomine
