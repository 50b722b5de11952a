#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pomine/episode.hpp"

namespace pomine {

// How a shared-prefix node z sits relative to the two last nodes when two
// combinable episodes are joined. "first" is the last node of the
// lexically smaller episode, "second" that of the larger one.
enum class NodeType {
    after_first_before_second,  // forces first -> second
    before_first_after_second,  // forces second -> first
    after_first_only,           // join with second -> first would add edges
    before_first_only,          // join with first -> second would add edges
    after_second_only,          // join with first -> second would add edges
    before_second_only,         // join with second -> first would add edges
    before_both,
    after_both,
    unrelated_to_both,
};

enum class MiningMode { general, serial, parallel };

struct GenerationOpts {
    MiningMode mode = MiningMode::general;
    std::optional<uint32_t> lmax;  // cap on longest-path edges of the reduction
    std::optional<uint64_t> nmax;  // cap on number of maximal paths
};

// A level's candidates in canonical order, partitioned into blocks that share
// the size-1 smaller pattern obtained by deleting the last node. blockstart[i]
// is the index where episode i's block begins. freq and h are filled in after
// counting.
struct CandidateBook {
    int level = 0;
    std::vector<Episode> eps;
    std::vector<uint32_t> blockstart;
    std::vector<uint64_t> freq;
    std::vector<double> h;
};

// Same size, same first l-1 types with identical relation among them, and a
// strictly smaller last type in a1.
bool combinable(const Episode& a1, const Episode& a2);

// The (l+1)-node join of two combinable episodes. variant 0 leaves the two
// last nodes unordered, 1 orders first -> second, 2 orders second -> first.
// The result is closed and canonical; an inconsistent combination throws
// ValidationError.
Episode simple_join(const Episode& a1, const Episode& a2, int variant);

// Classification of shared-prefix node `node` (0..l-2).
NodeType classify_node(const Episode& a1, const Episode& a2, int node);

// The joins of a1 and a2 that keep both parents intact as subpatterns: the
// subset of {variant 0, 1, 2} allowed by the node classification, in that
// order. Never builds a join only to discard it.
std::vector<Episode> get_potential_candidates(const Episode& a1, const Episode& a2);

// The book of one-node episodes, one per type, as a single block.
CandidateBook level1_book(const std::vector<TypeId>& types);

// Builds the next level's candidates from the frequent episodes of this
// level. fl's entries must all be frequent; candidates are kept only if every
// size-1 smaller subpattern is present in fl, after the mode and structural
// bound filters.
CandidateBook generate_candidates(const CandidateBook& fl, const GenerationOpts& opts);

// Keeps eps[i] where keep[i] is true, preserving block structure.
CandidateBook filter_book(const CandidateBook& book, const std::vector<char>& keep);

} // namespace pomine
