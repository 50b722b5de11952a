#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pomine/alphabet.hpp"

namespace pomine {

constexpr int kMaxEpisodeSize = 64;

// An injective episode: a set of distinct event types together with a strict
// partial order over them. Node i carries type g[i]; g is strictly increasing,
// so node indices and type order agree. The relation is stored transitively
// closed, as bit masks: child[i] bit j set means node i precedes node j, and
// parent[j] is the transpose. This is the canonical form; two episodes are
// equal iff their g arrays and child masks are equal.
struct Episode {
    std::vector<TypeId> g;
    std::vector<uint64_t> child;
    std::vector<uint64_t> parent;

    int size() const { return static_cast<int>(g.size()); }

    bool related(int i, int j) const { return (child[i] >> j) & 1; }

    bool operator==(const Episode& o) const { return g == o.g && child == o.child; }
};

// Total order on canonical episodes: size, then g lexicographically, then the
// adjacency matrix row-major with 0 before 1.
bool episode_less(const Episode& a, const Episode& b);

struct EpisodeLess {
    bool operator()(const Episode& a, const Episode& b) const { return episode_less(a, b); }
};

// True iff the masks form a strict partial order: irreflexive, antisymmetric,
// transitive. `child` need not be closed; transitivity itself is checked.
bool validate_partial_order(const std::vector<uint64_t>& child);

// In-place reflexive-free transitive closure.
void transitive_close(std::vector<uint64_t>& child);

// Builds the canonical form from types in arbitrary order and an adjacency
// matrix over that order. Closes the relation, validates it, sorts the types.
// Throws ValidationError on duplicates, oversize, or a relation that is not a
// strict partial order after closure.
Episode canonicalize(std::vector<TypeId> types, std::vector<uint64_t> child);

// Convenience: canonical episode from types and explicit edge pairs (indices
// into `types`).
Episode make_episode(std::vector<TypeId> types,
                     const std::vector<std::pair<int, int>>& edges = {});

// Text form. Grammar: symbols separated by spaces, a '|' separator, then zero
// or more SRC<DST constraints over those symbols. The parsed relation is
// transitively closed and validated. format_episode emits the transitive
// reduction, edges sorted, and round-trips through parse_episode.
Episode parse_episode(const std::string& text, const Alphabet& ab);
std::string format_episode(const Episode& ep, const Alphabet& ab);

// Subepisode test per the containment definition: every type of `sub` occurs
// in `super` and every ordered type pair of `sub` is ordered the same way in
// `super`. Equal episodes count as subepisodes.
bool is_subepisode(const Episode& sub, const Episode& super);

// The size-1 smaller subepisodes obtained by deleting node r, for r = 0..l-1,
// in that order. Deleting from a closed relation keeps it closed.
std::vector<Episode> maximal_subepisodes(const Episode& ep);
Episode drop_node(const Episode& ep, int r);

// Transitive reduction of the (closed) relation: keeps edge (i,j) iff no k has
// i->k and k->j. Unique for a finite strict partial order.
std::vector<uint64_t> transitive_reduction(const Episode& ep);

// Longest-path length (in edges) and number of maximal paths of the
// transitive reduction. A maximal path runs from a minimal node to a maximal
// node. A single node yields {0, 1}; an n-node antichain {0, n}; an n-node
// chain {n-1, 1}.
struct StructuralMetrics {
    uint32_t lmax = 0;
    uint64_t nmax = 0;
};
StructuralMetrics structural_metrics(const Episode& ep);

} // namespace pomine
