#pragma once

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <vector>

#include "pomine/automaton.hpp"
#include "pomine/candgen.hpp"
#include "pomine/counter.hpp"
#include "pomine/episode.hpp"
#include "pomine/errors.hpp"
#include "pomine/oracle.hpp"

namespace testutil {

using namespace pomine;

inline const Alphabet& ab() {
    static Alphabet a(default_symbols(26));
    return a;
}

inline Episode ep(const std::string& text) { return parse_episode(text, ab()); }

inline TypeId id(const std::string& sym) { return *ab().find(sym); }

inline EventSequence seq_of(const std::vector<std::pair<uint64_t, std::string>>& evs) {
    EventSequence s;
    for (const auto& [t, sym] : evs) s.push_back({id(sym), t});
    return s;
}

// The two worked event sequences used throughout.
inline EventSequence paper_seq1() {
    return seq_of({{2, "A"}, {3, "B"}, {3, "A"}, {7, "A"}, {8, "C"}, {9, "B"},
                   {11, "D"}, {12, "C"}, {13, "A"}, {14, "B"}, {15, "C"}});
}

inline EventSequence paper_seq3() {
    return seq_of({{1, "A"}, {2, "B"}, {3, "A"}, {4, "D"}, {5, "E"}, {6, "C"},
                   {7, "D"}, {8, "A"}, {9, "B"}, {10, "B"}, {12, "C"}, {14, "D"}});
}

// Random valid episode: `size` distinct types from the first `n_types` ids,
// random DAG edges along a random permutation, closed + canonicalized.
inline Episode random_episode(std::mt19937_64& rng, int n_types, int size,
                              double edge_prob = 0.4) {
    std::vector<TypeId> pool(n_types);
    for (int i = 0; i < n_types; ++i) pool[i] = TypeId(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<TypeId> types(pool.begin(), pool.begin() + size);

    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<uint64_t> child(size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            if (double(rng() >> 11) * 0x1.0p-53 < edge_prob)
                child[perm[a]] |= uint64_t(1) << perm[b];
    return canonicalize(std::move(types), std::move(child));
}

// Random stream over the first `n_types` ids with occasional tied ticks.
inline EventSequence random_stream(std::mt19937_64& rng, int n_types, int len) {
    EventSequence s;
    uint64_t t = 1;
    for (int k = 0; k < len; ++k) {
        s.push_back({TypeId(rng() % n_types), t});
        t += rng() % 3;  // 0 keeps the tick, creating batches
    }
    return s;
}

// Reference implementation of the join filter: builds all three joins and
// keeps those whose two trailing-node deletions reproduce the parents,
// deduplicating equal results.
inline std::vector<Episode> naive_potential_candidates(const Episode& a1,
                                                       const Episode& a2) {
    const int l = a1.size();
    std::vector<Episode> out;
    for (int v = 0; v <= 2; ++v) {
        Episode cand;
        try {
            cand = simple_join(a1, a2, v);
        } catch (const ValidationError&) {
            continue;
        }
        if (!(drop_node(cand, l) == a1)) continue;
        if (!(drop_node(cand, l - 1) == a2)) continue;
        bool dup = false;
        for (const Episode& seen : out) dup = dup || seen == cand;
        if (!dup) out.push_back(std::move(cand));
    }
    return out;
}

/// Exhaustive check of the automaton-state properties for one episode:
// uniqueness of states by accepted set and by wait set, wait sets always the
// least elements of the remainder, valid accepted sets exactly the
// parent-closed subsets and all reachable, valid wait sets exactly the
// antichains, and reachability between accepted sets exactly containment.
// Returns the number of violated checks (0 = all properties hold).
inline uint64_t check_fsa_properties(const Episode& e) {
    const int l = e.size();
    const uint64_t full = full_mask(l);
    uint64_t bad = 0;

    auto reach_from = [&](uint64_t q0) {
        std::vector<uint64_t> stack{q0};
        std::vector<char> seen(size_t(1) << l, 0);
        seen[q0] = 1;
        while (!stack.empty()) {
            uint64_t q = stack.back();
            stack.pop_back();
            uint64_t w = wait_set(e, q);
            while (w) {
                int node = std::countr_zero(w);
                w &= w - 1;
                AutomatonState nxt = transition(e, {q, wait_set(e, q)}, node);
                if (nxt.w != wait_set(e, nxt.q)) ++bad;
                if (!seen[nxt.q]) {
                    seen[nxt.q] = 1;
                    stack.push_back(nxt.q);
                }
            }
        }
        return seen;
    };

    AutomatonState init = initial_state(e);
    if (init.q != 0) ++bad;
    for (int v = 0; v < l; ++v)
        if (((init.w >> v) & 1) != (e.parent[v] == 0)) ++bad;

    auto reachable = reach_from(0);

    std::vector<uint64_t> valid_q;
    for (uint64_t q = 0; q <= full; ++q) {
        bool valid = is_valid_accepted_set(e, q);
        if (valid != bool(reachable[q])) ++bad;  // P4 both directions
        if (valid) valid_q.push_back(q);
    }

    // P3: distinct reachable states have distinct wait sets too.
    std::vector<uint64_t> wait_of;
    for (uint64_t q : valid_q) wait_of.push_back(wait_set(e, q));
    for (size_t i = 0; i < valid_q.size(); ++i)
        for (size_t j = i + 1; j < wait_of.size(); ++j)
            if (wait_of[i] == wait_of[j]) ++bad;

    // P5: valid wait sets are exactly the antichains, each realized once, and
    // determine their accepted set.
    for (uint64_t w = 0; w <= full; ++w) {
        bool antichain = true;
        for (int i = 0; i < l && antichain; ++i)
            if ((w >> i) & 1)
                if ((e.child[i] | e.parent[i]) & w) antichain = false;
        if (is_valid_wait_set(e, w) != antichain) ++bad;
        size_t hits = 0;
        uint64_t hit_q = 0;
        for (size_t k = 0; k < valid_q.size(); ++k)
            if (wait_of[k] == w) {
                ++hits;
                hit_q = valid_q[k];
            }
        if (antichain) {
            if (hits != 1) ++bad;
            else if (accepted_from_wait(e, w) != hit_q) ++bad;
        } else if (hits != 0) {
            ++bad;
        }
    }

    // P6: reachability between valid accepted sets is exactly containment.
    for (uint64_t q1 : valid_q) {
        auto r = reach_from(q1);
        for (uint64_t q2 : valid_q)
            if (bool(r[q2]) != ((q1 & ~q2) == 0)) ++bad;
    }
    return bad;
}

// Exhaustive maximum independent set of occurrences under the strict
// non-overlap relation, for cross-checking the greedy rule.
inline uint64_t max_nonoverlapped_exhaustive(const std::vector<Occurrence>& occs) {
    uint64_t best = 0;
    size_t n = occs.size();
    auto rec = [&](auto&& self, size_t i, uint64_t chosen, uint64_t count) -> void {
        best = std::max(best, count);
        if (i == n) return;
        self(self, i + 1, chosen, count);
        for (size_t j = 0; j < n; ++j) {
            if (!((chosen >> j) & 1)) continue;
            bool disjoint = occs[i].t_end < occs[j].t_start || occs[j].t_end < occs[i].t_start;
            if (!disjoint) return;
        }
        self(self, i + 1, chosen | (uint64_t(1) << i), count + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

} // namespace testutil
