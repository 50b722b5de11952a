#include "pomine/automaton.hpp"

#include <bit>

#include "pomine/errors.hpp"

namespace pomine {

uint64_t wait_set(const Episode& ep, uint64_t q) {
    uint64_t w = 0;
    uint64_t rest = full_mask(ep.size()) & ~q;
    while (rest) {
        int m = std::countr_zero(rest);
        rest &= rest - 1;
        if ((ep.parent[m] & ~q) == 0) w |= uint64_t(1) << m;
    }
    return w;
}

AutomatonState initial_state(const Episode& ep) {
    return {0, wait_set(ep, 0)};
}

AutomatonState transition(const Episode& ep, AutomatonState state, int node) {
    if (node < 0 || node >= ep.size() || !((state.w >> node) & 1))
        throw ValidationError("transition on a node outside the wait set");
    AutomatonState next;
    next.q = state.q | (uint64_t(1) << node);
    next.w = wait_set(ep, next.q);
    return next;
}

bool is_valid_accepted_set(const Episode& ep, uint64_t q) {
    if (q & ~full_mask(ep.size())) return false;
    uint64_t m = q;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (ep.parent[i] & ~q) return false;
    }
    return true;
}

bool is_valid_wait_set(const Episode& ep, uint64_t w) {
    if (w & ~full_mask(ep.size())) return false;
    uint64_t m = w;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if ((ep.child[i] | ep.parent[i]) & w) return false;
    }
    return true;
}

uint64_t accepted_from_wait(const Episode& ep, uint64_t w) {
    if (!is_valid_wait_set(ep, w))
        throw ValidationError("not a valid wait set");
    uint64_t up = w;
    uint64_t m = w;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        up |= ep.child[i];
    }
    return full_mask(ep.size()) & ~up;
}

} // namespace pomine
