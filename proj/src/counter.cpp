#include "pomine/counter.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "pomine/automaton.hpp"
#include "pomine/errors.hpp"

namespace pomine {

void validate_sequence(const EventSequence& seq) {
    for (size_t k = 1; k < seq.size(); ++k)
        if (seq[k].tick < seq[k - 1].tick)
            throw ValidationError("event ticks decrease at position " + std::to_string(k));
}

namespace {

struct EpState {
    const Episode* ep = nullptr;
    uint64_t w0 = 0;
    uint64_t full = 0;
    std::vector<TrackerRecord> pool;
    std::vector<uint32_t> free_slots;
    int32_t start_slot = -1;
    uint64_t freq = 0;
    std::vector<uint32_t> fij;
    bool dirty = false;
};

class Counter {
public:
    Counter(const std::vector<Episode>& candidates, std::optional<uint64_t> expiry)
        : expiry_(expiry) {
        TypeId max_type = 0;
        eps_.resize(candidates.size());
        for (size_t c = 0; c < candidates.size(); ++c) {
            EpState& s = eps_[c];
            s.ep = &candidates[c];
            s.w0 = wait_set(*s.ep, 0);
            s.full = full_mask(s.ep->size());
            s.fij.assign(size_t(s.ep->size()) * s.ep->size(), 0);
            for (TypeId t : s.ep->g) max_type = std::max(max_type, t + 1);
        }
        waits_.resize(max_type);
        for (size_t c = 0; c < eps_.size(); ++c)
            spawn_start(static_cast<uint32_t>(c), 0);
    }

    void run(const EventSequence& seq) {
        size_t k = 0;
        while (k < seq.size()) {
            uint64_t t = seq[k].tick;
            size_t end = k;
            while (end < seq.size() && seq[end].tick == t) ++end;
            for (size_t e = k; e < end; ++e) process_event(seq[e].type, t);
            for (uint32_t c : dirty_) end_of_tick(c, t);
            for (uint32_t c : dirty_) eps_[c].dirty = false;
            dirty_.clear();
            k = end;
        }
    }

    CountResult result(size_t c) const { return {eps_[c].freq, eps_[c].fij}; }

    const CounterStats& stats() const { return stats_; }

private:
    uint32_t alloc_slot(EpState& s) {
        if (!s.free_slots.empty()) {
            uint32_t slot = s.free_slots.back();
            s.free_slots.pop_back();
            TrackerRecord& a = s.pool[slot];
            std::fill(a.acc.begin(), a.acc.end(), 0);
            std::fill(a.prec.begin(), a.prec.end(), 0);
            return slot;
        }
        const int l = s.ep->size();
        s.pool.emplace_back();
        s.pool.back().acc.assign(l, 0);
        s.pool.back().prec.assign(size_t(l) * l, 0);
        return static_cast<uint32_t>(s.pool.size() - 1);
    }

    void release_slot(EpState& s, uint32_t slot) {
        TrackerRecord& a = s.pool[slot];
        a.alive = false;
        ++a.gen;
        s.free_slots.push_back(slot);
    }

    void spawn_start(uint32_t c, uint64_t active_from) {
        EpState& s = eps_[c];
        uint32_t slot = alloc_slot(s);
        TrackerRecord& a = s.pool[slot];
        a.q = 0;
        a.w = s.w0;
        a.t_init = 0;
        a.alive = true;
        s.start_slot = static_cast<int32_t>(slot);
        uint64_t m = s.w0;
        while (m) {
            int node = std::countr_zero(m);
            m &= m - 1;
            waits_[s.ep->g[node]].push_back(
                {c, slot, static_cast<uint16_t>(node), a.gen, active_from});
        }
    }

    void process_event(TypeId type, uint64_t t) {
        if (type >= waits_.size()) return;
        auto& lst = waits_[type];
        for (size_t idx = 0; idx < lst.size();) {
            WaitsEntry en = lst[idx];
            EpState& s = eps_[en.ep];
            TrackerRecord& a = s.pool[en.slot];
            if (!a.alive || a.gen != en.gen || !((a.w >> en.node) & 1)) {
                lst[idx] = lst.back();
                lst.pop_back();
                continue;
            }
            if (en.active_from > t) {
                ++idx;
                continue;
            }

            if (!s.dirty) {
                s.dirty = true;
                dirty_.push_back(en.ep);
            }
            const int l = s.ep->size();
            if (a.q == 0) {
                a.t_init = t;
                s.start_slot = -1;
            }
            uint64_t qm = a.q;
            while (qm) {
                int i = std::countr_zero(qm);
                qm &= qm - 1;
                if (a.acc[i] < t) a.prec[size_t(i) * l + en.node] = 1;
            }
            uint64_t old_w = a.w;
            a.q |= uint64_t(1) << en.node;
            a.acc[en.node] = t;
            a.w = wait_set(*s.ep, a.q);
            uint64_t fresh = a.w & ~old_w;
            while (fresh) {
                int node = std::countr_zero(fresh);
                fresh &= fresh - 1;
                waits_[s.ep->g[node]].push_back(
                    {en.ep, en.slot, static_cast<uint16_t>(node), a.gen, t + 1});
            }
            lst[idx] = lst.back();
            lst.pop_back();
        }
    }

    void end_of_tick(uint32_t c, uint64_t t) {
        EpState& s = eps_[c];
        live_.clear();
        for (uint32_t slot = 0; slot < s.pool.size(); ++slot)
            if (s.pool[slot].alive && s.pool[slot].q != 0) live_.push_back(slot);

        // Two automata that reached the same accepted set are redundant; the
        // one initialized later tracks the innermost occurrence, keep it.
        for (size_t i = 0; i < live_.size(); ++i) {
            for (size_t j = i + 1; j < live_.size();) {
                TrackerRecord& ai = s.pool[live_[i]];
                TrackerRecord& aj = s.pool[live_[j]];
                if (ai.q == aj.q) {
                    if (ai.t_init < aj.t_init) std::swap(live_[i], live_[j]);
                    release_slot(s, live_[j]);
                    live_[j] = live_.back();
                    live_.pop_back();
                } else {
                    ++j;
                }
            }
        }

        stats_.max_live = std::max<uint64_t>(stats_.max_live, live_.size());
        std::sort(live_.begin(), live_.end(), [&](uint32_t x, uint32_t y) {
            return std::popcount(s.pool[x].q) < std::popcount(s.pool[y].q);
        });
        for (size_t i = 1; i < live_.size(); ++i) {
            uint64_t lo = s.pool[live_[i - 1]].q;
            uint64_t hi = s.pool[live_[i]].q;
            if (lo == hi || (lo & ~hi)) ++stats_.nesting_violations;
        }

        int32_t finisher = -1;
        for (uint32_t slot : live_)
            if (s.pool[slot].q == s.full) finisher = static_cast<int32_t>(slot);

        if (finisher >= 0) {
            TrackerRecord& a = s.pool[finisher];
            const int l = s.ep->size();
            for (int i = 0; i < l; ++i) {
                uint64_t m = s.ep->child[i];
                while (m) {
                    int j = std::countr_zero(m);
                    m &= m - 1;
                    if (a.acc[i] >= a.acc[j]) ++stats_.order_violations;
                }
            }
            if (!expiry_ || t - a.t_init <= *expiry_) {
                ++s.freq;
                for (size_t k = 0; k < s.fij.size(); ++k) s.fij[k] += a.prec[k];
                for (uint32_t slot : live_) release_slot(s, slot);
                if (s.start_slot >= 0) release_slot(s, s.start_slot);
                s.start_slot = -1;
                spawn_start(c, t + 1);
                return;
            }
            release_slot(s, static_cast<uint32_t>(finisher));
        }

        if (s.start_slot < 0) spawn_start(c, t + 1);
    }

    std::optional<uint64_t> expiry_;
    std::vector<EpState> eps_;
    std::vector<std::vector<WaitsEntry>> waits_;
    std::vector<uint32_t> dirty_;
    std::vector<uint32_t> live_;
    CounterStats stats_;
};

} // namespace

std::vector<CountResult> count_frequencies(const std::vector<Episode>& candidates,
                                           const EventSequence& seq,
                                           std::optional<uint64_t> expiry,
                                           unsigned threads,
                                           CounterStats* stats) {
    validate_sequence(seq);
    std::vector<CountResult> out(candidates.size());
    if (candidates.empty()) return out;
    if (threads == 0) threads = 1;
    threads = std::min<size_t>(threads, candidates.size());

    auto work = [&](size_t lo, size_t hi, CounterStats& st) {
        std::vector<Episode> chunk(candidates.begin() + lo, candidates.begin() + hi);
        Counter counter(chunk, expiry);
        counter.run(seq);
        for (size_t i = lo; i < hi; ++i) out[i] = counter.result(i - lo);
        st = counter.stats();
    };

    if (threads == 1) {
        CounterStats st;
        work(0, candidates.size(), st);
        if (stats) *stats = st;
        return out;
    }

    std::vector<CounterStats> sts(threads);
    std::vector<std::thread> pool;
    size_t per = (candidates.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        size_t lo = std::min(candidates.size(), size_t(w) * per);
        size_t hi = std::min(candidates.size(), lo + per);
        if (lo < hi) pool.emplace_back(work, lo, hi, std::ref(sts[w]));
    }
    for (auto& th : pool) th.join();
    if (stats) {
        for (const auto& st : sts) {
            stats->max_live = std::max(stats->max_live, st.max_live);
            stats->nesting_violations += st.nesting_violations;
            stats->order_violations += st.order_violations;
        }
    }
    return out;
}

} // namespace pomine
