#include "pomine/oracle.hpp"

#include <algorithm>
#include <bit>

#include "pomine/errors.hpp"

namespace pomine {

namespace {

constexpr int kMaxOracleNodes = 6;
constexpr size_t kMaxOracleEvents = 60;
constexpr size_t kMaxOccurrences = 4'000'000;

struct Dfs {
    const Episode& ep;
    const EventSequence& seq;
    std::optional<uint64_t> expiry;
    std::vector<std::vector<uint32_t>> cand;
    std::vector<uint32_t> h;
    std::vector<Occurrence>& out;

    void go(int v, uint64_t lo, uint64_t hi) {
        const int l = ep.size();
        if (v == l) {
            out.push_back({h, lo, hi});
            if (out.size() > kMaxOccurrences)
                throw ValidationError("occurrence enumeration exceeds safety cap");
            return;
        }
        for (uint32_t k : cand[v]) {
            uint64_t t = seq[k].tick;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (ep.related(u, v) && !(seq[h[u]].tick < t)) ok = false;
                if (ep.related(v, u) && !(t < seq[h[u]].tick)) ok = false;
            }
            if (!ok) continue;
            uint64_t nlo = v ? std::min(lo, t) : t;
            uint64_t nhi = v ? std::max(hi, t) : t;
            if (expiry && nhi - nlo > *expiry) continue;
            h[v] = k;
            go(v + 1, nlo, nhi);
        }
    }
};

} // namespace

std::vector<Occurrence> enumerate_occurrences(const Episode& ep, const EventSequence& seq,
                                              std::optional<uint64_t> expiry) {
    if (ep.size() > kMaxOracleNodes)
        throw ValidationError("oracle episodes are limited to 6 nodes");
    if (seq.size() > kMaxOracleEvents)
        throw ValidationError("oracle streams are limited to 60 events");
    validate_sequence(seq);

    const int l = ep.size();
    std::vector<Occurrence> out;
    Dfs dfs{ep, seq, expiry, {}, std::vector<uint32_t>(l), out};
    dfs.cand.resize(l);
    for (uint32_t k = 0; k < seq.size(); ++k)
        for (int v = 0; v < l; ++v)
            if (seq[k].type == ep.g[v]) dfs.cand[v].push_back(k);
    dfs.go(0, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const Occurrence& a, const Occurrence& b) { return a.h < b.h; });
    return out;
}

uint64_t max_nonoverlapped(std::vector<Occurrence> occs) {
    std::sort(occs.begin(), occs.end(), [](const Occurrence& a, const Occurrence& b) {
        if (a.t_end != b.t_end) return a.t_end < b.t_end;
        return a.t_start < b.t_start;
    });
    uint64_t count = 0;
    bool any = false;
    uint64_t last_end = 0;
    for (const Occurrence& o : occs) {
        if (!any || o.t_start > last_end) {
            ++count;
            last_end = o.t_end;
            any = true;
        }
    }
    return count;
}

uint64_t oracle_frequency(const Episode& ep, const EventSequence& seq,
                          std::optional<uint64_t> expiry) {
    return max_nonoverlapped(enumerate_occurrences(ep, seq, expiry));
}

std::vector<Episode> enumerate_all_episodes(const std::vector<TypeId>& types, int size) {
    if (size < 1 || size > 4)
        throw ValidationError("episode enumeration is limited to sizes 1..4");
    std::vector<TypeId> syms(types);
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    if (syms.size() > 8)
        throw ValidationError("episode enumeration is limited to 8 types");
    if (static_cast<int>(syms.size()) < size) return {};

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (i != j) slots.emplace_back(i, j);

    std::vector<Episode> out;
    auto emit_combo = [&](const std::vector<int>& idx) {
        std::vector<TypeId> g(size);
        for (int i = 0; i < size; ++i) g[i] = syms[idx[i]];
        for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
            std::vector<uint64_t> child(size, 0);
            for (size_t b = 0; b < slots.size(); ++b)
                if ((mask >> b) & 1) child[slots[b].first] |= uint64_t(1) << slots[b].second;
            if (!validate_partial_order(child)) continue;
            Episode ep;
            ep.g = g;
            ep.child = child;
            ep.parent.assign(size, 0);
            for (int i = 0; i < size; ++i) {
                uint64_t m = child[i];
                while (m) {
                    int j = std::countr_zero(m);
                    m &= m - 1;
                    ep.parent[j] |= uint64_t(1) << i;
                }
            }
            out.push_back(std::move(ep));
        }
    };

    // choose `size` of syms in increasing index order
    std::vector<int> idx(size);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == size) {
            emit_combo(idx);
            return;
        }
        for (int i = from; i <= int(syms.size()) - (size - pos); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), EpisodeLess{});
    return out;
}

} // namespace pomine
