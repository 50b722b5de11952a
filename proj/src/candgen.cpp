#include "pomine/candgen.hpp"

#include <algorithm>
#include <map>

#include "pomine/automaton.hpp"
#include "pomine/errors.hpp"

namespace pomine {

bool combinable(const Episode& a1, const Episode& a2) {
    const int l = a1.size();
    if (a2.size() != l || l < 1) return false;
    for (int i = 0; i + 1 < l; ++i)
        if (a1.g[i] != a2.g[i]) return false;
    if (a1.g[l - 1] >= a2.g[l - 1]) return false;
    const uint64_t pm = full_mask(l - 1);
    for (int i = 0; i + 1 < l; ++i)
        if ((a1.child[i] & pm) != (a2.child[i] & pm)) return false;
    return true;
}

Episode simple_join(const Episode& a1, const Episode& a2, int variant) {
    if (!combinable(a1, a2))
        throw ValidationError("episodes are not combinable");
    if (variant < 0 || variant > 2)
        throw ValidationError("join variant must be 0, 1 or 2");
    const int l = a1.size();
    std::vector<TypeId> g(a1.g);
    g.push_back(a2.g[l - 1]);
    std::vector<uint64_t> ch(l + 1, 0);
    for (int i = 0; i < l; ++i) ch[i] = a1.child[i];
    for (int i = 0; i + 1 < l; ++i) {
        if (a2.related(i, l - 1)) ch[i] |= uint64_t(1) << l;
        if (a2.related(l - 1, i)) ch[l] |= uint64_t(1) << i;
    }
    if (variant == 1) ch[l - 1] |= uint64_t(1) << l;
    if (variant == 2) ch[l] |= uint64_t(1) << (l - 1);
    return canonicalize(std::move(g), std::move(ch));
}

NodeType classify_node(const Episode& a1, const Episode& a2, int node) {
    const int last = a1.size() - 1;
    if (node < 0 || node >= last)
        throw ValidationError("node index outside the shared prefix");
    bool before1 = a1.related(node, last);
    bool after1 = a1.related(last, node);
    bool before2 = a2.related(node, last);
    bool after2 = a2.related(last, node);
    if (after1 && before2) return NodeType::after_first_before_second;
    if (before1 && after2) return NodeType::before_first_after_second;
    if (after1 && !before2 && !after2) return NodeType::after_first_only;
    if (before1 && !before2 && !after2) return NodeType::before_first_only;
    if (after2 && !before1 && !after1) return NodeType::after_second_only;
    if (before2 && !before1 && !after1) return NodeType::before_second_only;
    if (before1 && before2) return NodeType::before_both;
    if (after1 && after2) return NodeType::after_both;
    return NodeType::unrelated_to_both;
}

std::vector<Episode> get_potential_candidates(const Episode& a1, const Episode& a2) {
    const int l = a1.size();
    if (!combinable(a1, a2))
        throw ValidationError("episodes are not combinable");
    bool forces1 = false, forces2 = false;
    bool kills1 = false, kills2 = false;
    for (int z = 0; z + 1 < l; ++z) {
        switch (classify_node(a1, a2, z)) {
            case NodeType::after_first_before_second: forces1 = true; break;
            case NodeType::before_first_after_second: forces2 = true; break;
            case NodeType::before_first_only:
            case NodeType::after_second_only: kills1 = true; break;
            case NodeType::after_first_only:
            case NodeType::before_second_only: kills2 = true; break;
            default: break;
        }
    }
    std::vector<Episode> out;
    if (forces1 && forces2) return out;
    if (forces1) {
        if (!kills1) out.push_back(simple_join(a1, a2, 1));
        return out;
    }
    if (forces2) {
        if (!kills2) out.push_back(simple_join(a1, a2, 2));
        return out;
    }
    out.push_back(simple_join(a1, a2, 0));
    if (!kills1) out.push_back(simple_join(a1, a2, 1));
    if (!kills2) out.push_back(simple_join(a1, a2, 2));
    return out;
}

CandidateBook level1_book(const std::vector<TypeId>& types) {
    std::vector<TypeId> sorted(types);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    CandidateBook book;
    book.level = 1;
    for (TypeId t : sorted) {
        book.eps.push_back(make_episode({t}));
        book.blockstart.push_back(0);
    }
    return book;
}

namespace {

bool is_serial(const Episode& ep) {
    const int l = ep.size();
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (!ep.related(i, j) && !ep.related(j, i)) return false;
    return true;
}

bool is_parallel(const Episode& ep) {
    for (uint64_t m : ep.child)
        if (m) return false;
    return true;
}

} // namespace

CandidateBook generate_candidates(const CandidateBook& fl, const GenerationOpts& opts) {
    const int l = fl.level;
    CandidateBook out;
    out.level = l + 1;

    std::map<Episode, std::pair<uint32_t, uint32_t>, EpisodeLess> block_of_prefix;
    if (l >= 2) {
        for (uint32_t i = 0; i < fl.eps.size();) {
            uint32_t bs = fl.blockstart[i];
            uint32_t be = bs;
            while (be < fl.eps.size() && fl.blockstart[be] == bs) ++be;
            block_of_prefix.emplace(drop_node(fl.eps[bs], l - 1), std::make_pair(bs, be));
            i = be;
        }
    }

    auto contains = [&](const Episode& beta) {
        auto it = block_of_prefix.find(drop_node(beta, beta.size() - 1));
        if (it == block_of_prefix.end()) return false;
        auto [bs, be] = it->second;
        auto lo = std::lower_bound(fl.eps.begin() + bs, fl.eps.begin() + be, beta, EpisodeLess{});
        return lo != fl.eps.begin() + be && *lo == beta;
    };

    std::vector<Episode> block_out;
    for (uint32_t i = 0; i < fl.eps.size();) {
        uint32_t bs = fl.blockstart[i];
        uint32_t be = bs;
        while (be < fl.eps.size() && fl.blockstart[be] == bs) ++be;
        for (uint32_t a = bs; a < be; ++a) {
            block_out.clear();
            for (uint32_t b = a + 1; b < be; ++b) {
                if (fl.eps[a].g[l - 1] == fl.eps[b].g[l - 1]) continue;
                for (Episode& cand : get_potential_candidates(fl.eps[a], fl.eps[b])) {
                    if (opts.mode == MiningMode::serial && !is_serial(cand)) continue;
                    if (opts.mode == MiningMode::parallel && !is_parallel(cand)) continue;
                    if (opts.lmax || opts.nmax) {
                        auto m = structural_metrics(cand);
                        if (opts.lmax && m.lmax > *opts.lmax) continue;
                        if (opts.nmax && m.nmax > *opts.nmax) continue;
                    }
                    if (l >= 2) {
                        bool all_frequent = true;
                        for (int r = 0; r + 1 < l && all_frequent; ++r)
                            all_frequent = contains(drop_node(cand, r));
                        if (!all_frequent) continue;
                    }
                    block_out.push_back(std::move(cand));
                }
            }
            if (!block_out.empty()) {
                std::sort(block_out.begin(), block_out.end(), EpisodeLess{});
                uint32_t start = static_cast<uint32_t>(out.eps.size());
                for (Episode& ep : block_out) {
                    out.eps.push_back(std::move(ep));
                    out.blockstart.push_back(start);
                }
            }
        }
        i = be;
    }
    return out;
}

CandidateBook filter_book(const CandidateBook& book, const std::vector<char>& keep) {
    if (keep.size() != book.eps.size())
        throw ValidationError("filter mask does not match book size");
    CandidateBook out;
    out.level = book.level;
    uint32_t cur_old = UINT32_MAX;
    uint32_t cur_new = 0;
    for (size_t i = 0; i < book.eps.size(); ++i) {
        if (!keep[i]) continue;
        if (book.blockstart[i] != cur_old) {
            cur_old = book.blockstart[i];
            cur_new = static_cast<uint32_t>(out.eps.size());
        }
        out.eps.push_back(book.eps[i]);
        out.blockstart.push_back(cur_new);
        if (!book.freq.empty()) out.freq.push_back(book.freq[i]);
        if (!book.h.empty()) out.h.push_back(book.h[i]);
    }
    return out;
}

} // namespace pomine
