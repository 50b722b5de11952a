#include "pomine/episode.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "pomine/errors.hpp"

namespace pomine {

bool episode_less(const Episode& a, const Episode& b) {
    if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
    if (a.g != b.g) return a.g < b.g;
    for (size_t i = 0; i < a.child.size(); ++i) {
        uint64_t d = a.child[i] ^ b.child[i];
        if (d) {
            int k = std::countr_zero(d);
            return ((a.child[i] >> k) & 1) == 0;
        }
    }
    return false;
}

bool validate_partial_order(const std::vector<uint64_t>& child) {
    const int l = static_cast<int>(child.size());
    if (l > kMaxEpisodeSize) return false;
    for (int i = 0; i < l; ++i) {
        if ((child[i] >> i) & 1) return false;
        uint64_t reach = child[i];
        while (reach) {
            int j = std::countr_zero(reach);
            reach &= reach - 1;
            if ((child[j] >> i) & 1) return false;
            if (child[j] & ~child[i]) return false;
        }
    }
    return true;
}

void transitive_close(std::vector<uint64_t>& child) {
    const int l = static_cast<int>(child.size());
    for (int k = 0; k < l; ++k)
        for (int i = 0; i < l; ++i)
            if ((child[i] >> k) & 1) child[i] |= child[k];
    for (int i = 0; i < l; ++i) child[i] &= ~(uint64_t(1) << i);
}

namespace {

std::vector<uint64_t> transpose(const std::vector<uint64_t>& child) {
    const int l = static_cast<int>(child.size());
    std::vector<uint64_t> par(l, 0);
    for (int i = 0; i < l; ++i) {
        uint64_t m = child[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            par[j] |= uint64_t(1) << i;
        }
    }
    return par;
}

} // namespace

Episode canonicalize(std::vector<TypeId> types, std::vector<uint64_t> child) {
    const int l = static_cast<int>(types.size());
    if (l == 0) throw ValidationError("episode has no nodes");
    if (l > kMaxEpisodeSize) throw ValidationError("episode exceeds 64 nodes");
    if (child.size() != types.size())
        throw ValidationError("adjacency size does not match node count");

    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return types[a] < types[b]; });
    for (int i = 1; i < l; ++i)
        if (types[perm[i - 1]] == types[perm[i]])
            throw ValidationError("duplicate event type in episode");

    Episode ep;
    ep.g.resize(l);
    ep.child.assign(l, 0);
    std::vector<int> pos(l);
    for (int i = 0; i < l; ++i) pos[perm[i]] = i;
    for (int i = 0; i < l; ++i) {
        ep.g[i] = types[perm[i]];
        uint64_t m = child[perm[i]];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            ep.child[i] |= uint64_t(1) << pos[j];
        }
    }
    transitive_close(ep.child);
    if (!validate_partial_order(ep.child))
        throw ValidationError("relation is not a strict partial order");
    ep.parent = transpose(ep.child);
    return ep;
}

Episode make_episode(std::vector<TypeId> types,
                     const std::vector<std::pair<int, int>>& edges) {
    std::vector<uint64_t> child(types.size(), 0);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(types.size()) ||
            b >= static_cast<int>(types.size()))
            throw ValidationError("edge index out of range");
        child[a] |= uint64_t(1) << b;
    }
    return canonicalize(std::move(types), std::move(child));
}

Episode parse_episode(const std::string& text, const Alphabet& ab) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t') {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else if (c == '|') {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
            toks.push_back("|");
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));

    auto bar = std::find(toks.begin(), toks.end(), "|");
    if (bar == toks.end()) throw ParseError("episode is missing '|': " + text);
    if (std::find(bar + 1, toks.end(), "|") != toks.end())
        throw ParseError("episode has more than one '|': " + text);
    if (bar == toks.begin()) throw ParseError("episode has no event types: " + text);

    std::vector<std::string> syms(toks.begin(), bar);
    std::vector<TypeId> types;
    for (const auto& s : syms) {
        if (s.find('<') != std::string::npos)
            throw ParseError("'<' before '|' in episode: " + text);
        auto id = ab.find(s);
        if (!id) throw ParseError("unknown event type '" + s + "'");
        types.push_back(*id);
    }

    auto node_of = [&](const std::string& s) -> int {
        for (size_t i = 0; i < syms.size(); ++i)
            if (syms[i] == s) return static_cast<int>(i);
        throw ParseError("constraint names '" + s + "' which is not a node: " + text);
    };

    std::vector<uint64_t> child(types.size(), 0);
    for (auto it = bar + 1; it != toks.end(); ++it) {
        auto lt = it->find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == it->size() ||
            it->find('<', lt + 1) != std::string::npos)
            throw ParseError("bad order constraint '" + *it + "' in episode: " + text);
        int a = node_of(it->substr(0, lt));
        int b = node_of(it->substr(lt + 1));
        child[a] |= uint64_t(1) << b;
    }
    return canonicalize(std::move(types), std::move(child));
}

std::string format_episode(const Episode& ep, const Alphabet& ab) {
    std::ostringstream os;
    for (int i = 0; i < ep.size(); ++i) {
        if (i) os << ' ';
        os << ab.symbol(ep.g[i]);
    }
    os << " |";
    auto red = transitive_reduction(ep);
    for (int i = 0; i < ep.size(); ++i) {
        uint64_t m = red[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            os << ' ' << ab.symbol(ep.g[i]) << '<' << ab.symbol(ep.g[j]);
        }
    }
    return os.str();
}

bool is_subepisode(const Episode& sub, const Episode& super) {
    if (sub.size() > super.size()) return false;
    std::vector<int> map(sub.size());
    for (int i = 0; i < sub.size(); ++i) {
        auto it = std::lower_bound(super.g.begin(), super.g.end(), sub.g[i]);
        if (it == super.g.end() || *it != sub.g[i]) return false;
        map[i] = static_cast<int>(it - super.g.begin());
    }
    for (int i = 0; i < sub.size(); ++i) {
        uint64_t m = sub.child[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            if (!super.related(map[i], map[j])) return false;
        }
    }
    return true;
}

Episode drop_node(const Episode& ep, int r) {
    const int l = ep.size();
    if (r < 0 || r >= l) throw ValidationError("drop index out of range");
    Episode out;
    out.g.reserve(l - 1);
    out.child.assign(l - 1, 0);
    out.parent.assign(l - 1, 0);
    for (int i = 0; i < l; ++i) {
        if (i == r) continue;
        out.g.push_back(ep.g[i]);
        int ii = i < r ? i : i - 1;
        uint64_t m = ep.child[i] & ~(uint64_t(1) << r);
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            int jj = j < r ? j : j - 1;
            out.child[ii] |= uint64_t(1) << jj;
            out.parent[jj] |= uint64_t(1) << ii;
        }
    }
    return out;
}

std::vector<Episode> maximal_subepisodes(const Episode& ep) {
    std::vector<Episode> out;
    out.reserve(ep.size());
    for (int r = 0; r < ep.size(); ++r) out.push_back(drop_node(ep, r));
    return out;
}

std::vector<uint64_t> transitive_reduction(const Episode& ep) {
    const int l = ep.size();
    std::vector<uint64_t> red(ep.child);
    for (int i = 0; i < l; ++i) {
        uint64_t m = ep.child[i];
        while (m) {
            int k = std::countr_zero(m);
            m &= m - 1;
            red[i] &= ~ep.child[k];
        }
    }
    return red;
}

StructuralMetrics structural_metrics(const Episode& ep) {
    const int l = ep.size();
    auto red = transitive_reduction(ep);
    std::vector<uint64_t> rpar(l, 0);
    for (int i = 0; i < l; ++i) {
        uint64_t m = red[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            rpar[j] |= uint64_t(1) << i;
        }
    }

    std::vector<int> order;
    order.reserve(l);
    uint64_t done = 0;
    while (static_cast<int>(order.size()) < l) {
        for (int v = 0; v < l; ++v) {
            if ((done >> v) & 1) continue;
            if ((rpar[v] & ~done) == 0) {
                order.push_back(v);
                done |= uint64_t(1) << v;
            }
        }
    }

    std::vector<uint64_t> paths(l, 0);
    std::vector<uint32_t> dist(l, 0);
    StructuralMetrics out;
    for (int v : order) {
        if (rpar[v] == 0) {
            paths[v] = 1;
            dist[v] = 0;
        } else {
            uint64_t m = rpar[v];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                paths[v] += paths[u];
                dist[v] = std::max(dist[v], dist[u] + 1);
            }
        }
        if (red[v] == 0) {
            out.nmax += paths[v];
            out.lmax = std::max(out.lmax, dist[v]);
        }
    }
    return out;
}

} // namespace pomine
