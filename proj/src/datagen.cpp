#include "pomine/datagen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "pomine/errors.hpp"

namespace pomine {

namespace {

double unit_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

std::vector<TypeId> pattern_symbols(const GenConfig& cfg) {
    std::vector<TypeId> syms;
    for (const Episode& ep : cfg.patterns)
        syms.insert(syms.end(), ep.g.begin(), ep.g.end());
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    return syms;
}

void validate_config(const GenConfig& cfg) {
    if (!(cfg.eta > 0.0 && cfg.eta <= 1.0))
        throw ValidationError("eta must be in (0,1]");
    if (!(cfg.p > 0.0 && cfg.p <= 1.0))
        throw ValidationError("p must be in (0,1]");
    if (!(cfg.rho >= 0.0 && cfg.rho <= 1.0))
        throw ValidationError("rho must be in [0,1]");
    auto syms = pattern_symbols(cfg);
    if (!syms.empty() && syms.back() >= cfg.alphabet_size)
        throw ValidationError("alphabet smaller than pattern symbols");
}

} // namespace

uint64_t sample_geometric(std::mt19937_64& rng, double q) {
    if (q >= 1.0) return 1;
    double u = unit_uniform(rng);
    while (u == 0.0) u = unit_uniform(rng);
    return 1 + uint64_t(std::floor(std::log(u) / std::log1p(-q)));
}

std::vector<int> random_serial_extension(const Episode& ep, std::mt19937_64& rng) {
    const int l = ep.size();
    std::vector<int> order;
    order.reserve(l);
    uint64_t done = 0;
    std::vector<int> ready;
    for (int step = 0; step < l; ++step) {
        ready.clear();
        for (int v = 0; v < l; ++v)
            if (!((done >> v) & 1) && (ep.parent[v] & ~done) == 0) ready.push_back(v);
        int pick = ready[rng() % ready.size()];
        order.push_back(pick);
        done |= uint64_t(1) << pick;
    }
    return order;
}

GenResult generate_stream(const GenConfig& cfg) {
    validate_config(cfg);
    std::mt19937_64 rng(cfg.seed);

    struct Tagged {
        uint64_t tick;
        uint32_t stream;
        uint32_t seq;
        TypeId type;
    };
    std::vector<Tagged> all;

    GenResult res;
    res.occurrences.assign(cfg.patterns.size(), 0);

    for (size_t pi = 0; pi < cfg.patterns.size(); ++pi) {
        const Episode& ep = cfg.patterns[pi];
        uint64_t t = 0;
        uint32_t seq = 0;
        while (true) {
            auto order = random_serial_extension(ep, rng);
            bool complete = true;
            uint64_t cursor = t;
            for (size_t k = 0; k < order.size(); ++k) {
                cursor += sample_geometric(rng, k == 0 ? cfg.p : cfg.eta);
                if (cursor > cfg.ticks) {
                    complete = false;
                    break;
                }
                all.push_back({cursor, uint32_t(pi), seq++, ep.g[order[k]]});
                ++res.signal_events;
            }
            if (!complete) break;
            ++res.occurrences[pi];
            t = cursor;
        }
    }

    if (cfg.rho > 0.0) {
        auto patsyms = pattern_symbols(cfg);
        for (TypeId s = 0; s < cfg.alphabet_size; ++s) {
            bool damped = std::binary_search(patsyms.begin(), patsyms.end(), s);
            double rate = damped ? cfg.rho / 5.0 : cfg.rho;
            if (rate <= 0.0) continue;
            uint64_t t = 0;
            uint32_t seq = 0;
            uint32_t stream = uint32_t(cfg.patterns.size()) + s;
            while (true) {
                t += sample_geometric(rng, rate);
                if (t > cfg.ticks) break;
                all.push_back({t, stream, seq++, s});
                ++res.noise_events;
            }
        }
    }

    std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
        if (a.tick != b.tick) return a.tick < b.tick;
        if (a.stream != b.stream) return a.stream < b.stream;
        return a.seq < b.seq;
    });
    res.seq.reserve(all.size());
    for (const Tagged& e : all) res.seq.push_back({e.type, e.tick});
    return res;
}

double noise_level(const GenConfig& cfg) {
    validate_config(cfg);
    auto patsyms = pattern_symbols(cfg);
    double noise = 0.0;
    for (TypeId s = 0; s < cfg.alphabet_size; ++s) {
        bool damped = std::binary_search(patsyms.begin(), patsyms.end(), s);
        noise += (damped ? cfg.rho / 5.0 : cfg.rho) * double(cfg.ticks);
    }
    double signal = 0.0;
    for (const Episode& ep : cfg.patterns) {
        double l = ep.size();
        signal += double(cfg.ticks) * l / ((l - 1.0) / cfg.eta + 1.0 / cfg.p);
    }
    double total = noise + signal;
    return total > 0.0 ? noise / total : 0.0;
}

} // namespace pomine
