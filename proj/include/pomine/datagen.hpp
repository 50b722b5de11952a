#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pomine/counter.hpp"
#include "pomine/episode.hpp"

namespace pomine {

// Synthetic stream: each pattern is embedded as a stream of occurrences laid
// head to tail, each occurrence serialized by a random linear extension, with
// geometric gaps inside (eta) and between (p) occurrences. Every alphabet
// symbol additionally gets an independent geometric noise stream of rate rho,
// damped to rho/5 for symbols that appear in a pattern. All streams are
// truncated at `ticks` and merged.
struct GenConfig {
    std::vector<Episode> patterns;
    double eta = 0.7;
    double p = 0.05;
    double rho = 0.0;
    uint32_t alphabet_size = 0;
    uint64_t ticks = 0;
    uint64_t seed = 0;
};

struct GenResult {
    EventSequence seq;
    uint64_t signal_events = 0;
    uint64_t noise_events = 0;
    std::vector<uint64_t> occurrences;  // completed embeddings per pattern
};

// Gap sampler: P(k) = (1-q)^{k-1} q on {1, 2, ...}. Hand-rolled inverse-CDF
// over raw mt19937_64 output so streams are reproducible across toolchains.
uint64_t sample_geometric(std::mt19937_64& rng, double q);

// A uniform-ish linear extension: repeatedly picks one of the current minimal
// nodes. Returns node indices in emission order.
std::vector<int> random_serial_extension(const Episode& ep, std::mt19937_64& rng);

GenResult generate_stream(const GenConfig& cfg);

// Expected fraction of noise events in the generated stream.
double noise_level(const GenConfig& cfg);

} // namespace pomine
