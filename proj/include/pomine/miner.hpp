#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pomine/candgen.hpp"
#include "pomine/counter.hpp"
#include "pomine/episode.hpp"

namespace pomine {

// Where the evidence threshold acts. off: frequency only. postfilter: h is
// computed and filters what each level reports, but every frequent episode
// still seeds the next level. levelwise: h also gates what seeds the next
// level.
enum class HMode { off, postfilter, levelwise };

struct MiningConfig {
    uint64_t f_th = 0;                // keep episodes with freq strictly greater
    std::optional<double> h_th;       // evidence threshold in [0,1]
    HMode h_mode = HMode::off;
    std::optional<uint64_t> expiry;   // max occurrence span in ticks; unset = unlimited
    GenerationOpts gen;
    int max_level = kMaxEpisodeSize;
    unsigned threads = 0;             // 0 = use hardware concurrency
};

struct MinedEpisode {
    Episode ep;
    uint64_t freq = 0;
    double h = 1.0;
};

struct LevelReport {
    int level = 0;
    uint64_t candidates = 0;
    std::vector<MinedEpisode> survivors;  // reported set; frequent count = its length
};

// Levelwise mining loop: level 1 candidates are the event types present in
// the stream; each level is counted, thresholded, and joined into the next
// level's candidates until nothing survives or max_level is reached.
std::vector<LevelReport> mine(const EventSequence& seq, const MiningConfig& cfg,
                              CounterStats* stats = nullptr);

} // namespace pomine
