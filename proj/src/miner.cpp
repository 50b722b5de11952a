#include "pomine/miner.hpp"

#include <algorithm>
#include <thread>

#include "pomine/errors.hpp"
#include "pomine/evidence.hpp"

namespace pomine {

std::vector<LevelReport> mine(const EventSequence& seq, const MiningConfig& cfg,
                              CounterStats* stats) {
    if (cfg.max_level < 1 || cfg.max_level > kMaxEpisodeSize)
        throw ValidationError("max_level must be in 1..64");
    if (cfg.h_th && (*cfg.h_th < 0.0 || *cfg.h_th > 1.0))
        throw ValidationError("h_th must be in [0,1]");
    if (cfg.h_mode != HMode::off && !cfg.h_th)
        throw ValidationError("h filtering requires h_th");
    validate_sequence(seq);

    unsigned threads = cfg.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    std::vector<TypeId> types;
    for (const Event& e : seq) types.push_back(e.type);
    CandidateBook book = level1_book(types);

    std::vector<LevelReport> reports;
    while (!book.eps.empty()) {
        unsigned level_threads = book.eps.size() >= 256 ? threads : 1;
        CounterStats level_stats;
        auto counts = count_frequencies(book.eps, seq, cfg.expiry, level_threads,
                                        &level_stats);
        if (stats) {
            stats->max_live = std::max(stats->max_live, level_stats.max_live);
            stats->nesting_violations += level_stats.nesting_violations;
            stats->order_violations += level_stats.order_violations;
        }

        book.freq.resize(book.eps.size());
        book.h.resize(book.eps.size());
        for (size_t i = 0; i < book.eps.size(); ++i) {
            book.freq[i] = counts[i].freq;
            book.h[i] = bidirectional_evidence(book.eps[i], counts[i]).h;
        }

        std::vector<char> frequent(book.eps.size());
        std::vector<char> emitted(book.eps.size());
        for (size_t i = 0; i < book.eps.size(); ++i) {
            frequent[i] = book.freq[i] > cfg.f_th;
            emitted[i] = frequent[i];
            if (cfg.h_mode != HMode::off && book.h[i] < *cfg.h_th) emitted[i] = 0;
        }

        LevelReport rep;
        rep.level = book.level;
        rep.candidates = book.eps.size();
        for (size_t i = 0; i < book.eps.size(); ++i)
            if (emitted[i])
                rep.survivors.push_back({book.eps[i], book.freq[i], book.h[i]});
        reports.push_back(std::move(rep));

        if (book.level >= cfg.max_level) break;
        const auto& seed = cfg.h_mode == HMode::levelwise ? emitted : frequent;
        CandidateBook fl = filter_book(book, seed);
        if (fl.eps.empty()) break;
        book = generate_candidates(fl, cfg.gen);
    }
    return reports;
}

} // namespace pomine
