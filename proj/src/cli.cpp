#include "pomine/cli.hpp"

#include <cstdio>
#include <iostream>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "pomine/datagen.hpp"
#include "pomine/errors.hpp"
#include "pomine/evidence.hpp"
#include "pomine/io.hpp"
#include "pomine/miner.hpp"
#include "pomine/oracle.hpp"

namespace pomine::cli {

namespace {

Alphabet padded_alphabet(const std::vector<std::string>& symbols, uint32_t m) {
    std::set<std::string> pool(symbols.begin(), symbols.end());
    if (pool.size() > m)
        throw ValidationError("alphabet size " + std::to_string(m) + " is below the " +
                              std::to_string(pool.size()) + " pattern symbols");
    for (uint32_t i = 0; pool.size() < m; ++i) {
        auto fillers = default_symbols(m + i * m + m);
        for (const auto& f : fillers) {
            if (pool.size() == m) break;
            pool.insert(f);
        }
    }
    return Alphabet(std::vector<std::string>(pool.begin(), pool.end()));
}

std::vector<Episode> parse_episode_file(const std::vector<std::string>& lines,
                                        const Alphabet& ab) {
    std::vector<Episode> eps;
    eps.reserve(lines.size());
    for (const auto& line : lines) eps.push_back(parse_episode(line, ab));
    return eps;
}

void do_generate(const std::string& patterns_path, double eta, double p, double rho,
                 uint32_t alphabet, uint64_t ticks, uint64_t seed,
                 const std::string& out) {
    auto lines = read_episode_lines(patterns_path);
    Alphabet ab = padded_alphabet(collect_symbols(lines), alphabet);
    GenConfig cfg;
    cfg.patterns = parse_episode_file(lines, ab);
    cfg.eta = eta;
    cfg.p = p;
    cfg.rho = rho;
    cfg.alphabet_size = ab.size();
    cfg.ticks = ticks;
    cfg.seed = seed;
    GenResult res = generate_stream(cfg);
    write_stream_file(out, res.seq, ab);

    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", noise_level(cfg));
    std::string occs;
    for (size_t i = 0; i < res.occurrences.size(); ++i) {
        if (i) occs += ',';
        occs += std::to_string(res.occurrences[i]);
    }
    write_manifest(out + ".manifest",
                   {{"command", "generate"},
                    {"patterns", patterns_path},
                    {"eta", std::to_string(eta)},
                    {"p", std::to_string(p)},
                    {"rho", std::to_string(rho)},
                    {"alphabet", std::to_string(alphabet)},
                    {"ticks", std::to_string(ticks)},
                    {"seed", std::to_string(seed)},
                    {"events", std::to_string(res.seq.size())},
                    {"signal_events", std::to_string(res.signal_events)},
                    {"noise_events", std::to_string(res.noise_events)},
                    {"occurrences", occs},
                    {"noise_level", buf},
                    {"sampler", "uniform-minimal-extension"},
                    {"rng", "mt19937_64"}});
}

struct MineArgs {
    std::string data, out;
    uint64_t fth = 0;
    double hth = 0;
    std::string hmode, mode = "general";
    uint64_t expiry = 0;
    uint32_t lmax = 0;
    uint64_t nmax = 0;
    int max_level = kMaxEpisodeSize;
    bool has_hth = false, has_hmode = false, has_expiry = false;
    bool has_lmax = false, has_nmax = false;
};

void do_mine(const MineArgs& a) {
    auto raw = read_stream_file(a.data);
    Alphabet ab = stream_alphabet(raw);
    EventSequence seq = intern_stream(raw, ab);

    MiningConfig cfg;
    cfg.f_th = a.fth;
    if (a.has_hmode) {
        if (a.hmode == "off") cfg.h_mode = HMode::off;
        else if (a.hmode == "postfilter") cfg.h_mode = HMode::postfilter;
        else if (a.hmode == "levelwise") cfg.h_mode = HMode::levelwise;
        else throw ValidationError("unknown hmode '" + a.hmode + "'");
    } else if (a.has_hth) {
        cfg.h_mode = HMode::levelwise;
    }
    if (a.has_hth) cfg.h_th = a.hth;
    if (cfg.h_mode != HMode::off && !cfg.h_th)
        throw ValidationError("--hmode " + a.hmode + " requires --hth");
    if (a.has_expiry) cfg.expiry = a.expiry;
    if (a.mode == "general") cfg.gen.mode = MiningMode::general;
    else if (a.mode == "serial") cfg.gen.mode = MiningMode::serial;
    else if (a.mode == "parallel") cfg.gen.mode = MiningMode::parallel;
    else throw ValidationError("unknown mode '" + a.mode + "'");
    if (a.has_lmax) cfg.gen.lmax = a.lmax;
    if (a.has_nmax) cfg.gen.nmax = a.nmax;
    cfg.max_level = a.max_level;

    CounterStats stats;
    auto reports = mine(seq, cfg, &stats);
    write_report_file(a.out, reports, ab);
    if (stats.nesting_violations || stats.order_violations)
        std::cerr << "warning: counter invariant violations: nesting="
                  << stats.nesting_violations << " order=" << stats.order_violations
                  << "\n";
}

Alphabet union_alphabet(const std::vector<RawEvent>& raw,
                        const std::vector<std::string>& episode_lines) {
    std::vector<std::string> syms = collect_symbols(episode_lines);
    for (const auto& e : raw) syms.push_back(e.symbol);
    return Alphabet(std::move(syms));
}

void do_count(const std::string& data, const std::string& episodes,
              std::optional<uint64_t> expiry) {
    auto raw = read_stream_file(data);
    auto lines = read_episode_lines(episodes);
    Alphabet ab = union_alphabet(raw, lines);
    EventSequence seq = intern_stream(raw, ab);
    auto eps = parse_episode_file(lines, ab);

    std::vector<CountResult> results(eps.size());
    std::set<int> sizes;
    for (const auto& ep : eps) sizes.insert(ep.size());
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    for (int l : sizes) {
        std::vector<Episode> group;
        std::vector<size_t> where;
        for (size_t i = 0; i < eps.size(); ++i)
            if (eps[i].size() == l) {
                group.push_back(eps[i]);
                where.push_back(i);
            }
        auto part = count_frequencies(group, seq, expiry, threads);
        for (size_t k = 0; k < where.size(); ++k) results[where[k]] = std::move(part[k]);
    }

    char buf[32];
    for (size_t i = 0; i < eps.size(); ++i) {
        double h = bidirectional_evidence(eps[i], results[i]).h;
        std::snprintf(buf, sizeof buf, "%.6f", h);
        std::cout << format_episode(eps[i], ab) << '\t' << results[i].freq << '\t' << buf
                  << '\n';
    }
}

void do_oracle(const std::string& data, const std::string& episodes,
               std::optional<uint64_t> expiry) {
    auto raw = read_stream_file(data);
    auto lines = read_episode_lines(episodes);
    Alphabet ab = union_alphabet(raw, lines);
    EventSequence seq = intern_stream(raw, ab);
    for (const auto& ep : parse_episode_file(lines, ab))
        std::cout << format_episode(ep, ab) << '\t' << oracle_frequency(ep, seq, expiry)
                  << '\n';
}

void do_metrics(const std::string& episodes) {
    auto lines = read_episode_lines(episodes);
    Alphabet ab(collect_symbols(lines));
    for (const auto& ep : parse_episode_file(lines, ab)) {
        auto m = structural_metrics(ep);
        std::cout << format_episode(ep, ab) << '\t' << m.lmax << '\t' << m.nmax << '\n';
    }
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"frequent partial-order episode mining over event streams"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "synthesize a stream with embedded patterns");
    std::string gen_patterns, gen_out;
    double gen_eta = 0.7, gen_p = 0.05, gen_rho = 0.0;
    uint32_t gen_alphabet = 0;
    uint64_t gen_ticks = 0, gen_seed = 0;
    gen->add_option("--patterns", gen_patterns, "episode file to embed")->required();
    gen->add_option("--eta", gen_eta, "intra-occurrence gap rate")->required();
    gen->add_option("--p", gen_p, "inter-occurrence gap rate")->required();
    gen->add_option("--rho", gen_rho, "per-symbol noise rate")->required();
    gen->add_option("--alphabet", gen_alphabet, "alphabet size")->required();
    gen->add_option("--ticks", gen_ticks, "stream length in ticks")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output stream file")->required();
    gen->callback([&] {
        do_generate(gen_patterns, gen_eta, gen_p, gen_rho, gen_alphabet, gen_ticks,
                    gen_seed, gen_out);
    });

    auto* mine_cmd = app.add_subcommand("mine", "mine frequent episodes levelwise");
    MineArgs ma;
    mine_cmd->add_option("--data", ma.data, "event stream file")->required();
    mine_cmd->add_option("--fth", ma.fth, "frequency threshold (strict)")->required();
    auto* hth_opt = mine_cmd->add_option("--hth", ma.hth, "bidirectional evidence threshold");
    auto* hmode_opt = mine_cmd->add_option("--hmode", ma.hmode, "off|postfilter|levelwise");
    auto* expiry_opt = mine_cmd->add_option("--expiry", ma.expiry, "max occurrence span");
    mine_cmd->add_option("--mode", ma.mode, "general|serial|parallel");
    auto* lmax_opt = mine_cmd->add_option("--lmax", ma.lmax, "longest-path bound");
    auto* nmax_opt = mine_cmd->add_option("--nmax", ma.nmax, "maximal-path-count bound");
    mine_cmd->add_option("--max-level", ma.max_level, "largest episode size");
    mine_cmd->add_option("--out", ma.out, "output report file")->required();
    mine_cmd->callback([&] {
        ma.has_hth = hth_opt->count() > 0;
        ma.has_hmode = hmode_opt->count() > 0;
        ma.has_expiry = expiry_opt->count() > 0;
        ma.has_lmax = lmax_opt->count() > 0;
        ma.has_nmax = nmax_opt->count() > 0;
        do_mine(ma);
    });

    auto* count_cmd = app.add_subcommand("count", "count given episodes in a stream");
    std::string cnt_data, cnt_eps;
    uint64_t cnt_expiry = 0;
    count_cmd->add_option("--data", cnt_data, "event stream file")->required();
    count_cmd->add_option("--episodes", cnt_eps, "episode file")->required();
    auto* cnt_expiry_opt = count_cmd->add_option("--expiry", cnt_expiry, "max occurrence span");
    count_cmd->callback([&] {
        do_count(cnt_data, cnt_eps,
                 cnt_expiry_opt->count() ? std::optional<uint64_t>(cnt_expiry) : std::nullopt);
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counts for small instances");
    std::string orc_data, orc_eps;
    uint64_t orc_expiry = 0;
    oracle_cmd->add_option("--data", orc_data, "event stream file")->required();
    oracle_cmd->add_option("--episodes", orc_eps, "episode file")->required();
    auto* orc_expiry_opt = oracle_cmd->add_option("--expiry", orc_expiry, "max occurrence span");
    oracle_cmd->callback([&] {
        do_oracle(orc_data, orc_eps,
                  orc_expiry_opt->count() ? std::optional<uint64_t>(orc_expiry) : std::nullopt);
    });

    auto* metrics_cmd = app.add_subcommand("metrics", "structural metrics of episodes");
    std::string met_eps;
    metrics_cmd->add_option("--episodes", met_eps, "episode file")->required();
    metrics_cmd->callback([&] { do_metrics(met_eps); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace pomine::cli
