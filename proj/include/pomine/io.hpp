#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pomine/alphabet.hpp"
#include "pomine/counter.hpp"
#include "pomine/miner.hpp"

namespace pomine {

// Event stream text: one `tick<TAB>symbol` per line, ticks non-decreasing,
// `#` lines and blank lines ignored.
struct RawEvent {
    uint64_t tick;
    std::string symbol;
};

std::vector<RawEvent> parse_stream_text(std::istream& in);
std::vector<RawEvent> read_stream_file(const std::string& path);
Alphabet stream_alphabet(const std::vector<RawEvent>& raw);
EventSequence intern_stream(const std::vector<RawEvent>& raw, const Alphabet& ab);
void write_stream_file(const std::string& path, const EventSequence& seq, const Alphabet& ab);

// Episode files: one episode per line, same comment rules.
std::vector<std::string> read_episode_lines(const std::string& path);

// Symbols mentioned before the '|' of each line, for building alphabets.
std::vector<std::string> collect_symbols(const std::vector<std::string>& lines);

// Mining report: per level a `# level=<k> candidates=<c> frequent=<f>` header
// followed by `episode<TAB>freq<TAB>H` lines, H with 6 decimals.
void write_report(std::ostream& os, const std::vector<LevelReport>& reports, const Alphabet& ab);
void write_report_file(const std::string& path, const std::vector<LevelReport>& reports,
                       const Alphabet& ab);

// key=value sidecar, one pair per line, in the given order.
void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& kv);

} // namespace pomine
