#include "pomine/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pomine/errors.hpp"

namespace pomine {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

} // namespace

std::vector<RawEvent> parse_stream_text(std::istream& in) {
    std::vector<RawEvent> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        uint64_t tick;
        std::string sym, extra;
        if (!(ls >> tick >> sym) || (ls >> extra))
            throw ParseError("bad event at line " + std::to_string(lineno) + ": " + line);
        if (!out.empty() && tick < out.back().tick)
            throw ValidationError("ticks decrease at line " + std::to_string(lineno));
        out.push_back({tick, std::move(sym)});
    }
    return out;
}

std::vector<RawEvent> read_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_stream_text(in);
}

Alphabet stream_alphabet(const std::vector<RawEvent>& raw) {
    std::vector<std::string> syms;
    syms.reserve(raw.size());
    for (const auto& e : raw) syms.push_back(e.symbol);
    return Alphabet(std::move(syms));
}

EventSequence intern_stream(const std::vector<RawEvent>& raw, const Alphabet& ab) {
    EventSequence seq;
    seq.reserve(raw.size());
    for (const auto& e : raw) {
        auto id = ab.find(e.symbol);
        if (!id) throw ValidationError("event type '" + e.symbol + "' not in alphabet");
        seq.push_back({*id, e.tick});
    }
    return seq;
}

void write_stream_file(const std::string& path, const EventSequence& seq, const Alphabet& ab) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    for (const Event& e : seq) out << e.tick << '\t' << ab.symbol(e.type) << '\n';
    if (!out) throw IoError("short write to " + path);
}

std::vector<std::string> read_episode_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (!blank_or_comment(line)) out.push_back(line);
    }
    return out;
}

std::vector<std::string> collect_symbols(const std::vector<std::string>& lines) {
    std::vector<std::string> syms;
    for (const auto& line : lines) {
        std::string cur;
        for (char c : line) {
            if (c == '|') break;
            if (c == ' ' || c == '\t') {
                if (!cur.empty()) syms.push_back(std::move(cur)), cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) syms.push_back(std::move(cur));
    }
    return syms;
}

void write_report(std::ostream& os, const std::vector<LevelReport>& reports, const Alphabet& ab) {
    char buf[32];
    for (const LevelReport& rep : reports) {
        os << "# level=" << rep.level << " candidates=" << rep.candidates
           << " frequent=" << rep.survivors.size() << '\n';
        for (const MinedEpisode& me : rep.survivors) {
            std::snprintf(buf, sizeof buf, "%.6f", me.h);
            os << format_episode(me.ep, ab) << '\t' << me.freq << '\t' << buf << '\n';
        }
    }
}

void write_report_file(const std::string& path, const std::vector<LevelReport>& reports,
                       const Alphabet& ab) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    write_report(out, reports, ab);
    if (!out) throw IoError("short write to " + path);
}

void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
    if (!out) throw IoError("short write to " + path);
}

} // namespace pomine
