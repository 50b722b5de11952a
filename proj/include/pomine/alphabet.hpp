#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pomine/errors.hpp"

namespace pomine {

using TypeId = uint32_t;

// Interns event-type symbols. Ids are assigned in sorted symbol order, so
// id comparison agrees with the byte-wise symbol order used everywhere else.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> symbols) {
        std::sort(symbols.begin(), symbols.end());
        symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
        for (const auto& s : symbols) {
            if (s.empty())
                throw ValidationError("empty event-type symbol");
            for (char c : s)
                if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '|' || c == '#')
                    throw ValidationError("symbol '" + s + "' contains a reserved character");
        }
        syms_ = std::move(symbols);
        for (TypeId i = 0; i < syms_.size(); ++i)
            index_[syms_[i]] = i;
    }

    TypeId size() const { return static_cast<TypeId>(syms_.size()); }

    const std::string& symbol(TypeId id) const { return syms_.at(id); }

    std::optional<TypeId> find(std::string_view sym) const {
        auto it = index_.find(std::string(sym));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<std::string>& symbols() const { return syms_; }

private:
    std::vector<std::string> syms_;
    std::unordered_map<std::string, TypeId> index_;
};

// A..Z, then A1..Z1, A2..Z2, ... Used by the generator CLI to pad an alphabet
// out to a requested size.
inline std::vector<std::string> default_symbols(uint32_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        std::string s(1, static_cast<char>('A' + i % 26));
        if (i >= 26) s += std::to_string(i / 26);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace pomine
