#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace antipower {

// Symbols come from an integer alphabet. Byte input is widened on load.
using Symbol = std::int32_t;
using Word = std::vector<Symbol>;

using Index = std::int32_t;
using Count = std::int64_t;

// A positioned factor: starts at `start`, spans `length` symbols.
struct Fragment {
    Count start = 0;
    Count length = 0;

    friend bool operator==(const Fragment&, const Fragment&) = default;
    friend auto operator<=>(const Fragment&, const Fragment&) = default;
};

inline Word word_from_string(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (unsigned char c : text) w.push_back(static_cast<Symbol>(c));
    return w;
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol c : w) s.push_back(static_cast<char>(c));
    return s;
}

}  // namespace antipower
