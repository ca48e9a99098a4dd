#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

// Text forms.
//
// Words: letters as base-10 integers joined by commas ("1,3,3,1,4,2,1");
// when m <= 10 a compact digit string ("1331421") is also accepted and is
// the canonical output form. Partitioned words put '|' between blocks; an
// empty block is the empty string between two pipes, and "·" is accepted
// (and produced) for it.

namespace sweeplat {

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline int parse_int(const std::string& tok, const char* what) {
    const std::string t = trim(tok);
    require(!t.empty(), std::string(what) + ": empty number");
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad number '" + t + "'");
    }
    require(pos == t.size(), std::string(what) + ": bad number '" + t + "'");
    return value;
}

inline std::vector<int> parse_int_list(std::string_view s, const char* what) {
    std::vector<int> out;
    if (trim(s).empty()) return out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok, what));
    return out;
}

inline bool is_middle_dot(std::string_view s) {
    return s == "\xc2\xb7" || s == ".";  // UTF-8 "·", ASCII fallback
}

}  // namespace detail

/// Letters of a word over [0, m); accepts the comma form always and the
/// compact digit form when m <= 10.
inline std::vector<int> parse_letters(std::string_view text, int modulus) {
    const std::string s = detail::trim(text);
    if (s.empty()) return {};
    if (s.find(',') == std::string::npos && modulus <= 10) {
        std::vector<int> out;
        out.reserve(s.size());
        for (char c : s) {
            detail::require(c >= '0' && c <= '9',
                            std::string("word: bad digit '") + c + "'");
            out.push_back(c - '0');
        }
        return out;
    }
    return detail::parse_int_list(s, "word");
}

inline ModWord parse_mod_word(std::string_view text, int modulus) {
    return ModWord(modulus, parse_letters(text, modulus));
}

inline std::string format_letters(const std::vector<int>& letters, int modulus) {
    std::string out;
    if (modulus <= 10) {
        for (int x : letters) out += static_cast<char>('0' + x);
        return out;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters[i]);
    }
    return out;
}

inline std::string format_mod_word(const ModWord& w) {
    return format_letters(w.letters(), w.modulus());
}

/// Pipe notation, blocks in display order m-1 ... 0, "·" for empty blocks.
inline std::string format_partitioned_word(const PartitionedWord& p) {
    std::string out;
    for (int k = p.modulus() - 1; k >= 0; --k) {
        if (k != p.modulus() - 1) out += '|';
        if (p.block_size(k) == 0)
            out += "\xc2\xb7";
        else
            out += format_letters(p.block_content(k), p.modulus());
    }
    return out;
}

inline PartitionedWord parse_partitioned_word(std::string_view text, int modulus) {
    const auto parts = detail::split(detail::trim(text), '|');
    detail::require(static_cast<int>(parts.size()) == modulus,
                    "partitioned word: expected exactly m blocks");
    std::vector<int> letters;
    std::vector<int> sizes;
    sizes.reserve(parts.size());
    for (const auto& raw : parts) {
        const std::string part = detail::trim(raw);
        if (part.empty() || detail::is_middle_dot(part)) {
            sizes.push_back(0);
            continue;
        }
        const auto block = parse_letters(part, modulus);
        sizes.push_back(static_cast<int>(block.size()));
        letters.insert(letters.end(), block.begin(), block.end());
    }
    return PartitionedWord(ModWord(modulus, std::move(letters)), std::move(sizes));
}

/// Signed-integer words, always comma-joined.
inline std::vector<int> parse_signed_letters(std::string_view text) {
    return detail::parse_int_list(text, "integer word");
}

inline std::string format_signed_letters(const std::vector<int>& letters) {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters[i]);
    }
    return out;
}

}  // namespace sweeplat
