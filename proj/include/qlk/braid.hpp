/*
   Copyright 2026 The qlk authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLK_BRAID_HPP
#define QLK_BRAID_HPP

#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlk/errors.hpp"

namespace qlk {

/// One Artin generator occurrence: sigma_index^sign.
struct BraidLetter {
    int index; // 1-based, in [1, strands-1]
    int sign;  // +1 or -1

    bool operator==(const BraidLetter&) const = default;
};

/// A braid word on `strands` strands. The empty word is the identity braid;
/// its closure is the strands-component unlink.
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord&) const = default;
};

/// Sum of letter signs (exponent sum; the writhe of the closure diagram).
inline int writhe(const BraidWord& b) {
    int w = 0;
    for (const auto& l : b.letters) w += l.sign;
    return w;
}

inline void check_index(const BraidWord& b, int index, const char* who) {
    if (index < 1 || index > b.strands - 1)
        throw IndexOutOfRange(std::string(who) + ": generator index " + std::to_string(index) +
                              " outside [1, " + std::to_string(b.strands - 1) + "]");
}

/// Markov move I: sigma_i^sign . b . sigma_i^{-sign}.
inline BraidWord conjugate(const BraidWord& b, int index, int sign) {
    check_index(b, index, "conjugate");
    BraidWord r;
    r.strands = b.strands;
    r.letters.reserve(b.letters.size() + 2);
    r.letters.push_back({index, sign});
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    r.letters.push_back({index, -sign});
    return r;
}

/// Markov move II: append sigma_strands^sign on strands+1 strands.
inline BraidWord stabilize(const BraidWord& b, int sign) {
    BraidWord r;
    r.strands = b.strands + 1;
    r.letters = b.letters;
    r.letters.push_back({b.strands, sign});
    return r;
}

/// All crossing signs flipped; the closure is the mirror link.
inline BraidWord mirrored(const BraidWord& b) {
    BraidWord r = b;
    for (auto& l : r.letters) l.sign = -l.sign;
    return r;
}

/// Deterministic pseudo-random word for a given seed.
inline BraidWord random_braid(int strands, int length, std::uint64_t seed) {
    if (strands < 2) throw IndexOutOfRange("random_braid: needs at least 2 strands");
    if (length < 0) throw ParseError("random_braid: negative length");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_index(1, strands - 1);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    BraidWord b;
    b.strands = strands;
    b.letters.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
        b.letters.push_back({pick_index(rng), pick_sign(rng) ? 1 : -1});
    return b;
}

/// Number of components of the braid closure: cycle count of the strand
/// permutation (crossing signs do not matter).
inline int closure_components(const BraidWord& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    for (int i = 0; i < b.strands; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (const auto& l : b.letters) std::swap(perm[static_cast<std::size_t>(l.index - 1)], perm[static_cast<std::size_t>(l.index)]);
    std::vector<bool> seen(static_cast<std::size_t>(b.strands), false);
    int cycles = 0;
    for (int i = 0; i < b.strands; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
    }
    return cycles;
}

/// Grammar: "L; k1 k2 ..." with L a positive strand count and each k a
/// nonzero signed generator index (negative = inverse generator).
inline BraidWord parse_braid(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("parse_braid: missing ';' in \"" + text + "\"");
    int strands = 0;
    {
        std::istringstream head(text.substr(0, semi));
        if (!(head >> strands) || strands < 1)
            throw ParseError("parse_braid: bad strand count in \"" + text + "\"");
        std::string tail;
        if (head >> tail) throw ParseError("parse_braid: junk before ';' in \"" + text + "\"");
    }
    BraidWord b;
    b.strands = strands;
    std::istringstream body(text.substr(semi + 1));
    std::string tok;
    while (body >> tok) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("parse_braid: bad letter \"" + tok + "\"");
        }
        if (k == 0) throw ParseError("parse_braid: letter 0 is not a generator");
        const int index = k > 0 ? k : -k;
        check_index(b, index, "parse_braid");
        b.letters.push_back({index, k > 0 ? 1 : -1});
    }
    return b;
}

/// Canonical text form, re-parseable by parse_braid.
inline std::string render(const BraidWord& b) {
    std::ostringstream out;
    out << b.strands << ";";
    for (const auto& l : b.letters) out << " " << l.sign * l.index;
    return out.str();
}

/// Artin-generator form, e.g. "s1 s2^-1 s1".
inline std::string render_artin(const BraidWord& b) {
    if (b.letters.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& l : b.letters) {
        if (!first) out << " ";
        first = false;
        out << "s" << l.index;
        if (l.sign < 0) out << "^-1";
    }
    return out.str();
}

/// Braid-list stream: one braid per line, '#'-prefixed lines and blank
/// lines skipped.
inline std::vector<BraidWord> parse_braid_list(std::istream& in) {
    std::vector<BraidWord> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        out.push_back(parse_braid(line.substr(start)));
    }
    return out;
}

} // namespace qlk

#endif // QLK_BRAID_HPP
