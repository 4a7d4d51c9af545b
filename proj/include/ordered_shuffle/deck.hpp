#pragma once

// Decks are plain label sequences; position 0 is the top card and a larger
// label outranks a smaller one.
//
// Text form: one digit per card when every label is below 10 ("021100122110"),
// otherwise comma separated integers ("10,0,3").

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "params.hpp"

namespace ordered_shuffle {

using Label = std::uint32_t;
using Deck = std::vector<Label>;

inline Label max_label(const Deck& deck) {
    return deck.empty() ? 0 : *std::max_element(deck.begin(), deck.end());
}

/// Serialises a deck. `alphabet` is the declared number of labels j; when it is 0
/// the alphabet is inferred from the largest label.
inline std::string format_deck(const Deck& deck, std::size_t alphabet = 0) {
    if (alphabet == 0) alphabet = static_cast<std::size_t>(max_label(deck)) + 1;
    std::string out;
    if (alphabet <= 10) {
        out.reserve(deck.size());
        for (Label x : deck) out.push_back(static_cast<char>('0' + x));
        return out;
    }
    for (std::size_t i = 0; i < deck.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(deck[i]);
    }
    return out;
}

inline Deck parse_deck(std::string_view text) {
    Deck deck;
    if (text.find(',') == std::string_view::npos) {
        deck.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw input_error("malformed deck string: unexpected character '" + std::string(1, c) + "'");
            deck.push_back(static_cast<Label>(c - '0'));
        }
        if (deck.empty()) throw input_error("malformed deck string: empty");
        return deck;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view field = text.substr(pos, end - pos);
        Label value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw input_error("malformed deck string: bad field '" + std::string(field) + "'");
        deck.push_back(value);
        pos = end + 1;
    }
    return deck;
}

inline void require_deck(const Deck& deck, const ShuffleParams& params) {
    if (deck.size() != params.N)
        throw input_error("deck has " + std::to_string(deck.size()) + " cards, expected N = " +
                          std::to_string(params.N));
}

/// Reverses the deck and swaps label x with (alphabet - 1 - x). Commutes with shuffling.
inline Deck reverse_complement(const Deck& deck, std::size_t alphabet) {
    Deck out(deck.rbegin(), deck.rend());
    for (Label& x : out) x = static_cast<Label>(alphabet - 1 - x);
    return out;
}

} // namespace ordered_shuffle
