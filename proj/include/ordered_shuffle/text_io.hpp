#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "weight.hpp"

namespace ordered_shuffle {

/// Two-row table of subscripts and weights, wrapped every `per_row` columns:
///
///     n      |  0  1  2  3
///     phi(n) |  0  1  2  0
inline std::string format_weight_table(const std::vector<Weight>& values, std::size_t per_row = 16) {
    std::size_t width = std::to_string(values.empty() ? 0 : values.size() - 1).size();
    for (Weight v : values) width = std::max(width, std::to_string(v).size());
    std::ostringstream out;
    for (std::size_t start = 0; start < values.size(); start += per_row) {
        const std::size_t end = std::min(values.size(), start + per_row);
        if (start != 0) out << '\n';
        out << "n      |";
        for (std::size_t i = start; i < end; ++i) {
            const std::string s = std::to_string(i);
            out << ' ' << std::string(width - s.size(), ' ') << s;
        }
        out << "\nphi(n) |";
        for (std::size_t i = start; i < end; ++i) {
            const std::string s = std::to_string(values[i]);
            out << ' ' << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

inline std::string format_weight_table(const WeightFunction& wf, std::size_t per_row = 16) {
    return format_weight_table(wf.values(), per_row);
}

} // namespace ordered_shuffle
