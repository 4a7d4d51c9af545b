#pragma once

// Exception hierarchy shared by the library and the command line tool.
// The CLI maps each family onto an exit status:
//   input_error        -> 1 (bad parameters, malformed decks)
//   precondition_error -> 2 (a mathematical precondition does not hold)
//   budget_exceeded    -> 3 (an exhaustive search would be too large)

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordered_shuffle {

class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class budget_exceeded : public std::length_error {
public:
    budget_exceeded(const std::string& what, std::uint64_t requested, std::uint64_t budget)
        : std::length_error(what + " (requested " + std::to_string(requested) + ", budget " +
                            std::to_string(budget) + ")"),
          requested_(requested),
          budget_(budget) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t requested_;
    std::uint64_t budget_;
};

} // namespace ordered_shuffle
