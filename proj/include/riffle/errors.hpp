#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace riffle {

// Malformed arguments: bad deck expression, out-of-range position, ...
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured budget.  `flag` names the CLI
// option that raises the relevant limit so callers can report it.
struct CapacityError : std::runtime_error {
    std::string budget;
    std::string flag;
    std::uint64_t needed;
    std::uint64_t limit;

    CapacityError(std::string budget_, std::string flag_, std::uint64_t needed_,
                  std::uint64_t limit_, const std::string& what_)
        : std::runtime_error(what_),
          budget(std::move(budget_)),
          flag(std::move(flag_)),
          needed(needed_),
          limit(limit_) {}
};

// Work limits for the enumerative code paths.  Defaults are sized so that
// every stock command finishes in seconds on one core.
struct Budgets {
    std::uint64_t states = 1'000'000;        // arrangement enumeration cells
    std::uint64_t chain_dim = 3'000;         // quotient chain dimension (square matrices)
    std::uint64_t outcomes = 10'000'000;     // exhaustive digit sequences (a^n)
    std::uint64_t compositions = 10'000'000; // composition terms in exact sweep sums
    std::uint64_t dp_work = 1'000'000'000;   // big-integer multiplies in the separation DP
    int matrix_order = 16;                   // exact matrix property checks
    int gf_degree = 512;                     // generating-function polynomial degree
};

} // namespace riffle
