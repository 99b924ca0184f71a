// This file is part of holocap, a toolkit for the Holevo capacity of
// qubit channels.
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <stdexcept>
#include <string>

namespace holocap {

/// A state failed a physicality check (ball membership, Hermiticity,
/// trace normalization, positivity).
struct invalid_state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A channel failed the complete-positivity check.
struct cp_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Channel-file syntax problem, with 1-based line/column position.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

/// Linear system for a certificate was rank deficient (affinely dependent
/// output points).
struct rank_deficiency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative routine hit its iteration cap; carries the best iterate's
/// value and optimality gap for diagnosis.
struct convergence_error : std::runtime_error {
    double best_value;
    double best_gap;
    convergence_error(const std::string& what, double value, double gap)
        : std::runtime_error(what + " (best value " + std::to_string(value) +
                             ", gap " + std::to_string(gap) + ")"),
          best_value(value),
          best_gap(gap) {}
};

}  // namespace holocap
