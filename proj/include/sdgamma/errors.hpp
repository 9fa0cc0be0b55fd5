#pragma once

#include <stdexcept>
#include <string>

namespace sdgamma {

// Base class for everything this library throws on bad input or broken
// hypotheses. Internal logic failures use std::logic_error instead.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/polynomial length does not match the stated dimension.
struct dimension_error : error {
    using error::error;
};

// A polynomial expected to have symmetric coefficients does not.
struct symmetry_error : error {
    explicit symmetry_error(const std::string& what, int index)
        : error(what), first_bad_index(index) {}
    int first_bad_index;
};

// A face with repeated vertices, an invalid permutation word, an invalid
// colored subset, or similarly malformed combinatorial input.
struct validation_error : error {
    using error::error;
};

// Join of complexes whose vertex sets overlap.
struct disjointness_error : error {
    using error::error;
};

// Proper-coloring violation, or a vertex missing from a coloring map.
struct coloring_error : error {
    using error::error;
};

// Vertex ids of a construction input collide with the reserved range and
// must be relabeled by the caller first.
struct relabel_error : error {
    using error::error;
};

// An enumeration or materialization exceeds its configured cap.
struct capacity_error : error {
    using error::error;
};

// A parameter is outside the admissible range of the operation.
struct range_error : error {
    using error::error;
};

// A stated hypothesis of the operation fails (asymmetric h-vector,
// non-FFK input to a witness construction, ...).
struct hypothesis_error : error {
    using error::error;
};

// The realizability pipeline failed its closure test. Reaching this would
// contradict a proven statement, so it is reported loudly instead of being
// folded into a boolean.
struct refutation_error : error {
    using error::error;
};

}  // namespace sdgamma
