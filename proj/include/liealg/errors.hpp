#pragma once

#include <stdexcept>

namespace liealg {

// Schmidt rank exceeds 2: the optimal-angle Bell construction is only
// defined for two-term states.
struct rank_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An evolution-vs-constructor identity missed its tolerance gate.
struct identity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested truncation tolerance unreachable within the basis-size cap.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All superposition terms cancelled; the result has no norm.
struct degenerate_superposition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace liealg
