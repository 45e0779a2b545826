#pragma once

#include <cstdint>

namespace preradicals {

/// Work bounds threaded through every enumeration entry point.
/// All bounds are configuration, not hard-coded constants.
struct Limits {
    int max_enum_ambient_dim = 4;  ///< subspace enumeration per vertex
    int max_enum_prime = 5;        ///< subspace enumeration per vertex
    std::int64_t max_subrep_tuples = 1 << 20;     ///< cartesian filter in enumerate_subreps
    std::int64_t max_preradical_tuples = 1 << 22; ///< cartesian filter in enumerate_preradicals
    std::int64_t max_end_search = 1 << 16;        ///< idempotent search over End(X) combinations
};

} // namespace preradicals
