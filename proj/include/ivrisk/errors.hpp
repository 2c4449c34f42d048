#pragma once

#include <stdexcept>
#include <string>

namespace ivrisk {

// Error buckets mirrored by the CLI exit codes:
// ConfigError -> 2, DataError -> 3, SolverError -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ivrisk
