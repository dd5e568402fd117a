#pragma once

#include <stdexcept>
#include <string>

namespace pcls {

// Bad caller-supplied data: malformed graphs, out-of-range multidegrees,
// non-invertible series.  CLI exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested engine cannot run on this input (e.g. elimination-ordering
// engine on a non-chordal support).  CLI exit code 3.
struct EngineInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard tripped before the computation finished.  CLI exit code 4.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed: a quantity that is provably an integer came
// out fractional, a multiplicity came out negative, two engines disagreed.
// These indicate a bug, never a user error.
struct InternalCheckFailure : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace pcls
