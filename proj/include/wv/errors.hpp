#ifndef WV_ERRORS_HPP
#define WV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wv {

/// A variety or catalog datum is internally inconsistent (diagram mismatch,
/// spherical root with a positive pairing outside the Levi, ...).
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested computation is not defined for this variety's treatment
/// (e.g. section decomposition of a P1xP1-type variety).
struct unsupported_path_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unknown catalog id / family name.
struct lookup_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wv

#endif
