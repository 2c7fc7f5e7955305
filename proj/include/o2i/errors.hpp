#ifndef O2I_ERRORS_HPP
#define O2I_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace o2i {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument violates a mathematical precondition (negative depth, interior-side Tx, ...).
struct DomainError : Error {
    using Error::Error;
};

/// An input is outside a model's stated validity bounds; reported, never clamped.
struct RangeError : Error {
    using Error::Error;
};

/// Least-squares fit is underdetermined (all ranges equal, too few records).
struct DegenerateFit : Error {
    using Error::Error;
};

/// SNR is already below threshold at the near end of the search window.
struct NoCoverage : Error {
    using Error::Error;
};

/// A profile assumed monotone non-increasing was observed to increase.
struct NonMonotone : Error {
    using Error::Error;
};

/// Malformed scene file or measurement CSV; message names the offending field or line.
struct ParseError : Error {
    using Error::Error;
};

/// Scene-level geometry failure (e.g. terminal outside every building).
struct GeometryError : Error {
    using Error::Error;
};

} // namespace o2i

#endif
