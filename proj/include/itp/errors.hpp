#ifndef ITP_ERRORS_HPP
#define ITP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace itp {

// Base for all library errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NegativeData : Error {
    using Error::Error;
};

struct RepairFailed : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ArithmeticOverflow : Error {
    using Error::Error;
};

} // namespace itp

#endif
