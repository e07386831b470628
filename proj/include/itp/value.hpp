#ifndef ITP_VALUE_HPP
#define ITP_VALUE_HPP

#include <cstdint>

#include "itp/errors.hpp"

namespace itp {

// All benchmark data is integer-valued; 64-bit integers keep every
// objective, flow and potential exact. Overflow is an error, never UB.
using Value = std::int64_t;

inline Value checked_add(Value a, Value b) {
    Value r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Value checked_sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Value checked_mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

} // namespace itp

#endif
