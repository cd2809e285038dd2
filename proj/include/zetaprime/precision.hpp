#pragma once

#include <cstdint>

#include "zetaprime/errors.hpp"

namespace zetaprime {

/* Decimal digits needed to resolve the cancellation 1 - Q_n(s)/zeta(s),
 * whose leading behaviour is (next prime)^(-s): ceil(s * log10(bound))
 * digits vanish in the subtraction, plus a guard margin left over for
 * the answer.  `prime_upper_bound` must dominate the prime being
 * extracted (Bertrand: twice the largest known prime always works).
 */
int required_digits(double s, std::uint64_t prime_upper_bound, int guard_digits);

struct PrecisionPolicy {
    double s = 50.0;
    std::uint64_t prime_upper_bound = 4;
    int guard_digits = 30;

    int required() const { return required_digits(s, prime_upper_bound, guard_digits); }
};

}  // namespace zetaprime
