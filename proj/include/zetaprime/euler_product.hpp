#pragma once

#include <cstddef>
#include <optional>

#include "zetaprime/big_real.hpp"
#include "zetaprime/primes.hpp"

namespace zetaprime {

/* Finite Euler products over prime prefixes.
 *
 *   q(prefix, s)       = prod_{p in prefix} (1 - p^-s)^-1        (empty: 1)
 *   q_prime(prefix, s) = d/ds q(prefix, s)
 *                      = q * sum_{p} -ln(p) p^-s / (1 - p^-s)    (empty: 0)
 *
 * Factors are positive for any s > 0, which is the accepted domain.
 */

struct PartialProductEval {
    std::size_t n;
    BigReal s;
    int digits;
    BigReal q;
    std::optional<BigReal> q_prime;
};

PartialProductEval eval_partial_product(const PrimePrefix& prefix, const BigReal& s,
                                        int digits, bool with_derivative);
BigReal q(const PrimePrefix& prefix, const BigReal& s, int digits);
BigReal q_prime(const PrimePrefix& prefix, const BigReal& s, int digits);

// Truncated tail product prod_{j = first_index}^{first_index + count - 1}
// (1 - p_j^-s)^-1 over 1-based prime indices (count = 0 gives exactly 1).
// Leaving out the rest of the tail undershoots the full product by roughly
// a factor (1 - p_{first_index + count}^-s)^-1.
BigReal epsilon_tail(std::size_t first_index, const BigReal& s, std::size_t count,
                     int digits);

}  // namespace zetaprime
