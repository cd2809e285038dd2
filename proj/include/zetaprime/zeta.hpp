#pragma once

#include "zetaprime/big_real.hpp"

namespace zetaprime {

/* Riemann zeta and its derivative on the real axis s > 1.
 *
 * Two regimes.  For large s the Dirichlet series converges fast and is
 * summed directly, cut when the integral tail N^(1-s)/(s-1) drops below
 * 10^-(digits+2).  For small s that cutoff explodes, so Euler-Maclaurin
 * summation is used instead: a short base sum plus integral and midpoint
 * corrections and adaptively many Bernoulli terms.  auto_select switches
 * at s = split.
 */
enum class ZetaRegime { auto_select, direct, euler_maclaurin };

struct ZetaOptions {
    ZetaRegime regime = ZetaRegime::auto_select;
    double split = 20.0;
    long term_budget = 10'000'000;
};

BigReal zeta(const BigReal& s, int digits, const ZetaOptions& options = {});
BigReal zeta_prime(const BigReal& s, int digits, const ZetaOptions& options = {});

// Bernoulli number B_2k as an exact rational rounded to `digits` decimal
// digits.  Exact values are cached per process; safe for concurrent use.
BigReal bernoulli_2k(int k, int digits);

}  // namespace zetaprime
