#include "zetaprime/precision.hpp"

#include <cmath>
#include <string>

namespace zetaprime {

int required_digits(double s, std::uint64_t prime_upper_bound, int guard_digits) {
    if (!std::isfinite(s) || s <= 1.0)
        throw domain_error("required_digits needs s > 1, got " + std::to_string(s));
    if (prime_upper_bound < 2)
        throw domain_error("prime upper bound must be at least 2");
    if (guard_digits < 0)
        throw domain_error("guard digits must be non-negative");

    long double lost = static_cast<long double>(s) *
                       std::log10(static_cast<long double>(prime_upper_bound));
    // Snap values that are integers up to rounding noise so that exact
    // powers of ten do not pick up a spurious extra digit.
    long double nearest = std::nearbyint(lost);
    if (std::fabs(lost - nearest) < 1e-9L * std::max(1.0L, std::fabs(lost)))
        lost = nearest;
    lost = std::ceil(lost);
    if (lost + guard_digits > 2e9L)
        throw domain_error("precision request too large");
    return static_cast<int>(lost) + guard_digits;
}

}  // namespace zetaprime
