#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zetaprime/big_real.hpp"

namespace zetaprime {

// All primes <= limit, ascending.  limit >= 2.
std::vector<std::uint64_t> sieve_up_to(std::uint64_t limit);

// Deterministic for the full 64-bit range (Miller-Rabin, fixed base set).
bool is_prime(std::uint64_t m);

// 1-based: nth_prime(1) == 2.  Cached internally; safe for concurrent use.
std::uint64_t nth_prime(std::size_t n);

// von Mangoldt weight: ln p when m = p^k, otherwise zero.  m >= 1.
BigReal von_mangoldt(std::uint64_t m, int digits);

enum class PrefixMode {
    strict,   // exactly the first n primes, in order
    any_set,  // any ascending set of distinct primes
};

/* Validated list of primes used as the known prefix of an Euler product.
 * strict mode demands consecutive primes from 2, which is what the limit
 * formulas assume when recovering the (n+1)-th prime; any_set relaxes
 * that, in which case the formulas converge to the smallest prime missing
 * from the set.
 */
class PrimePrefix {
public:
    PrimePrefix();  // empty prefix, n = 0
    explicit PrimePrefix(std::vector<std::uint64_t> primes,
                         PrefixMode mode = PrefixMode::strict);
    static PrimePrefix first_n(std::size_t n);

    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }
    PrefixMode mode() const { return mode_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::uint64_t largest() const;        // rejects the empty prefix

    // Upper bound on the next prime: 2 * largest(), or 2 for the empty prefix.
    std::uint64_t bertrand_bound() const;

private:
    std::vector<std::uint64_t> primes_;
    PrefixMode mode_;
};

}  // namespace zetaprime
