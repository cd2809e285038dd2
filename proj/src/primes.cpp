#include "zetaprime/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "zetaprime/errors.hpp"

namespace zetaprime {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exponent, u64 m) {
    u64 result = 1;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

// One strong-probable-prime round; m odd, m - 1 = d * 2^r.
bool sprp_round(u64 m, u64 base, u64 d, int r) {
    base %= m;
    if (base == 0) return true;
    u64 x = pow_mod(base, d, m);
    if (x == 1 || x == m - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, m);
        if (x == m - 1) return true;
    }
    return false;
}

// Integer k-th root: largest r with r^k <= m.
u64 integer_kth_root(u64 m, int k) {
    if (k == 1) return m;
    u64 lo = 1, hi = u64(1) << (64 / k + 1);
    while (lo < hi) {
        u64 mid = lo + (hi - lo + 1) / 2;
        u128 p = 1;
        bool overflow = false;
        for (int i = 0; i < k; ++i) {
            p *= mid;
            if (p > m) {
                overflow = true;
                break;
            }
        }
        if (!overflow && p <= m)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::mutex g_prime_cache_mutex;
std::vector<u64> g_prime_cache;

// Upper bound on the n-th prime, generous for small n.
u64 nth_prime_bound(std::size_t n) {
    if (n < 6) return 16;
    double nd = static_cast<double>(n);
    double bound = nd * (std::log(nd) + std::log(std::log(nd))) * 1.2 + 16;
    return static_cast<u64>(bound);
}

}  // namespace

std::vector<u64> sieve_up_to(u64 limit) {
    if (limit < 2) throw domain_error("sieve limit must be at least 2");
    if (limit > u64(1) << 32)
        throw domain_error("sieve limit too large; use is_prime for big values");
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

bool is_prime(u64 m) {
    if (m < 2) return false;
    for (u64 p : {u64(2), u64(3), u64(5), u64(7), u64(11), u64(13), u64(17), u64(19),
                  u64(23), u64(29), u64(31), u64(37)}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    u64 d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality for every 64-bit integer.
    for (u64 base : {u64(2), u64(325), u64(9375), u64(28178), u64(450775),
                     u64(9780504), u64(1795265022)}) {
        if (!sprp_round(m, base, d, r)) return false;
    }
    return true;
}

u64 nth_prime(std::size_t n) {
    if (n == 0) throw domain_error("prime indices are 1-based");
    std::lock_guard<std::mutex> lock(g_prime_cache_mutex);
    while (g_prime_cache.size() < n) {
        std::size_t want = std::max<std::size_t>(n, g_prime_cache.size() * 2 + 64);
        g_prime_cache = sieve_up_to(nth_prime_bound(want));
    }
    return g_prime_cache[n - 1];
}

BigReal von_mangoldt(u64 m, int digits) {
    if (m == 0) throw domain_error("von Mangoldt is defined for m >= 1");
    for (int k = 1; k <= 63; ++k) {
        u64 root = integer_kth_root(m, k);
        if (root < 2) break;
        u128 check = 1;
        for (int i = 0; i < k; ++i) check *= root;
        if (check == m && is_prime(root)) return ln(BigReal(static_cast<unsigned long>(root), digits));
    }
    return BigReal(digits);
}

PrimePrefix::PrimePrefix() : mode_(PrefixMode::strict) {}

PrimePrefix::PrimePrefix(std::vector<u64> primes, PrefixMode mode)
    : primes_(std::move(primes)), mode_(mode) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i]))
            throw domain_error(std::to_string(primes_[i]) + " is not prime");
        if (i > 0 && primes_[i] <= primes_[i - 1])
            throw domain_error("prefix primes must be strictly ascending");
        if (mode_ == PrefixMode::strict && primes_[i] != nth_prime(i + 1))
            throw domain_error("strict prefix must hold the first primes in order; "
                               "position " + std::to_string(i + 1) + " should be " +
                               std::to_string(nth_prime(i + 1)) + ", got " +
                               std::to_string(primes_[i]));
    }
}

PrimePrefix PrimePrefix::first_n(std::size_t n) {
    std::vector<u64> primes;
    primes.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) primes.push_back(nth_prime(i));
    return PrimePrefix(std::move(primes), PrefixMode::strict);
}

std::uint64_t PrimePrefix::largest() const {
    if (primes_.empty()) throw domain_error("empty prefix has no largest prime");
    return primes_.back();
}

std::uint64_t PrimePrefix::bertrand_bound() const {
    return primes_.empty() ? 2 : 2 * primes_.back();
}

}  // namespace zetaprime
