#include "zetaprime/zeta.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "zetaprime/errors.hpp"

namespace zetaprime {

namespace {

struct Mpz {
    mpz_t v;
    Mpz() { mpz_init(v); }
    Mpz(const Mpz&) = delete;
    Mpz& operator=(const Mpz&) = delete;
    Mpz(Mpz&& other) noexcept {
        mpz_init(v);
        mpz_swap(v, other.v);
    }
    Mpz& operator=(Mpz&& other) noexcept {
        mpz_swap(v, other.v);
        return *this;
    }
    ~Mpz() { mpz_clear(v); }
};

struct Mpq {
    mpq_t v;
    Mpq() { mpq_init(v); }
    Mpq(const Mpq&) = delete;
    Mpq& operator=(const Mpq&) = delete;
    Mpq(Mpq&& other) noexcept {
        mpq_init(v);
        mpq_swap(v, other.v);
    }
    Mpq& operator=(Mpq&& other) noexcept {
        mpq_swap(v, other.v);
        return *this;
    }
    ~Mpq() { mpq_clear(v); }
};

std::mutex g_bernoulli_mutex;
std::vector<Mpq> g_bernoulli;  // g_bernoulli[k] holds B_2k exactly

// Grow the cache to cover B_2k for k <= upto using tangent numbers:
//   T_1 = 1,  T_k = (k-1) T_{k-1},  then the in-place pass below leaves the
//   k-th tangent number in T[k], and B_2k = (-1)^(k-1) 2k T_k / (2^4k - 2^2k).
void extend_bernoulli_locked(std::size_t upto) {
    if (g_bernoulli.size() > upto) return;
    std::size_t n = std::max<std::size_t>({upto, g_bernoulli.size() * 2, 8});
    std::vector<Mpz> t(n + 1);
    mpz_set_ui(t[1].v, 1);
    for (std::size_t k = 2; k <= n; ++k)
        mpz_mul_ui(t[k].v, t[k - 1].v, static_cast<unsigned long>(k - 1));
    Mpz tmp;
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t j = k; j <= n; ++j) {
            mpz_mul_ui(tmp.v, t[j - 1].v, static_cast<unsigned long>(j - k));
            mpz_mul_ui(t[j].v, t[j].v, static_cast<unsigned long>(j - k + 2));
            mpz_add(t[j].v, t[j].v, tmp.v);
        }
    }
    std::vector<Mpq> fresh(n + 1);
    mpq_set_ui(fresh[0].v, 1, 1);  // B_0
    Mpz num, den, pow2;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_mul_ui(num.v, t[k].v, static_cast<unsigned long>(2 * k));
        if (k % 2 == 0) mpz_neg(num.v, num.v);
        mpz_set_ui(den.v, 0);
        mpz_setbit(den.v, 4 * k);
        mpz_set_ui(pow2.v, 0);
        mpz_setbit(pow2.v, 2 * k);
        mpz_sub(den.v, den.v, pow2.v);
        mpq_set_num(fresh[k].v, num.v);
        mpq_set_den(fresh[k].v, den.v);
        mpq_canonicalize(fresh[k].v);
    }
    g_bernoulli = std::move(fresh);
}

int slack_for(long terms) {
    return 12 + static_cast<int>(std::log10(static_cast<double>(terms) + 2.0)) + 1;
}

void check_s_domain(const BigReal& s) {
    if (mpfr_cmp_si(s.raw(), 1) <= 0)
        throw domain_error("zeta evaluation requires s > 1");
}

void check_options(const ZetaOptions& options) {
    if (options.term_budget < 1) throw domain_error("term budget must be positive");
}

ZetaRegime pick_regime(const BigReal& s, const ZetaOptions& options) {
    if (options.regime != ZetaRegime::auto_select) return options.regime;
    return s.to_double() >= options.split ? ZetaRegime::direct : ZetaRegime::euler_maclaurin;
}

// Smallest N whose integral tail N^(1-s)/(s-1) is at most 10^-(digits+2).
long direct_term_count(double s, int digits, long budget) {
    double log10_needed = (digits + 2 - std::log10(s - 1.0)) / (s - 1.0);
    if (log10_needed > std::log10(static_cast<double>(budget)))
        throw budget_error("direct zeta sum would exceed the term budget at s = " +
                           std::to_string(s));
    long n = 2;
    if (log10_needed > std::log10(2.0))
        n = static_cast<long>(std::ceil(std::pow(10.0, log10_needed)));
    while ((1.0 - s) * std::log10(static_cast<double>(n)) - std::log10(s - 1.0) >
           -static_cast<double>(digits + 2)) {
        ++n;
        if (n > budget)
            throw budget_error("direct zeta sum would exceed the term budget");
    }
    return n;
}

BigReal zeta_direct(const BigReal& s, int digits, const ZetaOptions& options) {
    long count = direct_term_count(s.to_double(), digits, options.term_budget);
    int work = digits + slack_for(count);
    BigReal s_work = s.with_digits(work);
    BigReal minus_s = -s_work;
    BigReal acc(work);
    BigReal term(work);
    for (long n = count; n >= 2; --n) {
        mpfr_set_si(term.raw(), n, MPFR_RNDN);
        mpfr_pow(term.raw(), term.raw(), minus_s.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
    }
    acc = acc + 1;
    BigReal tail = pow(BigReal(count, work), 1 - s_work) / (s_work - 1);
    return (acc + tail).with_digits(digits);
}

BigReal zeta_euler_maclaurin(const BigReal& s, int digits, const ZetaOptions& options) {
    long base_count = std::max<long>(50, digits);
    if (base_count > options.term_budget)
        throw budget_error("Euler-Maclaurin base sum exceeds the term budget");
    int work = digits + slack_for(base_count) + 6;
    BigReal s_work = s.with_digits(work);
    BigReal minus_s = -s_work;
    BigReal acc(work);
    BigReal term(work);
    for (long n = base_count - 1; n >= 1; --n) {
        mpfr_set_si(term.raw(), n, MPFR_RNDN);
        mpfr_pow(term.raw(), term.raw(), minus_s.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
    }
    BigReal edge(base_count, work);
    acc = acc + pow(edge, 1 - s_work) / (s_work - 1);  // integral correction
    acc = acc + pow(edge, minus_s) / 2;                // midpoint correction

    // Bernoulli corrections  B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k);
    // stop when the next term is small enough that the remainder (at most
    // twice the first omitted term) is below 10^-(digits+2).  zeta > 1 on
    // this domain, so the absolute cut doubles as a relative one.
    BigReal threshold = BigReal::ten_to(-static_cast<long>(digits) - 2, 20) / 2;
    BigReal factor = s_work * pow(edge, -s_work - 1) / 2;
    BigReal inv_edge_sq = 1 / (edge * edge);
    BigReal prev_magnitude(20);
    long max_k = 2 * base_count + 4;
    for (long k = 1;; ++k) {
        BigReal correction = bernoulli_2k(static_cast<int>(k), work) * factor;
        BigReal magnitude = abs(correction);
        if (magnitude <= threshold) break;
        if (k > max_k || (k > 1 && magnitude > prev_magnitude))
            throw budget_error(
                "Euler-Maclaurin corrections failed to reach the target at s = " +
                std::to_string(s.to_double()));
        acc = acc + correction;
        prev_magnitude = magnitude.with_digits(20);
        factor = factor * (s_work + (2 * k - 1)) * (s_work + 2 * k) * inv_edge_sq /
                 ((2 * k + 1) * (2 * k + 2));
    }
    return acc.with_digits(digits);
}

// Smallest N with (ln N/(s-1) + (s-1)^-2) N^(1-s) below the absolute target
// 10^-(digits+2) * ln2 * 2^-s / 2, a safe floor for |zeta'(s)|.
long derivative_term_count(double s, int digits, long budget) {
    double target = -(digits + 2.0) + std::log10(0.5 * std::log(2.0)) -
                    s * std::log10(2.0);
    auto tail_log10 = [&](double n) {
        return std::log10(std::log(n) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))) +
               (1.0 - s) * std::log10(n);
    };
    long lo = 2;
    if (tail_log10(static_cast<double>(lo)) <= target) return lo;
    long hi = lo;
    while (tail_log10(static_cast<double>(hi)) > target) {
        hi *= 2;
        if (hi > budget)
            throw budget_error("zeta' sum would exceed the term budget at s = " +
                               std::to_string(s));
    }
    lo = hi / 2;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (tail_log10(static_cast<double>(mid)) > target)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

BigReal zeta_prime_direct(const BigReal& s, int digits, const ZetaOptions& options) {
    long count = derivative_term_count(s.to_double(), digits, options.term_budget);
    int work = digits + slack_for(count);
    BigReal s_work = s.with_digits(work);
    BigReal minus_s = -s_work;
    BigReal acc(work);
    BigReal term(work), log_n(work);
    for (long n = count; n >= 2; --n) {
        mpfr_set_si(term.raw(), n, MPFR_RNDN);
        mpfr_log(log_n.raw(), term.raw(), MPFR_RNDN);
        mpfr_pow(term.raw(), term.raw(), minus_s.raw(), MPFR_RNDN);
        mpfr_mul(term.raw(), term.raw(), log_n.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
    }
    return (-acc).with_digits(digits);
}

// Central finite difference at step 10^-digits, evaluated at triple the
// working precision so the cancellation still leaves `digits` good digits.
BigReal zeta_prime_difference(const BigReal& s, int digits, const ZetaOptions& options) {
    int work = 3 * digits;
    BigReal step = BigReal::ten_to(-static_cast<long>(digits), work);
    BigReal s_work = s.with_digits(work);
    if (!((s_work - step) > 1L))
        throw domain_error("zeta' step crosses s = 1; raise digits or move s");
    BigReal upper = zeta(s_work + step, work, options);
    BigReal lower = zeta(s_work - step, work, options);
    return ((upper - lower) / (2 * step)).with_digits(digits);
}

}  // namespace

BigReal bernoulli_2k(int k, int digits) {
    if (k < 0) throw domain_error("Bernoulli index must be non-negative");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli_locked(static_cast<std::size_t>(k));
    BigReal result(digits);
    mpfr_set_q(result.raw(), g_bernoulli[static_cast<std::size_t>(k)].v, MPFR_RNDN);
    return result;
}

BigReal zeta(const BigReal& s, int digits, const ZetaOptions& options) {
    check_s_domain(s);
    check_options(options);
    switch (pick_regime(s, options)) {
        case ZetaRegime::direct:
            return zeta_direct(s, digits, options);
        default:
            return zeta_euler_maclaurin(s, digits, options);
    }
}

BigReal zeta_prime(const BigReal& s, int digits, const ZetaOptions& options) {
    check_s_domain(s);
    check_options(options);
    switch (pick_regime(s, options)) {
        case ZetaRegime::direct:
            return zeta_prime_direct(s, digits, options);
        default:
            return zeta_prime_difference(s, digits, options);
    }
}

}  // namespace zetaprime
