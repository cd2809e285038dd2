#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetaprime/big_real.hpp"
#include "zetaprime/euler_product.hpp"
#include "zetaprime/precision.hpp"
#include "zetaprime/primes.hpp"
#include "zetaprime/zeta.hpp"

namespace zetaprime {

/* Limit formulas recovering the next prime after a known prefix.
 *
 * With Q_n the finite Euler product over the first n primes, the ratio
 * Q_n(s)/zeta(s) tends to 1 as s grows and its defect is dominated by the
 * next prime:  1 - Q_n(s)/zeta(s) ~ p_{n+1}^(-s).  Undoing the power gives
 * the family below.  All evaluators raise precision_error when the decisive
 * cancellation leaves fewer than 5 guard digits at the working precision.
 *
 *   main:            (1 - Q_n(s)/zeta(s))^(-1/s)                  -> p
 *   power(a):        (1 - Q_n(as)/zeta(as))^(-1/s)                -> p^a
 *   difference(a):   (zeta(as) - Q_n(as))^(-1/s)                  -> p^a
 *   log_ratio:       -(Q_n'(s) - zeta'(s)) / (Q_n(s) - zeta(s))   -> ln p
 *   log_derivative(a): (Q_n'/Q_n - zeta'/zeta)(as)^(-1/s)         -> p^a
 *   half_prime:      2 (1 - Q_n'(s)/zeta'(s))^(-1/s)              -> p
 *
 * half_prime converges to the prime through the doubling; the undoubled
 * root is kept in the evaluation record.
 */
struct FormulaKind {
    enum class Tag { main, power, difference, log_ratio, log_derivative, half_prime };

    Tag tag = Tag::main;
    double exponent = 1.0;  // the a parameter where applicable

    static FormulaKind main();
    static FormulaKind power(double a);
    static FormulaKind difference(double a);
    static FormulaKind log_ratio();
    static FormulaKind log_derivative(double a);
    static FormulaKind half_prime();
    static FormulaKind from_name(const std::string& name, double a);

    std::string name() const;
    double s_scale() const;  // multiplier applied to s inside the formula
};

struct LimitEvaluation {
    FormulaKind kind;
    std::size_t n;
    double s;
    int digits;
    BigReal value;
    std::optional<BigReal> raw_half;  // undoubled half_prime root
};

BigReal main_formula(const PrimePrefix& prefix, const BigReal& s, int digits);
BigReal power_formula(const PrimePrefix& prefix, double a, const BigReal& s, int digits);
BigReal difference_formula(const PrimePrefix& prefix, double a, const BigReal& s,
                           int digits);
BigReal log_formula(const PrimePrefix& prefix, const BigReal& s, int digits);
BigReal log_derivative_formula(const PrimePrefix& prefix, double a, const BigReal& s,
                               int digits);
BigReal half_prime_formula(const PrimePrefix& prefix, const BigReal& s, int digits);

LimitEvaluation evaluate_formula(const FormulaKind& kind, const PrimePrefix& prefix,
                                 const BigReal& s, int digits);

/* Adaptive extraction: evaluate main at s, round to the nearest integer,
 * and accept once the residual is small, the rounding is stable under
 * doubling s, and the integer is prime (strict mode also demands it is the
 * true next prime).  Otherwise double s, up to max_doublings times.
 */
struct AdaptiveOptions {
    double initial_s = 50.0;
    int max_doublings = 8;
    int guard_digits = 30;
    double residual_limit = 0.25;
    bool strict = true;
    std::optional<int> fixed_digits;  // pin working digits instead of the policy
};

struct AdaptiveResult {
    std::uint64_t prime;
    double s_final;
    int digits_final;
    int evaluations;  // main-formula evaluations spent, confirmations included
    double residual;  // |value - prime| at s_final
};

AdaptiveResult next_prime_adaptive(const PrimePrefix& prefix,
                                   const AdaptiveOptions& options = {});

// Repeated adaptive extraction starting from the empty prefix; returns the
// first `count` primes.  Escalation failures carry the index reached.
std::vector<std::uint64_t> prime_chain(std::size_t count,
                                       const AdaptiveOptions& options = {});

struct DigitsSpec {
    enum class Mode { automatic, fixed };
    Mode mode = Mode::automatic;
    int fixed_digits = 0;
    int guard_digits = 30;

    static DigitsSpec automatic(int guard_digits = 30);
    static DigitsSpec fixed(int digits);
};

struct SweepSample {
    double s;
    int digits;
    std::optional<BigReal> value;  // absent when the point failed
    std::string status;            // "ok", "precision_insufficient", ...
};

struct SweepTable {
    FormulaKind kind;
    std::size_t n;
    std::vector<SweepSample> samples;
};

// Evaluate one formula over an ascending grid of s values.  Points that run
// out of precision or budget are recorded with a status instead of throwing.
SweepTable sweep(const FormulaKind& kind, const PrimePrefix& prefix,
                 const std::vector<double>& s_grid, const DigitsSpec& spec = {});

// (-zeta'(s)/zeta(s))^(-1/s), which tends to 2: the von Mangoldt series is
// dominated by its first term ln(2) 2^-s.
BigReal asymptotic_check(const BigReal& s, int digits);

// sum_{m <= n_max} Lambda(m) m^-s.
BigReal mangoldt_sum(const BigReal& s, std::uint64_t n_max, int digits);

// Residual |(-zeta'/zeta)(s) - mangoldt_sum(s, n_max)|.
BigReal mangoldt_identity_check(const BigReal& s, std::uint64_t n_max, int digits);

// Tail estimate 2 ln(N) N^(1-s)/(s-1) dominating the dropped terms (s >= 2).
BigReal mangoldt_tail_bound(const BigReal& s, std::uint64_t n_max, int digits);

}  // namespace zetaprime
