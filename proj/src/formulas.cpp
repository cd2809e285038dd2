#include "zetaprime/formulas.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "zetaprime/errors.hpp"

namespace zetaprime {

namespace {

void check_s_above_one(const BigReal& s, const char* who) {
    if (mpfr_cmp_si(s.raw(), 1) <= 0)
        throw domain_error(std::string(who) + " requires s > 1");
}

void check_exponent(double a) {
    if (!std::isfinite(a) || a <= 0)
        throw domain_error("formula exponent must be positive and finite");
}

// The decisive quantity must keep at least 5 digits of signal above the
// rounding floor of the working precision, or the result is noise.
void check_resolvable(const BigReal& quantity, int digits, const char* what) {
    if (quantity.sign() <= 0)
        throw precision_error(std::string(what) +
                              " lost all signal at the working precision (" +
                              std::to_string(digits) + " digits); raise digits or lower s");
    if (quantity < BigReal::ten_to(5 - static_cast<long>(digits), 20))
        throw precision_error(std::string(what) + " fell below 10^" +
                              std::to_string(5 - static_cast<long>(digits)) +
                              ", the resolvable floor at " + std::to_string(digits) +
                              " digits; raise digits or lower s");
}

BigReal scaled_s(const BigReal& s, double a, int digits, const char* who) {
    check_exponent(a);
    BigReal eff = s.with_digits(digits) * BigReal::from_double(a, digits);
    if (mpfr_cmp_si(eff.raw(), 1) <= 0)
        throw domain_error(std::string(who) + " requires a*s > 1");
    return eff;
}

}  // namespace

FormulaKind FormulaKind::main() { return {Tag::main, 1.0}; }

FormulaKind FormulaKind::power(double a) {
    check_exponent(a);
    return {Tag::power, a};
}

FormulaKind FormulaKind::difference(double a) {
    check_exponent(a);
    return {Tag::difference, a};
}

FormulaKind FormulaKind::log_ratio() { return {Tag::log_ratio, 1.0}; }

FormulaKind FormulaKind::log_derivative(double a) {
    check_exponent(a);
    return {Tag::log_derivative, a};
}

FormulaKind FormulaKind::half_prime() { return {Tag::half_prime, 1.0}; }

FormulaKind FormulaKind::from_name(const std::string& name, double a) {
    if (name == "main" || name == "logratio" || name == "halfprime") {
        if (a != 1.0)
            throw domain_error("formula '" + name + "' takes no exponent parameter");
        if (name == "main") return main();
        if (name == "logratio") return log_ratio();
        return half_prime();
    }
    if (name == "power") return power(a);
    if (name == "difference") return difference(a);
    if (name == "logderiv") return log_derivative(a);
    throw domain_error("unknown formula '" + name +
                       "'; expected main, power, difference, logratio, logderiv or "
                       "halfprime");
}

std::string FormulaKind::name() const {
    switch (tag) {
        case Tag::main: return "main";
        case Tag::power: return "power";
        case Tag::difference: return "difference";
        case Tag::log_ratio: return "logratio";
        case Tag::log_derivative: return "logderiv";
        case Tag::half_prime: return "halfprime";
    }
    return "?";
}

double FormulaKind::s_scale() const {
    switch (tag) {
        case Tag::power:
        case Tag::difference:
        case Tag::log_derivative:
            return exponent;
        default:
            return 1.0;
    }
}

BigReal main_formula(const PrimePrefix& prefix, const BigReal& s, int digits) {
    check_s_above_one(s, "main formula");
    BigReal product = q(prefix, s, digits);
    BigReal z = zeta(s, digits);
    BigReal defect = 1 - product / z;
    check_resolvable(defect, digits, "1 - Q/zeta");
    return pow(defect, -1 / s.with_digits(digits));
}

BigReal power_formula(const PrimePrefix& prefix, double a, const BigReal& s, int digits) {
    check_s_above_one(s, "power formula");
    BigReal eff = scaled_s(s, a, digits, "power formula");
    BigReal product = q(prefix, eff, digits);
    BigReal z = zeta(eff, digits);
    BigReal defect = 1 - product / z;
    check_resolvable(defect, digits, "1 - Q/zeta");
    return pow(defect, -1 / s.with_digits(digits));
}

BigReal difference_formula(const PrimePrefix& prefix, double a, const BigReal& s,
                           int digits) {
    check_s_above_one(s, "difference formula");
    BigReal eff = scaled_s(s, a, digits, "difference formula");
    BigReal gap = zeta(eff, digits) - q(prefix, eff, digits);
    check_resolvable(gap, digits, "zeta - Q");
    return pow(gap, -1 / s.with_digits(digits));
}

BigReal log_formula(const PrimePrefix& prefix, const BigReal& s, int digits) {
    check_s_above_one(s, "log formula");
    PartialProductEval ev = eval_partial_product(prefix, s, digits, true);
    BigReal z = zeta(s, digits);
    BigReal zp = zeta_prime(s, digits);
    BigReal gap = z - ev.q;  // positive: the prefix product undershoots zeta
    check_resolvable(gap, digits, "zeta - Q");
    return (zp - *ev.q_prime) / (-gap);
}

BigReal log_derivative_formula(const PrimePrefix& prefix, double a, const BigReal& s,
                               int digits) {
    check_s_above_one(s, "log-derivative formula");
    BigReal eff = scaled_s(s, a, digits, "log-derivative formula");
    PartialProductEval ev = eval_partial_product(prefix, eff, digits, true);
    BigReal z = zeta(eff, digits);
    BigReal zp = zeta_prime(eff, digits);
    BigReal inner = *ev.q_prime / ev.q - zp / z;
    check_resolvable(inner, digits, "Q'/Q - zeta'/zeta");
    return pow(inner, -1 / s.with_digits(digits));
}

BigReal half_prime_formula(const PrimePrefix& prefix, const BigReal& s, int digits) {
    check_s_above_one(s, "half-prime formula");
    PartialProductEval ev = eval_partial_product(prefix, s, digits, true);
    if (prefix.empty()) return BigReal(2L, digits);  // root is exactly 1
    BigReal zp = zeta_prime(s, digits);
    BigReal root_arg = 1 - *ev.q_prime / zp;
    check_resolvable(root_arg, digits, "1 - Q'/zeta'");
    return 2 * pow(root_arg, -1 / s.with_digits(digits));
}

LimitEvaluation evaluate_formula(const FormulaKind& kind, const PrimePrefix& prefix,
                                 const BigReal& s, int digits) {
    LimitEvaluation record{kind, prefix.size(), s.to_double(), digits, BigReal(digits),
                           std::nullopt};
    switch (kind.tag) {
        case FormulaKind::Tag::main:
            record.value = main_formula(prefix, s, digits);
            break;
        case FormulaKind::Tag::power:
            record.value = power_formula(prefix, kind.exponent, s, digits);
            break;
        case FormulaKind::Tag::difference:
            record.value = difference_formula(prefix, kind.exponent, s, digits);
            break;
        case FormulaKind::Tag::log_ratio:
            record.value = log_formula(prefix, s, digits);
            break;
        case FormulaKind::Tag::log_derivative:
            record.value = log_derivative_formula(prefix, kind.exponent, s, digits);
            break;
        case FormulaKind::Tag::half_prime:
            record.value = half_prime_formula(prefix, s, digits);
            record.raw_half = record.value / 2;
            break;
    }
    return record;
}

AdaptiveResult next_prime_adaptive(const PrimePrefix& prefix,
                                   const AdaptiveOptions& options) {
    if (!std::isfinite(options.initial_s) || options.initial_s <= 1)
        throw domain_error("adaptive search needs initial s > 1");
    if (options.max_doublings < 0 || options.max_doublings > 60)
        throw domain_error("doubling cap out of range");
    if (!(options.residual_limit > 0) || options.residual_limit > 0.5)
        throw domain_error("residual limit must lie in (0, 0.5]");
    if (options.guard_digits < 0) throw domain_error("guard digits must be non-negative");
    if (options.fixed_digits && *options.fixed_digits < 1)
        throw domain_error("fixed digit count must be positive");

    std::uint64_t bound = prefix.bertrand_bound();
    auto digits_at = [&](double s_value) {
        return options.fixed_digits ? *options.fixed_digits
                                    : required_digits(s_value, bound, options.guard_digits);
    };

    double s_value = options.initial_s;
    int evaluations = 0;
    for (int round = 0; round <= options.max_doublings; ++round, s_value *= 2) {
        int digits = digits_at(s_value);
        long rounded = 0;
        double residual = 0;
        try {
            BigReal value =
                main_formula(prefix, BigReal::from_double(s_value, digits), digits);
            ++evaluations;
            rounded = value.to_long_rounded();
            residual = abs(value - rounded).to_double();
        } catch (const precision_error&) {
            continue;  // not enough signal at this precision; escalate
        }
        if (rounded < 2 || residual >= options.residual_limit) continue;

        // Confirm: doubling s must keep the same integer, and it must be prime.
        int confirm_digits = digits_at(s_value * 2);
        long confirmed = 0;
        try {
            BigReal value = main_formula(
                prefix, BigReal::from_double(s_value * 2, confirm_digits), confirm_digits);
            ++evaluations;
            confirmed = value.to_long_rounded();
        } catch (const precision_error&) {
            continue;
        }
        if (confirmed != rounded) continue;
        if (!is_prime(static_cast<std::uint64_t>(rounded))) continue;
        if (options.strict &&
            static_cast<std::uint64_t>(rounded) != nth_prime(prefix.size() + 1))
            continue;
        return {static_cast<std::uint64_t>(rounded), s_value, digits, evaluations,
                residual};
    }
    throw escalation_error("adaptive search exhausted " +
                               std::to_string(options.max_doublings) +
                               " doublings from s = " + std::to_string(options.initial_s) +
                               " without confirming a prime after prefix of " +
                               std::to_string(prefix.size()),
                           prefix.size());
}

std::vector<std::uint64_t> prime_chain(std::size_t count, const AdaptiveOptions& options) {
    std::vector<std::uint64_t> acquired;
    acquired.reserve(count);
    while (acquired.size() < count) {
        PrimePrefix prefix(acquired, PrefixMode::strict);
        acquired.push_back(next_prime_adaptive(prefix, options).prime);
    }
    return acquired;
}

DigitsSpec DigitsSpec::automatic(int guard_digits) {
    if (guard_digits < 0) throw domain_error("guard digits must be non-negative");
    return {Mode::automatic, 0, guard_digits};
}

DigitsSpec DigitsSpec::fixed(int digits) {
    if (digits < 1) throw domain_error("fixed digit count must be positive");
    return {Mode::fixed, digits, 0};
}

SweepTable sweep(const FormulaKind& kind, const PrimePrefix& prefix,
                 const std::vector<double>& s_grid, const DigitsSpec& spec) {
    if (s_grid.empty()) throw domain_error("sweep grid is empty");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (!std::isfinite(s_grid[i])) throw domain_error("sweep grid must be finite");
        if (i > 0 && s_grid[i] <= s_grid[i - 1])
            throw domain_error("sweep grid must be strictly ascending");
    }
    if (s_grid.front() <= 1.0 || s_grid.front() * kind.s_scale() <= 1.0)
        throw domain_error("sweep grid must start above 1 (after exponent scaling)");

    SweepTable table{kind, prefix.size(), {}};
    table.samples.reserve(s_grid.size());
    for (double s_value : s_grid) {
        int digits = spec.mode == DigitsSpec::Mode::fixed
                         ? spec.fixed_digits
                         : required_digits(s_value * kind.s_scale(),
                                           prefix.bertrand_bound(), spec.guard_digits);
        SweepSample sample{s_value, digits, std::nullopt, "ok"};
        try {
            sample.value =
                evaluate_formula(kind, prefix, BigReal::from_double(s_value, digits), digits)
                    .value;
        } catch (const precision_error&) {
            sample.status = "precision_insufficient";
        } catch (const budget_error&) {
            sample.status = "term_budget_exceeded";
        }
        table.samples.push_back(std::move(sample));
    }
    return table;
}

BigReal asymptotic_check(const BigReal& s, int digits) {
    check_s_above_one(s, "asymptotic check");
    BigReal ratio = -(zeta_prime(s, digits) / zeta(s, digits));
    check_resolvable(ratio, digits, "-zeta'/zeta");
    return pow(ratio, -1 / s.with_digits(digits));
}

BigReal mangoldt_sum(const BigReal& s, std::uint64_t n_max, int digits) {
    check_s_above_one(s, "von Mangoldt sum");
    if (n_max < 1) throw domain_error("summation bound must be at least 1");
    if (n_max == 1) return BigReal(digits);
    std::vector<std::uint64_t> primes = sieve_up_to(n_max);
    int work = digits + 12;
    BigReal s_work = s.with_digits(work);
    BigReal minus_s = -s_work;
    BigReal acc(work);
    for (std::uint64_t p : primes) {
        BigReal weight = ln(BigReal(static_cast<unsigned long>(p), work));
        for (unsigned __int128 power = p; power <= n_max; power *= p) {
            BigReal base(static_cast<unsigned long>(power), work);
            acc = acc + weight * pow(base, minus_s);
        }
    }
    return acc.with_digits(digits);
}

BigReal mangoldt_identity_check(const BigReal& s, std::uint64_t n_max, int digits) {
    BigReal series = -(zeta_prime(s, digits) / zeta(s, digits));
    return abs(series - mangoldt_sum(s, n_max, digits));
}

BigReal mangoldt_tail_bound(const BigReal& s, std::uint64_t n_max, int digits) {
    check_s_above_one(s, "von Mangoldt tail bound");
    if (n_max < 2) throw domain_error("tail bound needs a cutoff of at least 2");
    BigReal s_d = s.with_digits(digits);
    BigReal cutoff(static_cast<unsigned long>(n_max), digits);
    return 2 * ln(cutoff) * pow(cutoff, 1 - s_d) / (s_d - 1);
}

}  // namespace zetaprime
