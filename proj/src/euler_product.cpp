#include "zetaprime/euler_product.hpp"

#include <cmath>
#include <string>

#include "zetaprime/errors.hpp"

namespace zetaprime {

namespace {

void check_product_domain(const BigReal& s) {
    if (s.sign() <= 0)
        throw domain_error("Euler product factors require s > 0");
}

int slack_for(std::size_t factors) {
    return 10 + static_cast<int>(std::log10(static_cast<double>(factors) + 2.0)) + 1;
}

}  // namespace

PartialProductEval eval_partial_product(const PrimePrefix& prefix, const BigReal& s,
                                        int digits, bool with_derivative) {
    check_product_domain(s);
    int work = digits + slack_for(prefix.size());
    BigReal s_work = s.with_digits(work);
    BigReal minus_s = -s_work;
    BigReal product(1L, work);
    BigReal derivative_sum(work);  // sum of -ln(p) p^-s / (1 - p^-s)
    for (std::uint64_t p : prefix.primes()) {
        BigReal base(static_cast<unsigned long>(p), work);
        BigReal p_pow = pow(base, minus_s);
        BigReal denom = 1 - p_pow;
        product = product / denom;
        if (with_derivative)
            derivative_sum = derivative_sum - ln(base) * p_pow / denom;
    }
    PartialProductEval result{prefix.size(), s.with_digits(digits), digits,
                              product.with_digits(digits), std::nullopt};
    if (with_derivative) {
        if (prefix.empty())
            result.q_prime = BigReal(digits);  // exactly zero
        else
            result.q_prime = (product * derivative_sum).with_digits(digits);
    }
    return result;
}

BigReal q(const PrimePrefix& prefix, const BigReal& s, int digits) {
    return eval_partial_product(prefix, s, digits, false).q;
}

BigReal q_prime(const PrimePrefix& prefix, const BigReal& s, int digits) {
    return *eval_partial_product(prefix, s, digits, true).q_prime;
}

BigReal epsilon_tail(std::size_t first_index, const BigReal& s, std::size_t count,
                     int digits) {
    check_product_domain(s);
    if (first_index == 0) throw domain_error("prime indices are 1-based");
    if (count == 0) return BigReal(1L, digits);
    int work = digits + slack_for(count);
    BigReal s_work = s.with_digits(work);
    BigReal minus_s = -s_work;
    BigReal product(1L, work);
    for (std::size_t j = first_index; j < first_index + count; ++j) {
        BigReal base(static_cast<unsigned long>(nth_prime(j)), work);
        product = product / (1 - pow(base, minus_s));
    }
    return product.with_digits(digits);
}

}  // namespace zetaprime
