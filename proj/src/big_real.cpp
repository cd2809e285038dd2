#include "zetaprime/big_real.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <cstring>
#include <string>

namespace zetaprime {

namespace {

constexpr long double kLog2Of10 = 3.32192809488736234787031942948939L;

void check_digits(int digits) {
    if (digits < 1 || digits > 50'000'000)
        throw domain_error("precision must be between 1 and 5e7 decimal digits, got " +
                           std::to_string(digits));
}

mpfr_prec_t bits_for(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<long double>(digits) * kLog2Of10));
}

std::string take_mpz_string(mpz_srcptr z) {
    char* raw = mpz_get_str(nullptr, 10, z);
    std::string out(raw);
    void (*free_func)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &free_func);
    free_func(raw, std::strlen(raw) + 1);
    return out;
}

}  // namespace

BigReal::BigReal(int digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(value_, bits_for(digits));
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(value_, bits_for(digits));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(unsigned long value, int digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(value_, bits_for(digits));
    mpfr_set_ui(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
    value_[0] = other.value_[0];
    mpfr_init2(other.value_, MPFR_PREC_MIN);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::from_string(std::string_view text, int digits) {
    check_digits(digits);
    // Plain decimal only: optional sign, digits, optional point, digits.
    std::size_t i = 0;
    bool any_digit = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            any_digit = true;
        }
    }
    if (!any_digit || i != text.size())
        throw parse_error("not a plain decimal literal: '" + std::string(text) + "'");
    BigReal result(digits);
    std::string owned(text);
    mpfr_set_str(result.value_, owned.c_str(), 10, MPFR_RNDN);
    return result;
}

BigReal BigReal::from_double(double value, int digits) {
    check_digits(digits);
    if (!std::isfinite(value)) throw domain_error("value must be finite");
    BigReal result(digits);
    mpfr_set_d(result.value_, value, MPFR_RNDN);
    return result;
}

BigReal BigReal::ten_to(long exponent, int digits) {
    check_digits(digits);
    BigReal result(digits);
    if (exponent >= 0) {
        mpfr_ui_pow_ui(result.value_, 10, static_cast<unsigned long>(exponent), MPFR_RNDN);
    } else {
        mpfr_ui_pow_ui(result.value_, 10, static_cast<unsigned long>(-exponent), MPFR_RNDN);
        mpfr_ui_div(result.value_, 1, result.value_, MPFR_RNDN);
    }
    return result;
}

BigReal BigReal::pi(int digits) {
    check_digits(digits);
    BigReal result(digits);
    mpfr_const_pi(result.value_, MPFR_RNDN);
    return result;
}

BigReal BigReal::ln2(int digits) {
    check_digits(digits);
    BigReal result(digits);
    mpfr_const_log2(result.value_, MPFR_RNDN);
    return result;
}

mpfr_prec_t BigReal::precision_bits() const { return mpfr_get_prec(value_); }

BigReal BigReal::with_digits(int digits) const {
    check_digits(digits);
    BigReal result(digits);
    mpfr_set(result.value_, value_, MPFR_RNDN);
    return result;
}

bool BigReal::is_zero() const { return mpfr_zero_p(value_) != 0; }

int BigReal::sign() const { return mpfr_sgn(value_); }

double BigReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

long BigReal::to_long_rounded() const {
    mpfr_t rounded;
    mpfr_init2(rounded, mpfr_get_prec(value_));
    mpfr_rint(rounded, value_, MPFR_RNDN);
    bool fits = mpfr_fits_slong_p(rounded, MPFR_RNDN) != 0;
    long result = fits ? mpfr_get_si(rounded, MPFR_RNDN) : 0;
    mpfr_clear(rounded);
    if (!fits) throw domain_error("value does not fit in a long");
    return result;
}

BigReal BigReal::rounded_to_integer() const {
    BigReal result(digits_);
    mpfr_rint(result.value_, value_, MPFR_RNDN);
    return result;
}

std::string BigReal::to_decimal(int fraction_digits, Rounding mode) const {
    if (fraction_digits < 0 || fraction_digits > 10'000'000)
        throw domain_error("fraction digit count out of range");
    // Scale by 10^k exactly, round to an integer, then print that integer.
    mpfr_prec_t scale_bits = bits_for(fraction_digits) + 8;
    mpfr_t scale, scaled;
    mpfr_init2(scale, scale_bits);
    mpfr_init2(scaled, mpfr_get_prec(value_) + scale_bits);
    mpfr_ui_pow_ui(scale, 10, static_cast<unsigned long>(fraction_digits), MPFR_RNDN);
    mpfr_mul(scaled, value_, scale, MPFR_RNDN);
    mpfr_rint(scaled, scaled, mode == Rounding::half_even ? MPFR_RNDN : MPFR_RNDZ);
    mpz_t as_int;
    mpz_init(as_int);
    mpfr_get_z(as_int, scaled, MPFR_RNDN);
    std::string body = take_mpz_string(as_int);
    mpz_clear(as_int);
    mpfr_clear(scaled);
    mpfr_clear(scale);

    bool negative = !body.empty() && body[0] == '-';
    std::string digits_part = negative ? body.substr(1) : body;
    if (fraction_digits > 0) {
        if (digits_part.size() <= static_cast<std::size_t>(fraction_digits))
            digits_part.insert(0, fraction_digits + 1 - digits_part.size(), '0');
        digits_part.insert(digits_part.size() - fraction_digits, ".");
    }
    bool all_zero = digits_part.find_first_of("123456789") == std::string::npos;
    return (negative && !all_zero) ? "-" + digits_part : digits_part;
}

std::string BigReal::to_significant(int significant_digits) const {
    if (significant_digits < 1 || significant_digits > 10'000'000)
        throw domain_error("significant digit count out of range");
    if (is_zero()) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10,
                             static_cast<std::size_t>(significant_digits), value_,
                             MPFR_RNDN);
    std::string body(raw);
    mpfr_free_str(raw);
    bool negative = body[0] == '-';
    std::string mantissa = negative ? body.substr(1) : body;
    // Value is 0.mantissa * 10^exp10; lay the point into a plain decimal.
    std::string out;
    if (exp10 >= static_cast<mpfr_exp_t>(mantissa.size())) {
        out = mantissa + std::string(exp10 - mantissa.size(), '0');
    } else if (exp10 > 0) {
        out = mantissa;
        out.insert(exp10, ".");
    } else {
        out = "0." + std::string(-exp10, '0') + mantissa;
    }
    return negative ? "-" + out : out;
}

namespace {

using TernaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigReal binary_op(const BigReal& a, const BigReal& b, TernaryOp op) {
    BigReal result(std::max(a.digits(), b.digits()));
    op(result.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return result;
}

}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary_op(a, b, mpfr_mul); }

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    return binary_op(a, b, mpfr_div);
}

BigReal operator-(const BigReal& a) {
    BigReal result(a.digits());
    mpfr_neg(result.raw(), a.raw(), MPFR_RNDN);
    return result;
}

BigReal operator+(const BigReal& a, long b) {
    BigReal result(a.digits());
    mpfr_add_si(result.raw(), a.raw(), b, MPFR_RNDN);
    return result;
}
BigReal operator+(long a, const BigReal& b) { return b + a; }

BigReal operator-(const BigReal& a, long b) {
    BigReal result(a.digits());
    mpfr_sub_si(result.raw(), a.raw(), b, MPFR_RNDN);
    return result;
}
BigReal operator-(long a, const BigReal& b) {
    BigReal result(b.digits());
    mpfr_si_sub(result.raw(), a, b.raw(), MPFR_RNDN);
    return result;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal result(a.digits());
    mpfr_mul_si(result.raw(), a.raw(), b, MPFR_RNDN);
    return result;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
    if (b == 0) throw domain_error("division by zero");
    BigReal result(a.digits());
    mpfr_div_si(result.raw(), a.raw(), b, MPFR_RNDN);
    return result;
}
BigReal operator/(long a, const BigReal& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    BigReal result(b.digits());
    mpfr_si_div(result.raw(), a, b.raw(), MPFR_RNDN);
    return result;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
    if (base.sign() < 0 && !mpfr_integer_p(exponent.raw()))
        throw domain_error("negative base with non-integer exponent");
    if (base.is_zero() && exponent.sign() < 0)
        throw domain_error("zero base with negative exponent");
    return binary_op(base, exponent, mpfr_pow);
}

BigReal pow(const BigReal& base, long exponent) {
    if (base.is_zero() && exponent < 0)
        throw domain_error("zero base with negative exponent");
    BigReal result(base.digits());
    mpfr_pow_si(result.raw(), base.raw(), exponent, MPFR_RNDN);
    return result;
}

BigReal ln(const BigReal& x) {
    if (x.sign() <= 0) throw domain_error("ln requires a positive argument");
    BigReal result(x.digits());
    mpfr_log(result.raw(), x.raw(), MPFR_RNDN);
    return result;
}

BigReal exp(const BigReal& x) {
    BigReal result(x.digits());
    mpfr_exp(result.raw(), x.raw(), MPFR_RNDN);
    return result;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw domain_error("sqrt requires a non-negative argument");
    BigReal result(x.digits());
    mpfr_sqrt(result.raw(), x.raw(), MPFR_RNDN);
    return result;
}

BigReal abs(const BigReal& x) {
    BigReal result(x.digits());
    mpfr_abs(result.raw(), x.raw(), MPFR_RNDN);
    return result;
}

bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.raw(), b.raw()) != 0;
}

std::strong_ordering operator<=>(const BigReal& a, const BigReal& b) {
    int c = mpfr_cmp(a.raw(), b.raw());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

std::strong_ordering operator<=>(const BigReal& a, long b) {
    int c = mpfr_cmp_si(a.raw(), b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace zetaprime
