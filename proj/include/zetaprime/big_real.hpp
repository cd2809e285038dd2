#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "zetaprime/errors.hpp"

namespace zetaprime {

/* Arbitrary-precision real number backed by MPFR.
 *
 * Precision is tracked in decimal digits D; the underlying mantissa holds
 * ceil(D * log2(10)) bits.  Every operation rounds to the precision of its
 * result (the wider of the operands) with round-to-nearest, ties to even,
 * so each step carries a relative error of at most 10^(1-D).  Values are
 * immutable: arithmetic returns fresh objects and never mutates operands,
 * which keeps concurrent reads of shared values safe.
 */
class BigReal {
public:
    enum class Rounding { half_even, toward_zero };

    explicit BigReal(int digits);                 // zero at the given precision
    BigReal(long value, int digits);
    BigReal(unsigned long value, int digits);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal from_string(std::string_view text, int digits);
    static BigReal from_double(double value, int digits);
    static BigReal ten_to(long exponent, int digits);   // exact power of ten
    static BigReal pi(int digits);
    static BigReal ln2(int digits);

    int digits() const { return digits_; }
    mpfr_prec_t precision_bits() const;
    BigReal with_digits(int digits) const;        // re-round to a new precision

    bool is_zero() const;
    int sign() const;                             // -1, 0, +1
    double to_double() const;
    long to_long_rounded() const;                 // nearest integer, ties to even
    BigReal rounded_to_integer() const;

    // Fixed-point rendering with the requested count of fractional digits.
    // half_even rounds the last digit (ties to even); toward_zero truncates.
    std::string to_decimal(int fraction_digits,
                           Rounding mode = Rounding::half_even) const;
    // Plain-decimal rendering with the requested count of significant digits
    // (round half even).  Never uses exponent notation.
    std::string to_significant(int significant_digits) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator+(long a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator*(long a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator/(long a, const BigReal& b);

    friend BigReal pow(const BigReal& base, const BigReal& exponent);
    friend BigReal pow(const BigReal& base, long exponent);
    friend BigReal ln(const BigReal& x);
    friend BigReal exp(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal abs(const BigReal& x);

    friend bool operator==(const BigReal& a, const BigReal& b);
    friend std::strong_ordering operator<=>(const BigReal& a, const BigReal& b);
    friend bool operator==(const BigReal& a, long b);
    friend std::strong_ordering operator<=>(const BigReal& a, long b);

    // Raw handle for kernels in this library; not part of the stable surface.
    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

private:
    mpfr_t value_;
    int digits_;
};

}  // namespace zetaprime
