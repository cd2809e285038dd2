#include <doctest.h>

#include "zetaprime/zeta.hpp"

using namespace zetaprime;

namespace {

bool close_rel(const BigReal& a, const BigReal& b, long log10_tol) {
    int d = std::max(a.digits(), b.digits());
    return abs(a - b) <= abs(b) * BigReal::ten_to(log10_tol, d);
}

BigReal z(double s, int digits, ZetaRegime regime = ZetaRegime::auto_select) {
    ZetaOptions options;
    options.regime = regime;
    return zeta(BigReal::from_double(s, digits), digits, options);
}

BigReal zp(double s, int digits, ZetaRegime regime = ZetaRegime::auto_select) {
    ZetaOptions options;
    options.regime = regime;
    return zeta_prime(BigReal::from_double(s, digits), digits, options);
}

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("zeta(2) and zeta(10) match their closed forms") {
    BigReal pi = BigReal::pi(40);
    CHECK(close_rel(z(2, 40), pi * pi / 6L, -38));
    CHECK(close_rel(z(10, 40), pow(pi, 10L) / 93555L, -38));
}

TEST_CASE("zeta(100) - 1 sits between 2^-100 and 2^-99") {
    BigReal value = z(100, 61) - 1;
    CHECK(value > pow(BigReal(2L, 61), -100L));
    CHECK(value < pow(BigReal(2L, 61), -99L));
}

TEST_CASE("zeta approaches one from above as s grows") {
    // zeta(300) - 1 = 2^-300 (1 + O((2/3)^300)); at 125 digits the excess
    // keeps roughly 34 significant digits past the rounding of the sum
    BigReal excess = z(300, 125) - 1;
    BigReal leading = pow(BigReal(2L, 125), -300L);
    CHECK(abs(excess / leading - 1) <= BigReal::ten_to(-30, 20));
}

TEST_CASE("the two regimes agree near the split") {
    for (double s : {20.0, 25.0, 30.0}) {
        BigReal direct = z(s, 30, ZetaRegime::direct);
        BigReal em = z(s, 30, ZetaRegime::euler_maclaurin);
        CHECK(close_rel(direct, em, -27));
    }
}

TEST_CASE("automatic regime selection matches the explicit regimes") {
    CHECK(z(15, 30) == z(15, 30, ZetaRegime::euler_maclaurin));
    CHECK(z(25, 30) == z(25, 30, ZetaRegime::direct));
    ZetaOptions shifted;
    shifted.split = 24.0;
    CHECK(zeta(BigReal(22L, 30), 30, shifted) == z(22, 30, ZetaRegime::euler_maclaurin));
}

TEST_CASE("zeta decreases monotonically toward one") {
    BigReal previous = z(1.5, 25);
    for (double s : {2.0, 3.0, 5.0, 10.0, 30.0, 60.0}) {
        BigReal current = z(s, 25);
        CHECK(current < previous);
        CHECK(current > 1L);
        previous = current;
    }
    // past the working precision the value collapses onto one exactly
    CHECK(z(100, 25) == 1L);
}

TEST_CASE("zeta'(2) matches the frozen reference value") {
    BigReal reference =
        BigReal::from_string("-0.937548254315843753702574094568", 30);
    CHECK(close_rel(zp(2, 30), reference, -28));
}

TEST_CASE("zeta' is negative across the domain") {
    for (double s : {1.5, 3.0, 10.0, 19.0, 25.0, 60.0}) CHECK(zp(s, 25).sign() < 0);
}

TEST_CASE("zeta'(200) is dominated by -ln2 * 2^-200") {
    BigReal model = -(BigReal::ln2(80) * pow(BigReal(2L, 80), -200L));
    BigReal ratio = zp(200, 80) / model;
    CHECK(abs(ratio - 1) <= BigReal::ten_to(-30, 20));
}

TEST_CASE("zeta' agrees with an independent central difference") {
    for (double s : {3.0, 10.0, 50.0}) {
        int work = 90;
        BigReal step = BigReal::ten_to(-15, work);
        BigReal at = BigReal::from_double(s, work);
        BigReal fd = (zeta(at + step, work) - zeta(at - step, work)) / (2 * step);
        CHECK(close_rel(zp(s, 30), fd, -10));
    }
}

TEST_CASE("derivative regimes agree near the split") {
    for (double s : {18.0, 20.0, 22.0}) {
        BigReal direct = zp(s, 30, ZetaRegime::direct);
        BigReal em = zp(s, 30, ZetaRegime::euler_maclaurin);
        CHECK(close_rel(direct, em, -26));
    }
}

TEST_CASE("term budgets are enforced") {
    CHECK_THROWS_AS(z(3, 200, ZetaRegime::direct), budget_error);
    ZetaOptions tiny;
    tiny.term_budget = 10;
    CHECK_THROWS_AS(zeta(BigReal(25L, 30), 30, tiny), budget_error);
    CHECK_THROWS_AS(zp(3, 30, ZetaRegime::direct), budget_error);
    ZetaOptions invalid;
    invalid.term_budget = 0;
    CHECK_THROWS_AS(zeta(BigReal(25L, 30), 30, invalid), domain_error);
}

TEST_CASE("the domain stops at s = 1") {
    CHECK_THROWS_AS(z(1.0, 30), domain_error);
    CHECK_THROWS_AS(z(0.5, 30), domain_error);
    CHECK_THROWS_AS(z(-3.0, 30), domain_error);
    CHECK_THROWS_AS(zp(1.0, 30), domain_error);
    CHECK_NOTHROW(z(1.0001, 30));
}

TEST_CASE("Bernoulli numbers come out exactly") {
    int d = 30;
    CHECK(bernoulli_2k(0, d) == 1L);
    CHECK(close_rel(bernoulli_2k(1, d), BigReal(1L, d) / 6L, -28));
    CHECK(close_rel(bernoulli_2k(2, d), BigReal(-1L, d) / 30L, -28));
    CHECK(close_rel(bernoulli_2k(3, d), BigReal(1L, d) / 42L, -28));
    CHECK(close_rel(bernoulli_2k(4, d), BigReal(-1L, d) / 30L, -28));
    CHECK(close_rel(bernoulli_2k(5, d), BigReal(5L, d) / 66L, -28));
    CHECK(close_rel(bernoulli_2k(6, d), BigReal(-691L, d) / 2730L, -28));
    CHECK(close_rel(bernoulli_2k(7, d), BigReal(7L, d) / 6L, -28));
    CHECK_THROWS_AS(bernoulli_2k(-1, d), domain_error);
}

TEST_CASE("high-precision evaluation stays self-consistent") {
    // the same value at two precisions differs only at the lower target
    BigReal coarse = z(10, 40);
    BigReal fine = z(10, 120);
    CHECK(close_rel(coarse, fine, -37));
    BigReal coarse_d = zp(30, 40);
    BigReal fine_d = zp(30, 120);
    CHECK(close_rel(coarse_d, fine_d, -37));
}

}  // TEST_SUITE
