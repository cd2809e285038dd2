#include <doctest.h>

#include <vector>

#include "zetaprime/formulas.hpp"

using namespace zetaprime;

namespace {

bool close_rel(const BigReal& a, const BigReal& b, long log10_tol) {
    int d = std::max(a.digits(), b.digits());
    return abs(a - b) <= abs(b) * BigReal::ten_to(log10_tol, d);
}

BigReal run_main(int n, double s) {
    PrimePrefix prefix = PrimePrefix::first_n(n);
    int digits = required_digits(s, prefix.bertrand_bound(), 30);
    return main_formula(prefix, BigReal::from_double(s, digits), digits);
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("the main formula reproduces reference values at s = 10") {
    struct Row {
        int n;
        const char* value;
    };
    const Row rows[] = {
        {0, "1.996546424130332867034"}, {1, "2.998128944738979018288"},
        {2, "4.982816482987932600283"}, {3, "6.990872151877531052572"},
        {4, "10.79590425379440916705"}, {5, "12.88285820990434544834"},
        {6, "16.45469003649236932791"}, {7, "18.70043242956335847242"},
        {8, "22.65364920892418958825"}, {9, "27.56026880213141731723"},
    };
    for (const Row& row : rows) {
        BigReal expected = BigReal::from_string(row.value, 40);
        CHECK_MESSAGE(close_rel(run_main(row.n, 10), expected, -18), "row ", row.n);
    }
}

TEST_CASE("the main formula reproduces reference values at s = 100") {
    struct Row {
        int n;
        const char* value;
    };
    const Row rows[] = {
        {2, "4.9999999999999998781"},  {4, "10.999999993885992627"},
        {5, "12.999999999999709335"},  {6, "16.999997488242396208"},
        {7, "18.999999999042078119"},  {8, "22.999999999980263841"},
        {9, "28.999632082761238282"},
    };
    for (const Row& row : rows) {
        BigReal expected = BigReal::from_string(row.value, 40);
        CHECK_MESSAGE(close_rel(run_main(row.n, 100), expected, -18), "row ", row.n);
    }
}

TEST_CASE("the estimate approaches the target prime from below") {
    for (int n = 0; n <= 9; ++n) {
        long p = static_cast<long>(nth_prime(n + 1));
        BigReal coarse = run_main(n, 10);
        CHECK(coarse < p);
        CHECK(coarse > p - BigReal::from_string("1.5", 20));
        CHECK(run_main(n, 100).to_long_rounded() == p);
    }
}

TEST_CASE("doubling s strictly tightens the estimate") {
    for (int n = 0; n <= 9; ++n) {
        long p = static_cast<long>(nth_prime(n + 1));
        BigReal previous_gap(20);
        bool first = true;
        for (double s : {10.0, 20.0, 40.0, 80.0}) {
            BigReal gap = abs(run_main(n, s) - p);
            if (!first) CHECK(gap < previous_gap);
            previous_gap = gap;
            first = false;
        }
    }
}

TEST_CASE("the power formula with unit exponent collapses to the main formula") {
    PrimePrefix prefix = PrimePrefix::first_n(2);
    BigReal s(40L, 70);
    CHECK(power_formula(prefix, 1.0, s, 70) == main_formula(prefix, s, 70));
}

TEST_CASE("the power formula extracts roots and powers of the prime") {
    // exponent 1/2 at s = 400 probes the square root of two
    BigReal root = power_formula(PrimePrefix(), 0.5, BigReal(400L, 151), 151);
    BigReal sqrt2 = sqrt(BigReal(2L, 151));
    CHECK(abs(root - sqrt2) <= BigReal::ten_to(-9, 20));

    BigReal tighter = power_formula(PrimePrefix(), 0.5, BigReal(800L, 271), 271);
    CHECK(abs(tighter - sqrt2) < abs(root - sqrt2));

    BigReal squared = power_formula(PrimePrefix(), 2.0, BigReal(100L, 151), 151);
    CHECK(abs(squared - 4) <= BigReal::ten_to(-6, 20));
}

TEST_CASE("the power formula rejects exponents that leave the domain") {
    PrimePrefix prefix = PrimePrefix::first_n(1);
    CHECK_THROWS_AS(power_formula(prefix, 0.0, BigReal(50L, 40), 40), domain_error);
    CHECK_THROWS_AS(power_formula(prefix, -2.0, BigReal(50L, 40), 40), domain_error);
    // a * s must stay above one even when s alone is fine
    CHECK_THROWS_AS(power_formula(prefix, 0.01, BigReal(50L, 40), 40), domain_error);
}

TEST_CASE("the power formula commutes with the outer exponent") {
    // (1 - Q/zeta)(as)^(-1/s) equals the main estimate at as raised to a
    PrimePrefix prefix = PrimePrefix::first_n(2);
    BigReal via_power = power_formula(prefix, 2.0, BigReal(30L, 77), 77);
    BigReal via_main = pow(main_formula(prefix, BigReal(60L, 77), 77), 2L);
    CHECK(close_rel(via_power, via_main, -70));
}

TEST_CASE("the difference formula tracks the main formula") {
    // (zeta - Q)^(-1/s) = main * zeta^(-1/s); the gap zeta - Q is of order
    // 5^-40, so the last word in the 80-digit budget belongs to it
    PrimePrefix prefix = PrimePrefix::first_n(2);
    BigReal s(40L, 80);
    BigReal lhs = difference_formula(prefix, 1.0, s, 80);
    BigReal rhs = main_formula(prefix, s, 80) * pow(zeta(s, 80), -1 / s);
    CHECK(close_rel(lhs, rhs, -48));
}

TEST_CASE("the difference formula reaches root and cube targets") {
    BigReal root = difference_formula(PrimePrefix(), 0.5, BigReal(400L, 91), 91);
    CHECK(abs(root - sqrt(BigReal(2L, 91))) <= BigReal::ten_to(-9, 20));

    BigReal cube = difference_formula(PrimePrefix::first_n(1), 3.0, BigReal(100L, 174), 174);
    CHECK(abs(cube - 27) <= BigReal::ten_to(-6, 20));
}

TEST_CASE("the log formula recovers ln 2 from the empty prefix") {
    BigReal value = log_formula(PrimePrefix(), BigReal(100L, 61), 61);
    CHECK(abs(value - BigReal::ln2(61)) <= BigReal::ten_to(-15, 20));

    // same quantity assembled by hand: zeta'/(1 - zeta); the subtraction
    // cancels ~30 digits (1 - zeta is of order 2^-100), which consumes the
    // guard margin of the 61-digit budget
    BigReal z = zeta(BigReal(100L, 75), 75);
    BigReal zp = zeta_prime(BigReal(100L, 75), 75);
    CHECK(close_rel(value, zp / (1 - z), -28));
}

TEST_CASE("the log formula recovers ln 5 after two primes") {
    BigReal value = log_formula(PrimePrefix::first_n(2), BigReal(100L, 108), 108);
    BigReal recovered = exp(value);
    CHECK(abs(recovered - 5) <= BigReal::ten_to(-3, 20));
}

TEST_CASE("the log-derivative formula reproduces reference values") {
    BigReal a = log_derivative_formula(PrimePrefix(), 1.0, BigReal(100L, 61), 61);
    CHECK(close_rel(a, BigReal::from_string("2.007343708010214280051", 40), -18));
    CHECK(abs(a - 2) <= BigReal::from_string("0.01", 20));

    BigReal b = log_derivative_formula(PrimePrefix::first_n(1), 1.0, BigReal(300L, 211), 211);
    CHECK(close_rel(b, BigReal::from_string("2.999059669124994198903", 40), -18));
    CHECK(abs(b - 3) <= BigReal::from_string("0.01", 20));

    BigReal c = log_derivative_formula(PrimePrefix(), 2.0, BigReal(200L, 151), 151);
    CHECK(close_rel(c, BigReal::from_string("4.007336979102420610535", 40), -18));
    CHECK(abs(c - 4) <= BigReal::from_string("0.05", 20));
}

TEST_CASE("the half-prime formula converges to the prime itself") {
    BigReal v = half_prime_formula(PrimePrefix::first_n(3), BigReal(100L, 145), 145);
    CHECK(close_rel(v, BigReal::from_string("6.928114662699100249811", 40), -18));

    BigReal w = half_prime_formula(PrimePrefix::first_n(1), BigReal(100L, 91), 91);
    CHECK(close_rel(w, BigReal::from_string("2.98621494619445757", 40), -15));
    CHECK(w > BigReal::from_string("2.9", 20));
    CHECK(w < 3L);
}

TEST_CASE("the half-prime formula degenerates to exactly two on the empty prefix") {
    BigReal v = half_prime_formula(PrimePrefix(), BigReal(60L, 50), 50);
    CHECK(v == 2L);
    LimitEvaluation record =
        evaluate_formula(FormulaKind::half_prime(), PrimePrefix(), BigReal(60L, 50), 50);
    REQUIRE(record.raw_half.has_value());
    CHECK(*record.raw_half == 1L);
    CHECK(2 * *record.raw_half == record.value);
}

TEST_CASE("every variant agrees on the third prime") {
    PrimePrefix prefix = PrimePrefix::first_n(2);
    BigReal s(60L, 77);
    CHECK(main_formula(prefix, s, 77).to_long_rounded() == 5);
    CHECK(power_formula(prefix, 1.0, s, 77).to_long_rounded() == 5);
    CHECK(difference_formula(prefix, 1.0, s, 77).to_long_rounded() == 5);
    CHECK(log_derivative_formula(prefix, 1.0, s, 77).to_long_rounded() == 5);
    CHECK(half_prime_formula(prefix, s, 77).to_long_rounded() == 5);
    CHECK(exp(log_formula(prefix, s, 77)).to_long_rounded() == 5);
}

TEST_CASE("starved precision is reported instead of returning noise") {
    PrimePrefix empty;
    BigReal s(400L, 40);
    CHECK_THROWS_AS(main_formula(empty, s, 40), precision_error);
    CHECK_THROWS_AS(difference_formula(empty, 1.0, s, 40), precision_error);
    CHECK_THROWS_AS(half_prime_formula(PrimePrefix::first_n(1), s, 40), precision_error);
    CHECK_THROWS_AS(log_formula(empty, s, 40), precision_error);
}

TEST_CASE("raising the digit budget refines rather than moves the value") {
    // at s = 50 the defect is of order 7^-50, costing ~43 digits to the
    // cancellation; the policy budget of 88 resolves the value to ~47 digits
    PrimePrefix prefix = PrimePrefix::first_n(3);
    BigReal coarse = main_formula(prefix, BigReal(50L, 88), 88);
    BigReal fine = main_formula(prefix, BigReal(50L, 120), 120);
    CHECK(close_rel(coarse, fine, -45));
}

TEST_CASE("the formula registry maps names to kinds") {
    CHECK(FormulaKind::from_name("main", 1.0).tag == FormulaKind::Tag::main);
    CHECK(FormulaKind::from_name("power", 2.5).exponent == 2.5);
    CHECK(FormulaKind::from_name("difference", 3.0).tag == FormulaKind::Tag::difference);
    CHECK(FormulaKind::from_name("logratio", 1.0).tag == FormulaKind::Tag::log_ratio);
    CHECK(FormulaKind::from_name("logderiv", 0.5).tag ==
          FormulaKind::Tag::log_derivative);
    CHECK(FormulaKind::from_name("halfprime", 1.0).tag == FormulaKind::Tag::half_prime);

    CHECK_THROWS_AS(FormulaKind::from_name("main", 2.0), domain_error);
    CHECK_THROWS_AS(FormulaKind::from_name("logratio", 0.5), domain_error);
    CHECK_THROWS_AS(FormulaKind::from_name("halfprime", 2.0), domain_error);
    CHECK_THROWS_AS(FormulaKind::from_name("zeta", 1.0), domain_error);

    CHECK(FormulaKind::main().name() == "main");
    CHECK(FormulaKind::power(2.0).name() == "power");
    CHECK(FormulaKind::difference(2.0).name() == "difference");
    CHECK(FormulaKind::log_ratio().name() == "logratio");
    CHECK(FormulaKind::log_derivative(2.0).name() == "logderiv");
    CHECK(FormulaKind::half_prime().name() == "halfprime");

    CHECK(FormulaKind::main().s_scale() == 1.0);
    CHECK(FormulaKind::power(3.0).s_scale() == 3.0);
    CHECK(FormulaKind::difference(0.5).s_scale() == 0.5);
    CHECK(FormulaKind::log_ratio().s_scale() == 1.0);
    CHECK(FormulaKind::log_derivative(2.0).s_scale() == 2.0);
    CHECK(FormulaKind::half_prime().s_scale() == 1.0);
}

TEST_CASE("evaluation records carry the full context") {
    PrimePrefix prefix = PrimePrefix::first_n(2);
    LimitEvaluation record =
        evaluate_formula(FormulaKind::main(), prefix, BigReal(60L, 77), 77);
    CHECK(record.kind.tag == FormulaKind::Tag::main);
    CHECK(record.n == 2);
    CHECK(record.s == 60.0);
    CHECK(record.digits == 77);
    CHECK(record.value == main_formula(prefix, BigReal(60L, 77), 77));
    CHECK_FALSE(record.raw_half.has_value());
}

TEST_CASE("adaptive extraction finds the first primes without help") {
    AdaptiveResult first = next_prime_adaptive(PrimePrefix());
    CHECK(first.prime == 2);
    CHECK(first.s_final == 50.0);
    CHECK(first.evaluations == 2);
    CHECK(first.residual < 1e-9);

    AdaptiveResult fourth = next_prime_adaptive(PrimePrefix::first_n(3));
    CHECK(fourth.prime == 7);
    CHECK(fourth.s_final == 50.0);
    CHECK(fourth.evaluations == 2);

    AdaptiveResult tenth = next_prime_adaptive(PrimePrefix::first_n(9));
    CHECK(tenth.prime == 29);
    CHECK(tenth.residual < 0.25);
}

TEST_CASE("adaptive extraction escalates when the residual is too loose") {
    AdaptiveResult r = next_prime_adaptive(PrimePrefix::first_n(19));
    CHECK(r.prime == 71);
    CHECK(r.s_final == 100.0);
    CHECK(r.evaluations == 3);
}

TEST_CASE("a composite rounding is rejected by the confirmation step") {
    AdaptiveResult r = next_prime_adaptive(PrimePrefix::first_n(25));
    CHECK(r.prime == 101);
    CHECK(r.s_final == 100.0);
    CHECK(r.evaluations == 4);
}

TEST_CASE("gapped prefixes surface the smallest missing prime") {
    PrimePrefix gapped({2, 5}, PrefixMode::any_set);
    AdaptiveOptions relaxed;
    relaxed.strict = false;
    CHECK(next_prime_adaptive(gapped, relaxed).prime == 3);

    AdaptiveOptions strict_short;
    strict_short.max_doublings = 1;
    CHECK_THROWS_AS(next_prime_adaptive(gapped, strict_short), escalation_error);
}

TEST_CASE("exhausted escalation reports the prefix length") {
    AdaptiveOptions stuck;
    stuck.max_doublings = 0;
    try {
        next_prime_adaptive(PrimePrefix::first_n(19), stuck);
        FAIL("expected escalation_error");
    } catch (const escalation_error& e) {
        CHECK(e.index_reached == 19);
    }

    AdaptiveOptions starved;
    starved.fixed_digits = 8;
    starved.max_doublings = 2;
    CHECK_THROWS_AS(next_prime_adaptive(PrimePrefix::first_n(3), starved),
                    escalation_error);
}

TEST_CASE("adaptive options are validated") {
    PrimePrefix empty;
    AdaptiveOptions bad;
    bad.initial_s = 1.0;
    CHECK_THROWS_AS(next_prime_adaptive(empty, bad), domain_error);
    bad = {};
    bad.max_doublings = -1;
    CHECK_THROWS_AS(next_prime_adaptive(empty, bad), domain_error);
    bad = {};
    bad.residual_limit = 0.75;
    CHECK_THROWS_AS(next_prime_adaptive(empty, bad), domain_error);
    bad = {};
    bad.fixed_digits = 0;
    CHECK_THROWS_AS(next_prime_adaptive(empty, bad), domain_error);
}

TEST_CASE("chained extraction rebuilds the sequence from nothing") {
    std::vector<std::uint64_t> primes = prime_chain(10);
    std::vector<std::uint64_t> expected = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(primes == expected);
}

TEST_CASE("sweeps evaluate a formula across a grid") {
    SweepTable table =
        sweep(FormulaKind::main(), PrimePrefix(), {10.0, 100.0}, DigitsSpec::automatic());
    CHECK(table.kind.tag == FormulaKind::Tag::main);
    CHECK(table.n == 0);
    REQUIRE(table.samples.size() == 2);
    CHECK(table.samples[0].digits == required_digits(10, 2, 30));
    CHECK(table.samples[1].digits == required_digits(100, 2, 30));
    for (const SweepSample& sample : table.samples) {
        CHECK(sample.status == "ok");
        REQUIRE(sample.value.has_value());
    }
    CHECK(table.samples[0].value->to_decimal(15, BigReal::Rounding::toward_zero) ==
          "1.996546424130332");
    CHECK(table.samples[1].value->to_decimal(15, BigReal::Rounding::toward_zero) ==
          "1.999999999999999");
}

TEST_CASE("a dense half-prime sweep walks from below two toward three") {
    std::vector<double> grid;
    for (int s = 2; s <= 100; ++s) grid.push_back(s);
    SweepTable table =
        sweep(FormulaKind::half_prime(), PrimePrefix::first_n(1), grid,
              DigitsSpec::automatic());
    REQUIRE(table.samples.size() == grid.size());
    for (const SweepSample& sample : table.samples) {
        CHECK(sample.status == "ok");
        REQUIRE(sample.value.has_value());
    }
    BigReal start = *table.samples.front().value;
    CHECK(start >= 2L);
    CHECK(start <= BigReal::from_string("2.5", 20));
    BigReal finish = *table.samples.back().value;
    CHECK(abs(finish - 3) <= BigReal::from_string("0.09", 20));
}

TEST_CASE("sweep points that cannot resolve are recorded, not thrown") {
    SweepTable table = sweep(FormulaKind::main(), PrimePrefix(), {200.0, 400.0},
                             DigitsSpec::fixed(40));
    REQUIRE(table.samples.size() == 2);
    for (const SweepSample& sample : table.samples) {
        CHECK(sample.status == "precision_insufficient");
        CHECK_FALSE(sample.value.has_value());
        CHECK(sample.digits == 40);
    }
}

TEST_CASE("sweep grids are validated") {
    PrimePrefix empty;
    DigitsSpec spec = DigitsSpec::automatic();
    CHECK_THROWS_AS(sweep(FormulaKind::main(), empty, {}, spec), domain_error);
    CHECK_THROWS_AS(sweep(FormulaKind::main(), empty, {10.0, 5.0}, spec), domain_error);
    CHECK_THROWS_AS(sweep(FormulaKind::main(), empty, {0.5, 10.0}, spec), domain_error);
    CHECK_THROWS_AS(sweep(FormulaKind::power(0.1), empty, {5.0, 10.0}, spec),
                    domain_error);
    CHECK_THROWS_AS(DigitsSpec::fixed(0), domain_error);
    CHECK_THROWS_AS(DigitsSpec::automatic(-1), domain_error);
}

TEST_CASE("sweeps are deterministic") {
    std::vector<double> grid = {10.0, 20.0, 40.0};
    SweepTable a = sweep(FormulaKind::main(), PrimePrefix::first_n(2), grid,
                         DigitsSpec::automatic());
    SweepTable b = sweep(FormulaKind::main(), PrimePrefix::first_n(2), grid,
                         DigitsSpec::automatic());
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].status == b.samples[i].status);
        CHECK(*a.samples[i].value == *b.samples[i].value);
    }
}

TEST_CASE("the prefix-free asymptotic estimate heads toward two") {
    BigReal at100 = asymptotic_check(BigReal(100L, 61), 61);
    CHECK(close_rel(at100, BigReal::from_string("2.007343708010214280051", 40), -18));

    // by s = 400 the estimate matches the one-term model 2 (ln 2)^(-1/400)
    BigReal at400 = asymptotic_check(BigReal(400L, 151), 151);
    BigReal model = BigReal::from_string("2.001833404432651735875", 40);
    CHECK(close_rel(at400, model, -20));
    CHECK(abs(at400 - 2) <= BigReal::from_string("0.002", 20));
}

TEST_CASE("the log-derivative series is pinned by its leading term") {
    int d = 91;
    BigReal s(200L, d);
    BigReal series = -(zeta_prime(s, d) / zeta(s, d));
    BigReal leading = series * pow(BigReal(2L, d), 200L);
    CHECK(abs(leading / BigReal::ln2(d) - 1) <= BigReal::ten_to(-30, 20));
}

TEST_CASE("the truncated von Mangoldt series matches its closed head") {
    BigReal head = mangoldt_sum(BigReal(50L, 40), 2, 40);
    BigReal expected = BigReal::ln2(40) * pow(BigReal(2L, 40), -50L);
    CHECK(close_rel(head, expected, -38));
    CHECK(mangoldt_sum(BigReal(50L, 40), 1, 40).sign() == 0);
}

TEST_CASE("the identity residual is governed by the tail bound") {
    BigReal s(10L, 40);
    BigReal residual = mangoldt_identity_check(s, 1000, 40);
    BigReal bound = mangoldt_tail_bound(s, 1000, 40);
    CHECK(residual <= bound);
    CHECK(residual * 100 > bound);
}

TEST_CASE("a two-term truncation leaves the third-prime tail") {
    BigReal s(50L, 60);
    BigReal residual = mangoldt_identity_check(s, 2, 60);
    BigReal expected = ln(BigReal(3L, 60)) * pow(BigReal(3L, 60), -50L);
    CHECK(close_rel(residual, expected, -6));
}

TEST_CASE("the von Mangoldt helpers validate their inputs") {
    CHECK_THROWS_AS(mangoldt_sum(BigReal(1L, 30), 10, 30), domain_error);
    CHECK_THROWS_AS(mangoldt_sum(BigReal(10L, 30), 0, 30), domain_error);
    CHECK_THROWS_AS(mangoldt_tail_bound(BigReal(1L, 30), 10, 30), domain_error);
    CHECK_THROWS_AS(mangoldt_tail_bound(BigReal(10L, 30), 1, 30), domain_error);
    CHECK_THROWS_AS(asymptotic_check(BigReal(1L, 30), 30), domain_error);
}

}  // TEST_SUITE
