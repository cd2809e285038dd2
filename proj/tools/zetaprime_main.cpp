#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetaprime/formulas.hpp"

using namespace zetaprime;

namespace {

int default_guard() {
    const char* raw = std::getenv("ZETAPRIME_GUARD_DIGITS");
    if (!raw || !*raw) return 30;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 0 || value > 10000)
        throw domain_error("ZETAPRIME_GUARD_DIGITS must be a small non-negative integer");
    return static_cast<int>(value);
}

// s rendered with up to six fractional digits, trailing zeros trimmed
std::string format_s(double s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    std::string text(buf);
    text.erase(text.find_last_not_of('0') + 1);
    if (!text.empty() && text.back() == '.') text.pop_back();
    return text;
}

std::string format_error(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", e);
    return buf;
}

double parse_s_flag(const std::string& text, double fallback) {
    if (text == "auto") return fallback;
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (...) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(value))
        throw domain_error("--s expects 'auto' or a finite number, got '" + text + "'");
    return value;
}

std::optional<int> parse_digits_flag(const std::string& text) {
    if (text == "auto") return std::nullopt;
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (...) {
        used = 0;
    }
    if (used != text.size() || value < 1)
        throw domain_error("--digits expects 'auto' or a positive integer, got '" + text +
                           "'");
    return static_cast<int>(value);
}

std::vector<unsigned long> parse_known_list(const std::string& csv) {
    std::vector<unsigned long> values;
    if (csv.empty()) return values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = csv.find(',', start);
        std::string token = csv.substr(start, comma - start);
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (...) {
            used = 0;
        }
        if (token.empty() || used != token.size())
            throw parse_error("--known expects a comma-separated list of integers; bad "
                              "entry '" + token + "'");
        values.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

int cmd_table(int id, int max_row, int guard) {
    if (id == 1) {
        std::printf("%3s  %4s  %-20s %s\n", "n", "p_n", "s=10", "s=100");
        for (int i = 0; i < 10; ++i) {
            PrimePrefix prefix = PrimePrefix::first_n(i);
            unsigned long p = nth_prime(i + 1);
            int d10 = required_digits(10, p, guard);
            int d100 = required_digits(100, p, guard);
            BigReal coarse = main_formula(prefix, BigReal(10L, d10), d10);
            BigReal fine = main_formula(prefix, BigReal(100L, d100), d100);
            std::printf("%3d  %4lu  %-20s %s\n", i + 1, p,
                        coarse.to_decimal(15, BigReal::Rounding::toward_zero).c_str(),
                        fine.to_decimal(15, BigReal::Rounding::toward_zero).c_str());
        }
        return 0;
    }

    std::printf("%6s  %7s  %s\n", "n", "p_n", "estimate (s=1000)");
    unsigned long count = 1;
    for (int row = 1; row <= max_row; ++row) {
        count *= 10;
        // the reference rendering of the 10^2 row stops one decimal short
        int decimals = row == 2 ? 14 : 15;
        PrimePrefix prefix = PrimePrefix::first_n(count - 1);
        unsigned long p = nth_prime(count);
        int digits = required_digits(1000, p, guard);
        BigReal estimate = main_formula(prefix, BigReal(1000L, digits), digits);
        std::printf("%6lu  %7lu  %s\n", count, p,
                    estimate.to_decimal(decimals, BigReal::Rounding::toward_zero).c_str());
    }
    return 0;
}

int cmd_next(const std::string& known_csv, long chain_count, const std::string& s_flag,
             const std::string& digits_flag, bool any_set, int guard) {
    AdaptiveOptions options;
    options.initial_s = parse_s_flag(s_flag, options.initial_s);
    options.fixed_digits = parse_digits_flag(digits_flag);
    options.guard_digits = guard;
    if (any_set) {
        options.strict = false;
        std::cerr << "warning: --any-set accepts gapped prefixes; the result is the "
                     "smallest missing prime, not necessarily p_(n+1)\n";
    }

    if (chain_count > 0) {
        std::vector<std::uint64_t> primes =
            prime_chain(static_cast<std::size_t>(chain_count), options);
        std::cout << "primes:";
        for (std::uint64_t p : primes) std::cout << ' ' << p;
        std::cout << '\n' << "count: " << primes.size() << '\n';
        return 0;
    }

    PrimePrefix prefix(parse_known_list(known_csv),
                       any_set ? PrefixMode::any_set : PrefixMode::strict);
    AdaptiveResult result = next_prime_adaptive(prefix, options);
    std::cout << "prime: " << result.prime << '\n'
              << "s: " << format_s(result.s_final) << '\n'
              << "digits: " << result.digits_final << '\n'
              << "evaluations: " << result.evaluations << '\n'
              << "residual: " << format_error(result.residual) << '\n';
    return 0;
}

int cmd_sweep(const std::string& formula, long n, double a, double s_min, double s_max,
              double step, int digits, const std::string& out_path, int guard) {
    if (!(step > 0) || !std::isfinite(step)) throw domain_error("--step must be positive");
    if (!std::isfinite(s_min) || !std::isfinite(s_max) || s_max < s_min)
        throw domain_error("sweep needs a finite range with --s-max >= --s-min");
    if (n < 0) throw domain_error("--n must be non-negative");
    if (digits < 0) throw domain_error("--digits must be positive, or 0 for automatic");

    std::vector<double> grid;
    for (long i = 0;; ++i) {
        double s = s_min + static_cast<double>(i) * step;
        if (s > s_max + step * 1e-9) break;
        grid.push_back(s);
    }

    FormulaKind kind = FormulaKind::from_name(formula, a);
    DigitsSpec spec =
        digits == 0 ? DigitsSpec::automatic(guard) : DigitsSpec::fixed(digits);
    SweepTable table =
        sweep(kind, PrimePrefix::first_n(static_cast<std::size_t>(n)), grid, spec);

    std::ofstream file;
    if (out_path != "-") {
        file.open(out_path);
        if (!file) throw domain_error("cannot open output file '" + out_path + "'");
    }
    std::ostream& out = out_path == "-" ? std::cout : file;

    out << "formula,n,s,value,status\n";
    for (const SweepSample& sample : table.samples) {
        out << kind.name() << ',' << table.n << ',' << format_s(sample.s) << ',';
        if (sample.value) out << sample.value->to_significant(sample.digits);
        out << ',' << sample.status << '\n';
    }
    return 0;
}

struct IdentityRun {
    BigReal measured;
    BigReal target;
    double tolerance;
};

IdentityRun run_identity(const std::string& name, double s, std::optional<int> digits_flag,
                         int guard) {
    if (name == "sqrt2") {
        int digits = digits_flag.value_or(required_digits(0.5 * s, 2, guard));
        BigReal measured =
            power_formula(PrimePrefix(), 0.5, BigReal::from_double(s, digits), digits);
        return {measured, sqrt(BigReal(2L, digits)), 1e-9};
    }
    if (name == "cube27") {
        PrimePrefix prefix = PrimePrefix::first_n(1);
        int digits =
            digits_flag.value_or(required_digits(3 * s, prefix.bertrand_bound(), guard));
        BigReal measured =
            difference_formula(prefix, 3.0, BigReal::from_double(s, digits), digits);
        return {measured, BigReal(27L, digits), 1e-6};
    }
    if (name == "log2") {
        int digits = digits_flag.value_or(required_digits(s, 2, guard));
        BigReal measured =
            log_formula(PrimePrefix(), BigReal::from_double(s, digits), digits);
        return {measured, BigReal::ln2(digits), 1e-15};
    }
    if (name == "asymptotic") {
        int digits = digits_flag.value_or(required_digits(s, 2, guard));
        BigReal measured = asymptotic_check(BigReal::from_double(s, digits), digits);
        // the gap to 2 closes like 2 ln(1/ln 2)/s; allow a 10% cushion
        return {measured, BigReal(2L, digits), 0.81 / s};
    }
    if (name == "mangoldt") {
        const std::uint64_t n_max = 1000;
        int digits = digits_flag.value_or(required_digits(s, 2, guard));
        BigReal s_value = BigReal::from_double(s, digits);
        BigReal residual = mangoldt_identity_check(s_value, n_max, digits);
        double bound = mangoldt_tail_bound(s_value, n_max, digits).to_double();
        return {residual, BigReal(digits), bound};
    }
    throw domain_error("unknown identity '" + name +
                       "'; expected sqrt2, cube27, log2, asymptotic or mangoldt");
}

int cmd_identity(const std::string& name, const std::string& s_flag,
                 const std::string& digits_flag, int guard) {
    double fallback = name == "sqrt2" ? 400.0 : name == "mangoldt" ? 10.0 : 100.0;
    double s = parse_s_flag(s_flag, fallback);
    IdentityRun run = run_identity(name, s, parse_digits_flag(digits_flag), guard);

    double error = abs(run.measured - run.target).to_double();
    bool pass = error <= run.tolerance;
    std::cout << "identity: " << name << '\n'
              << "s: " << format_s(s) << '\n'
              << "measured: " << run.measured.to_significant(20) << '\n'
              << "target: " << run.target.to_significant(20) << '\n'
              << "error: " << format_error(error) << '\n'
              << "tolerance: " << format_error(run.tolerance) << '\n'
              << "status: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? 0 : 1;
}

int cmd_zeta(double s, int digits, bool derivative) {
    if (digits < 1) throw domain_error("--digits must be positive");
    BigReal s_value = BigReal::from_double(s, digits);
    BigReal value = derivative ? zeta_prime(s_value, digits) : zeta(s_value, digits);
    std::cout << value.to_significant(digits) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"next-prime extraction from the Riemann zeta function"};
    app.require_subcommand(1);

    int table_id = 0;
    int table_max_row = 3;
    CLI::App* table = app.add_subcommand(
        "table", "reproduce the reference tables of prime estimates");
    table->add_option("id", table_id, "which table: 1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    table->add_option("--max-row", table_max_row,
                      "largest power of ten for table 2 (1..4; 4 takes ~10 s)")
        ->check(CLI::Range(1, 4));

    std::string next_known;
    long next_count = 0;
    std::string next_s = "auto";
    std::string next_digits = "auto";
    bool next_any_set = false;
    CLI::App* next = app.add_subcommand(
        "next", "extract the prime following a known prefix, or chain from scratch");
    CLI::Option* known_opt = next->add_option(
        "--known", next_known, "comma-separated prime prefix (empty for none)");
    CLI::Option* count_opt =
        next->add_option("--count", next_count, "chain this many primes from scratch")
            ->check(CLI::PositiveNumber);
    known_opt->excludes(count_opt);
    count_opt->excludes(known_opt);
    next->add_option("--s", next_s, "starting s, or 'auto' (50)");
    next->add_option("--digits", next_digits, "pin working digits, or 'auto' (policy)");
    next->add_flag("--any-set", next_any_set,
                   "accept any ascending prime set; finds the smallest missing prime");

    std::string sweep_formula;
    long sweep_n = 0;
    double sweep_a = 1.0;
    double sweep_s_min = 0;
    double sweep_s_max = 0;
    double sweep_step = 1.0;
    int sweep_digits = 0;
    std::string sweep_out = "-";
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "evaluate one formula across a grid of s values, emitting CSV");
    sweep_cmd
        ->add_option("--formula", sweep_formula,
                     "main, power, difference, logratio, logderiv or halfprime")
        ->required();
    sweep_cmd->add_option("--n", sweep_n, "prefix length (first n primes)");
    sweep_cmd->add_option("--a", sweep_a, "exponent for power/difference/logderiv");
    sweep_cmd->add_option("--s-min", sweep_s_min, "grid start")->required();
    sweep_cmd->add_option("--s-max", sweep_s_max, "grid end (inclusive)")->required();
    sweep_cmd->add_option("--step", sweep_step, "grid spacing (default 1)");
    sweep_cmd->add_option("--digits", sweep_digits,
                          "working digits per point; 0 applies the policy");
    sweep_cmd->add_option("--out", sweep_out, "output file, or - for standard output");

    std::string identity_name;
    std::string identity_s = "auto";
    std::string identity_digits = "auto";
    CLI::App* identity = app.add_subcommand(
        "identity", "check a known limit identity against its tolerance");
    identity
        ->add_option("--name", identity_name,
                     "sqrt2, cube27, log2, asymptotic or mangoldt")
        ->required();
    identity->add_option("--s", identity_s, "evaluation point, or 'auto' per identity");
    identity->add_option("--digits", identity_digits,
                         "pin working digits, or 'auto' (policy)");

    double zeta_s = 0;
    int zeta_digits = 30;
    bool zeta_derivative = false;
    CLI::App* zeta_cmd =
        app.add_subcommand("zeta", "evaluate zeta or its derivative at one point");
    zeta_cmd->add_option("--s", zeta_s, "argument, must exceed 1")->required();
    zeta_cmd->add_option("--digits", zeta_digits, "significant digits (default 30)");
    zeta_cmd->add_flag("--derivative", zeta_derivative, "evaluate zeta' instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int guard = default_guard();
        if (table->parsed()) return cmd_table(table_id, table_max_row, guard);
        if (next->parsed()) {
            if (!known_opt->count() && !count_opt->count())
                throw domain_error("next requires --known or --count");
            return cmd_next(next_known, next_count, next_s, next_digits, next_any_set,
                            guard);
        }
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_formula, sweep_n, sweep_a, sweep_s_min, sweep_s_max,
                             sweep_step, sweep_digits, sweep_out, guard);
        if (identity->parsed())
            return cmd_identity(identity_name, identity_s, identity_digits, guard);
        return cmd_zeta(zeta_s, zeta_digits, zeta_derivative);
    } catch (const escalation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
