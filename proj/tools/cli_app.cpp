#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "output.hpp"
#include "primerecip/bitcensus.hpp"
#include "primerecip/dseq.hpp"
#include "primerecip/errors.hpp"
#include "primerecip/modarith.hpp"
#include "primerecip/primes.hpp"
#include "primerecip/recipcensus.hpp"
#include "primerecip/zeta.hpp"

namespace primerecip::cli {

namespace {

struct Globals {
    unsigned threads = default_thread_count();
    std::uint64_t seed = kDefaultFactorSeed;
    std::string format = "csv";
    double budget = 0.0;
    bool quiet = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ExecOptions exec_options(const Globals& g, std::ostream& err) {
    ExecOptions opts;
    opts.threads = g.threads;
    if (g.budget > 0.0)
        opts.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(g.budget));
    if (!g.quiet) {
        opts.progress = [&err, last = std::uint64_t{0}](std::uint64_t done,
                                                       std::uint64_t total) mutable {
            const std::uint64_t pct = total == 0 ? 100 : done * 100 / total;
            if (pct >= last + 5 || done == total) {
                err << "progress: " << done << "/" << total << " chunks\n";
                last = pct;
            }
        };
    }
    return opts;
}

CensusOptions census_options(const Globals& g, std::ostream& err) {
    CensusOptions opts;
    opts.exec = exec_options(g, err);
    opts.seed = g.seed;
    return opts;
}

Record bit_record(const BitCensusRow& row) {
    Record r;
    r.add("width", std::uint64_t{row.width})
        .add("zeros", row.zeros)
        .add("ones", row.ones)
        .add("total", row.total);
    return r;
}

double parse_exponent(const std::string& text) {
    const bool complex_like = text.find_first_of("ijIJ") != std::string::npos;
    std::size_t used = 0;
    double s = 0.0;
    bool parsed = false;
    if (!complex_like) {
        try {
            s = std::stod(text, &used);
            parsed = used == text.size();
        } catch (const std::exception&) {
        }
    }
    if (complex_like || !parsed || !(s > 0.0) || !std::isfinite(s))
        throw UsageError("s must be a positive real; complex s and the Riemann direction are "
                         "out of scope (got '" + text + "')");
    return s;
}

std::string digit_string(const std::vector<unsigned>& digits, std::uint64_t base) {
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (base <= 10) {
            s.push_back(static_cast<char>('0' + digits[i]));
        } else {
            if (i) s.push_back(',');
            s += std::to_string(digits[i]);
        }
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime digit statistics: bit censuses, reciprocal expansions, zeta partials"};
    app.name("primerecip");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--threads", g.threads, "Worker threads (default: DSEQ_THREADS or all cores)")
        ->check(CLI::Range(1u, 4096u));
    app.add_option("--seed", g.seed, "Seed for randomized factoring");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--budget", g.budget, "Time budget in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--quiet", g.quiet, "Suppress progress on standard error");

    // bit-census
    unsigned max_width = 0;
    std::string mode = "constant";
    bool series = false;
    auto* bit = app.add_subcommand("bit-census", "Zero/one counts over binary forms of primes");
    bit->add_option("--max-width", max_width, "Largest bit width")->required()->check(CLI::Range(2u, 32u));
    bit->add_option("--mode", mode, "constant or variable")->check(CLI::IsMember({"constant", "variable"}));
    bit->add_flag("--series", series, "Emit the ones-fraction series instead of counts");

    // recip-census
    std::uint64_t lo = 0, hi = 0;
    auto* recip = app.add_subcommand("recip-census", "Base-2 balance census of prime reciprocals");
    recip->add_option("--lo", lo)->required();
    recip->add_option("--hi", hi)->required();

    // expand
    std::uint64_t p = 0, base = 2;
    std::optional<std::uint64_t> n_digits;
    std::string rule_name = "expansion";
    auto* expand_cmd = app.add_subcommand("expand", "Digits of 1/p in a base");
    expand_cmd->add_option("--p", p)->required();
    expand_cmd->add_option("--base", base)->check(CLI::Range(std::uint64_t{2}, kMaxBase));
    expand_cmd->add_option("--digits", n_digits, "Digit count (default: one period)");
    expand_cmd->add_option("--rule", rule_name)->check(CLI::IsMember({"expansion", "residue"}));

    // runs
    std::uint64_t min_len = 1;
    auto* runs_cmd = app.add_subcommand("runs", "Runs of consecutive non-maximum-length primes");
    runs_cmd->add_option("--lo", lo)->required();
    runs_cmd->add_option("--hi", hi)->required();
    runs_cmd->add_option("--base", base)->check(CLI::Range(std::uint64_t{2}, kMaxBase));
    runs_cmd->add_option("--min-len", min_len)->check(CLI::PositiveNumber);

    // zeta
    std::string form, s_text;
    std::uint64_t cutoff = 0;
    auto* zeta_cmd = app.add_subcommand("zeta", "Truncated zeta sums and Euler products");
    zeta_cmd->add_option("--form", form)->required()->check(
        CLI::IsMember({"sum", "product", "log", "mobius-sum"}));
    zeta_cmd->add_option("--s", s_text)->required();
    zeta_cmd->add_option("--cutoff", cutoff)->required()->check(CLI::PositiveNumber);

    // digit-totals
    std::uint64_t totals_base = 10;
    auto* totals_cmd = app.add_subcommand("digit-totals", "Per-digit totals over full periods");
    totals_cmd->add_option("--lo", lo)->required();
    totals_cmd->add_option("--hi", hi)->required();
    totals_cmd->add_option("--base", totals_base)->check(CLI::Range(std::uint64_t{2}, kMaxBase));
    totals_cmd->add_option("--rule", rule_name)->check(CLI::IsMember({"expansion", "residue"}));

    // mobius
    std::optional<std::uint64_t> mu_limit, mu_n;
    auto* mobius_cmd = app.add_subcommand("mobius", "Mobius function values");
    auto* limit_opt = mobius_cmd->add_option("--limit", mu_limit, "Tabulate mu(1..limit)");
    auto* n_opt = mobius_cmd->add_option("--n", mu_n, "Single value mu(n)");
    limit_opt->excludes(n_opt);
    mobius_cmd->require_option(1);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("primerecip");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        const OutputFormat fmt = parse_format(g.format);
        std::vector<Record> records;

        if (*bit) {
            const BitMode bit_mode = mode == "constant" ? BitMode::Constant : BitMode::Variable;
            ExecOptions opts;
            opts.threads = g.threads;
            std::vector<BitCensusRow> rows;
            int status = kOk;
            if (g.budget > 0.0) {
                // Widths run independently; the cost of width w is predicted as
                // twice that of w - 1 (the prime set roughly doubles).
                const auto start = Clock::now();
                double last_cost = 0.0;
                for (unsigned w = 2; w <= max_width; ++w) {
                    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
                    if (w > 2 && elapsed + 2.0 * last_cost > g.budget) {
                        err << "warning: skipping widths " << w << ".." << max_width
                            << " (predicted to exceed the " << g.budget << " s budget)\n";
                        status = kBudget;
                        break;
                    }
                    const auto t0 = Clock::now();
                    rows.push_back(bit_mode == BitMode::Constant ? constant_bit_census(w, opts)
                                                                 : variable_bit_census(w, opts));
                    last_cost = std::chrono::duration<double>(Clock::now() - t0).count();
                }
            } else {
                rows = bit_census_table(max_width, bit_mode, opts);
                rows.erase(rows.begin());  // width 1 holds no primes
            }
            if (series) {
                for (const auto& row : rows) {
                    Record r;
                    r.add("width", std::uint64_t{row.width})
                        .add("ones_fraction", static_cast<double>(row.ones) / static_cast<double>(row.total));
                    records.push_back(std::move(r));
                }
                write_records(out, fmt, {"width", "ones_fraction"}, records);
            } else {
                for (const auto& row : rows) records.push_back(bit_record(row));
                write_records(out, fmt, {"width", "zeros", "ones", "total"}, records);
            }
            return status;
        }

        if (*recip) {
            const PrimeRange range{lo, hi};
            const auto c = imbalance_census(range, census_options(g, err));
            Record r;
            r.add("lo", range.lo())
                .add("hi", range.hi())
                .add("base", c.base)
                .add("prime_count", c.prime_count)
                .add("zeros_exceed", c.zeros_exceed)
                .add("ones_exceed", c.ones_exceed)
                .add("equal", c.equal)
                .add("max_length", c.max_length_count)
                .add("excluded", c.excluded);
            records.push_back(std::move(r));
            write_records(out, fmt,
                          {"lo", "hi", "base", "prime_count", "zeros_exceed", "ones_exceed", "equal",
                           "max_length", "excluded"},
                          records);
            return kOk;
        }

        if (*expand_cmd) {
            const DigitRule rule = parse_digit_rule(rule_name);
            if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
            const auto prof = profile(p, base, rule, g.seed);
            const auto digits = expand(p, base, n_digits.value_or(prof.period), rule);
            const std::string text = digit_string(digits, base);
            if (fmt == OutputFormat::Json) {
                Record r;
                r.add("p", p)
                    .add("base", base)
                    .add("rule", std::string(to_string(rule)))
                    .add("digits", text)
                    .add("period", prof.period)
                    .add("max_length", prof.max_length)
                    .add("half_complement", prof.half_complement);
                write_records(out, fmt, {}, {r});
            } else {
                out << text << '\n'
                    << "period=" << prof.period << ",max_length=" << (prof.max_length ? "true" : "false")
                    << ",half_complement=" << (prof.half_complement ? "true" : "false") << '\n';
            }
            return kOk;
        }

        if (*runs_cmd) {
            const auto runs = find_nonmax_runs(PrimeRange{lo, hi}, base, min_len, census_options(g, err));
            for (const auto& run : runs) {
                Record r;
                r.add("start_prime", run.start_prime)
                    .add("end_prime", run.end_prime)
                    .add("length", run.length)
                    .add("boundary_truncated", run.boundary_truncated);
                records.push_back(std::move(r));
            }
            write_records(out, fmt, {"start_prime", "end_prime", "length", "boundary_truncated"}, records);
            return kOk;
        }

        if (*zeta_cmd) {
            const double s = parse_exponent(s_text);
            ZetaPartial z;
            ExecOptions opts;
            opts.threads = g.threads;
            if (form == "sum") {
                z = zeta_partial_sum(s, cutoff);
            } else if (form == "product") {
                z = euler_product_inverse(s, cutoff, opts);
            } else if (form == "log") {
                z = ZetaPartial{s, CutoffKind::PrimeBound, cutoff, log_euler_partial(s, cutoff, opts),
                                std::nan("")};
            } else {
                z = mobius_partial_sum(s, cutoff);
            }
            Record r;
            r.add("s", z.s)
                .add("cutoff_kind", std::string(to_string(z.cutoff_kind)))
                .add("cutoff", z.cutoff)
                .add("value", z.value)
                .add("log_value", z.log_value);
            records.push_back(std::move(r));
            write_records(out, fmt, {"s", "cutoff_kind", "cutoff", "value", "log_value"}, records);
            return kOk;
        }

        if (*totals_cmd) {
            const DigitRule rule = parse_digit_rule(rule_name);
            const auto t = digit_totals(PrimeRange{lo, hi}, totals_base, rule, census_options(g, err));
            for (std::uint64_t d = 0; d < t.base; ++d) {
                Record r;
                r.add("digit", d).add("count", t.totals[d]);
                records.push_back(std::move(r));
            }
            write_records(out, fmt, {"digit", "count"}, records);
            if (fmt == OutputFormat::Json) {
                Record trailer;
                trailer.add("excluded", t.excluded);
                write_records(out, fmt, {}, {trailer});
            } else {
                out << "# excluded," << t.excluded << '\n';
            }
            return kOk;
        }

        if (*mobius_cmd) {
            if (mu_n) {
                Record r;
                r.add("n", *mu_n).add("mu", std::int64_t{mobius_value(*mu_n)});
                records.push_back(std::move(r));
                write_records(out, fmt, {"n", "mu"}, records);
                return kOk;
            }
            // Streamed in batches; the table itself is one byte per entry.
            constexpr std::uint64_t kBatch = 65536;
            const auto table = mobius_sieve(*mu_limit);
            for (std::uint64_t first = 1; first <= table.limit; first += kBatch) {
                records.clear();
                const std::uint64_t last = std::min(table.limit, first + kBatch - 1);
                for (std::uint64_t n = first; n <= last; ++n) {
                    Record r;
                    r.add("n", n).add("mu", std::int64_t{table[n]});
                    records.push_back(std::move(r));
                }
                write_records(out, fmt, {"n", "mu"}, records, first == 1);
            }
            return kOk;
        }
    } catch (const terminating_expansion_error& e) {
        err << "error: " << e.what() << '\n';
        return kTerminating;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "; no results emitted\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace primerecip::cli
