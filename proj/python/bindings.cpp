#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primerecip/bitcensus.hpp"
#include "primerecip/dseq.hpp"
#include "primerecip/errors.hpp"
#include "primerecip/modarith.hpp"
#include "primerecip/primes.hpp"
#include "primerecip/recipcensus.hpp"
#include "primerecip/zeta.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace primerecip;

namespace {

CensusOptions census_opts(unsigned threads, std::uint64_t seed) {
    CensusOptions opts;
    opts.exec.threads = threads;
    opts.seed = seed;
    return opts;
}

ExecOptions exec_opts(unsigned threads) {
    ExecOptions opts;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Prime digit statistics: sieves, reciprocal expansions, censuses, zeta partials";

    py::register_exception<capacity_error>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<terminating_expansion_error>(m, "TerminatingExpansionError", PyExc_ValueError);
    py::register_exception<budget_exceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

    py::class_<PrimeRange>(m, "PrimeRange")
        .def(py::init<std::uint64_t, std::uint64_t>(), "lo"_a, "hi"_a)
        .def_property_readonly("lo", &PrimeRange::lo)
        .def_property_readonly("hi", &PrimeRange::hi)
        .def("__repr__", [](const PrimeRange& r) {
            return "PrimeRange(" + std::to_string(r.lo()) + ", " + std::to_string(r.hi()) + ")";
        });

    m.def("sieve_upto", &sieve_upto, "limit"_a);
    m.def("primes_in_range", [](std::uint64_t lo, std::uint64_t hi) { return primes_in_range(PrimeRange{lo, hi}); },
          "lo"_a, "hi"_a);
    m.def("is_prime", &is_prime, "n"_a);

    m.def("mul_mod", &mul_mod, "a"_a, "b"_a, "m"_a);
    m.def("pow_mod", &pow_mod, "b"_a, "e"_a, "m"_a);
    m.def("factorize", [](std::uint64_t n, std::uint64_t seed) {
              std::vector<std::pair<std::uint64_t, unsigned>> out;
              for (const auto& f : factorize(n, seed).factors) out.emplace_back(f.prime, f.exponent);
              return out;
          },
          "n"_a, "seed"_a = kDefaultFactorSeed, "List of (prime, exponent) pairs.");
    m.def("multiplicative_order", &multiplicative_order, "b"_a, "p"_a, "seed"_a = kDefaultFactorSeed);
    m.def("is_max_length", &is_max_length, "b"_a, "p"_a, "seed"_a = kDefaultFactorSeed);

    py::enum_<DigitRule>(m, "DigitRule")
        .value("Expansion", DigitRule::Expansion)
        .value("PowerResidue", DigitRule::PowerResidue);

    py::class_<ReciprocalProfile>(m, "ReciprocalProfile")
        .def_readonly("p", &ReciprocalProfile::p)
        .def_readonly("base", &ReciprocalProfile::base)
        .def_readonly("rule", &ReciprocalProfile::rule)
        .def_readonly("period", &ReciprocalProfile::period)
        .def_readonly("max_length", &ReciprocalProfile::max_length)
        .def_readonly("half_complement", &ReciprocalProfile::half_complement)
        .def_readonly("digit_counts", &ReciprocalProfile::digit_counts);

    m.def("digit_at", &digit_at, "p"_a, "base"_a, "i"_a, "rule"_a = DigitRule::Expansion);
    m.def("expand", &expand, "p"_a, "base"_a, "n"_a, "rule"_a = DigitRule::Expansion);
    m.def("expand_fraction", &expand_fraction, "k"_a, "p"_a, "base"_a, "n"_a);
    m.def("profile", &profile, "p"_a, "base"_a, "rule"_a = DigitRule::Expansion,
          "seed"_a = kDefaultFactorSeed);

    py::class_<BitCensusRow>(m, "BitCensusRow")
        .def_readonly("width", &BitCensusRow::width)
        .def_readonly("zeros", &BitCensusRow::zeros)
        .def_readonly("ones", &BitCensusRow::ones)
        .def_readonly("total", &BitCensusRow::total)
        .def_readonly("prime_count", &BitCensusRow::prime_count);

    m.def("constant_bit_census", [](unsigned w, unsigned threads) { return constant_bit_census(w, exec_opts(threads)); },
          "width"_a, "threads"_a = 1);
    m.def("variable_bit_census", [](unsigned w, unsigned threads) { return variable_bit_census(w, exec_opts(threads)); },
          "width"_a, "threads"_a = 1);
    m.def("ones_fraction_series",
          [](unsigned w, unsigned threads) { return ones_fraction_series(w, exec_opts(threads)); },
          "max_width"_a, "threads"_a = 1);

    py::class_<RangeCensus>(m, "RangeCensus")
        .def_property_readonly("lo", [](const RangeCensus& c) { return c.range.lo(); })
        .def_property_readonly("hi", [](const RangeCensus& c) { return c.range.hi(); })
        .def_readonly("base", &RangeCensus::base)
        .def_readonly("prime_count", &RangeCensus::prime_count)
        .def_readonly("zeros_exceed", &RangeCensus::zeros_exceed)
        .def_readonly("ones_exceed", &RangeCensus::ones_exceed)
        .def_readonly("equal", &RangeCensus::equal)
        .def_readonly("max_length_count", &RangeCensus::max_length_count)
        .def_readonly("excluded", &RangeCensus::excluded);

    py::class_<DigitTotals>(m, "DigitTotals")
        .def_readonly("base", &DigitTotals::base)
        .def_readonly("rule", &DigitTotals::rule)
        .def_readonly("totals", &DigitTotals::totals)
        .def_readonly("excluded", &DigitTotals::excluded)
        .def_readonly("period_sum", &DigitTotals::period_sum);

    py::class_<NonMaxRun>(m, "NonMaxRun")
        .def_readonly("start_prime", &NonMaxRun::start_prime)
        .def_readonly("end_prime", &NonMaxRun::end_prime)
        .def_readonly("length", &NonMaxRun::length)
        .def_readonly("boundary_truncated", &NonMaxRun::boundary_truncated);

    m.def("imbalance_census",
          [](std::uint64_t lo, std::uint64_t hi, unsigned threads, std::uint64_t seed) {
              py::gil_scoped_release release;
              return imbalance_census(PrimeRange{lo, hi}, census_opts(threads, seed));
          },
          "lo"_a, "hi"_a, "threads"_a = 1, "seed"_a = kDefaultFactorSeed);
    m.def("digit_totals",
          [](std::uint64_t lo, std::uint64_t hi, std::uint64_t base, DigitRule rule, unsigned threads) {
              py::gil_scoped_release release;
              return digit_totals(PrimeRange{lo, hi}, base, rule, census_opts(threads, kDefaultFactorSeed));
          },
          "lo"_a, "hi"_a, "base"_a, "rule"_a = DigitRule::Expansion, "threads"_a = 1);
    m.def("find_nonmax_runs",
          [](std::uint64_t lo, std::uint64_t hi, std::uint64_t base, std::uint64_t min_length, unsigned threads) {
              py::gil_scoped_release release;
              return find_nonmax_runs(PrimeRange{lo, hi}, base, min_length,
                                      census_opts(threads, kDefaultFactorSeed));
          },
          "lo"_a, "hi"_a, "base"_a = 2, "min_length"_a = 1, "threads"_a = 1);

    py::enum_<CutoffKind>(m, "CutoffKind")
        .value("TermCount", CutoffKind::TermCount)
        .value("PrimeBound", CutoffKind::PrimeBound);

    py::class_<ZetaPartial>(m, "ZetaPartial")
        .def_readonly("s", &ZetaPartial::s)
        .def_readonly("cutoff_kind", &ZetaPartial::cutoff_kind)
        .def_readonly("cutoff", &ZetaPartial::cutoff)
        .def_readonly("value", &ZetaPartial::value)
        .def_readonly("log_value", &ZetaPartial::log_value);

    m.def("zeta_partial_sum", &zeta_partial_sum, "s"_a, "terms"_a);
    m.def("euler_product_inverse",
          [](double s, std::uint64_t x, unsigned threads) { return euler_product_inverse(s, x, exec_opts(threads)); },
          "s"_a, "prime_bound"_a, "threads"_a = 1);
    m.def("log_euler_partial",
          [](double s, std::uint64_t x, unsigned threads) { return log_euler_partial(s, x, exec_opts(threads)); },
          "s"_a, "prime_bound"_a, "threads"_a = 1);
    m.def("mobius_sieve", [](std::uint64_t limit) {
              const auto t = mobius_sieve(limit);
              return std::vector<int>(t.values.begin(), t.values.end());
          },
          "limit"_a, "List indexed by n; entry 0 is unused.");
    m.def("mobius_value", &mobius_value, "n"_a);
    m.def("mobius_partial_sum", &mobius_partial_sum, "s"_a, "terms"_a);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
