#include "sphsum/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sphsum/bounds.hpp"
#include "sphsum/errors.hpp"
#include "sphsum/oracle.hpp"
#include "sphsum/reference_tables_data.hpp"

namespace sphsum {

namespace {

double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// splitmix64; keeps verify independent of the standard library's
// distribution implementations.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 1) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }
    long long integer(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::vector<ReferenceRow> parse_rows(const nlohmann::json& arr) {
    std::vector<ReferenceRow> rows;
    for (const auto& row : arr) {
        rows.push_back(ReferenceRow{row[0].get<int>(), row[1].get<long long>(),
                                    row[2].get<long long>(), row[3].get<double>(),
                                    row[4].get<double>(), row[5].get<double>()});
    }
    return rows;
}

const nlohmann::json& reference_json() {
    static const nlohmann::json data = nlohmann::json::parse(
        detail::kReferenceTablesJson, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
    return data;
}

struct CheckRunner {
    std::vector<VerifyCheck> results;

    template <typename F>
    void run(const std::string& name, F&& body) {
        VerifyCheck check;
        check.name = name;
        try {
            std::string detail = body();
            check.passed = true;
            check.detail = std::move(detail);
        } catch (const Error& e) {
            check.passed = false;
            check.detail = e.what();
        }
        results.push_back(std::move(check));
    }
};

std::string format_rel(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", r);
    return buf;
}

void fail(const std::string& msg) { throw InternalError(msg); }

double pipeline_degree(int n, long long N, int m) {
    const double s = solve_s(n, static_cast<double>(N), m);
    const LevenshteinSystem sys = quadrature_system(n, s, m);
    double acc = 0.0;
    for (std::size_t i = 0; i < sys.nodes.size(); ++i)
        acc += sys.weights[i] * std::sqrt(2.0 * (1.0 - sys.nodes[i]));
    return static_cast<double>(N) * static_cast<double>(N) * acc;
}

}  // namespace

const std::vector<ReferenceRow>& decaen_reference() {
    static const std::vector<ReferenceRow> rows = parse_rows(reference_json()["decaen"]);
    return rows;
}

const std::vector<ReferenceRow>& sidelnikov_reference() {
    static const std::vector<ReferenceRow> rows = parse_rows(reference_json()["sidelnikov"]);
    return rows;
}

std::vector<VerifyCheck> run_verify(const VerifyOptions& opts) {
    const bool full = opts.level == VerifyLevel::Full;
    CheckRunner runner;

    runner.run("quadrature-exactness", [&]() -> std::string {
        Rng rng(opts.seed ^ 0x11);
        double worst = 0.0;
        const int n_step = full ? 1 : 4;
        const int polys = full ? 100 : 20;
        for (int n = 3; n <= 20; n += n_step) {
            for (int m = 1; m <= 3; ++m) {
                const double lo = degree_lower_s(n, m) + 1e-3;
                const double hi = degree_upper_s(n, m) - 1e-3;
                for (int si = 0; si < 5; ++si) {
                    const double s = lo + (hi - lo) * si / 4.0;
                    const LevenshteinSystem sys = quadrature_system(n, s, m);
                    for (int p = 0; p < polys; ++p) {
                        std::vector<double> coeffs(static_cast<std::size_t>(m) + 1);
                        for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
                        worst = std::max(worst, verify_quadrature(sys, Polynomial(coeffs)));
                    }
                }
            }
        }
        if (worst >= 1e-10) fail("quadrature residual " + format_rel(worst));
        return "max residual " + format_rel(worst);
    });

    runner.run("ulb-dual-path", [&]() -> std::string {
        double worst = 0.0;
        const int n_step = full ? 1 : 7;
        for (int n = 3; n <= 40; n += n_step) {
            const long long top = design_threshold(n, 4);
            for (long long N : {2LL, 3LL, static_cast<long long>(n), n + 1LL, 2LL * n - 1,
                                2LL * n, 3LL * n, top - 1, top}) {
                if (N < 2 || N > top) continue;
                worst = std::max(worst, rel_diff(ulb_closed(n, N), ulb_pipeline(n, N)));
            }
        }
        if (worst > 1e-9) fail("dual-path disagreement " + format_rel(worst));
        return "max relative gap " + format_rel(worst);
    });

    runner.run("boundary-continuity", [&]() -> std::string {
        double worst = 0.0;
        const int n_step = full ? 1 : 5;
        for (int n = 3; n <= 40; n += n_step) {
            worst = std::max(worst, rel_diff(pipeline_degree(n, n + 1, 1), pipeline_degree(n, n + 1, 2)));
            worst = std::max(worst, rel_diff(pipeline_degree(n, 2LL * n, 2), pipeline_degree(n, 2LL * n, 3)));
        }
        if (worst > 1e-9) fail("segment boundary mismatch " + format_rel(worst));
        return "max relative gap " + format_rel(worst);
    });

    runner.run("attainment", [&]() -> std::string {
        double worst = 0.0;
        const int n_step = full ? 1 : 7;
        for (int n = 2; n <= 50; n += n_step) {
            worst = std::max(
                worst, rel_diff(pairwise_distance_sum(simplex_points(n)), ulb_closed(n, n + 1)));
            worst = std::max(worst, rel_diff(pairwise_distance_sum(biorthogonal_points(n)),
                                             ulb_closed(n, 2LL * n)));
        }
        if (worst > 1e-12) fail("attainment gap " + format_rel(worst));
        return "max relative gap " + format_rel(worst);
    });

    runner.run("universal-optimality", [&]() -> std::string {
        double worst = 0.0;
        for (int n = 3; n <= 30; n += full ? 1 : 4) {
            worst = std::max(worst, rel_diff(uub_pipeline(n, n + 1, -1.0 / n), ulb_pipeline(n, n + 1)));
            worst = std::max(worst, rel_diff(uub_pipeline(n, 2LL * n, 0.0), ulb_pipeline(n, 2LL * n)));
        }
        worst = std::max(worst, rel_diff(uub_pipeline(5, 16, 0.2), ulb_pipeline(5, 16)));
        if (worst > 1e-9) fail("coincidence gap " + format_rel(worst));
        return "max relative gap " + format_rel(worst);
    });

    runner.run("table-reproduction", [&]() -> std::string {
        double worst = 0.0;
        for (const auto& row : decaen_reference()) {
            const DeCaenParameters p = de_caen_parameters(row.r);
            const InnerProductSpectrum spec =
                equiangular_spectrum(p.N / 2, p.s, static_cast<int>(p.n));
            worst = std::max(worst, rel_diff(ulb_closed(static_cast<int>(p.n), p.N), row.upper));
            worst = std::max(worst, rel_diff(sum_of_distances(spec), row.exact));
            worst = std::max(worst, rel_diff(uub_pipeline(static_cast<int>(p.n), p.N, p.s), row.lower));
        }
        for (const auto& row : sidelnikov_reference()) {
            const BinaryDistanceDistribution d = sidelnikov(row.r);
            const InnerProductSpectrum spec = spherical_embedding(d);
            worst = std::max(worst, rel_diff(ulb_closed(d.length, d.size), row.upper));
            worst = std::max(worst, rel_diff(sum_of_distances(spec), row.exact));
            worst = std::max(worst,
                             rel_diff(uub_pipeline(d.length, d.size, spec.separation()), row.lower));
        }
        if (worst > 5e-6) fail("reference cell mismatch " + format_rel(worst));
        return "max relative gap " + format_rel(worst);
    });

    runner.run("stolarsky-monte-carlo", [&]() -> std::string {
        const long long samples = full ? 1000000 : 100000;
        struct Config {
            const char* name;
            PointSet ps;
        };
        std::vector<Config> configs;
        configs.push_back({"simplex-3", simplex_points(3)});
        configs.push_back({"octahedron", biorthogonal_points(3)});
        if (full) {
            configs.push_back({"simplex-4", simplex_points(4)});
            configs.push_back({"two-subset-graph", srg_points(SrgParameters{10, 3, 0, 1},
                                                              petersen_adjacency(),
                                                              Eigenspace::First)});
        }
        std::ostringstream detail;
        for (const auto& [name, ps] : configs) {
            const double tau = pairwise_distance_sum(ps);
            const double expect =
                spherical_discrepancy(tau, ps.dimension, static_cast<long long>(ps.size()));
            const MonteCarloEstimate mc =
                monte_carlo_cap_discrepancy(ps, samples, opts.seed, opts.shards);
            const double gap = std::fabs(mc.estimate - expect);
            if (gap > 3.0 * mc.std_error)
                fail(std::string(name) + ": |mc - formula| = " + format_rel(gap) + " > 3 sigma = " +
                     format_rel(3.0 * mc.std_error));
            detail << name << " z=" << format_rel(mc.std_error > 0 ? gap / mc.std_error : 0.0) << " ";
        }
        return detail.str();
    });

    runner.run("binary-identity", [&]() -> std::string {
        Rng rng(opts.seed ^ 0x22);
        const int trials = full ? 50 : 10;
        // Fixed code with distance-2 pairs so a corrupted lambda(2) cannot
        // slip through.
        std::vector<BinaryCode> codes;
        codes.push_back(BinaryCode::from_strings({"000", "001", "011"}));
        for (int t = 0; t < trials; ++t) {
            const int n = static_cast<int>(rng.integer(2, 12));
            const long long max_size = std::min<long long>(32, 1LL << n);
            const long long N = rng.integer(1, max_size);
            std::vector<std::string> rows;
            std::vector<bool> used(static_cast<std::size_t>(1) << n, false);
            while (static_cast<long long>(rows.size()) < N) {
                const auto word = static_cast<std::uint64_t>(rng.integer(0, (1LL << n) - 1));
                if (used[word]) continue;
                used[word] = true;
                std::string row(static_cast<std::size_t>(n), '0');
                for (int b = 0; b < n; ++b)
                    if ((word >> b) & 1u) row[static_cast<std::size_t>(b)] = '1';
                rows.push_back(std::move(row));
            }
            codes.push_back(BinaryCode::from_strings(rows));
        }
        for (const auto& code : codes) {
            LambdaPotential table(code.length);
            if (opts.corrupt_lambda_table) table = table.with_perturbed_entry(2, 1);
            const ScaledBinaryDiscrepancy brute = brute_binary_discrepancy(code);
            const ScaledBinaryDiscrepancy ident = binary_discrepancy_identity_scaled(code, table);
            if (brute.numerator != ident.numerator)
                fail("scaled integers differ for a code of length " +
                     std::to_string(code.length) + ", size " + std::to_string(code.size()));
        }
        return std::to_string(codes.size()) + " codes, exact integer match";
    });

    runner.run("frame-potential", [&]() -> std::string {
        double worst = 0.0;
        for (int m = 2; m <= 4; ++m)
            for (long long q : {2, 3, 4})
                for (const bool hyper : {false, true}) {
                    const SrgParameters p = hyper ? hyperbolic_srg(m, q) : quadric_srg(m, q);
                    for (const Eigenspace e : {Eigenspace::First, Eigenspace::Second}) {
                        const InnerProductSpectrum spec = srg_embedding(p, e);
                        const double fp = frame_potential(spec);
                        const double expect = static_cast<double>(spec.size) * static_cast<double>(spec.size) /
                                              spec.dimension;
                        worst = std::max(worst, rel_diff(fp, expect));
                    }
                }
        if (worst > 1e-9) fail("frame potential mismatch " + format_rel(worst));
        return "max relative gap " + format_rel(worst);
    });

    runner.run("bound-sandwich", [&]() -> std::string {
        std::vector<InnerProductSpectrum> specs;
        for (int r = 1; r <= (full ? 4 : 2); ++r) {
            const DeCaenParameters p = de_caen_parameters(r);
            specs.push_back(equiangular_spectrum(p.N / 2, p.s, static_cast<int>(p.n)));
        }
        for (int r = 1; r <= 3; ++r) specs.push_back(spherical_embedding(sidelnikov(r)));
        specs.push_back(srg_embedding(quadric_srg(2, 2), Eigenspace::First));
        specs.push_back(srg_embedding(quadric_srg(2, 2), Eigenspace::Second));
        specs.push_back(spherical_embedding(weight_two(8)));
        specs.push_back(spherical_embedding(kerdock(2)));    // beyond the segments
        specs.push_back(spherical_embedding(dual_bch(4)));   // beyond the segments
        for (const auto& spec : specs) {
            const double tau = sum_of_distances(spec);
            const BoundSandwich sw =
                sum_bounds_sandwich(spec.dimension, spec.size, spec.separation());
            if (tau > sw.upper * (1.0 + 1e-9))
                fail("sum exceeds upper bound (" + sw.upper_method + ")");
            if (sw.lower && tau < *sw.lower * (1.0 - 1e-9))
                fail("sum below lower bound (" + sw.lower_method + ")");
        }
        return std::to_string(specs.size()) + " spectra enclosed";
    });

    return runner.results;
}

}  // namespace sphsum
