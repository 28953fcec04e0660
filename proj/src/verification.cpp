#include "entrobound/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entrobound/bounds.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/integral.hpp"
#include "entrobound/sampling.hpp"

namespace entrobound {

namespace {

CheckResult at_most(const std::string& name, double measured, double tol,
                    const std::string& detail = "") {
    return CheckResult{name, tol, measured, measured <= tol, detail};
}

CheckResult at_least(const std::string& name, double measured, double tol,
                     const std::string& detail = "") {
    return CheckResult{name, tol, measured, measured >= tol, detail};
}

std::string describe(const char* label, double v) {
    std::ostringstream os;
    os << label << "=" << v;
    return os.str();
}

}  // namespace

std::optional<AllBoundSlacks> all_bound_slacks(const HermitianMatrix& rho,
                                               const HermitianMatrix& sigma) {
    const double t = trace_distance(rho, sigma);
    const double alpha = std::max(0.0, min_eigenvalue(rho));
    const double beta = min_eigenvalue(sigma);
    if (!(beta > 0.0)) return std::nullopt;
    try {
        const BoundInput in(t, alpha, beta, rho.dim());
        const ExtendedReal s = relative_entropy(rho, sigma);
        if (s.is_infinite()) return std::nullopt;
        const RegularisationConfig cfg(rho.dim(), 1.0);
        const double r = regularised_relative_entropy(rho, sigma, cfg);
        const CorollaryTwoBounds c2 = bound_corollary2(in, cfg);
        return AllBoundSlacks{bound_theorem(in) - s.value(),
                              bound_corollary1(t, beta) - s.value(), c2.q - r, c2.q2 - r};
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

std::vector<CheckResult> verify_integrals(std::uint64_t seed) {
    std::vector<CheckResult> out;

    {  // quadrature log against the spectral log, with node-doubling convergence
        double worst[3] = {0.0, 0.0, 0.0};
        const int node_counts[3] = {50, 100, 200};
        for (int i = 0; i < 100; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 1000 + static_cast<std::uint64_t>(i));
            SplitMix64 knobs(derive_stream_seed(seed, 2000 + static_cast<std::uint64_t>(i)));
            cfg.min_eigenvalue_floor = 0.003 + 0.007 * knobs.uniform();
            cfg.condition_cap = 5.0 + 95.0 * knobs.uniform();
            const HermitianMatrix m = sample_pd_matrix(cfg);
            const HermitianMatrix spectral = matrix_log(m);
            for (int k = 0; k < 3; ++k) {
                const double err =
                    (log_quadrature(m, QuadratureSpec(node_counts[k])) - spectral).max_abs();
                worst[k] = std::max(worst[k], err);
            }
        }
        out.push_back(at_most("log quadrature vs spectral log (200 nodes)", worst[2], 1e-6));
        std::ostringstream detail;
        detail << "max err 50=" << worst[0] << " 100=" << worst[1] << " 200=" << worst[2];
        const double ratio = std::max(worst[1] / worst[0], worst[2] / worst[1]);
        out.push_back(CheckResult{"log quadrature node-doubling convergence", 1.0, ratio,
                                  ratio < 1.0, detail.str()});
    }

    out.push_back(at_most("log quadrature of identity",
                          log_quadrature(HermitianMatrix::identity(4), QuadratureSpec(200))
                              .max_abs(),
                          1e-10));

    {  // T_A(A) = I in both forms, plus order preservation and linearity
        double worst_closed = 0.0, worst_quad = 0.0, worst_linear = 0.0, worst_oracle = 0.0;
        double worst_order = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 25; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 3000 + static_cast<std::uint64_t>(i));
            cfg.min_eigenvalue_floor = 0.05;
            cfg.condition_cap = 40.0;
            const HermitianMatrix a = sample_pd_matrix(cfg);
            const HermitianMatrix eye = HermitianMatrix::identity(cfg.dim);

            worst_closed = std::max(worst_closed, (t_super(a, a) - eye).max_abs());
            worst_quad = std::max(
                worst_quad, (t_super_quadrature(a, a, QuadratureSpec(200)) - eye).max_abs());

            SamplerConfig dcfg = cfg;
            dcfg.seed = derive_stream_seed(seed, 4000 + static_cast<std::uint64_t>(i));
            const HermitianMatrix d1 = sample_traceless_hermitian(dcfg, 1.0);
            dcfg.seed = derive_stream_seed(seed, 5000 + static_cast<std::uint64_t>(i));
            const HermitianMatrix d2 = sample_traceless_hermitian(dcfg, 1.0);

            worst_oracle = std::max(
                worst_oracle, (t_super(a, d1) - t_super_quadrature(a, d1, QuadratureSpec(200)))
                                  .max_abs());

            dcfg.seed = derive_stream_seed(seed, 6000 + static_cast<std::uint64_t>(i));
            const HermitianMatrix psd = 0.5 * sample_density_matrix(dcfg);
            const HermitianMatrix x = d1;
            const HermitianMatrix y = d1 + psd;
            worst_order =
                std::min(worst_order, min_eigenvalue(t_super(a, y) - t_super(a, x)));

            SplitMix64 coeff(derive_stream_seed(seed, 7000 + static_cast<std::uint64_t>(i)));
            const double ca = 4.0 * coeff.uniform() - 2.0;
            const double cb = 4.0 * coeff.uniform() - 2.0;
            const HermitianMatrix combo = t_super(a, ca * d1 + cb * d2);
            const HermitianMatrix split = ca * t_super(a, d1) + cb * t_super(a, d2);
            worst_linear = std::max(worst_linear, (combo - split).max_abs());
        }
        out.push_back(at_most("t_super identity (closed form)", worst_closed, 1e-10));
        out.push_back(at_most("t_super identity (200-node quadrature)", worst_quad, 1e-6));
        out.push_back(at_most("t_super closed form vs quadrature", worst_oracle, 1e-6));
        out.push_back(at_least("t_super order preservation", worst_order, -1e-9));
        out.push_back(at_most("t_super linearity", worst_linear, 1e-10));
    }

    {  // finite-difference derivative of the log
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 8000 + static_cast<std::uint64_t>(i));
            cfg.min_eigenvalue_floor = 0.1;
            cfg.condition_cap = 100.0;
            const HermitianMatrix a = sample_pd_matrix(cfg);
            SamplerConfig dcfg = cfg;
            dcfg.seed = derive_stream_seed(seed, 9000 + static_cast<std::uint64_t>(i));
            const HermitianMatrix delta = sample_traceless_hermitian(dcfg, 1.0);
            worst = std::max(worst, log_directional_derivative_check(a, delta, 1e-5));
        }
        out.push_back(at_most("log derivative vs finite difference (h=1e-5)", worst, 1e-5));
    }

    {  // linear-path representation against the spectral relative entropy
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 10000 + static_cast<std::uint64_t>(i));
            cfg.min_eigenvalue_floor = 0.02;
            cfg.condition_cap = 100.0;
            auto [a, b] = sample_equal_trace_pd_pair(cfg);
            const double via_path =
                relative_entropy_path_integral(LinearPath(a, b), QuadratureSpec(200));
            const double spectral = relative_entropy(a, b).value();
            worst = std::max(worst, std::abs(via_path - spectral));
        }
        out.push_back(at_most("path integral vs spectral relative entropy", worst, 1e-6));
    }

    {  // scaling of the spectral log: log(a M) = log(a) I + log M
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 11000 + static_cast<std::uint64_t>(i));
            cfg.min_eigenvalue_floor = 0.05;
            cfg.condition_cap = 50.0;
            const HermitianMatrix m = sample_pd_matrix(cfg);
            SplitMix64 knobs(derive_stream_seed(seed, 12000 + static_cast<std::uint64_t>(i)));
            const double scale = 0.1 + 5.0 * knobs.uniform();
            const HermitianMatrix lhs = matrix_log(scale * m);
            const HermitianMatrix rhs = matrix_log(m).shifted(std::log(scale));
            worst = std::max(worst, (lhs - rhs).max_abs());
        }
        out.push_back(at_most("matrix log scaling identity", worst, 1e-9));
    }

    return out;
}

std::vector<CheckResult> verify_lemmas(std::uint64_t seed) {
    std::vector<CheckResult> out;

    {  // trace-distance floor T >= |alpha - beta| on equal-trace pairs
        double worst = std::numeric_limits<double>::infinity();
        for (int d = 2; d <= 6; ++d) {
            for (int i = 0; i < 10000; ++i) {
                SamplerConfig cfg;
                cfg.dim = d;
                cfg.seed = derive_stream_seed(
                    seed, 20000 + static_cast<std::uint64_t>(d) * 100000 +
                              static_cast<std::uint64_t>(i));
                double gap = 0.0;
                if (i % 2 == 0) {
                    auto [a, b] = sample_equal_trace_pd_pair(cfg);
                    gap = feasibility_gap(a, b);
                } else {
                    const HermitianMatrix rho = sample_density_matrix(cfg.for_sample(0));
                    const HermitianMatrix sigma = sample_density_matrix(cfg.for_sample(1));
                    gap = feasibility_gap(rho, sigma);
                }
                worst = std::min(worst, gap);
            }
        }
        out.push_back(at_least("trace-distance floor gap (5x10^4 pairs)", worst, -1e-10));
    }

    {  // Loewner-order bound slack with gamma = lambda_min(a)
        double worst = std::numeric_limits<double>::infinity();
        for (int d = 2; d <= 5; ++d) {
            for (int i = 0; i < 1000; ++i) {
                SamplerConfig cfg;
                cfg.dim = d;
                cfg.seed = derive_stream_seed(
                    seed, 30000 + static_cast<std::uint64_t>(d) * 100000 +
                              static_cast<std::uint64_t>(i));
                auto [a, b] = sample_equal_trace_pd_pair(cfg);
                worst = std::min(worst, lemma3_slack(a, b, min_eigenvalue(a)));
            }
        }
        out.push_back(at_least("Loewner-order bound slack (4x10^3 pairs)", worst, -1e-9));
    }

    {  // traceless draws: exact trace, trace norm, half-norm inequality, Jordan split
        double worst_trace = 0.0, worst_norm = 0.0, worst_half = 0.0;
        double worst_jordan = 0.0, worst_orth = 0.0, worst_psd = 0.0;
        for (int i = 0; i < 1000; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 40000 + static_cast<std::uint64_t>(i));
            SplitMix64 knobs(derive_stream_seed(seed, 41000 + static_cast<std::uint64_t>(i)));
            const double norm = 0.1 + 2.9 * knobs.uniform();
            const HermitianMatrix delta = sample_traceless_hermitian(cfg, norm);

            worst_trace = std::max(worst_trace, std::abs(delta.trace()));
            worst_norm = std::max(worst_norm, std::abs(trace_norm(delta) - norm));
            worst_half = std::max(worst_half, operator_norm(delta) - 0.5 * trace_norm(delta));

            const JordanParts parts = jordan_decompose(delta);
            worst_jordan =
                std::max(worst_jordan, std::abs(trace_norm(delta) - 2.0 * parts.plus.trace()));
            worst_orth = std::max(worst_orth, std::abs(trace_product(parts.plus, parts.minus)));
            worst_psd = std::max(worst_psd, -std::min(min_eigenvalue(parts.plus),
                                                      min_eigenvalue(parts.minus)));
        }
        out.push_back(at_most("traceless draw |trace|", worst_trace, 1e-12));
        out.push_back(at_most("traceless draw trace-norm error", worst_norm, 1e-12));
        out.push_back(at_most("operator norm <= trace norm/2 (traceless)", worst_half, 1e-12));
        out.push_back(at_most("Jordan split trace-norm identity", worst_jordan, 1e-10));
        out.push_back(at_most("Jordan parts orthogonality", worst_orth, 1e-10));
        out.push_back(at_most("Jordan parts positivity defect", worst_psd, 1e-10));
    }

    {  // eigenvalue-difference majorant: lambda_max(A-B) >= lambda_min(A)-lambda_min(B)
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 1000; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 50000 + static_cast<std::uint64_t>(i));
            const HermitianMatrix a = sample_density_matrix(cfg.for_sample(0));
            const HermitianMatrix b = sample_density_matrix(cfg.for_sample(1));
            const EigenDecomposition diff = eigh(a - b);
            const double slack =
                diff.eigenvalues.back() - (min_eigenvalue(a) - min_eigenvalue(b));
            worst = std::min(worst, slack);
        }
        out.push_back(at_least("eigenvalue-difference majorant", worst, -1e-10));
    }

    {  // eigh reconstruction residual
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 60000 + static_cast<std::uint64_t>(i));
            const HermitianMatrix m = sample_traceless_hermitian(cfg, 2.0);
            const EigenDecomposition eig = eigh(m);
            const double scale =
                1.0 + std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
            worst = std::max(worst, (reconstruct(eig) - m.matrix()).max_abs() / scale);
        }
        out.push_back(at_most("eigh reconstruction residual", worst, 1e-10));
    }

    {  // sampler determinism and near-singular coverage
        SamplerConfig cfg;
        cfg.dim = 3;
        cfg.seed = derive_stream_seed(seed, 70000);
        const HermitianMatrix first = sample_density_matrix(cfg);
        const HermitianMatrix second = sample_density_matrix(cfg);
        out.push_back(at_most("sampler determinism (same config)",
                              (first - second).max_abs(), 0.0));

        double min_seen = 1.0;
        for (int i = 0; i < 1000; ++i) {
            min_seen = std::min(min_seen, min_eigenvalue(sample_density_matrix(cfg.for_sample(
                                              static_cast<std::uint64_t>(i)))));
        }
        out.push_back(at_most("sampler near-singular coverage (min lambda_min, d=3)", min_seen,
                              0.01));
    }

    return out;
}

std::vector<CheckResult> verify_bounds(std::uint64_t seed) {
    std::vector<CheckResult> out;

    {  // bound validity fuzzing, all four bounds on shared pairs
        constexpr double inf = std::numeric_limits<double>::infinity();
        double worst_theorem = inf, worst_cor1 = inf, worst_q = inf, worst_q2 = inf;
        long skipped = 0;
        for (int d = 2; d <= 6; ++d) {
            for (int i = 0; i < 10000; ++i) {
                SamplerConfig cfg;
                cfg.dim = d;
                cfg.seed = derive_stream_seed(
                    seed, 80000 + static_cast<std::uint64_t>(d) * 100000 +
                              static_cast<std::uint64_t>(i));
                const HermitianMatrix rho = sample_density_matrix(cfg.for_sample(0));
                const HermitianMatrix sigma = sample_density_matrix(cfg.for_sample(1));
                const auto slacks = all_bound_slacks(rho, sigma);
                if (!slacks) {
                    ++skipped;
                    continue;
                }
                worst_theorem = std::min(worst_theorem, slacks->theorem);
                worst_cor1 = std::min(worst_cor1, slacks->corollary1);
                worst_q = std::min(worst_q, slacks->q);
                worst_q2 = std::min(worst_q2, slacks->q2);
            }
        }
        const std::string detail = describe("skipped", static_cast<double>(skipped));
        out.push_back(at_least("relative-entropy bound slack (5x10^4 pairs)", worst_theorem,
                               -1e-9, detail));
        out.push_back(at_least("alpha-free bound slack (5x10^4 pairs)", worst_cor1, -1e-9));
        out.push_back(at_least("regularised bound slack (5x10^4 pairs)", worst_q, -1e-9));
        out.push_back(at_least("regularised envelope slack (5x10^4 pairs)", worst_q2, -1e-9));
    }

    {  // monotone decrease in alpha, plus continuity at alpha = 0
        const double t = 0.3, beta = 0.2;
        double prev = bound_theorem(BoundInput(t, 0.0, beta));
        double worst_step = 1.0;
        for (int k = 1; k <= 50; ++k) {
            const double alpha = 0.01 * k;
            const double value = bound_theorem(BoundInput(t, alpha, beta));
            worst_step = std::min(worst_step, prev - value);
            prev = value;
        }
        out.push_back(at_least("bound strictly decreasing in alpha", worst_step, 1e-12));
        const double at_zero = bound_theorem(BoundInput(t, 0.0, beta));
        const double near_zero = bound_theorem(BoundInput(t, 1e-12, beta));
        out.push_back(at_most("bound continuity at alpha->0",
                              std::abs(at_zero - near_zero), 1e-9));
    }

    {  // dominance chain against the alpha-free bound
        double worst_dom = 0.0;  // most positive excess of theorem over corollary1
        double worst_eq = 0.0;
        for (int bt = 1; bt <= 6; ++bt) {
            const double beta = 0.05 * bt;
            for (int tt = 1; tt <= 12; ++tt) {
                const double t = 0.05 * tt;
                const double cor1 = bound_corollary1(t, beta);
                const double alpha_lo = std::max(0.0, beta - t);
                for (int k = 0; k <= 20; ++k) {
                    const double alpha = alpha_lo + (beta + t - alpha_lo) * k / 20.0;
                    worst_dom = std::max(
                        worst_dom, bound_theorem(BoundInput(t, alpha, beta)) - cor1);
                }
                worst_eq = std::max(worst_eq, std::abs(bound_theorem(BoundInput(
                                                           t, alpha_lo, beta)) -
                                                       cor1));
            }
        }
        out.push_back(at_most("theorem bound dominated by alpha-free bound", worst_dom, 1e-12));
        out.push_back(at_most("dominance tight at minimal alpha", worst_eq, 1e-12));
    }

    {  // regularised chain q <= q2
        double worst = 0.0;
        const RegularisationConfig cfg(3, 1.0);
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= 6; ++b) {
                const double alpha = a / 20.0, beta_v = b / 20.0;
                for (int tt = 0; tt <= 10; ++tt) {
                    const double t = tt / 10.0;
                    if (t < std::abs(alpha - beta_v) || !(beta_v > 0.0)) continue;
                    const CorollaryTwoBounds c2 =
                        bound_corollary2(BoundInput(t, alpha, beta_v), cfg);
                    worst = std::max(worst, c2.q - c2.q2);
                }
            }
        }
        out.push_back(at_most("regularised chain q <= q2", worst, 1e-12));
    }

    {  // equality families achieve their bounds
        double worst_prop = 0.0;
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double t = 2.0 * i / 19.0;
                const double alpha = 2.0 * j / 19.0;
                if (alpha <= 0.0 || t < std::abs(alpha - 1.0)) continue;
                auto [a, b] = extremal_pair_proposition(t, alpha);
                worst_prop = std::max(worst_prop, std::abs(relative_entropy(a, b).value() -
                                                           bound_proposition(t, alpha)));
            }
        }
        out.push_back(at_most("non-normalised equality family gap (20x20 grid)", worst_prop,
                              1e-10));

        double worst_thm = 0.0;
        for (int ai = 1; ai <= 10; ++ai) {
            for (int bi = 1; bi <= 10; ++bi) {
                for (int ti = 1; ti <= 8; ++ti) {
                    const double alpha = 0.02 * ai, beta_v = 0.02 * bi, t = 0.05 * ti;
                    if (t < std::abs(alpha - beta_v)) continue;
                    const double r = (1.0 - alpha - beta_v - t);
                    if (r < std::max(alpha, beta_v)) continue;
                    const BoundInput in(t, alpha, beta_v, 3);
                    auto [rho, sigma] = equality_states_theorem(in, 3);
                    worst_thm = std::max(worst_thm, std::abs(relative_entropy(rho, sigma).value() -
                                                             bound_theorem(in)));
                }
            }
        }
        out.push_back(at_most("density equality family gap (d=3 grid)", worst_thm, 1e-10));

        double worst_cor2 = 0.0, at_one = 0.0;
        for (int k = 0; k <= 10; ++k) {
            const double t = k / 10.0;
            auto [rho, sigma] = equality_states_corollary2(t);
            const double r = regularised_relative_entropy(rho, sigma,
                                                          RegularisationConfig(3, 1.0));
            worst_cor2 = std::max(worst_cor2, std::abs(r - t * std::log1p(t)));
            if (k == 10) at_one = std::abs(r - std::log(2.0));
        }
        out.push_back(at_most("regularised equality family gap", worst_cor2, 1e-12));
        out.push_back(at_most("orthogonal pure states reach log 2", at_one, 1e-12));
    }

    {  // reduction to the unit-beta bound
        double worst = 0.0;
        for (int ti = 0; ti <= 20; ++ti) {
            for (int ai = 0; ai <= 20; ++ai) {
                const double t = 0.1 * ti, alpha = 0.1 * ai;
                if (t < std::abs(alpha - 1.0)) continue;
                worst = std::max(worst, std::abs(bound_theorem(BoundInput(t, alpha, 1.0)) -
                                                 bound_proposition(t, alpha)));
            }
        }
        out.push_back(at_most("beta=1 reduction to the non-normalised bound", worst, 1e-14));
    }

    {  // entropy-measure identities on sampled pairs
        double worst_scaling = 0.0, worst_cap = 0.0;
        double worst_klein = std::numeric_limits<double>::infinity();
        const double cap = 1.0;  // c_d = 1/log 2 normalises the global bound to 1
        for (int i = 0; i < 200; ++i) {
            SamplerConfig cfg;
            cfg.dim = 2 + i % 5;
            cfg.seed = derive_stream_seed(seed, 90000 + static_cast<std::uint64_t>(i));
            auto [a, b] = sample_equal_trace_pd_pair(cfg);
            for (double scale : {0.1, 1.0, 7.3}) {
                worst_scaling = std::max(worst_scaling, scaling_check(a, b, scale));
            }
            worst_klein = std::min(worst_klein, relative_entropy(a, b).value());

            const HermitianMatrix rho = sample_density_matrix(cfg.for_sample(5));
            const HermitianMatrix sigma = sample_density_matrix(cfg.for_sample(6));
            const double r = regularised_relative_entropy(
                rho, sigma, RegularisationConfig::with_default_constant(cfg.dim));
            worst_cap = std::max(worst_cap, r - cap);
        }
        out.push_back(at_most("scaling identity |S(aA||aB) - a S(A||B)|", worst_scaling, 1e-10));
        out.push_back(at_least("Klein nonnegativity at equal trace", worst_klein, -1e-10));
        out.push_back(at_most("regularised entropy global cap", worst_cap, 1e-10));
    }

    {  // support semantics: +infinity exactly when weight sits on the kernel
        auto [rho, sigma] = equality_states_corollary2(0.3);
        const bool infinite = relative_entropy(rho, sigma).is_infinite();
        const HermitianMatrix softened = sigma + 1e-6 * HermitianMatrix::identity(3);
        const bool finite_after = relative_entropy(rho, softened).is_finite();
        out.push_back(CheckResult{"support semantics (+inf and epsilon-softening)", 1.0,
                                  infinite && finite_after ? 1.0 : 0.0, infinite && finite_after,
                                  ""});
    }

    return out;
}

std::vector<CheckResult> verify_all(std::uint64_t seed) {
    std::vector<CheckResult> out = verify_integrals(seed);
    std::vector<CheckResult> lemmas = verify_lemmas(seed);
    std::vector<CheckResult> bounds = verify_bounds(seed);
    out.insert(out.end(), lemmas.begin(), lemmas.end());
    out.insert(out.end(), bounds.begin(), bounds.end());
    return out;
}

}  // namespace entrobound
