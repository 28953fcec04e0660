#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entrobound/bounds.hpp"
#include "entrobound/sampling.hpp"

using namespace entrobound;

TEST_CASE("bound input feasibility gate") {
    CHECK_NOTHROW(BoundInput(0.2, 0.1, 0.1));
    CHECK_NOTHROW(BoundInput(0.2, 0.1, 0.3));          // boundary T = |alpha-beta|
    CHECK_NOTHROW(BoundInput(0.2, 0.1, 0.3 + 5e-13));  // within the slack
    CHECK_THROWS_AS(BoundInput(0.1, 0.1, 0.3), std::domain_error);
    CHECK_THROWS_AS(BoundInput(-0.1, 0.1, 0.1), std::domain_error);
    CHECK_THROWS_AS(BoundInput(0.2, -0.1, 0.1), std::domain_error);
    CHECK_THROWS_AS(BoundInput(0.2, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(BoundInput(0.2, 0.4, 0.3, 3), std::domain_error);  // alpha > 1/3
    CHECK_NOTHROW(BoundInput(0.2, 0.3, 0.3, 3));
}

TEST_CASE("feasibility gap examples") {
    const HermitianMatrix a = HermitianMatrix::diagonal({2.0, 0.5});
    CHECK(feasibility_gap(a, a) == 0.0);

    // T = 1 and |alpha - beta| = |0.5 - 1| = 0.5, so the gap is 0.5
    const HermitianMatrix b = HermitianMatrix::diagonal({1.0, 1.5});
    CHECK(feasibility_gap(a, b) == doctest::Approx(0.5).epsilon(1e-13));

    CHECK_THROWS_AS(feasibility_gap(a, HermitianMatrix::diagonal({1.0, 1.0})),
                    std::domain_error);  // unequal traces
    CHECK_THROWS_AS(feasibility_gap(HermitianMatrix::diagonal({3.0, -0.5}),
                                    HermitianMatrix::diagonal({1.0, 1.5})),
                    std::domain_error);  // not PSD

    SamplerConfig cfg;
    cfg.dim = 4;
    cfg.seed = 1;
    for (int i = 0; i < 200; ++i) {
        const auto [x, y] = sample_equal_trace_pd_pair(cfg.for_sample(static_cast<std::uint64_t>(i)));
        CHECK(feasibility_gap(x, y) >= -1e-10);
    }
}

TEST_CASE("lemma3 slack") {
    const HermitianMatrix two = HermitianMatrix::diagonal({2.0});
    CHECK(lemma3_slack(two, two, 2.0) == doctest::Approx(0.0).epsilon(1e-12));

    const HermitianMatrix a = HermitianMatrix::diagonal({1.0, 2.0});
    CHECK(std::abs(lemma3_slack(a, a, 1.0)) <= 1e-12);

    CHECK_THROWS_AS((LemmaThreeInput{0.0, 0.0}.bound()), std::domain_error);
    CHECK((LemmaThreeInput{0.3, 0.0}.bound()) == 0.0);
    CHECK((LemmaThreeInput{0.1, 0.3}.bound()) == doctest::Approx(0.75).epsilon(1e-14));

    CHECK_THROWS_AS(lemma3_slack(a, a, 1.5), std::domain_error);  // a >= gamma fails
    CHECK_THROWS_AS(lemma3_slack(a, HermitianMatrix::diagonal({1.5, 2.0}), 1.0),
                    std::domain_error);  // unequal traces

    SamplerConfig cfg;
    cfg.dim = 3;
    cfg.seed = 14;
    for (int i = 0; i < 100; ++i) {
        const auto [x, y] = sample_equal_trace_pd_pair(cfg.for_sample(static_cast<std::uint64_t>(i)));
        CHECK(lemma3_slack(x, y, min_eigenvalue(x)) >= -1e-9);
    }
}

TEST_CASE("non-normalised bound values") {
    CHECK(bound_proposition(0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));

    const double at_half = 2.0 * std::log(2.0) - 0.5 * std::log(3.0);  // 0.8369882
    CHECK(bound_proposition(1.0, 0.5) == doctest::Approx(at_half).epsilon(1e-15));

    const double at_zero = 2.0 * std::log(2.0);  // 1.3862944
    CHECK(bound_proposition(1.0, 0.0) == doctest::Approx(at_zero).epsilon(1e-15));

    CHECK_THROWS_AS(bound_proposition(0.2, 0.5), std::domain_error);  // T < |alpha - 1|
}

TEST_CASE("density bound values") {
    CHECK(bound_theorem(BoundInput(0.0, 0.1, 0.1)) == 0.0);

    const double expected = 0.2 * std::log(3.0);  // 0.2197225
    CHECK(bound_theorem(BoundInput(0.2, 0.1, 0.1)) == doctest::Approx(expected).epsilon(1e-15));

    // beta = 1 reduces to the non-normalised bound
    double worst = 0.0;
    for (int ti = 0; ti <= 20; ++ti) {
        for (int ai = 0; ai <= 20; ++ai) {
            const double t = 0.1 * ti, alpha = 0.1 * ai;
            if (t < std::abs(alpha - 1.0)) continue;
            worst = std::max(worst, std::abs(bound_theorem(BoundInput(t, alpha, 1.0)) -
                                             bound_proposition(t, alpha)));
        }
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("bound is monotone decreasing in alpha with the stated limit") {
    const double t = 0.3, beta = 0.2;
    double prev = bound_theorem(BoundInput(t, 0.0, beta));
    for (int k = 1; k <= 50; ++k) {
        const double value = bound_theorem(BoundInput(t, 0.01 * k, beta));
        CHECK(value < prev);
        prev = value;
    }
    const double limit = (beta + t) * std::log1p(t / beta);
    CHECK(std::abs(bound_theorem(BoundInput(t, 0.0, beta)) - limit) == 0.0);
    CHECK(std::abs(bound_theorem(BoundInput(t, 1e-12, beta)) - limit) <= 1e-9);
}

TEST_CASE("alpha-free bound") {
    CHECK(bound_corollary1(0.0, 0.3) == 0.0);

    // continuity at the case boundary T = beta
    const double beta = 0.25;
    const double at_boundary = bound_corollary1(beta, beta);
    CHECK(at_boundary == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));  // 0.3465736
    CHECK(std::abs(bound_corollary1(beta - 1e-9, beta) - at_boundary) <= 1e-7);
    CHECK(std::abs(bound_corollary1(beta + 1e-9, beta) - at_boundary) <= 1e-7);

    // both branch formulas, evaluated independently with the x log x -> 0
    // convention, agree at the boundary
    auto xlog = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
    const double low_branch = (beta + beta) * std::log1p(1.0) +
                              xlog(beta - beta) - (beta - beta) * std::log(beta);
    const double high_branch = (beta + beta) * std::log1p(1.0);
    CHECK(std::abs(low_branch - at_boundary) <= 1e-12);
    CHECK(std::abs(high_branch - at_boundary) <= 1e-12);

    // equals the maximum of the alpha-aware bound over feasible alpha
    for (int bt = 1; bt <= 4; ++bt) {
        const double b = 0.08 * bt;
        for (int tt = 1; tt <= 10; ++tt) {
            const double t = 0.06 * tt;
            const double cor1 = bound_corollary1(t, b);
            const double alpha_star = std::max(0.0, b - t);
            CHECK(std::abs(bound_theorem(BoundInput(t, alpha_star, b)) - cor1) <= 1e-12);
            for (int k = 0; k <= 10; ++k) {
                const double alpha = alpha_star + (b + t - alpha_star) * k / 10.0;
                CHECK(bound_theorem(BoundInput(t, alpha, b)) <= cor1 + 1e-12);
            }
        }
    }
}

TEST_CASE("regularised bounds") {
    const RegularisationConfig unit(3, 1.0);
    const CorollaryTwoBounds zero = bound_corollary2(BoundInput(0.0, 0.001, 0.001), unit);
    CHECK(zero.q == 0.0);
    CHECK(zero.q2 == 0.0);

    // alpha = beta = 0 is the envelope case: q = q2 = T log(1+T)
    const CorollaryTwoBounds env = bound_corollary2(BoundInput(0.5, 0.0, 1e-300), unit);
    CHECK(env.q2 == doctest::Approx(0.5 * std::log1p(0.5)).epsilon(1e-15));  // 0.2027326
    CHECK(std::abs(env.q - env.q2) <= 1e-12);

    const CorollaryTwoBounds mid = bound_corollary2(BoundInput(0.2, 0.1, 0.1), unit);
    const double q_expected = 1.3 * std::log(13.0 / 11.0) - 1.1 * std::log(13.0 / 11.0);
    CHECK(mid.q == doctest::Approx(q_expected).epsilon(1e-13));          // 0.0334108
    CHECK(mid.q2 == doctest::Approx(0.2 * std::log1p(0.2)).epsilon(1e-15));  // 0.0364643
    CHECK(mid.q < mid.q2);

    // q <= q2 across a grid
    for (int a = 0; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int tt = 0; tt <= 10; ++tt) {
                const double alpha = a / 20.0, beta = b / 20.0, t = tt / 10.0;
                if (t < std::abs(alpha - beta)) continue;
                const CorollaryTwoBounds c2 = bound_corollary2(BoundInput(t, alpha, beta), unit);
                CHECK(c2.q <= c2.q2 + 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(bound_corollary2(BoundInput(1.5, 0.0, 0.1), unit), std::domain_error);
}

TEST_CASE("non-normalised equality family") {
    {
        const auto [a, b] = extremal_pair_proposition(1.0, 0.5);
        CHECK(a(0, 0).real() == 2.0);
        CHECK(a(1, 1).real() == 0.5);
        CHECK(b(0, 0).real() == 1.0);
        CHECK(b(1, 1).real() == 1.5);
        const double expected = 2.0 * std::log(2.0) - 0.5 * std::log(3.0);
        CHECK(relative_entropy(a, b).value() == doctest::Approx(expected).epsilon(1e-14));
    }
    {
        const auto [a, b] = extremal_pair_proposition(0.5, 1.0);
        const double expected = 0.5 * std::log(1.5);  // 0.2027326
        CHECK(relative_entropy(a, b).value() == doctest::Approx(expected).epsilon(1e-13));
    }

    // equality across the feasible grid
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double t = 2.0 * i / 19.0;
            const double alpha = 2.0 * j / 19.0;
            if (alpha <= 0.0 || t < std::abs(alpha - 1.0)) continue;
            const auto [a, b] = extremal_pair_proposition(t, alpha);
            CHECK(std::abs(a.trace() - b.trace()) <= 1e-12);
            CHECK(trace_distance(a, b) == doctest::Approx(t).epsilon(1e-12));
            CHECK(std::abs(relative_entropy(a, b).value() - bound_proposition(t, alpha)) <=
                  1e-10);
        }
    }

    CHECK_THROWS_AS(extremal_pair_proposition(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(extremal_pair_proposition(0.2, 0.5), std::domain_error);
}

TEST_CASE("density equality family") {
    {
        const BoundInput in(0.2, 0.1, 0.1, 3);
        const auto [rho, sigma] = equality_states_theorem(in, 3);
        CHECK(rho(0, 0).real() == doctest::Approx(0.3).epsilon(1e-15));
        CHECK(rho(1, 1).real() == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(rho(2, 2).real() == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(sigma(0, 0).real() == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(sigma(1, 1).real() == doctest::Approx(0.3).epsilon(1e-15));
        CHECK(sigma(2, 2).real() == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(relative_entropy(rho, sigma).value() ==
              doctest::Approx(0.2 * std::log(3.0)).epsilon(1e-14));
    }
    {
        const auto [rho, sigma] = equality_states_theorem(BoundInput(0.0, 0.2, 0.2), 3);
        CHECK((rho - sigma).max_abs() == 0.0);
        CHECK(relative_entropy(rho, sigma).value() == doctest::Approx(0.0).epsilon(1e-13));
    }

    // grid of feasible points at d = 3 and d = 4: equality to 1e-10
    for (int d : {3, 4}) {
        for (int ai = 1; ai <= 10; ++ai) {
            for (int bi = 1; bi <= 10; ++bi) {
                for (int ti = 1; ti <= 8; ++ti) {
                    const double alpha = 0.02 * ai, beta = 0.02 * bi, t = 0.05 * ti;
                    if (t < std::abs(alpha - beta)) continue;
                    const double r = (1.0 - alpha - beta - t) / (d - 2);
                    if (r < std::max(alpha, beta)) continue;
                    const BoundInput in(t, alpha, beta, d);
                    const auto [rho, sigma] = equality_states_theorem(in, d);
                    CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
                    CHECK(std::abs(sigma.trace() - 1.0) <= 1e-12);
                    CHECK(min_eigenvalue(rho) == doctest::Approx(alpha).epsilon(1e-13));
                    CHECK(min_eigenvalue(sigma) == doctest::Approx(beta).epsilon(1e-13));
                    CHECK(trace_distance(rho, sigma) == doctest::Approx(t).epsilon(1e-12));
                    CHECK(std::abs(relative_entropy(rho, sigma).value() - bound_theorem(in)) <=
                          1e-10);
                }
            }
        }
    }

    CHECK_THROWS_AS(equality_states_theorem(BoundInput(0.2, 0.1, 0.1), 2), std::domain_error);
    // padding infeasible: r = 0.1 < max(alpha, beta) = 0.3 at d=3, worse at d=4
    CHECK_THROWS_AS(equality_states_theorem(BoundInput(0.3, 0.3, 0.3), 3), std::domain_error);
    CHECK_THROWS_AS(equality_states_theorem(BoundInput(0.3, 0.3, 0.3), 4), std::domain_error);
}

TEST_CASE("regularised equality family") {
    {
        const auto [rho, sigma] = equality_states_corollary2(0.0);
        CHECK((rho - sigma).max_abs() == 0.0);
    }
    const RegularisationConfig unit(3, 1.0);
    for (int k = 0; k <= 10; ++k) {
        const double t = k / 10.0;
        const auto [rho, sigma] = equality_states_corollary2(t);
        CHECK(trace_distance(rho, sigma) == doctest::Approx(t).epsilon(1e-13));
        CHECK(std::abs(regularised_relative_entropy(rho, sigma, unit) - t * std::log1p(t)) <=
              1e-12);
    }
    {
        const auto [rho, sigma] = equality_states_corollary2(1.0);
        const double s = regularised_relative_entropy(rho, sigma, unit);
        CHECK(std::abs(s - std::log(2.0)) <= 1e-12);
    }
    CHECK_THROWS_AS(equality_states_corollary2(-0.1), std::domain_error);
    CHECK_THROWS_AS(equality_states_corollary2(1.1), std::domain_error);
}

TEST_CASE("sampled density pairs respect every bound") {
    SamplerConfig cfg;
    cfg.dim = 3;
    cfg.seed = 2;
    const RegularisationConfig unit(3, 1.0);
    for (int i = 0; i < 300; ++i) {
        const auto base = cfg.for_sample(static_cast<std::uint64_t>(i));
        const HermitianMatrix rho = sample_density_matrix(base.for_sample(0));
        const HermitianMatrix sigma = sample_density_matrix(base.for_sample(1));
        const double t = trace_distance(rho, sigma);
        const double alpha = std::max(0.0, min_eigenvalue(rho));
        const double beta = min_eigenvalue(sigma);
        if (!(beta > 0.0)) continue;
        const ExtendedReal s = relative_entropy(rho, sigma);
        if (s.is_infinite()) continue;
        const BoundInput in(t, alpha, beta, 3);
        CHECK(s.value() <= bound_theorem(in) + 1e-9);
        CHECK(s.value() <= bound_corollary1(t, beta) + 1e-9);
        const double r = regularised_relative_entropy(rho, sigma, unit);
        const CorollaryTwoBounds c2 = bound_corollary2(in, unit);
        CHECK(r <= c2.q + 1e-9);
        CHECK(r <= c2.q2 + 1e-9);
    }
}
