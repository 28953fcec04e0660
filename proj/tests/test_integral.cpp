#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entrobound/entropy.hpp"
#include "entrobound/integral.hpp"
#include "entrobound/sampling.hpp"

using namespace entrobound;

namespace {

SamplerConfig pd_config(int dim, std::uint64_t seed, double floor, double cap) {
    SamplerConfig cfg;
    cfg.dim = dim;
    cfg.seed = seed;
    cfg.min_eigenvalue_floor = floor;
    cfg.condition_cap = cap;
    return cfg;
}

}  // namespace

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
    // degree 2n-1 exactness: integral_0^1 x^7 dx = 1/8 with 4 nodes
    double acc = 0.0;
    for (const QuadratureNode& node : gauss_legendre_unit(4)) {
        acc += node.w * std::pow(node.x, 7);
    }
    CHECK(acc == doctest::Approx(0.125).epsilon(1e-14));

    double total = 0.0;
    for (const QuadratureNode& node : gauss_legendre_unit(200)) total += node.w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(QuadratureSpec(1), std::invalid_argument);
}

TEST_CASE("log quadrature of the identity vanishes") {
    CHECK(log_quadrature(HermitianMatrix::identity(3), QuadratureSpec(200)).max_abs() <= 1e-10);
}

TEST_CASE("log quadrature matches the scalar log") {
    const HermitianMatrix m = HermitianMatrix::diagonal({2.0});
    const HermitianMatrix lg = log_quadrature(m, QuadratureSpec(200));
    CHECK(std::abs(lg(0, 0).real() - std::log(2.0)) <= 1e-8);
}

TEST_CASE("log quadrature agrees with the spectral log and converges") {
    double err50 = 0.0, err100 = 0.0, err200 = 0.0;
    for (int i = 0; i < 20; ++i) {
        SamplerConfig cfg = pd_config(4, derive_stream_seed(600, static_cast<std::uint64_t>(i)),
                                      0.005, 100.0);
        const HermitianMatrix m = sample_pd_matrix(cfg);
        const HermitianMatrix exact = matrix_log(m);
        err50 = std::max(err50, (log_quadrature(m, QuadratureSpec(50)) - exact).max_abs());
        err100 = std::max(err100, (log_quadrature(m, QuadratureSpec(100)) - exact).max_abs());
        err200 = std::max(err200, (log_quadrature(m, QuadratureSpec(200)) - exact).max_abs());
    }
    CHECK(err200 <= 1e-6);
    CHECK(err100 < err50);
    CHECK(err200 < err100);
}

TEST_CASE("log quadrature rejects non-PD input") {
    CHECK_THROWS_AS(log_quadrature(HermitianMatrix::diagonal({1.0, -0.5}), QuadratureSpec(100)),
                    std::domain_error);
}

TEST_CASE("t_super identities") {
    const SamplerConfig cfg = pd_config(4, 51, 0.05, 30.0);
    const HermitianMatrix a = sample_pd_matrix(cfg);
    const HermitianMatrix eye = HermitianMatrix::identity(4);

    CHECK((t_super(a, a) - eye).max_abs() <= 1e-10);
    CHECK((t_super_quadrature(a, a, QuadratureSpec(200)) - eye).max_abs() <= 1e-6);

    // identity base point: the map is the identity map
    const HermitianMatrix delta = sample_traceless_hermitian(cfg, 1.0);
    CHECK((t_super(eye, delta) - delta).max_abs() <= 1e-12);

    CHECK(t_super_quadrature(a, HermitianMatrix::zero(4), QuadratureSpec(100)).max_abs() == 0.0);
}

TEST_CASE("t_super scalar case") {
    // integral_0^inf 3/(2+s)^2 ds = 3/2
    const HermitianMatrix a = HermitianMatrix::diagonal({2.0});
    const HermitianMatrix delta = HermitianMatrix::diagonal({3.0});
    const HermitianMatrix ts = t_super_quadrature(a, delta, QuadratureSpec(200));
    CHECK(std::abs(ts(0, 0).real() - 1.5) <= 1e-8);
    CHECK(std::abs(t_super(a, delta)(0, 0).real() - 1.5) <= 1e-14);
}

TEST_CASE("t_super closed form matches quadrature") {
    for (int i = 0; i < 10; ++i) {
        SamplerConfig cfg = pd_config(2 + i % 4, derive_stream_seed(700, static_cast<std::uint64_t>(i)),
                                      0.05, 50.0);
        const HermitianMatrix a = sample_pd_matrix(cfg);
        SamplerConfig dcfg = cfg;
        dcfg.seed = derive_stream_seed(701, static_cast<std::uint64_t>(i));
        const HermitianMatrix delta = sample_traceless_hermitian(dcfg, 1.0);
        CHECK((t_super(a, delta) - t_super_quadrature(a, delta, QuadratureSpec(200))).max_abs() <=
              1e-6);
    }
}

TEST_CASE("t_super kernel handling") {
    // PSD base with a kernel annihilating the direction: fine
    const HermitianMatrix a = HermitianMatrix::diagonal({1.0, 2.0, 0.0});
    const HermitianMatrix delta_ok = HermitianMatrix::diagonal({0.5, -0.5, 0.0});
    const HermitianMatrix ts = t_super(a, delta_ok);
    CHECK(ts(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ts(2, 2).real() == 0.0);

    // direction with weight on the kernel: rejected
    const HermitianMatrix delta_bad = HermitianMatrix::diagonal({0.5, 0.0, -0.5});
    CHECK_THROWS_AS(t_super(a, delta_bad), std::domain_error);
    // clearly negative base: rejected
    CHECK_THROWS_AS(t_super(HermitianMatrix::diagonal({1.0, -0.5}),
                            HermitianMatrix::diagonal({0.5, -0.5})),
                    std::domain_error);
}

TEST_CASE("t_super with exactly repeated eigenvalues") {
    SamplerConfig cfg = pd_config(4, 83, 0.05, 10.0);
    const EigenDecomposition basis = eigh(sample_traceless_hermitian(cfg, 1.0));
    const EigenDecomposition synth{{0.5, 0.5, 1.5, 1.5}, basis.eigenvectors};
    const HermitianMatrix a = spectral_map(synth, [](double x) { return x; });
    SamplerConfig dcfg = cfg;
    dcfg.seed = 84;
    const HermitianMatrix delta = sample_traceless_hermitian(dcfg, 1.0);
    CHECK((t_super(a, delta) - t_super_quadrature(a, delta, QuadratureSpec(200))).max_abs() <=
          1e-6);
}

TEST_CASE("log directional derivative checks") {
    const SamplerConfig cfg = pd_config(4, 61, 0.1, 100.0);
    const HermitianMatrix delta = sample_traceless_hermitian(cfg, 1.0);

    CHECK(log_directional_derivative_check(HermitianMatrix::identity(4), delta, 1e-5) <= 1e-8);

    const HermitianMatrix a = sample_pd_matrix(cfg);
    CHECK(log_directional_derivative_check(a, delta, 1e-5) <= 1e-5);

    // direction equal to the base point: both sides scalar calculus
    CHECK(log_directional_derivative_check(a, a, 1e-5) <= 1e-8);

    CHECK_THROWS_AS(log_directional_derivative_check(a, delta, 0.0), std::invalid_argument);
    // step so large the backward point leaves the cone
    CHECK_THROWS_AS(log_directional_derivative_check(
                        HermitianMatrix::diagonal({0.1, 1.0}),
                        HermitianMatrix::diagonal({1.0, 0.0}), 0.5),
                    std::domain_error);
}

TEST_CASE("path integral examples") {
    const HermitianMatrix a = HermitianMatrix::diagonal({2.0, 0.5});
    CHECK(std::abs(relative_entropy_path_integral(LinearPath(a, a), QuadratureSpec(100))) <=
          1e-12);

    const HermitianMatrix b = HermitianMatrix::diagonal({1.0, 1.5});
    const double expected = 2.0 * std::log(2.0) + 0.5 * std::log(1.0 / 3.0);  // 0.836988
    CHECK(std::abs(relative_entropy_path_integral(LinearPath(a, b), QuadratureSpec(200)) -
                   expected) <= 1e-6);

    CHECK_THROWS_AS(LinearPath(a, HermitianMatrix::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(relative_entropy_path_integral(
                        LinearPath(a, HermitianMatrix::diagonal({2.5, -0.2})),
                        QuadratureSpec(100)),
                    std::domain_error);
}

TEST_CASE("path integral matches the spectral relative entropy") {
    double err100 = 0.0, err200 = 0.0;
    for (int i = 0; i < 10; ++i) {
        SamplerConfig cfg = pd_config(2 + i % 5, derive_stream_seed(800, static_cast<std::uint64_t>(i)),
                                      0.02, 100.0);
        const auto [a, b] = sample_equal_trace_pd_pair(cfg);
        const double spectral = relative_entropy(a, b).value();
        const LinearPath path(a, b);
        err100 = std::max(err100,
                          std::abs(relative_entropy_path_integral(path, QuadratureSpec(100)) -
                                   spectral));
        err200 = std::max(err200,
                          std::abs(relative_entropy_path_integral(path, QuadratureSpec(200)) -
                                   spectral));
    }
    CHECK(err200 <= 1e-6);
    CHECK(err200 <= err100);
}
