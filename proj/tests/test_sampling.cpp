#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "entrobound/bounds.hpp"
#include "entrobound/sampling.hpp"

using namespace entrobound;

TEST_CASE("density sampler guarantees") {
    SamplerConfig cfg;
    cfg.dim = 4;
    cfg.seed = 42;
    for (int i = 0; i < 50; ++i) {
        const HermitianMatrix rho = sample_density_matrix(cfg.for_sample(static_cast<std::uint64_t>(i)));
        CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
        CHECK(is_psd(rho, 1e-12));
    }
}

TEST_CASE("density sampler eigenvalue floor") {
    SamplerConfig cfg;
    cfg.dim = 4;
    cfg.seed = 7;
    cfg.min_eigenvalue_floor = 0.05;
    for (int i = 0; i < 50; ++i) {
        const HermitianMatrix rho = sample_density_matrix(cfg.for_sample(static_cast<std::uint64_t>(i)));
        CHECK(min_eigenvalue(rho) >= 0.05 - 1e-12);
    }
    cfg.min_eigenvalue_floor = 0.5;  // 0.5 * 4 > 1
    CHECK_THROWS_AS(sample_density_matrix(cfg), std::invalid_argument);
}

TEST_CASE("density sampler is bit-stable") {
    SamplerConfig cfg;
    cfg.dim = 3;
    cfg.seed = 42;
    const HermitianMatrix a = sample_density_matrix(cfg);
    const HermitianMatrix b = sample_density_matrix(cfg);
    CHECK((a - b).max_abs() == 0.0);

    SamplerConfig other = cfg;
    other.seed = 43;
    CHECK((a - sample_density_matrix(other)).max_abs() > 0.0);
}

TEST_CASE("sampler output is independent of calling thread") {
    SamplerConfig cfg;
    cfg.dim = 4;
    cfg.seed = 404;
    const HermitianMatrix reference = sample_density_matrix(cfg);
    std::vector<HermitianMatrix> results(4, HermitianMatrix::zero(4));
    std::vector<std::thread> pool;
    for (int k = 0; k < 4; ++k) {
        pool.emplace_back([&, k] { results[static_cast<std::size_t>(k)] = sample_density_matrix(cfg); });
    }
    for (std::thread& th : pool) th.join();
    for (const HermitianMatrix& m : results) CHECK((m - reference).max_abs() == 0.0);
}

TEST_CASE("equal-trace PD pair sampler") {
    SamplerConfig cfg;
    cfg.dim = 5;
    cfg.seed = 123;
    cfg.min_eigenvalue_floor = 0.02;
    cfg.condition_cap = 50.0;
    for (int i = 0; i < 30; ++i) {
        const auto [a, b] = sample_equal_trace_pd_pair(cfg.for_sample(static_cast<std::uint64_t>(i)));
        CHECK(std::abs(a.trace() - b.trace()) <= 1e-12);
        const EigenDecomposition ea = eigh(a);
        const EigenDecomposition eb = eigh(b);
        CHECK(ea.eigenvalues.front() >= 0.02 - 1e-12);
        CHECK(eb.eigenvalues.front() >= 0.02 - 1e-12);
        CHECK(ea.eigenvalues.back() <= 50.0 * ea.eigenvalues.front() * (1.0 + 1e-10));
        CHECK(eb.eigenvalues.back() <= 50.0 * eb.eigenvalues.front() * (1.0 + 1e-10));
        CHECK(feasibility_gap(a, b) >= -1e-10);
    }
}

TEST_CASE("traceless sampler") {
    SamplerConfig cfg;
    cfg.dim = 4;
    cfg.seed = 5;
    for (int i = 0; i < 30; ++i) {
        const HermitianMatrix delta =
            sample_traceless_hermitian(cfg.for_sample(static_cast<std::uint64_t>(i)), 1.3);
        CHECK(std::abs(delta.trace()) <= 1e-12);
        CHECK(std::abs(trace_norm(delta) - 1.3) <= 1e-12);
        CHECK(operator_norm(delta) <= 0.5 * 1.3 + 1e-12);
    }
    CHECK_THROWS_AS(sample_traceless_hermitian(cfg, 0.0), std::invalid_argument);
}

TEST_CASE("pd sampler pins the spectrum range") {
    SamplerConfig cfg;
    cfg.dim = 5;
    cfg.seed = 99;
    cfg.min_eigenvalue_floor = 0.01;
    cfg.condition_cap = 80.0;
    const HermitianMatrix m = sample_pd_matrix(cfg);
    const EigenDecomposition eig = eigh(m);
    CHECK(eig.eigenvalues.front() == doctest::Approx(0.01).epsilon(1e-10));
    CHECK(eig.eigenvalues.back() == doctest::Approx(0.8).epsilon(1e-10));

    cfg.min_eigenvalue_floor = 0.0;
    CHECK_THROWS_AS(sample_pd_matrix(cfg), std::invalid_argument);
}

TEST_CASE("sampler explores near-singular states") {
    SamplerConfig cfg;
    cfg.dim = 3;
    cfg.seed = 2024;
    double min_seen = 1.0;
    for (int i = 0; i < 1000; ++i) {
        min_seen = std::min(min_seen, min_eigenvalue(sample_density_matrix(
                                          cfg.for_sample(static_cast<std::uint64_t>(i)))));
    }
    CHECK(min_seen < 0.01);
}
