#include "entrobound/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entrobound {

double GaussianStream::next() {
    if (has_spare) {
        has_spare = false;
        return spare;
    }
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare = radius * std::sin(angle);
    has_spare = true;
    return radius * std::cos(angle);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return g.next();
}

SamplerConfig SamplerConfig::for_sample(std::uint64_t index) const {
    SamplerConfig out = *this;
    out.seed = derive_stream_seed(seed, index);
    return out;
}

namespace {

void validate(const SamplerConfig& cfg) {
    if (cfg.dim < 1 || cfg.dim > kMaxDim) {
        throw std::invalid_argument("sampler dimension out of range: " + std::to_string(cfg.dim));
    }
    if (cfg.min_eigenvalue_floor < 0.0) {
        throw std::invalid_argument("min_eigenvalue_floor must be nonnegative");
    }
    if (cfg.condition_cap <= 1.0) {
        throw std::invalid_argument("condition_cap must exceed 1");
    }
}

ComplexMatrix ginibre(int dim, GaussianStream& g) {
    ComplexMatrix out(dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out(i, j) = Complex(g.next(), g.next()) * inv_sqrt2;
    return out;
}

HermitianMatrix wishart(int dim, GaussianStream& g) {
    const ComplexMatrix gm = ginibre(dim, g);
    return HermitianMatrix::hermitian_part(gm * gm.adjoint());
}

// GUE draw; its eigenbasis serves as a Haar-like random unitary.
HermitianMatrix gaussian_hermitian(int dim, GaussianStream& g) {
    return HermitianMatrix::hermitian_part(ginibre(dim, g));
}

}  // namespace

HermitianMatrix sample_density_matrix(const SamplerConfig& cfg) {
    validate(cfg);
    const int d = cfg.dim;
    const double floor = cfg.min_eigenvalue_floor;
    if (floor * d > 1.0 + 1e-12) {
        throw std::invalid_argument("min_eigenvalue_floor * dim must not exceed 1");
    }

    GaussianStream g(cfg.seed);
    HermitianMatrix w = wishart(d, g);
    const double tr = w.trace();
    HermitianMatrix rho = (1.0 / tr) * w;

    const double lmin = min_eigenvalue(rho);
    if (lmin < floor && d > 1) {
        // smallest mixing weight with I/d that lifts lambda_min to the floor
        const double denom = 1.0 / d - lmin;
        double eps = denom > 0.0 ? (floor - lmin) / denom : 0.0;
        eps = std::min(std::max(eps, 0.0), 1.0);
        rho = (1.0 - eps) * rho + (eps / d) * HermitianMatrix::identity(d);
    } else if (d == 1) {
        rho = HermitianMatrix::diagonal({1.0});
    }
    return rho;
}

std::pair<HermitianMatrix, HermitianMatrix> sample_equal_trace_pd_pair(const SamplerConfig& cfg) {
    validate(cfg);
    const int d = cfg.dim;
    const double floor = cfg.min_eigenvalue_floor;
    const double cap = cfg.condition_cap;

    for (int attempt = 0; attempt < 100; ++attempt) {
        GaussianStream g(derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(attempt)));

        auto draw = [&]() {
            HermitianMatrix w = wishart(d, g);
            w = (d / w.trace()) * w;  // trace d, eigenvalues O(1)
            EigenDecomposition eig = eigh(w);
            const double lmin = eig.eigenvalues.front();
            const double lmax = eig.eigenvalues.back();
            // diagonal shift fixing both the condition cap and the floor
            double shift = std::max(0.0, (lmax - cap * lmin) / (cap - 1.0));
            shift = std::max(shift, floor - lmin);
            return shift > 0.0 ? w.shifted(shift) : w;
        };

        HermitianMatrix a = draw();
        HermitianMatrix b = draw();
        b = (a.trace() / b.trace()) * b;

        EigenDecomposition eb = eigh(b);
        const double bmin = eb.eigenvalues.front();
        const double bmax = eb.eigenvalues.back();
        if (bmin <= 0.0 || bmin < floor - 1e-12) continue;
        if (bmax > cap * bmin * (1.0 + 1e-12)) continue;
        if (min_eigenvalue(a) <= 0.0) continue;
        return {std::move(a), std::move(b)};
    }
    throw std::runtime_error("sample_equal_trace_pd_pair: no admissible pair in 100 attempts");
}

HermitianMatrix sample_traceless_hermitian(const SamplerConfig& cfg, double norm) {
    validate(cfg);
    if (!(norm > 0.0)) throw std::invalid_argument("trace norm target must be positive");

    for (int attempt = 0; attempt < 100; ++attempt) {
        GaussianStream g(derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(attempt)));
        HermitianMatrix h = gaussian_hermitian(cfg.dim, g);
        h = h.shifted(-h.trace() / cfg.dim);
        const double tn = trace_norm(h);
        if (tn <= 1e-300) continue;  // degenerate zero draw
        return (norm / tn) * h;
    }
    throw std::runtime_error("sample_traceless_hermitian: degenerate draws in 100 attempts");
}

HermitianMatrix sample_pd_matrix(const SamplerConfig& cfg) {
    validate(cfg);
    const double floor = cfg.min_eigenvalue_floor;
    if (!(floor > 0.0)) {
        throw std::invalid_argument("sample_pd_matrix requires a strictly positive floor");
    }
    const int d = cfg.dim;

    GaussianStream g(cfg.seed);
    if (d == 1) return HermitianMatrix::diagonal({floor});

    const double log_cap = std::log(cfg.condition_cap);
    std::vector<double> spectrum(static_cast<std::size_t>(d));
    spectrum.front() = floor;
    spectrum.back() = floor * cfg.condition_cap;
    // interior eigenvalues log-uniform across the pinned range;
    // consume the GUE draw first so the basis and spectrum streams are fixed
    HermitianMatrix basis_seed = gaussian_hermitian(d, g);
    for (int i = 1; i + 1 < d; ++i) {
        spectrum[static_cast<std::size_t>(i)] = floor * std::exp(g.rng.uniform() * log_cap);
    }

    std::sort(spectrum.begin(), spectrum.end());
    EigenDecomposition basis = eigh(basis_seed);
    EigenDecomposition synth{std::move(spectrum), basis.eigenvectors};
    return spectral_map(synth, [](double x) { return x; });
}

}  // namespace entrobound
