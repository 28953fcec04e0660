#include "entrobound/sharpness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

namespace entrobound {

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::theorem: return "theorem";
        case BoundKind::corollary1: return "cor1";
        case BoundKind::corollary2_q: return "cor2q";
        case BoundKind::corollary2_q2: return "cor2q2";
    }
    return "?";
}

std::optional<BoundKind> bound_kind_from_string(const std::string& name) {
    if (name == "theorem") return BoundKind::theorem;
    if (name == "cor1") return BoundKind::corollary1;
    if (name == "cor2q") return BoundKind::corollary2_q;
    if (name == "cor2q2") return BoundKind::corollary2_q2;
    return std::nullopt;
}

std::optional<SlackRecord> evaluate_pair_slack(const HermitianMatrix& rho,
                                               const HermitianMatrix& sigma, BoundKind which) {
    const double t = trace_distance(rho, sigma);
    const double alpha = std::max(0.0, min_eigenvalue(rho));
    const double beta = std::max(0.0, min_eigenvalue(sigma));

    SlackRecord rec{t, alpha, beta, 0.0, 0.0, 0.0};
    try {
        switch (which) {
            case BoundKind::theorem:
            case BoundKind::corollary1: {
                if (!(beta > 0.0)) return std::nullopt;  // bound diverges on singular sigma
                const ExtendedReal s = relative_entropy(rho, sigma);
                if (s.is_infinite()) return std::nullopt;
                rec.entropy = s.value();
                rec.bound = which == BoundKind::theorem
                                ? bound_theorem(BoundInput(t, alpha, beta))
                                : bound_corollary1(t, beta);
                break;
            }
            case BoundKind::corollary2_q:
            case BoundKind::corollary2_q2: {
                const RegularisationConfig cfg(rho.dim(), 1.0);
                rec.entropy = regularised_relative_entropy(rho, sigma, cfg);
                const CorollaryTwoBounds b = bound_corollary2(t, alpha, beta, cfg);
                rec.bound = which == BoundKind::corollary2_q ? b.q : b.q2;
                break;
            }
        }
    } catch (const std::domain_error&) {
        return std::nullopt;  // pair outside the bound's hypotheses; skip and count
    }
    rec.slack = rec.bound - rec.entropy;
    return rec;
}

double FuzzResult::min_slack() const {
    if (records.empty()) return std::numeric_limits<double>::infinity();
    return records.front().slack;
}

long FuzzResult::violations(double tol) const {
    return std::count_if(records.begin(), records.end(),
                         [tol](const SlackRecord& r) { return r.slack < -tol; });
}

namespace {

bool record_less(const SlackRecord& a, const SlackRecord& b) {
    auto key = [](const SlackRecord& r) {
        return std::array<double, 6>{r.slack, r.t, r.alpha, r.beta, r.entropy, r.bound};
    };
    return key(a) < key(b);
}

}  // namespace

FuzzResult fuzz_slack(const SamplerConfig& cfg, long samples, BoundKind which,
                      const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& extra_pairs,
                      int threads) {
    if (samples < 0) throw std::invalid_argument("fuzz_slack: samples must be >= 0");
    threads = std::max(1, threads);

    std::vector<std::optional<SlackRecord>> slots(static_cast<std::size_t>(samples));
    auto worker = [&](long begin, long end) {
        for (long i = begin; i < end; ++i) {
            const auto idx = static_cast<std::uint64_t>(i);
            const HermitianMatrix rho = sample_density_matrix(cfg.for_sample(2 * idx));
            const HermitianMatrix sigma = sample_density_matrix(cfg.for_sample(2 * idx + 1));
            slots[static_cast<std::size_t>(i)] = evaluate_pair_slack(rho, sigma, which);
        }
    };

    if (threads == 1 || samples < 2) {
        worker(0, samples);
    } else {
        const long chunk = (samples + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (long begin = 0; begin < samples; begin += chunk) {
            pool.emplace_back(worker, begin, std::min(begin + chunk, samples));
        }
        for (std::thread& th : pool) th.join();
    }

    FuzzResult out;
    out.records.reserve(slots.size() + extra_pairs.size());
    for (const auto& slot : slots) {
        if (slot) out.records.push_back(*slot);
        else ++out.skipped;
    }
    for (const auto& [rho, sigma] : extra_pairs) {
        if (auto rec = evaluate_pair_slack(rho, sigma, which)) out.records.push_back(*rec);
        else ++out.skipped;
    }
    std::sort(out.records.begin(), out.records.end(), record_less);
    return out;
}

namespace {

// Embeds squared coordinates into {p >= floor, sum p = 1} with the lowest
// entry pinned to the floor (generic case), so the minimal eigenvalue
// constraint holds by construction.
std::vector<double> clamped_simplex(const double* x, int d, double floor_value) {
    std::vector<double> w(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = x[i] * x[i];
    const double lo = *std::min_element(w.begin(), w.end());
    double sum = 0.0;
    for (double& v : w) {
        v -= lo;
        sum += v;
    }
    const double budget = 1.0 - d * floor_value;
    std::vector<double> p(static_cast<std::size_t>(d), floor_value);
    if (sum > 1e-300) {
        for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] += budget * w[static_cast<std::size_t>(i)] / sum;
    } else {
        for (double& v : p) v += budget / d;
    }
    return p;
}

double diagonal_relative_entropy(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) s += p[i] * (std::log(p[i]) - std::log(q[i]));
    }
    return s;
}

double diagonal_distance(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

struct SimplexSearchResult {
    std::vector<double> x;
    double f;
};

// Nelder-Mead with standard coefficients; stops when the value spread over
// the simplex drops below tol or the evaluation budget runs out.
SimplexSearchResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, double step, double tol, int max_iter) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> xs(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

    std::vector<std::size_t> order(n + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&fs](std::size_t a, std::size_t b) {
            return fs[a] < fs[b];
        });
        {
            std::vector<std::vector<double>> xs2(n + 1);
            std::vector<double> fs2(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                xs2[i] = std::move(xs[order[i]]);
                fs2[i] = fs[order[i]];
            }
            xs = std::move(xs2);
            fs = std::move(fs2);
        }
        if (fs[n] - fs[0] <= tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += xs[i][k] / static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + coeff * (centroid[k] - xs[n][k]);
            return x;
        };

        std::vector<double> xr = blend(1.0);
        const double fr = f(xr);
        if (fr < fs[0]) {
            std::vector<double> xe = blend(2.0);
            const double fe = f(xe);
            if (fe < fr) {
                xs[n] = std::move(xe);
                fs[n] = fe;
            } else {
                xs[n] = std::move(xr);
                fs[n] = fr;
            }
            continue;
        }
        if (fr < fs[n - 1]) {
            xs[n] = std::move(xr);
            fs[n] = fr;
            continue;
        }
        if (fr < fs[n]) {
            std::vector<double> xc = blend(0.5);  // outside contraction
            const double fc = f(xc);
            if (fc <= fr) {
                xs[n] = std::move(xc);
                fs[n] = fc;
                continue;
            }
        } else {
            std::vector<double> xc = blend(-0.5);  // inside contraction
            const double fc = f(xc);
            if (fc < fs[n]) {
                xs[n] = std::move(xc);
                fs[n] = fc;
                continue;
            }
        }
        for (std::size_t i = 1; i <= n; ++i) {  // shrink toward the best vertex
            for (std::size_t k = 0; k < n; ++k) xs[i][k] = xs[0][k] + 0.5 * (xs[i][k] - xs[0][k]);
            fs[i] = f(xs[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fs[i] < fs[best]) best = i;
    return {xs[best], fs[best]};
}

}  // namespace

OptimiserResult maximize_entropy_at_constraints(const BoundInput& target, int d, int restarts,
                                                std::uint64_t seed) {
    if (d < 3) throw std::domain_error("maximize_entropy_at_constraints: dimension must be >= 3");
    if (d > 16) throw std::domain_error("maximize_entropy_at_constraints: dimension cap is 16");
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    const double cap = 1.0 / d + 1e-12;
    if (target.alpha() > cap || target.beta() > cap) {
        throw std::domain_error(
            "maximize_entropy_at_constraints: no feasible start, minimal eigenvalue above 1/d");
    }

    const int n = 2 * d;
    constexpr double kPenaltyWeight = 1e6;
    constexpr double kTol = 1e-10;
    constexpr int kMaxIter = 10000;

    auto objective = [&](const std::vector<double>& x) {
        const std::vector<double> p = clamped_simplex(x.data(), d, target.alpha());
        const std::vector<double> q = clamped_simplex(x.data() + d, d, target.beta());
        const double s = diagonal_relative_entropy(p, q);
        const double t = diagonal_distance(p, q);
        return -s + kPenaltyWeight * std::abs(t - target.t());
    };

    std::vector<double> best_x;
    double best_f = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < restarts; ++restart) {
        GaussianStream g(derive_stream_seed(seed, static_cast<std::uint64_t>(restart)));
        std::vector<double> x0(static_cast<std::size_t>(n));
        for (double& v : x0) v = g.next();

        SimplexSearchResult run = nelder_mead(objective, std::move(x0), 0.5, kTol, kMaxIter);
        // re-inflated polish passes around the found vertex
        for (double step : {0.05, 0.005, 0.0005}) {
            run = nelder_mead(objective, std::move(run.x), step, kTol, kMaxIter);
        }
        if (run.f < best_f) {
            best_f = run.f;
            best_x = std::move(run.x);
        }
    }

    OptimiserResult out{
        DiagonalFamily{d, clamped_simplex(best_x.data(), d, target.alpha()),
                       clamped_simplex(best_x.data() + d, d, target.beta())},
        0.0, 0.0, 0.0, 0.0, restarts};
    out.entropy = diagonal_relative_entropy(out.family.rho_diag, out.family.sigma_diag);
    out.distance_residual =
        std::abs(diagonal_distance(out.family.rho_diag, out.family.sigma_diag) - target.t());
    const double rho_min =
        *std::min_element(out.family.rho_diag.begin(), out.family.rho_diag.end());
    const double sigma_min =
        *std::min_element(out.family.sigma_diag.begin(), out.family.sigma_diag.end());
    out.rho_floor_residual = std::abs(rho_min - target.alpha());
    out.sigma_floor_residual = std::abs(sigma_min - target.beta());
    return out;
}

std::vector<SharpnessRow> sharpness_report(const std::vector<BoundInput>& grid, int d,
                                           int restarts, std::uint64_t seed) {
    std::vector<SharpnessRow> rows;
    rows.reserve(grid.size());
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const BoundInput& in = grid[idx];
        const double bound = bound_theorem(in);
        const OptimiserResult opt =
            maximize_entropy_at_constraints(in, d, restarts, derive_stream_seed(seed, idx));
        const double rel_gap = (bound - opt.entropy) / std::max(bound, 1e-12);
        rows.push_back(SharpnessRow{in.t(), in.alpha(), in.beta(), bound, opt.entropy, rel_gap,
                                    opt.distance_residual, rel_gap <= 1e-4});
    }
    return rows;
}

}  // namespace entrobound
