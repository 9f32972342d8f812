#include "pnc/sim.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "pnc/metrics.hpp"
#include "pnc/voronoi.hpp"

namespace pnc {

int worker_count() {
    if (const char* env = std::getenv("PNC_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::complex<double> modulate(GInt w, const ResidueField& field) {
    if (!field.contains(w)) throw std::domain_error("modulate: not a field element");
    return to_complex(w) / field.mu();
}

namespace {

struct JointPoint {
    GInt wA;
    GInt wB;
    std::complex<double> signal;
};

// Noiseless received points for every joint symbol, in the deterministic
// (wA, wB) element order (which is also the decoding tie-break order).
std::vector<JointPoint> constellation(const ChannelConfig& config) {
    std::vector<JointPoint> pts;
    const double inv_mu = 1.0 / config.field.mu();
    for (GInt wA : config.field.elements()) {
        for (GInt wB : config.field.elements()) {
            pts.push_back({wA, wB,
                           (config.hA * to_complex(wA) + config.hB * to_complex(wB)) * inv_mu});
        }
    }
    return pts;
}

std::size_t decode_joint(std::complex<double> y, const std::vector<JointPoint>& pts) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const double d = std::norm(y - pts[j].signal);
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based per-trial stream: every draw depends only on (seed, trial),
// never on which worker runs the trial.
struct TrialRng {
    std::uint64_t state;

    TrialRng(std::uint64_t seed, std::int64_t trial)
        : state(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(trial))) {}

    std::uint64_t next() {
        state = splitmix64(state);
        return state;
    }

    std::int64_t uniform_index(std::int64_t n) {
        return static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
    }

    double uniform01() {  // in (0, 1]
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;
    }

    std::complex<double> gaussian_pair() {  // standard complex normal, unit total variance
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log(u1));  // each component has variance 1/2
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }
};

struct TrialDraw {
    std::int64_t iA;
    std::int64_t iB;
    std::complex<double> noise;  // scaled to variance N0
};

TrialDraw draw_trial(std::uint64_t seed, std::int64_t trial, std::int64_t n_elements, double sigma) {
    TrialRng rng(seed, trial);
    TrialDraw d;
    d.iA = rng.uniform_index(n_elements);
    d.iB = rng.uniform_index(n_elements);
    d.noise = rng.gaussian_pair() * sigma;
    return d;
}

double noise_scale(const ChannelConfig& config) {
    const double n0 = std::pow(10.0, -config.snr_db / 10.0);  // P = 1
    return std::sqrt(n0);
}

SerEstimate finalize(std::int64_t trials, std::int64_t errors) {
    SerEstimate est;
    est.trials = trials;
    est.errors = errors;
    est.ser = static_cast<double>(errors) / static_cast<double>(trials);
    est.half_width_95 = 1.96 * std::sqrt(est.ser * (1.0 - est.ser) / static_cast<double>(trials));
    return est;
}

// Runs fn(trial) over [0, trials) on the worker pool and sums the returned
// error indicators.
template <typename Fn>
std::int64_t count_errors(std::int64_t trials, Fn&& fn) {
    const int workers = worker_count();
    std::vector<std::int64_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::int64_t local = 0;
            for (std::int64_t t = w; t < trials; t += workers) local += fn(t);
            partial[static_cast<std::size_t>(w)] = local;
        });
    }
    for (auto& th : pool) th.join();
    std::int64_t total = 0;
    for (std::int64_t p : partial) total += p;
    return total;
}

}  // namespace

GInt decode_nc(std::complex<double> y, const ChannelConfig& config, const NcMapping& m) {
    const auto pts = constellation(config);
    const JointPoint& hat = pts[decode_joint(y, pts)];
    return nc_map(m, hat.wA, hat.wB, config.field);
}

SerEstimate estimate_ser(const ChannelConfig& config, const NcMapping& m, std::int64_t trials,
                         std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("need at least one trial");
    validate_mapping(m, config.field);
    const auto pts = constellation(config);
    const std::int64_t n = config.field.size();
    const double sigma = noise_scale(config);

    // NC symbol of every joint index under m, precomputed once.
    std::vector<GInt> nc_of(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) nc_of[j] = nc_map(m, pts[j].wA, pts[j].wB, config.field);

    const std::int64_t errors = count_errors(trials, [&](std::int64_t t) -> std::int64_t {
        const TrialDraw d = draw_trial(seed, t, n, sigma);
        const std::size_t true_idx = static_cast<std::size_t>(d.iA * n + d.iB);
        const std::complex<double> y = pts[true_idx].signal + d.noise;
        const std::size_t hat = decode_joint(y, pts);
        return nc_of[hat] == nc_of[true_idx] ? 0 : 1;
    });
    return finalize(trials, errors);
}

std::vector<CompareRow> compare_mappings(const ChannelConfig& config, std::int64_t trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("need at least one trial");
    const auto pts = constellation(config);
    const std::int64_t n = config.field.size();
    const double sigma = noise_scale(config);

    std::vector<NcMapping> mappings;
    for (GInt alpha : config.field.elements()) {
        if (!is_zero(alpha)) mappings.push_back({alpha, GInt{1, 0}});
    }

    // Which canonical mapping is d_min-optimal at this channel's eta.
    const std::complex<double> eta = config.hA / config.hB;
    const auto delta = build_delta_table(config.field);
    const NcMapping best_m = optimal_mapping_bruteforce(eta, config.field, delta).mapping;

    std::vector<std::vector<GInt>> nc_of(mappings.size(), std::vector<GInt>(pts.size()));
    for (std::size_t mi = 0; mi < mappings.size(); ++mi) {
        for (std::size_t j = 0; j < pts.size(); ++j)
            nc_of[mi][j] = nc_map(mappings[mi], pts[j].wA, pts[j].wB, config.field);
    }

    // Common random numbers: one joint decode per trial feeds every row.
    const int workers = worker_count();
    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(workers), std::vector<std::int64_t>(mappings.size(), 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            auto& local = partial[static_cast<std::size_t>(w)];
            for (std::int64_t t = w; t < trials; t += workers) {
                const TrialDraw d = draw_trial(seed, t, n, sigma);
                const std::size_t true_idx = static_cast<std::size_t>(d.iA * n + d.iB);
                const std::complex<double> y = pts[true_idx].signal + d.noise;
                const std::size_t hat = decode_joint(y, pts);
                if (hat == true_idx) continue;
                for (std::size_t mi = 0; mi < mappings.size(); ++mi) {
                    if (nc_of[mi][hat] != nc_of[mi][true_idx]) ++local[mi];
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    std::vector<CompareRow> rows;
    for (std::size_t mi = 0; mi < mappings.size(); ++mi) {
        std::int64_t errs = 0;
        for (int w = 0; w < workers; ++w) errs += partial[static_cast<std::size_t>(w)][mi];
        rows.push_back({mappings[mi], finalize(trials, errs), mappings[mi] == best_m});
    }
    return rows;
}

}  // namespace pnc
