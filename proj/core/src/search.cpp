#include "sqz/search.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace sqz {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

struct Resolved {
    double scan_dt;
    double horizon;
};

Resolved resolve_search(const ModelParams& params, double coupling, const SearchOptions& opts) {
    if (!(coupling > 0.0))
        throw std::invalid_argument("search: coupling must be > 0");
    const double period = 2.0 * std::numbers::pi / std::sqrt(2.0 * coupling * params.n_atoms);
    Resolved r;
    r.scan_dt = opts.scan_dt > 0.0 ? opts.scan_dt : period / 200.0;
    r.horizon = opts.horizon > 0.0 ? opts.horizon : 3.0 * period;
    return r;
}

// Golden-section minimum of f on [lo, hi]; returns the best point seen.
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double tol) {
    double a = lo, b = hi;
    double c1 = b - kGolden * (b - a);
    double c2 = a + kGolden * (b - a);
    double f1 = f(c1), f2 = f(c2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = c2;
            c2 = c1; f2 = f1;
            c1 = b - kGolden * (b - a);
            f1 = f(c1);
        } else {
            a = c1;
            c1 = c2; f1 = f2;
            c2 = a + kGolden * (b - a);
            f2 = f(c2);
        }
    }
    const double t = 0.5 * (a + b);
    return {t, f(t)};
}

void run_indexed(int n, int workers, const std::function<void(int)>& body) {
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = static_cast<int>(std::min(hw == 0 ? 1u : hw, 4u));
    }
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ExtremumResult find_first_squeezing_min(const ModelParams& params, double coupling,
                                        const SearchOptions& opts) {
    params.validate();
    const Resolved rs = resolve_search(params, coupling, opts);
    const Propagator prop(params, coupling);
    const Eigen::VectorXcd a0 = prop.to_spectral(make_initial_css(params));
    auto xi_at = [&](double t) { return squeezing_report(prop.at_time(a0, t)).xi; };

    double f_prev2 = xi_at(0.0);
    double f_prev1 = xi_at(rs.scan_dt);
    for (long k = 2;; ++k) {
        const double t = k * rs.scan_dt;
        if (t > rs.horizon)
            throw std::runtime_error(
                "find_first_squeezing_min: no local minimum of xi before the horizon " +
                std::to_string(rs.horizon) + " (N=" + std::to_string(params.n_atoms) +
                ", coupling=" + std::to_string(coupling) + ")");
        const double f = xi_at(t);
        if (f_prev1 < f_prev2 && f_prev1 < f) {
            const double lo = t - 2.0 * rs.scan_dt;
            const double hi = t;
            const auto [tm, fm] = golden_min(xi_at, lo, hi, opts.refine_tol);
            ExtremumResult res;
            res.kind = ExtremumResult::Kind::squeezing_min;
            res.time = tm;
            res.value = fm;
            res.bracket_lo = lo;
            res.bracket_hi = hi;
            res.refinement_tolerance = opts.refine_tol;
            return res;
        }
        f_prev2 = f_prev1;
        f_prev1 = f;
    }
}

ExtremumResult find_first_jx_max(const ModelParams& params, double coupling,
                                 const SearchOptions& opts) {
    params.validate();
    const Resolved rs = resolve_search(params, coupling, opts);
    const Propagator prop(params, coupling);
    const Eigen::VectorXcd a0 = prop.to_spectral(make_initial_css(params));
    auto moments_at = [&](double t) { return spin_moments(prop.at_time(a0, t)); };
    auto b_at = [&](double t) { return moments_at(t).jzy_sym; };

    const double j = params.j();
    const double b_target = 1e-8 * j * j;

    double t_lo = rs.scan_dt;
    double b_lo = b_at(t_lo);
    for (long k = 2;; ++k) {
        const double t = k * rs.scan_dt;
        if (t > rs.horizon)
            throw std::runtime_error(
                "find_first_jx_max: no sign change of B before the horizon " +
                std::to_string(rs.horizon) + " (N=" + std::to_string(params.n_atoms) +
                ", coupling=" + std::to_string(coupling) + ")");
        const double b = b_at(t);
        if (b_lo < 0.0 && b >= 0.0) {
            const double bracket_lo = t_lo, bracket_hi = t;
            double lo = t_lo, hi = t;
            const double floor_width = 1e-13 * std::max(1.0, hi);
            double mid = 0.5 * (lo + hi), b_mid = b_at(mid);
            while ((hi - lo > opts.refine_tol || std::abs(b_mid) >= b_target) &&
                   hi - lo > floor_width) {
                if (b_mid < 0.0)
                    lo = mid;
                else
                    hi = mid;
                mid = 0.5 * (lo + hi);
                b_mid = b_at(mid);
            }
            if (std::abs(b_mid) >= b_target)
                throw std::runtime_error("find_first_jx_max: could not refine |B| below " +
                                         std::to_string(b_target));
            ExtremumResult res;
            res.kind = ExtremumResult::Kind::jx_max;
            res.time = mid;
            res.value = moments_at(mid).jx;
            res.bracket_lo = bracket_lo;
            res.bracket_hi = bracket_hi;
            res.refinement_tolerance = opts.refine_tol;
            return res;
        }
        t_lo = t;
        b_lo = b;
    }
}

PhasePrediction predict_t0(const ModelParams& params, double coupling) {
    params.validate();
    if (!(coupling > 0.0))
        throw std::domain_error("predict_t0: the pendulum estimate is undefined at zero coupling");
    PhasePrediction p;
    p.omega_eff = std::sqrt(2.0 * coupling * params.n_atoms);
    p.period = 2.0 * std::numbers::pi / p.omega_eff;
    p.t0_estimate = 0.25 * p.period;
    p.within_validity =
        params.n_atoms >= 1000 && coupling > 1.0 && coupling <= 0.1 * params.n_atoms;
    return p;
}

double xi0_identity(const SqueezingReport& report, const ModelParams& params,
                    double coupling) {
    params.validate();
    const double j = params.j();
    if (std::abs(report.b_moment) >= 1e-8 * j * j)
        throw std::domain_error("xi0_identity: only valid where B = 0, got B = " +
                                std::to_string(report.b_moment));
    if (!(report.a_moment < 0.0))
        throw std::domain_error("xi0_identity: only valid where A < 0 (squeezing along z)");
    return 1.0 - coupling * (1.0 + report.jx_mean / j);
}

namespace {

double plateau_threshold(double xi_star, const ScanOptions& opts) {
    if (opts.plateau_rel_tol) return xi_star * (1.0 + *opts.plateau_rel_tol);
    if (!(xi_star > 0.0)) return xi_star;
    // Couplings whose min-xi rounds to the same `plateau_digits` significant
    // digits as the optimum.
    const double ulp =
        std::pow(10.0, std::floor(std::log10(xi_star)) - opts.plateau_digits + 1);
    return (std::round(xi_star / ulp) + 0.5) * ulp;
}

}  // namespace

CouplingScanResult optimal_coupling_scan(const ModelParams& params, double coupling_lo,
                                         double coupling_hi, const ScanOptions& opts) {
    params.validate();
    if (!(coupling_lo > 0.0) || !(coupling_hi > coupling_lo))
        throw std::invalid_argument("optimal_coupling_scan: need 0 < coupling_lo < coupling_hi");
    if (opts.grid_points < 8)
        throw std::invalid_argument("optimal_coupling_scan: grid_points must be >= 8");

    auto eval = [&](double coupling) -> CouplingScanPoint {
        try {
            const ExtremumResult r = find_first_squeezing_min(params, coupling, opts.search);
            return {coupling, r.value, r.time};
        } catch (const std::exception& e) {
            throw std::runtime_error("optimal_coupling_scan: coupling " +
                                     std::to_string(coupling) + ": " + e.what());
        }
    };

    CouplingScanResult result;
    result.grid.resize(opts.grid_points);
    const double step = (coupling_hi - coupling_lo) / (opts.grid_points - 1);
    run_indexed(opts.grid_points, opts.workers, [&](int i) {
        result.grid[i] = eval(coupling_lo + i * step);
    });

    int best = 0;
    for (int i = 1; i < opts.grid_points; ++i)
        if (result.grid[i].min_xi < result.grid[best].min_xi) best = i;

    const double win_lo = result.grid[std::max(0, best - 1)].coupling;
    const double win_hi = result.grid[std::min(opts.grid_points - 1, best + 1)].coupling;
    CouplingScanPoint opt_point = result.grid[best];
    auto xi_of = [&](double coupling) {
        const CouplingScanPoint p = eval(coupling);
        if (p.min_xi < opt_point.min_xi) opt_point = p;
        return p.min_xi;
    };
    golden_min(xi_of, win_lo, win_hi, opts.coupling_refine_tol);

    result.optimum_coupling = opt_point.coupling;
    result.optimum_xi = opt_point.min_xi;
    result.optimum_tau0 = opt_point.tau0;

    const double thr = plateau_threshold(result.optimum_xi, opts);
    const double opt_c = result.optimum_coupling;
    auto bisect_edge = [&](double outside, double inside) {
        while (std::abs(inside - outside) > opts.plateau_endpoint_tol) {
            const double mid = 0.5 * (inside + outside);
            if (eval(mid).min_xi > thr)
                outside = mid;
            else
                inside = mid;
        }
        return 0.5 * (inside + outside);
    };

    // edge scans anchored at the refined optimum: the nearest grid points can
    // lie outside the plateau on either side
    int left = -1;
    for (int i = opts.grid_points - 1; i >= 0; --i)
        if (result.grid[i].coupling < opt_c && result.grid[i].min_xi > thr) { left = i; break; }
    if (left < 0) {
        result.plateau_lo = coupling_lo;
    } else {
        double inside = opt_c;
        if (left + 1 < opts.grid_points && result.grid[left + 1].coupling < opt_c &&
            result.grid[left + 1].min_xi <= thr)
            inside = result.grid[left + 1].coupling;
        result.plateau_lo = bisect_edge(result.grid[left].coupling, inside);
    }

    int right = -1;
    for (int i = 0; i < opts.grid_points; ++i)
        if (result.grid[i].coupling > opt_c && result.grid[i].min_xi > thr) { right = i; break; }
    if (right < 0) {
        result.plateau_hi = coupling_hi;
    } else {
        double inside = opt_c;
        if (right - 1 >= 0 && result.grid[right - 1].coupling > opt_c &&
            result.grid[right - 1].min_xi <= thr)
            inside = result.grid[right - 1].coupling;
        result.plateau_hi = bisect_edge(result.grid[right].coupling, inside);
    }
    return result;
}

double power_rule_fit(std::span<const double> n_values, std::span<const double> optima) {
    if (n_values.size() != optima.size())
        throw std::invalid_argument("power_rule_fit: size mismatch");
    std::set<double> distinct(n_values.begin(), n_values.end());
    if (distinct.size() < 3)
        throw std::invalid_argument("power_rule_fit: need at least 3 distinct N");

    const auto n = static_cast<double>(n_values.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        sx += std::log(n_values[i]);
        sy += std::log(optima[i]);
    }
    const double mx = sx / n, my = sy / n;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const double dx = std::log(n_values[i]) - mx;
        num += dx * (std::log(optima[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

}  // namespace sqz
