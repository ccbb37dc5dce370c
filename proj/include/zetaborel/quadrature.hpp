#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace zetaborel {

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per (Real, order)
/// by Newton iteration on P_n. Works for any floating type with std-style
/// math functions (double, cpp_bin_float_50, ...).
template <class Real>
struct GaussLegendre {
    std::vector<Real> nodes, weights;

    explicit GaussLegendre(int order) {
        using std::acos;
        using std::cos;
        using std::fabs;
        const Real pi = acos(Real(-1));
        const Real eps = std::numeric_limits<Real>::epsilon() * 4;
        const int n = order;
        nodes.resize(static_cast<std::size_t>(n));
        weights.resize(static_cast<std::size_t>(n));
        const int m = (n + 1) / 2;
        for (int i = 0; i < m; ++i) {
            // Chebyshev-like initial guess, then Newton on P_n(x).
            Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
            Real dp = 0;
            for (int iter = 0; iter < 200; ++iter) {
                Real p0 = 1, p1 = 0;
                for (int j = 0; j < n; ++j) {
                    const Real p2 = p1;
                    p1 = p0;
                    p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
                }
                dp = Real(n) * (x * p0 - p1) / (x * x - 1);
                const Real dx = p0 / dp;
                x -= dx;
                if (fabs(dx) <= eps * fabs(x) + eps) break;
            }
            nodes[static_cast<std::size_t>(i)] = -x;
            nodes[static_cast<std::size_t>(n - 1 - i)] = x;
            const Real w = 2 / ((1 - x * x) * dp * dp);
            weights[static_cast<std::size_t>(i)] = w;
            weights[static_cast<std::size_t>(n - 1 - i)] = w;
        }
    }

    static const GaussLegendre& get(int order) {
        static std::map<int, GaussLegendre> cache;
        static std::mutex mu;
        std::lock_guard lock(mu);
        auto it = cache.find(order);
        if (it == cache.end()) it = cache.emplace(order, GaussLegendre(order)).first;
        return it->second;
    }

    template <class F>
    Real integrate(F&& f, Real a, Real b) const {
        const Real mid = (a + b) / 2, half = (b - a) / 2;
        Real s = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
        return s * half;
    }
};

template <class Real>
struct QuadratureResult {
    Real value = 0;
    Real err_estimate = 0;
    long nodes_used = 0;
};

/// Adaptive composite Gauss-Legendre on [a, b]: each interval is accepted
/// when the bisection difference |GL(interval) - GL(halves)| stays inside
/// the interval's proportional share of `tol`, otherwise split. Throws when
/// the segment budget is exhausted (never happens for the smooth integrands
/// used here, but losing an error bound silently would be worse).
template <class Real, class F>
QuadratureResult<Real> adaptive_gl(F&& f, Real a, Real b, Real tol, int order = 15,
                                   int max_segments = 4000) {
    using std::fabs;
    const auto& rule = GaussLegendre<Real>::get(order);
    struct Seg {
        Real a, b, whole;
    };
    std::vector<Seg> stack;
    stack.push_back({a, b, rule.integrate(f, a, b)});
    QuadratureResult<Real> res;
    res.nodes_used = order;
    int segments = 1;
    const Real total_len = b - a;
    const Real floor_tol = std::numeric_limits<Real>::epsilon() * 16;
    while (!stack.empty()) {
        const Seg seg = stack.back();
        stack.pop_back();
        const Real mid = (seg.a + seg.b) / 2;
        const Real left = rule.integrate(f, seg.a, mid);
        const Real right = rule.integrate(f, mid, seg.b);
        res.nodes_used += 2 * order;
        const Real better = left + right;
        const Real err = fabs(better - seg.whole);
        const Real local_budget = tol * ((seg.b - seg.a) / total_len);
        if (err <= local_budget || err <= floor_tol * fabs(better) ||
            (seg.b - seg.a) <= floor_tol * total_len) {
            res.value += better;
            res.err_estimate += err;
            continue;
        }
        segments += 1;
        if (segments > max_segments)
            throw std::runtime_error("adaptive_gl: refinement budget exhausted");
        stack.push_back({seg.a, mid, left});
        stack.push_back({mid, seg.b, right});
    }
    return res;
}

/// Upper bound for int_T^inf C t^p e^{-r t} dt with integer p >= 0, r > 0:
///   e^{-rT} * sum_{j=0}^{p} (p!/j!) T^j / r^{p-j+1}.
template <class Real>
Real exp_poly_tail(Real C, int p, Real r, Real T) {
    using std::exp;
    std::vector<Real> powT(static_cast<std::size_t>(p) + 1);
    Real Tj = 1;
    for (int j = 0; j <= p; ++j) {
        powT[static_cast<std::size_t>(j)] = Tj;
        Tj *= T;
    }
    Real sum = 0;
    Real fac = 1;  // p!/j!, descending from j = p
    for (int j = p; j >= 0; --j) {
        Real rpow = 1;
        for (int i = 0; i < p - j + 1; ++i) rpow *= r;
        sum += fac * powT[static_cast<std::size_t>(j)] / rpow;
        fac *= j;
    }
    return C * exp(-r * T) * sum;
}

}  // namespace zetaborel
