#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace scsat {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
    bool contains(double x, double slack = 0.0) const {
        return x >= lo - slack && x <= hi + slack;
    }
    double clamp(double x) const { return std::min(hi, std::max(lo, x)); }
};

/// Nodes and weights of a Gauss rule; for Legendre the weight function is 1
/// on [-1,1], for Hermite it is exp(-x^2) on the real line.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;

    size_t size() const { return x.size(); }
};

namespace detail {

// Orthonormal three-term recurrence p_{k+1} = (x p_k - b_k p_{k-1}) / b_{k+1}
// with a_k = 0 (both families are symmetric).  Returns values p_0..p_n at x.
inline void orthonormal_values(double x, int n, std::span<const double> b,
                               double p0, std::vector<double> &out) {
    out.resize(static_cast<size_t>(n) + 1);
    out[0] = p0;
    if (n == 0) return;
    out[1] = x * p0 / b[1];
    for (int k = 1; k < n; ++k)
        out[static_cast<size_t>(k) + 1] =
            (x * out[static_cast<size_t>(k)] - b[static_cast<size_t>(k)] * out[static_cast<size_t>(k) - 1]) /
            b[static_cast<size_t>(k) + 1];
}

inline double poly_at(double x, int n, std::span<const double> b, double p0) {
    double pm = p0, pc = n >= 1 ? x * p0 / b[1] : p0;
    if (n == 0) return pm;
    for (int k = 1; k < n; ++k) {
        double pn = (x * pc - b[static_cast<size_t>(k)] * pm) / b[static_cast<size_t>(k) + 1];
        pm = pc;
        pc = pn;
    }
    return pc;
}

// Roots of the degree-n orthonormal polynomial by interlacing build-up:
// the roots of p_k interlace those of p_{k+1}, so each level brackets the
// next level's roots and plain bisection is safe.
inline GaussRule gauss_from_recurrence(int n, std::span<const double> b,
                                       double p0, double outer_bound) {
    std::vector<double> roots;  // roots of current level
    std::vector<double> next;
    for (int k = 1; k <= n; ++k) {
        next.assign(static_cast<size_t>(k), 0.0);
        for (int j = 0; j < k; ++j) {
            double lo = (j == 0) ? -outer_bound : roots[static_cast<size_t>(j) - 1];
            double hi = (j == k - 1) ? outer_bound : roots[static_cast<size_t>(j)];
            double flo = poly_at(lo, k, b, p0);
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = poly_at(mid, k, b, p0);
                if ((flo <= 0) == (fm <= 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if (hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) break;
            }
            next[static_cast<size_t>(j)] = 0.5 * (lo + hi);
        }
        roots.swap(next);
    }
    GaussRule rule;
    rule.x = roots;
    rule.w.resize(roots.size());
    std::vector<double> pv;
    for (size_t i = 0; i < roots.size(); ++i) {
        orthonormal_values(roots[i], n - 1, b, p0, pv);
        double s = 0.0;
        for (double v : pv) s += v * v;
        rule.w[i] = 1.0 / s;  // Christoffel number
    }
    return rule;
}

}  // namespace detail

/// n-point Gauss-Legendre rule on [-1,1].
inline GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) b[static_cast<size_t>(k)] = k / std::sqrt(4.0 * k * k - 1.0);
    return detail::gauss_from_recurrence(n, b, 1.0 / std::sqrt(2.0), 1.0);
}

/// n-point Gauss-Hermite rule, weight exp(-x^2) (physicists' convention).
inline GaussRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n >= 1 required");
    std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) b[static_cast<size_t>(k)] = std::sqrt(0.5 * k);
    double bound = std::sqrt(2.0 * n + 1.0) + 2.0;
    return detail::gauss_from_recurrence(n, b, 1.0 / std::pow(M_PI, 0.25), bound);
}

/// Integral of f over [a,b] with an m-point Gauss-Legendre rule.
inline double integrate_gl(const GaussRule &rule, double a, double b,
                           const std::function<double(double)> &f) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) s += rule.w[i] * f(c + h * rule.x[i]);
    return s * h;
}

/// Running integral of grid samples on a uniform grid with spacing h.
/// Per-cell cubic (4-point Newton-Cotes) rule; falls back to the trapezoid
/// for grids shorter than 4 points.  out[0] = 0, out[i] = integral to x_i.
inline std::vector<double> cumulative_integral(std::span<const double> f, double h) {
    size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n < 4) {
        for (size_t i = 0; i + 1 < n; ++i)
            out[i + 1] = out[i] + 0.5 * h * (f[i] + f[i + 1]);
        return out;
    }
    auto cell = [&](size_t i) {
        if (i == 0)
            return h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        if (i == n - 2)
            return h / 24.0 * (9.0 * f[n - 1] + 19.0 * f[n - 2] - 5.0 * f[n - 3] + f[n - 4]);
        return h / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
    };
    for (size_t i = 0; i + 1 < n; ++i) out[i + 1] = out[i] + cell(i);
    return out;
}

/// Piecewise local-cubic interpolation of samples on a uniform grid.
/// Optional breakpoints (given as grid indices) confine the stencil to one
/// smooth segment so kinks are not smeared.
class GridInterp {
  public:
    GridInterp() = default;
    GridInterp(double x0, double h, std::vector<double> values,
               std::vector<size_t> breaks = {})
        : x0_(x0), h_(h), v_(std::move(values)), breaks_(std::move(breaks)) {
        if (v_.size() < 2) throw std::invalid_argument("GridInterp: need >= 2 samples");
        std::sort(breaks_.begin(), breaks_.end());
    }

    double x_front() const { return x0_; }
    double x_back() const { return x0_ + h_ * (static_cast<double>(v_.size()) - 1.0); }

    double operator()(double x) const {
        size_t n = v_.size();
        double t = (x - x0_) / h_;
        double fi = std::floor(t);
        long i = static_cast<long>(fi);
        if (i < 0) i = 0;
        if (i > static_cast<long>(n) - 2) i = static_cast<long>(n) - 2;
        // segment [seg_lo, seg_hi] containing cell i
        size_t seg_lo = 0, seg_hi = n - 1;
        for (size_t b : breaks_) {
            if (b <= static_cast<size_t>(i)) seg_lo = std::max(seg_lo, b);
            if (b >= static_cast<size_t>(i) + 1) { seg_hi = std::min(seg_hi, b); break; }
        }
        size_t span = seg_hi - seg_lo;
        if (span < 1) return v_[seg_lo];
        if (span == 1) {  // linear within a 2-point segment
            double a = t - static_cast<double>(seg_lo);
            return v_[seg_lo] * (1.0 - a) + v_[seg_hi] * a;
        }
        size_t m = std::min(span + 1, static_cast<size_t>(4));
        size_t first = static_cast<size_t>(i);
        if (m == 4) {
            first = (static_cast<size_t>(i) > seg_lo) ? static_cast<size_t>(i) - 1 : seg_lo;
            first = std::min(first, seg_hi - 3);
        } else {
            first = seg_lo;
        }
        // Lagrange on m equally spaced points starting at `first`
        double s = (t - static_cast<double>(first));
        double acc = 0.0;
        for (size_t j = 0; j < m; ++j) {
            double lj = 1.0;
            for (size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                lj *= (s - static_cast<double>(k)) / (static_cast<double>(j) - static_cast<double>(k));
            }
            acc += lj * v_[first + j];
        }
        return acc;
    }

    std::span<const double> values() const { return v_; }

  private:
    double x0_ = 0.0, h_ = 1.0;
    std::vector<double> v_;
    std::vector<size_t> breaks_;
};

/// Inverse of a strictly increasing tabulated map y_i = g(x_i) by monotone
/// piecewise-linear interpolation with local refinement against the forward
/// interpolant.
class MonotoneInverse {
  public:
    MonotoneInverse() = default;
    MonotoneInverse(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        if (x_.size() != y_.size() || x_.size() < 2)
            throw std::invalid_argument("MonotoneInverse: bad table");
        for (size_t i = 0; i + 1 < y_.size(); ++i)
            if (!(y_[i + 1] > y_[i]))
                throw std::invalid_argument("MonotoneInverse: values not strictly increasing");
    }

    double operator()(double y) const {
        if (y <= y_.front()) return x_.front();
        if (y >= y_.back()) return x_.back();
        size_t i = static_cast<size_t>(std::upper_bound(y_.begin(), y_.end(), y) - y_.begin()) - 1;
        double a = (y - y_[i]) / (y_[i + 1] - y_[i]);
        return x_[i] * (1.0 - a) + x_[i + 1] * a;
    }

  private:
    std::vector<double> x_, y_;
};

/// Bisection for a sign change of f on [a,b]; f(a) and f(b) must differ in sign.
inline double bisect(const std::function<double(double)> &f, double a, double b,
                     double xtol, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0) == (fb < 0))
        throw std::invalid_argument("bisect: no sign change on bracket");
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = static_cast<double>(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Solve a tridiagonal system in place (Thomas algorithm).
/// a = sub-diagonal (a[0] unused), b = diagonal, c = super-diagonal
/// (c[n-1] unused), d = right-hand side; the solution overwrites d.
inline void solve_tridiagonal(std::span<double> a, std::span<double> b,
                              std::span<double> c, std::span<double> d) {
    size_t n = b.size();
    for (size_t i = 1; i < n; ++i) {
        double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    d[n - 1] /= b[n - 1];
    for (size_t i = n - 1; i-- > 0;) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
}

}  // namespace scsat
