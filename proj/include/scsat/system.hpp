#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scsat/errors.hpp"
#include "scsat/numerics.hpp"

namespace scsat {

enum class Fn { Phi, Psi };
enum class DerivativeMode { Analytic, FiniteDifference };

/// Structure hint: f(x_1..x_k) = offset + scale * prod_j factor(x_j).
/// Lets window averages factor into a single one-dimensional average.
struct ProductForm {
    double offset = 0.0;
    double scale = 1.0;
    std::function<double(double)> factor;
};

/// Closed-form single-variate reductions, used when derivative_mode is
/// Analytic.  All maps are functions of the diagonal argument.
struct AnalyticDerivatives {
    std::function<double(double)> phi0_prime;   // d/dv phi(v,...,v)
    std::function<double(double)> psi0_prime;   // d/du psi(u,...,u)
    std::function<double(double)> psi0_second;  // d^2/du^2 psi(u,...,u)
    std::function<double(double)> lap_phi;      // sum_j d^2 phi/dv_j^2 on the diagonal
    std::function<double(double)> lap_psi;      // sum_j d^2 psi/du_j^2 on the diagonal
};

/// The pair (phi, psi) describing one iterative system, with arities d and
/// d_tilde and bounded domains.  Both maps must be nondecreasing in every
/// argument; evaluation order of the arguments is the caller's.
struct SystemFunctions {
    std::string name;
    int d = 1;
    int d_tilde = 1;
    std::function<double(std::span<const double>)> phi;  // D~^d -> D
    std::function<double(std::span<const double>)> psi;  // D^d~ -> D~
    Interval u_domain{0.0, 1.0};
    Interval v_domain{0.0, 1.0};
    DerivativeMode derivative_mode = DerivativeMode::FiniteDifference;
    double fd_step_rel = 1e-4;  // finite-difference step as a fraction of domain width
    std::optional<AnalyticDerivatives> analytic;
    bool phi_symmetric = false;
    bool psi_symmetric = false;
    std::optional<ProductForm> phi_product;
    std::optional<ProductForm> psi_product;
    double smoothing_n = 0.0;  // decoder-smoothing metadata, 0 = not smoothed

    int arity(Fn which) const { return which == Fn::Phi ? d : d_tilde; }
    const Interval &arg_domain(Fn which) const {
        return which == Fn::Phi ? v_domain : u_domain;
    }
    const Interval &value_domain(Fn which) const {
        return which == Fn::Phi ? u_domain : v_domain;
    }
};

/// phi(x,...,x) or psi(x,...,x).
double diagonal_reduce(const SystemFunctions &funcs, Fn which, double x);

/// First derivative of the diagonal map x -> f(x,...,x).
double diagonal_derivative(const SystemFunctions &funcs, Fn which, double x);

/// Second derivative of the diagonal map.
double diagonal_second_derivative(const SystemFunctions &funcs, Fn which, double x);

/// Single-variate Laplacian sum_j d^2 f / dx_j^2 evaluated at (x,...,x).
double laplacian_on_diagonal(const SystemFunctions &funcs, Fn which, double x);

/// The six single-variate functions (plus psi0'') tabulated on uniform
/// grids: the psi side on the u grid, the phi side both on its own v grid
/// and composed at v = psi0(u).
struct ScalarProfileTable {
    std::vector<double> u;
    std::vector<double> psi0, psi0_prime, psi0_second, lap_psi;
    std::vector<double> phi0_comp, phi0_prime_comp, lap_phi_comp;  // at psi0(u)

    std::vector<double> v;
    std::vector<double> phi0, phi0_prime, lap_phi;

    Interval u_domain, v_domain;
    double smoothing_n = 0.0;
    std::string system_name;

    double du() const { return (u_domain.hi - u_domain.lo) / (static_cast<double>(u.size()) - 1.0); }
    double dv() const { return (v_domain.hi - v_domain.lo) / (static_cast<double>(v.size()) - 1.0); }
};

/// Tabulate the single-variate reductions on n_grid uniform points.
/// Sub-tolerance decreases in phi0/psi0 (up to 1e-8, e.g. sampling noise of
/// estimated transfer curves) are clamped to a running maximum; anything
/// larger throws ModelError.
ScalarProfileTable build_profile_table(const SystemFunctions &funcs, int n_grid);

/// phi = psi = identity on [0,1], d = d_tilde = 1.
SystemFunctions identity_system();

/// The (l,r)-regular erasure pair: phi(v_1..v_{l-1}) = 1 - eps*prod(1-v_j),
/// psi(u_1..u_{r-1}) = prod u_j, both on [0,1].
SystemFunctions bec_regular_system(int l, int r, double eps);

/// d = d_tilde = 1 system from sampled strictly increasing transfer curves
/// (piecewise-cubic interpolation, finite-difference derivatives).
SystemFunctions sampled_pair_system(std::vector<double> grid,
                                    std::vector<double> phi0_samples,
                                    std::vector<double> psi0_samples);

}  // namespace scsat
