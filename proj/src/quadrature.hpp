#pragma once

#include <functional>
#include <vector>

#include "mpoly.hpp"
#include "simplex.hpp"

namespace igusa {

struct QuadConfig {
    double tol = 1e-9;   // absolute tolerance
    int max_depth = 48;  // adaptive bisection depth per cell
    int base_rule = 8;   // Gauss points per axis (low rule; high rule doubles it)
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  // absolute, two-level difference heuristic
    long cells_used = 0;
    bool converged = false;
};

// Gauss-Legendre rule on [0,1]; nodes/weights cached per point count.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule(int npts);

// integral of f^sigma * log^l(f) over d. Each simplex piece is mapped to the
// unit cube through the iterated Duffy substitution, tensor Gauss is applied,
// and cells are bisected where the two-level difference is large or f
// approaches zero. Throws NegativeIntegrand when a node sees f < -tol;
// non-convergence is reported in the flag, not thrown.
QuadResult integrate_power_log(const MPoly& f, double sigma, int l, const Domain& d,
                               const QuadConfig& cfg);

// Box representation of the same quantity for integer s0: integrates
// f^{s0} * prod_j (f-1)/((f-1) t_j + 1) over d x [0,1]^l. Cross-check path.
QuadResult integrate_box_rep(const MPoly& f, int s0, int l, const Domain& d,
                             const QuadConfig& cfg);

// J(t) = integral of 1/(1 - t f) over d. Throws RadiusExceeded when
// |t| * sup_estimate(f) >= 1.
QuadResult j_value(const MPoly& f, double t, const Domain& d, const QuadConfig& cfg);

namespace detail {

// Integrand over the unit cube; when the probe pointer is non-null the
// implementation stores the raw f value there (singularity proximity test).
using CubeFn = std::function<double(const double* u, double* f_probe)>;

QuadResult adaptive_cube(int dim, const CubeFn& fn, double sing_threshold,
                         const QuadConfig& cfg, double tol_override);

}  // namespace detail

}  // namespace igusa
