#pragma once

#include <span>
#include <string>
#include <vector>

#include "mpoly.hpp"
#include "rat.hpp"

namespace igusa {

// One affine n-simplex with rational vertices and an orientation weight.
struct SimplexDomain {
    std::vector<std::vector<Rat>> vertices;  // n+1 points in Q^n
    int sign = 1;                            // +1 or -1
};

// Signed union of affine simplices sharing one ambient dimension. Disjointness
// of piece interiors is probed by sampling at construction; violations warn
// rather than fail.
class Domain {
public:
    Domain(int nvars, std::vector<SimplexDomain> pieces);

    static Domain standard_simplex(int n);
    static Domain from_json_text(std::string_view json_text);

    int nvars() const { return nvars_; }
    const std::vector<SimplexDomain>& pieces() const { return pieces_; }

    Rat signed_volume() const;
    Rat abs_volume() const;

    std::string canonical_json() const;

private:
    int nvars_;
    std::vector<SimplexDomain> pieces_;
};

// Moment sequence values[k] = integral of f^k over the domain, exact.
struct MomentSequence {
    std::vector<Rat> values;
    std::string f_digest;
    std::string domain_digest;
};

// Exact integral of prod x_i^{a_i} over the standard simplex
// {x_i >= 0, sum x_i <= 1}: (prod a_i!) / (n + sum a_i)!.
Rat integrate_monomial(std::span<const unsigned> exponents);

// Exact signed integral of f over d: each piece is pulled back to the
// standard simplex (affine substitution, |det| Jacobian, piece sign) and
// integrated termwise. Throws DegenerateSimplex on affinely dependent
// vertices.
Rat integrate_poly(const MPoly& f, const Domain& d);

// values[k] = integral of f^k, k = 0..N. Nonnegativity of f on d is sampled;
// a violation warns but does not fail.
MomentSequence moments(const MPoly& f, const Domain& d, int N);

// Sign strings (a_1..a_n, b_1..b_m) over {+,-} where all a's are '+' or all
// b's are '+', in lexicographic order with '+' < '-'. There are always
// 2^n + 2^m - 1 of them.
std::vector<std::string> decompose_union(int n_count, int m_count);

// Heuristic sup bound: max |f| over vertices, barycenters and quasi-random
// interior points, inflated by 1.1. Used for convergence-radius checks only.
double sup_estimate(const MPoly& f, const Domain& d, int samples);

// Iterated map [0,1]^n -> standard simplex: x_i = u_i * prod_{j<i} (1 - u_j).
void duffy_map(std::span<const double> u, std::span<double> x_out);
double duffy_jacobian(std::span<const double> u);

// Exact affine pullback data for one piece.
struct PiecePullback {
    MPoly integrand;  // f composed with the affine map, in simplex coordinates
    Rat abs_det;
    int sign;
};
PiecePullback pullback_to_standard(const MPoly& f, const SimplexDomain& piece);

// Halton low-discrepancy point, dimensions <= 6.
void halton_point(unsigned long index, std::span<double> out);

}  // namespace igusa
