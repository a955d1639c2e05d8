#pragma once

#include <string>
#include <vector>

#include "sqlab/domain.hpp"
#include "sqlab/linalg.hpp"

namespace sqlab {

// --- Cartan-Hartogs domains over the four classical bounded symmetric types ---

struct CartanHartogsParams {
    enum class Base { I, II, III, IV };
    Base base = Base::I;
    int size1 = 1;  // r for I, p for II, q for III, n for IV
    int size2 = 1;  // s for I (r <= s), unused otherwise
    double k = 1.0;
    int m = 1;  // fiber dimension

    int base_dim() const;          // complex dimension of the symmetric domain
    int total_complex_dim() const; // base_dim() + m
    std::string id() const;
};

// Generic norm N(Z, Z) of the base domain:
//   I, II : det(I - Z Z*)
//   III   : det(I + Z conj(Z))   (for skew Z this equals det(I - Z Z*))
//   IV    : 1 + |Z Z^t|^2 - 2 Z conj(Z)^t
// Z is passed row-major, r x s for I, square for II/III, a row vector for IV.
// Throws ShapeMismatch for wrong sizes and SymmetryViolation when the II/III
// symmetry class fails at tolerance 1e-10.
double generic_norm(const CartanHartogsParams& params, const CMat& Z);

// Hartogs domain {(Z, W) : ||W||^2 < N(Z, Z)^k} as a DomainSpec over real
// coordinates. The free matrix entries are flattened row-major; entries that
// occur twice in the matrix (II off-diagonal, III, and the type IV vector,
// whose generic norm is quadratic with coefficient 2) are scaled by sqrt(2)
// so that the coordinate norm matches the Frobenius norm and the generic norm
// expands as 1 - |u|^2 + O(|u|^4) for every type. The defining function is
// ||W||^2 / N^k - 1 where Z lies in the base domain and a large positive
// sentinel elsewhere, so {rho < 0} is exactly the domain.
DomainSpec cartan_hartogs_domain(const CartanHartogsParams& params);

// Scaled free entries (u coordinates) -> the actual matrix Z plus fiber W.
void cartan_hartogs_unflatten(const CartanHartogsParams& params, const RealPoint& p,
                              CMat& Z, std::vector<std::complex<double>>& W);

// s_Omega of the base domain: r^{-1/2}, p^{-1/2}, floor(q/2)^{-1/2}, 2^{-1/2}.
double s_omega_constant(CartanHartogsParams::Base base, int size1);

// k -> 0 limit of the squeezing function: (s_Omega^{-2} + 1)^{-1/2}.
double cartan_hartogs_k_limit(CartanHartogsParams::Base base, int size1);

// --- Thullen domains ---

// {|z1|^{2k} + |z2|^2 < 1} with the defining function
// phi = |z1|^2 / (1 - |z2|^2)^{1/k} - 1, whose Hessian at (1, 0) is
// nondegenerate for 0 < k < 1 (the 2k-power form is not).
DomainSpec thullen_domain(double k);

// --- the Reinhardt example and its shear ---

// {log^2 |z1|^2 + log^2 |z2|^2 < 1}, a smooth strongly pseudoconvex Reinhardt
// domain that is not convex; the closure avoids the coordinate axes.
DomainSpec reinhardt_domain();

struct ShearParams {
    double epsilon = 0.01;
};

// Image of the Reinhardt domain under (z1, z2) -> (z1, z2 + f_eps(z1)) with
// f_eps(z1) = eps (z1 + 1/z1 - 2); the shear makes (1, e^{1/2}) a strongly
// convex boundary point.
DomainSpec reinhardt_sheared(const ShearParams& params);

// Support scan of g(r1, theta1) = eps((e^{r1/2} + e^{-r1/2}) cos theta1 - 2)
//                                 + e^{sqrt(1 - r1^2)/2}
// over [0,1] x [0, 2pi): Re(z2 + f_eps(z1)) on the boundary is at most g, so
// the sheared point (1, e^{1/2}) is globally extreme iff the maximum e^{1/2}
// is attained only at (0, 0). The scan also checks that g decreases in r1,
// which fails once eps is too large.
struct SupportScanReport {
    double max_value = 0.0;
    double argmax_r1 = 0.0;
    double argmax_theta1 = 0.0;
    bool max_at_origin = false;
    bool monotone_in_r1 = false;
    bool passed = false;
    double edge_r0_max = 0.0;  // max over theta of g(0, theta)
    double edge_r1_max = 0.0;  // max over theta of g(1, theta)
};

SupportScanReport reinhardt_support_scan(const ShearParams& params, int grid);

// --- the Hartogs triangle and its product model ---

// {0 < |z2| < |z1| < 1}; rho = max(|z2|^2 - |z1|^2, |z1|^2 - 1) with the
// analytic sheet {z2 = 0} excluded (and adjoined to the effective boundary).
DomainSpec hartogs_triangle();

// (z1, z2) -> (z1, z2 / z1), an isomorphism onto the punctured bidisc.
RealPoint triangle_to_product(const RealPoint& z);
RealPoint product_to_triangle(const RealPoint& w);

// --- model domains ---

DomainSpec ball_domain(int n);
DomainSpec bidisc_domain();
DomainSpec punctured_disc_domain(double scale = 1.0);
DomainSpec punctured_bidisc_domain();
DomainSpec ellipsoid_domain(const Vec& semiaxes);  // 2n real semiaxes

// --- string catalog ---

// e.g. "ball:n=2", "thullen:k=0.5", "cartan-hartogs:I:1,2:k=0.5:m=1",
// "reinhardt-sheared:eps=0.01", "ellipsoid:axes=1,0.8,0.7,0.9"
DomainSpec domain_from_id(const std::string& id);

std::vector<std::string> catalog_ids();

}  // namespace sqlab
