#pragma once

#include <complex>
#include <cstdint>

#include "sqlab/point.hpp"

namespace sqlab {

// sigma(x) = log((1+x)/(1-x)), the Kobayashi distance from 0 to x in the
// unit disc (curvature -4 normalization, no 1/2 factor).
double sigma(double x);

// inverse of sigma: (e^y - 1)/(e^y + 1) = tanh(y/2)
double sigma_inverse(double y);

struct BallPair {
    RealPoint z, w;
    int n = 0;
};

// Kobayashi distance between two points of the unit ball B^n:
//   K(z, w) = log( (|1 - <w, z>| + Q) / (|1 - <w, z>| - Q) ),
//   Q^2 = |z - w|^2 + |<z, w>|^2 - |z|^2 |w|^2,  <z, w> = sum z_k conj(w_k).
// Q^2 is clamped at 0 when negative by less than 1e-14 (rounding noise for
// nearly proportional points; the quantity is nonnegative on B^n x B^n).
double kobayashi_distance_ball(const BallPair& pair);

// Kobayashi distance from r = (r, 0, ..., 0) to the boundary of the ball
// Omega_rho centered at (1 - rho, 0, ..., 0) with radius rho:
//   K = log((1 + sqrt(A)) / (1 - sqrt(A))),  A = 1 - (1+r)(1-rho)/(2r),
// stated for 0 < rho < 1 and max(1/2, 1 - 2 rho) < r < 1. The derivation puts
// the minimizing point at x = 2 - 1/r on the real axis, which lies on the
// sphere only when r >= 1/(1 + 2 rho); below that sliver the closed form is a
// lower bound (radicand clamped at 0) and `exact` is false.
struct GeodesicDistance {
    double value = 0.0;
    bool exact = true;
};

GeodesicDistance geodesic_ball_boundary_distance(double r, double rho);

bool geodesic_closed_form_exact(double r, double rho);

// Direct minimization of the Kobayashi distance over seeded samples of the
// sphere boundary of Omega_rho. grid_min uses the raw sample minimum (weakly
// decreasing under nested refinement with a fixed seed); refined_min polishes
// the best sample by shrinking local search on the sphere.
struct BoundaryDistanceOracle {
    double grid_min = 0.0;
    double refined_min = 0.0;
    std::complex<double> argmin_z1;  // first coordinate of the refined minimizer
    int grid = 0;
};

BoundaryDistanceOracle boundary_distance_oracle(double r, double rho, int n, int grid,
                                                std::uint64_t seed, bool refine = true);

}  // namespace sqlab
