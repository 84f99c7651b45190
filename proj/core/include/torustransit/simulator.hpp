#pragma once

#include <cstdint>
#include <vector>

#include "torustransit/skew_product.hpp"

namespace torustransit {

struct OrbitConfig {
    std::vector<double> start;  // ignored when random_start
    long length = 1;
    uint64_t seed = 0;
    bool random_start = false;
};

/// Forward orbit of `length` points (the start included) under the
/// double-precision map, every point reduced to [0,1)^n.
std::vector<std::vector<double>> orbit(const SkewProductSystem& sys, const OrbitConfig& cfg);

struct CoverageReport {
    int grid = 0;
    long visited = 0;
    long total_cells = 0;
    double fraction = 0;
    long steps = 0;
};

/// Fraction of the grid^n uniform cells visited by the orbit.
CoverageReport coverage(const std::vector<std::vector<double>>& orbit_points, int grid);

struct UniformityReport {
    long samples = 0;
    int grid = 0;
    long cells = 0;
    double statistic = 0;
    double threshold = 0;  // 99.9% chi-square quantile, cells-1 dof
    bool pass = false;
};

/// Pushes `samples` uniform points through the map once and compares the
/// binned image counts against the uniform expectation. A smoke test,
/// not a proof.
UniformityReport pushforward_uniformity(const SkewProductSystem& sys, long samples, int grid,
                                        uint64_t seed);

/// Wilson-Hilferty approximation of the 99.9% chi-square quantile.
double chi_square_quantile_999(long dof);

/// Frame adapted to the invariant hyperplane: heights h = t + w~.x are
/// measured along the fiber relative to ker(w^T), where w is the
/// transverse left-eigenvector witness.
struct SurfaceFrame {
    QVec witness;    // integer entries, positive last coordinate
    QVec w_tilde;    // base part over the last coordinate, length n-1
    Rational shift;  // w~.b + beta, the constant part of the height step
    Int lambda;      // fiber eigenvalue, >= 2
    Int k1, k2;      // invariant slab heights in this frame
};

SurfaceFrame surface_frame(const SkewProductSystem& sys);

struct SurfaceSample {
    QVec base_point;  // grid point in [0,1)^(n-1)
    double lower = 0;  // heights of the invariant set's fiber interval
    double upper = 0;
    int depth = 0;
};

/// Approximates the fiber interval of the invariant set over each grid
/// point by pulling the slab back `depth` times along the exact forward
/// base orbit. Intervals are nested in depth and stay inside [k1, k2].
std::vector<SurfaceSample> surface(const SkewProductSystem& sys, long base_grid, int depth);

/// Max distance between the pushed-forward fiber interval over x and the
/// stored interval over the base image of x (grid-interpolated).
double surface_invariance_residual(const SkewProductSystem& sys,
                                   const std::vector<SurfaceSample>& samples);

}  // namespace torustransit
