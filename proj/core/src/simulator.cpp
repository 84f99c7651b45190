#include "torustransit/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "torustransit/errors.hpp"
#include "torustransit/parallel.hpp"
#include "torustransit/rng.hpp"

namespace torustransit {

std::vector<std::vector<double>> orbit(const SkewProductSystem& sys, const OrbitConfig& cfg) {
    if (cfg.length < 1) throw InvalidInput("orbit length must be at least 1");
    SplitMix64 rng(cfg.seed);
    std::vector<double> p;
    if (cfg.random_start) {
        p.resize(sys.dim());
        for (auto& c : p) c = rng.uniform01();
    } else {
        if (cfg.start.size() != sys.dim()) throw DimensionError("start point of wrong dimension");
        p = reduce_mod1(cfg.start);
    }
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(cfg.length));
    out.push_back(p);
    for (long i = 1; i < cfg.length; ++i) {
        p = sys.eval(p);
        if (cfg.random_start) {
            // A random start stands for a random real point. Expanding
            // integer maps shift its sub-resolution bits into view (the
            // doubling base consumes one mantissa bit per step), so the
            // seeded stream replenishes them below the last bit. Explicit
            // starts iterate plainly and keep fixed points fixed.
            for (auto& c : p) {
                c += rng.uniform01() * 0x1.0p-53;
                if (c >= 1.0) c -= 1.0;
            }
        }
        out.push_back(p);
    }
    return out;
}

namespace {

long cell_count(int grid, size_t dim) {
    long cells = 1;
    for (size_t i = 0; i < dim; ++i) {
        if (cells > (1L << 31) / grid) throw InvalidInput("grid too fine for this dimension");
        cells *= grid;
    }
    return cells;
}

long cell_index(const std::vector<double>& p, int grid) {
    long idx = 0;
    for (double c : p) {
        long bin = static_cast<long>(c * grid);
        if (bin >= grid) bin = grid - 1;
        if (bin < 0) bin = 0;
        idx = idx * grid + bin;
    }
    return idx;
}

}  // namespace

CoverageReport coverage(const std::vector<std::vector<double>>& orbit_points, int grid) {
    if (grid < 2) throw InvalidInput("coverage grid must be at least 2");
    if (orbit_points.empty()) throw InvalidInput("coverage of an empty orbit");
    const long cells = cell_count(grid, orbit_points.front().size());
    std::vector<bool> visited(static_cast<size_t>(cells), false);
    long distinct = 0;
    for (const auto& p : orbit_points) {
        const size_t idx = static_cast<size_t>(cell_index(p, grid));
        if (!visited[idx]) {
            visited[idx] = true;
            ++distinct;
        }
    }
    CoverageReport report;
    report.grid = grid;
    report.visited = distinct;
    report.total_cells = cells;
    report.fraction = static_cast<double>(distinct) / static_cast<double>(cells);
    report.steps = static_cast<long>(orbit_points.size());
    return report;
}

double chi_square_quantile_999(long dof) {
    const double z = 3.0902323061678132;  // standard normal 99.9% quantile
    const double k = static_cast<double>(dof);
    const double a = 2.0 / (9.0 * k);
    const double w = 1.0 - a + z * std::sqrt(a);
    return k * w * w * w;
}

UniformityReport pushforward_uniformity(const SkewProductSystem& sys, long samples, int grid,
                                        uint64_t seed) {
    if (grid < 2) throw InvalidInput("uniformity grid must be at least 2");
    const long cells = cell_count(grid, sys.dim());
    if (samples < cells) throw InvalidInput("need at least one sample per cell");
    std::vector<long> counts(static_cast<size_t>(cells), 0);
    SplitMix64 rng(seed);
    std::vector<double> p(sys.dim());
    for (long i = 0; i < samples; ++i) {
        for (auto& c : p) c = rng.uniform01();
        ++counts[static_cast<size_t>(cell_index(sys.eval(p), grid))];
    }
    const double expected = static_cast<double>(samples) / static_cast<double>(cells);
    double stat = 0;
    for (long c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    UniformityReport report;
    report.samples = samples;
    report.grid = grid;
    report.cells = cells;
    report.statistic = stat;
    report.threshold = chi_square_quantile_999(cells - 1);
    report.pass = stat <= report.threshold;
    return report;
}

SurfaceFrame surface_frame(const SkewProductSystem& sys) {
    if (sys.fiber_eigenvalue() <= 1)
        throw UnsupportedOrientationError(
            "surface approximation needs fiber eigenvalue >= 2; orientation-reversing "
            "fibers would require the second iterate, which leaves this family");
    auto witness = transverse_invariant_hyperplane(sys.linear_part(), sys.fiber_eigenvalue());
    if (!witness)
        throw InvalidInput("no transverse invariant hyperplane witness for this system");

    SurfaceFrame frame;
    frame.witness = *witness;
    const size_t m = sys.dim() - 1;
    const Rational wn = frame.witness.back();
    frame.w_tilde.resize(m);
    for (size_t i = 0; i < m; ++i) frame.w_tilde[i] = frame.witness[i] / wn;
    frame.shift = qvec_dot(frame.w_tilde, sys.base().translation()) + sys.fiber_offset();
    frame.lambda = sys.fiber_eigenvalue();

    // Height deviation of one lift step from multiplication by lambda;
    // piecewise affine in t, so the breakpoints carry the maximum.
    Rational bound(0);
    const Rational lam(frame.lambda);
    for (size_t i = 0; i < sys.fiber().breakpoints().size(); ++i) {
        Rational dev = frame.shift + sys.fiber().lift_values()[i] -
                       lam * sys.fiber().breakpoints()[i];
        if (dev < 0) dev = -dev;
        if (dev > bound) bound = dev;
    }
    auto [k1, k2] = slab_bounds_for(bound, frame.lambda);
    frame.k1 = k1;
    frame.k2 = k2;
    return frame;
}

std::vector<SurfaceSample> surface(const SkewProductSystem& sys, long base_grid, int depth) {
    const size_t m = sys.dim() - 1;
    if (m > 2) throw InvalidInput("surface grids support base dimension 1 or 2 only");
    if (base_grid < 1) throw InvalidInput("base grid must be positive");
    if (depth < 0) throw InvalidInput("depth must be nonnegative");
    const SurfaceFrame frame = surface_frame(sys);

    const size_t total = m == 1 ? static_cast<size_t>(base_grid)
                                : static_cast<size_t>(base_grid) * static_cast<size_t>(base_grid);
    std::vector<SurfaceSample> samples(total);

    const double lambda_d = frame.lambda.get_d();
    const double shift_d = frame.shift.get_d();
    const double k1_d = frame.k1.get_d();
    const double k2_d = frame.k2.get_d();

    parallel_for(total, [&](size_t begin, size_t end) {
        for (size_t idx = begin; idx < end; ++idx) {
            QVec x(m);
            if (m == 1) {
                x[0] = make_rational(Int(static_cast<unsigned long>(idx)), Int(base_grid));
            } else {
                x[0] = make_rational(Int(static_cast<unsigned long>(idx / base_grid)), Int(base_grid));
                x[1] = make_rational(Int(static_cast<unsigned long>(idx % base_grid)), Int(base_grid));
            }
            // Exact forward base orbit; only the fractional parts of the
            // adapted coordinate enter the float recursion, so no
            // precision is lost to the growing lift.
            std::vector<double> theta(static_cast<size_t>(depth));
            QVec z = x;
            for (int j = 0; j < depth; ++j) {
                theta[static_cast<size_t>(j)] = frac_part(qvec_dot(frame.w_tilde, z)).get_d();
                z = sys.base().apply_lift(z);
            }
            double lo = k1_d, hi = k2_d;
            for (int j = depth - 1; j >= 0; --j) {
                const double th = theta[static_cast<size_t>(j)];
                lo = th + sys.fiber().lift_inverse(lo - lambda_d * th - shift_d);
                hi = th + sys.fiber().lift_inverse(hi - lambda_d * th - shift_d);
            }
            samples[idx] = SurfaceSample{std::move(x), lo, hi, depth};
        }
    });
    return samples;
}

double surface_invariance_residual(const SkewProductSystem& sys,
                                   const std::vector<SurfaceSample>& samples) {
    if (samples.empty()) throw InvalidInput("no surface samples");
    const size_t m = sys.dim() - 1;
    const SurfaceFrame frame = surface_frame(sys);
    long grid = 0;
    if (m == 1) {
        grid = static_cast<long>(samples.size());
    } else {
        grid = static_cast<long>(std::lround(std::sqrt(static_cast<double>(samples.size()))));
        if (static_cast<size_t>(grid) * static_cast<size_t>(grid) != samples.size())
            throw InvalidInput("two-dimensional surface samples must form a square grid");
    }
    const double lambda_d = frame.lambda.get_d();
    const double shift_d = frame.shift.get_d();

    // Interpolated lookup of the stored interval over an exact base point.
    auto lookup = [&](const QVec& y, double& lo, double& hi) {
        if (m == 1) {
            const Rational pos = frac_part(y[0]) * grid;
            const Int i0 = floor_int(pos);
            const double f = Rational(pos - Rational(i0)).get_d();
            const size_t a = i0.get_ui() % static_cast<unsigned long>(grid);
            const size_t b = (a + 1) % static_cast<size_t>(grid);
            lo = (1 - f) * samples[a].lower + f * samples[b].lower;
            hi = (1 - f) * samples[a].upper + f * samples[b].upper;
        } else {
            const Rational pos0 = frac_part(y[0]) * grid;
            const Rational pos1 = frac_part(y[1]) * grid;
            const Int i0 = floor_int(pos0), i1 = floor_int(pos1);
            const double f0 = Rational(pos0 - Rational(i0)).get_d();
            const double f1 = Rational(pos1 - Rational(i1)).get_d();
            const size_t a0 = i0.get_ui() % static_cast<unsigned long>(grid);
            const size_t a1 = i1.get_ui() % static_cast<unsigned long>(grid);
            const size_t b0 = (a0 + 1) % static_cast<size_t>(grid);
            const size_t b1 = (a1 + 1) % static_cast<size_t>(grid);
            auto at = [&](size_t r, size_t c) -> const SurfaceSample& {
                return samples[r * static_cast<size_t>(grid) + c];
            };
            lo = (1 - f0) * ((1 - f1) * at(a0, a1).lower + f1 * at(a0, b1).lower) +
                 f0 * ((1 - f1) * at(b0, a1).lower + f1 * at(b0, b1).lower);
            hi = (1 - f0) * ((1 - f1) * at(a0, a1).upper + f1 * at(a0, b1).upper) +
                 f0 * ((1 - f1) * at(b0, a1).upper + f1 * at(b0, b1).upper);
        }
    };

    double residual = 0;
    for (const auto& s : samples) {
        const double th = frac_part(qvec_dot(frame.w_tilde, s.base_point)).get_d();
        const double lo_img = sys.fiber().lift_eval(s.lower - th) + lambda_d * th + shift_d;
        const double hi_img = sys.fiber().lift_eval(s.upper - th) + lambda_d * th + shift_d;
        const QVec y = sys.base().apply_lift(s.base_point);
        double lo_stored = 0, hi_stored = 0;
        lookup(y, lo_stored, hi_stored);
        residual = std::max(residual, std::abs(lo_img - lo_stored));
        residual = std::max(residual, std::abs(hi_img - hi_stored));
    }
    return residual;
}

}  // namespace torustransit
