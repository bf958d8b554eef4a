#pragma once

#include "skewdyn/newton.hpp"
#include "skewdyn/poly.hpp"
#include "skewdyn/region.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skew {

ExtRational R_map(const ExtRational& a, int delta, int gamma, int d);
ExtRational R_pow(const ExtRational& a, int n, int delta, int gamma, int d);
ExtRational alpha0(int delta, int gamma, int d);

// log|w| compared against log_coeff + exponent * log|z|
struct LogBound {
    double log_coeff = 0.0;
    ExtRational exponent;
    double at(double lz) const;
};

// Reinhardt region described in (log|z|, log|w|):
//   lz < z_bound, lower < lw < upper, with optional z != 0 / w != 0 punctures.
struct ExponentRegion {
    std::optional<LogBound> lower;
    std::optional<LogBound> upper;
    std::optional<double> z_bound;  // log of the |z| bound
    bool z_punctured = false;
    bool w_punctured = false;

    bool contains(cplx z, cplx w) const;
    bool contains_log(double lz, double lw) const;
    std::string str() const;
};

ExponentRegion preimage_region(const Classification& c, double r, int n);

struct BasinDescriptor {
    Case case_tag = Case::case1;
    std::string subcase;  // "i", "ii", ...
    ExponentRegion region;
    ExtRational alpha0;
};

// c must be a single-vertex classification (a boundary alternative is fine)
BasinDescriptor basin_descriptor(const Classification& c, const NewtonPolygon& np, double r);

// f0^n(z, w) in U_r for f0 = (z^delta, z^gamma w^d), iterated in log coordinates
bool membership_oracle(const Classification& c, double r, int n, cplx z, cplx w);

// V = { r2^-1 |z|^a2 < |w| < r1 |z|^a1 }
struct VRegion {
    double r1 = 1.0;
    double r2 = 1.0;
    ExtRational a1 = ExtRational::neg_inf();
    ExtRational a2 = ExtRational::pos_inf();

    bool contains(cplx z, cplx w) const;
    bool contains_log(double lz, double lw) const;
};

struct VCheck {
    bool u_in_v = true;
    bool v_in_basin = true;
    std::optional<Point> witness;
    int samples = 0;
};

VCheck check_v_region(const Classification& c, const NewtonPolygon& np, double r, const VRegion& v, int count,
                      std::uint64_t seed);
// Validates the parameter ordering and both inclusions; throws InclusionViolation with the witness.
VRegion v_region(const Classification& c, const NewtonPolygon& np, double r, const VRegion& v, int count = 2000,
                 std::uint64_t seed = 1);

struct RasterSpec {
    int width = 200;
    int height = 200;
    double lz_min = -6.0;
    double lz_max = 0.5;
    double lw_min = -10.0;
    double lw_max = 2.0;
};

// CSV rows: log_abs_z,log_abs_w,in_U,in_preimage,in_basin,in_V
std::string raster_csv(const Classification& c, const NewtonPolygon& np, double r, int n,
                       const std::optional<VRegion>& v, const RasterSpec& spec);

}  // namespace skew
