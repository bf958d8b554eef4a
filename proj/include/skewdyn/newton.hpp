#pragma once

#include "skewdyn/poly.hpp"
#include "skewdyn/rational.hpp"

#include <optional>
#include <vector>

namespace skew {

struct NewtonPolygon {
    std::vector<Exponent> vertices;  // n increasing, m decreasing
    std::vector<Rational> intercepts;  // T_1 .. T_{s-1}
    std::vector<cplx> vertex_coeffs;  // empty when built from a bare support

    int s() const { return static_cast<int>(vertices.size()); }
    // 1-based accessors matching the usual (n_k, m_k), T_k indexing
    int n(int k) const { return vertices.at(k - 1).first; }
    int m(int k) const { return vertices.at(k - 1).second; }
    const Rational& T(int k) const { return intercepts.at(k - 1); }
};

NewtonPolygon newton_polygon(const BiPoly& q);
NewtonPolygon newton_polygon(const std::vector<Exponent>& support);

// Vertices of the hull of the union of quadrants over a rational support.
std::vector<RatExponent> staircase_hull(std::vector<RatExponent> pts);

enum class Case { case1 = 1, case2 = 2, case3 = 3, case4 = 4, boundary = 5 };

const char* case_name(Case c);

struct Classification {
    Case kind = Case::case1;
    int k_index = 1;  // dominant vertex; for Boundary the index k with delta = T_k
    int delta = 2;
    int gamma = 0;
    int d = 0;
    cplx b{1.0, 0.0};
    Weight l1;
    Weight l2;
    bool on_boundary = false;  // delta equals an intercept adjacent to the dominant vertex
    std::vector<Classification> alternatives;  // exactly two for Boundary

    bool degenerate() const { return d == 0; }
    Weight l2_inv() const { return l2.inverse(); }
};

Classification classify(const NewtonPolygon& np, int delta);
Classification classify(const SkewProduct& f);
// Classification using vertex v (1-based) as the dominant one, regardless of delta
Classification classify_at_vertex(const NewtonPolygon& np, int delta, int v);

struct WeightIntervals {
    Interval i1;                  // I_f, or I_f^1 in Case 4
    std::optional<Interval> i2;   // I_f^2(l_1), Case 4 only
    ExtRational alpha0;           // gamma/(delta-d), +inf when delta = d
    std::optional<std::pair<Interval, Interval>> rectangle;  // (l_(1), l_(1)+l_(2)) ranges
};

WeightIntervals weight_intervals(const Classification& c, const NewtonPolygon& np, int delta);
// I_f^2 as a function of the first weight (Case 4)
Interval weight_interval_2(const Classification& c, const Rational& l_first);

std::vector<RatExponent> to_rational(const std::vector<Exponent>& support);
std::vector<RatExponent> transform_A1(const std::vector<RatExponent>& support, const Weight& l1, int delta);
std::vector<RatExponent> transform_A2(const std::vector<RatExponent>& support, const Weight& l2_inv);

}  // namespace skew
