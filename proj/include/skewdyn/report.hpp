#pragma once

#include "skewdyn/newton.hpp"
#include "skewdyn/rational.hpp"

#include <nlohmann/json.hpp>

namespace skew {

// {"num", "den", "approx"}; infinities are {+-1, 0, "inf"/"-inf"}. Integers beyond 64 bits become strings.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const ExtRational& q);
nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(cplx z);
nlohmann::json to_json(const NewtonPolygon& np);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const WeightIntervals& w);

ExtRational ext_rational_from_json(const nlohmann::json& j);

}  // namespace skew
