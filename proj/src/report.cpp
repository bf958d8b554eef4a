#include "skewdyn/report.hpp"

#include "skewdyn/error.hpp"

#include <limits>

namespace skew {

namespace {

using json = nlohmann::json;

json integer_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error(errc::invalid_input, "expected an integer in rational field");
}

}  // namespace

json to_json(const Rational& q)
{
    return {{"num", integer_json(numerator_of(q))}, {"den", integer_json(denominator_of(q))}, {"approx", to_double(q)}};
}

json to_json(const ExtRational& q)
{
    if (q.finite()) return to_json(q.value());
    return {{"num", q.is_pos_inf() ? 1 : -1}, {"den", 0}, {"approx", q.str()}};
}

json to_json(const Interval& iv)
{
    return {{"lo", to_json(iv.lo)},
            {"hi", to_json(iv.hi)},
            {"lo_closed", iv.lo_closed},
            {"hi_closed", iv.hi_closed},
            {"text", iv.str()}};
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const NewtonPolygon& np)
{
    json verts = json::array(), ts = json::array();
    for (auto& [n, m] : np.vertices) verts.push_back({n, m});
    for (auto& t : np.intercepts) ts.push_back(to_json(t));
    return {{"vertices", verts}, {"T", ts}};
}

json to_json(const Classification& c)
{
    json out = {{"case", case_name(c.kind)},
                {"k", c.k_index},
                {"delta", c.delta},
                {"gamma", c.gamma},
                {"d", c.d},
                {"b", to_json(c.b)},
                {"l1", to_json(c.l1)},
                {"l2", to_json(c.l2)},
                {"on_boundary", c.on_boundary}};
    if (!c.alternatives.empty()) {
        json alts = json::array();
        for (auto& a : c.alternatives) alts.push_back(to_json(a));
        out["alternatives"] = alts;
    }
    return out;
}

json to_json(const WeightIntervals& w)
{
    json out = {{"I1", to_json(w.i1)}, {"alpha0", to_json(w.alpha0)}};
    if (w.i2) out["I2_at_l1"] = to_json(*w.i2);
    if (w.rectangle)
        out["rectangle"] = {{"first", to_json(w.rectangle->first)}, {"sum", to_json(w.rectangle->second)}};
    return out;
}

ExtRational ext_rational_from_json(const json& j)
{
    Integer num = integer_from_json(j.at("num"));
    Integer den = integer_from_json(j.at("den"));
    if (den == 0) {
        if (num == 0) throw Error(errc::invalid_input, "0/0 in rational field");
        return num > 0 ? ExtRational::pos_inf() : ExtRational::neg_inf();
    }
    return ExtRational(make_rational(num, den));
}

}  // namespace skew
