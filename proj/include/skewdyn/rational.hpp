#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace skew {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// accepts a negative denominator
Rational make_rational(const Integer& num, const Integer& den = 1);
bool is_integer(const Rational& q);
Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);
double to_double(const Rational& q);
std::string to_string(const Rational& q);  // "p/q", always with a denominator
Rational parse_rational(const std::string& text);  // "p", "p/q", "-p/q"

// Rational extended by +inf and -inf. Weights use the convention 1/0 = inf.
class ExtRational {
public:
    enum class Kind { finite, pos_inf, neg_inf };

    ExtRational() = default;
    ExtRational(const Rational& v) : value_(v) {}
    ExtRational(std::int64_t v) : value_(v) {}

    static ExtRational pos_inf();
    static ExtRational neg_inf();
    static ExtRational from_fraction(const Integer& num, const Integer& den);

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::finite; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    const Rational& value() const;  // throws on infinite

    // num/den with the infinite values rendered as +-1/0
    Integer num() const;
    Integer den() const;
    double approx() const;
    std::string str() const;

    ExtRational inverse() const;  // 0 <-> +inf for nonnegative values
    ExtRational operator-() const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator*(const ExtRational& a, const Rational& b);
    friend ExtRational operator/(const ExtRational& a, const Rational& b);

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    Kind kind_ = Kind::finite;
    Rational value_{0};
};

using Weight = ExtRational;

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

// Interval with explicit open/closed ends; infinite ends are always open.
struct Interval {
    ExtRational lo;
    ExtRational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval closed(const ExtRational& a, const ExtRational& b) { return {a, b, true, true}; }
    static Interval point(const ExtRational& a) { return {a, a, true, true}; }

    bool empty() const;
    bool contains(const Rational& x) const;
    Interval intersect(const Interval& other) const;
    std::string str() const;
};

}  // namespace skew
