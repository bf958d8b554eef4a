#include "skewdyn/rational.hpp"

#include <stdexcept>

namespace skew {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q)
{
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

ExtRational ExtRational::pos_inf()
{
    ExtRational r;
    r.kind_ = Kind::pos_inf;
    return r;
}

ExtRational ExtRational::neg_inf()
{
    ExtRational r;
    r.kind_ = Kind::neg_inf;
    return r;
}

ExtRational ExtRational::from_fraction(const Integer& num, const Integer& den)
{
    if (den == 0) {
        if (num == 0) throw std::invalid_argument("0/0 is not a weight");
        return num > 0 ? pos_inf() : neg_inf();
    }
    return ExtRational(make_rational(num, den));
}

const Rational& ExtRational::value() const
{
    if (kind_ != Kind::finite) throw std::domain_error("value() of an infinite rational");
    return value_;
}

Integer ExtRational::num() const
{
    switch (kind_) {
    case Kind::pos_inf: return 1;
    case Kind::neg_inf: return -1;
    default: return numerator_of(value_);
    }
}

Integer ExtRational::den() const { return kind_ == Kind::finite ? denominator_of(value_) : Integer(0); }

double ExtRational::approx() const
{
    switch (kind_) {
    case Kind::pos_inf: return std::numeric_limits<double>::infinity();
    case Kind::neg_inf: return -std::numeric_limits<double>::infinity();
    default: return to_double(value_);
    }
}

std::string ExtRational::str() const
{
    switch (kind_) {
    case Kind::pos_inf: return "inf";
    case Kind::neg_inf: return "-inf";
    default: return to_string(value_);
    }
}

ExtRational ExtRational::inverse() const
{
    if (kind_ != Kind::finite) return ExtRational(0);
    if (value_ == 0) return pos_inf();
    return ExtRational(Rational(1) / value_);
}

ExtRational ExtRational::operator-() const
{
    switch (kind_) {
    case Kind::pos_inf: return neg_inf();
    case Kind::neg_inf: return pos_inf();
    default: return ExtRational(-value_);
    }
}

ExtRational operator+(const ExtRational& a, const ExtRational& b)
{
    if (a.finite() && b.finite()) return ExtRational(a.value_ + b.value_);
    if (!a.finite() && !b.finite() && a.kind_ != b.kind_) throw std::domain_error("inf - inf");
    return a.finite() ? b : a;
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }

ExtRational operator*(const ExtRational& a, const Rational& b)
{
    if (a.finite()) return ExtRational(a.value_ * b);
    if (b == 0) throw std::domain_error("inf * 0");
    return b > 0 ? a : -a;
}

ExtRational operator/(const ExtRational& a, const Rational& b)
{
    if (b == 0) throw std::domain_error("division by zero");
    return a * (Rational(1) / b);
}

bool operator==(const ExtRational& a, const ExtRational& b)
{
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b)
{
    auto rank = [](const ExtRational& x) { return x.is_neg_inf() ? 0 : x.finite() ? 1 : 2; };
    if (rank(a) != rank(b)) return rank(a) <=> rank(b);
    if (!a.finite()) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

bool Interval::empty() const
{
    if (hi < lo) return true;
    if (lo == hi) return !(lo_closed && hi_closed) || !lo.finite();
    return false;
}

bool Interval::contains(const Rational& x) const
{
    ExtRational v(x);
    bool above = lo_closed ? lo <= v : lo < v;
    bool below = hi_closed ? v <= hi : v < hi;
    return above && below;
}

Interval Interval::intersect(const Interval& other) const
{
    Interval out = *this;
    if (other.lo > lo || (other.lo == lo && !other.lo_closed)) {
        out.lo = other.lo;
        out.lo_closed = other.lo_closed;
    }
    if (other.hi < hi || (other.hi == hi && !other.hi_closed)) {
        out.hi = other.hi;
        out.hi_closed = other.hi_closed;
    }
    return out;
}

std::string Interval::str() const
{
    if (empty()) return "{}";
    if (lo == hi) return "{" + lo.str() + "}";
    return std::string(lo_closed && lo.finite() ? "[" : "(") + lo.str() + ", " + hi.str() +
           (hi_closed && hi.finite() ? "]" : ")");
}

}  // namespace skew
