#include "bcrank/bicomplex.hpp"

#include "bcrank/errors.hpp"

#include <ostream>

namespace bcrank {

const char* to_string(SingularityClass c) noexcept {
    switch (c) {
    case SingularityClass::Zero: return "Zero";
    case SingularityClass::E1Line: return "E1Line";
    case SingularityClass::E2Line: return "E2Line";
    case SingularityClass::Invertible: return "Invertible";
    }
    return "?";
}

Bicomplex Bicomplex::from_coefficients(const Rational& u1, const Rational& u2,
                                       const Rational& u3, const Rational& u4) {
    return {GaussianRational(u1, u2), GaussianRational(u3, u4)};
}

Bicomplex Bicomplex::from_idempotent(const GaussianRational& c1, const GaussianRational& c2) {
    const Rational half(1, 2);
    GaussianRational z1 = (c1 + c2) * GaussianRational(half);
    GaussianRational z2 = ((c1 - c2) * GaussianRational(half)).times_i();
    return {std::move(z1), std::move(z2)};
}

Bicomplex Bicomplex::e1() { return from_idempotent(GaussianRational(1), GaussianRational(0)); }

Bicomplex Bicomplex::e2() { return from_idempotent(GaussianRational(0), GaussianRational(1)); }

SingularityClass Bicomplex::singularity_class() const {
    const bool first_zero = first_part().is_zero();
    const bool second_zero = second_part().is_zero();
    if (first_zero && second_zero)
        return SingularityClass::Zero;
    if (second_zero)
        return SingularityClass::E1Line;
    if (first_zero)
        return SingularityClass::E2Line;
    return SingularityClass::Invertible;
}

Bicomplex Bicomplex::inverse() const {
    auto [c1, c2] = idempotent_parts();
    if (c1.is_zero() || c2.is_zero())
        throw NotInvertible("bicomplex number " + to_string(*this) + " is a zero divisor");
    const GaussianRational one(1);
    return from_idempotent(one / c1, one / c2);
}

Bicomplex& Bicomplex::operator+=(const Bicomplex& rhs) {
    z1_ += rhs.z1_;
    z2_ += rhs.z2_;
    return *this;
}

Bicomplex& Bicomplex::operator-=(const Bicomplex& rhs) {
    z1_ -= rhs.z1_;
    z2_ -= rhs.z2_;
    return *this;
}

// (z1 + i2 z2)(w1 + i2 w2) = (z1 w1 - z2 w2) + i2 (z1 w2 + z2 w1), using i2^2 = -1.
Bicomplex& Bicomplex::operator*=(const Bicomplex& rhs) {
    GaussianRational z1 = z1_ * rhs.z1_ - z2_ * rhs.z2_;
    GaussianRational z2 = z1_ * rhs.z2_ + z2_ * rhs.z1_;
    z1_ = std::move(z1);
    z2_ = std::move(z2);
    return *this;
}

namespace {

void append_term(std::string& out, const Rational& coeff, const char* unit) {
    const int s = sgn(coeff);
    if (s == 0)
        return;
    if (s > 0 && !out.empty())
        out += '+';
    if (*unit != '\0' && abs(coeff) == 1) {
        if (s < 0)
            out += '-';
    } else {
        out += coeff.get_str();
    }
    out += unit;
}

} // namespace

std::string to_string(const Bicomplex& x) {
    const auto u = x.coefficients();
    std::string out;
    append_term(out, u[0], "");
    append_term(out, u[1], "i1");
    append_term(out, u[2], "i2");
    append_term(out, u[3], "i1i2");
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Bicomplex& x) { return os << to_string(x); }

} // namespace bcrank
