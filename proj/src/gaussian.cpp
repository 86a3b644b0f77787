#include "bcrank/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace bcrank {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational GaussianRational::norm() const {
    Rational n = re_ * re_;
    n += im_ * im_;
    return n;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("division by zero Gaussian rational");
    const Rational n = rhs.norm();
    *this *= rhs.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& z) {
    if (sgn(z.im()) == 0)
        return z.re().get_str();
    std::string s;
    if (sgn(z.re()) != 0)
        s = z.re().get_str();
    if (sgn(z.im()) > 0 && !s.empty())
        s += '+';
    s += z.im().get_str();
    s += "i1";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

} // namespace bcrank
