#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace bcrank {

/// Arbitrary-precision rational; gmpxx keeps values in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(long num, long den = 1);

/// Complex number re + im*i1 with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit i1.
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const;
    /// Multiplication by i1, i.e. (re, im) -> (-im, re).
    GaussianRational times_i() const { return {-im_, re_}; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    /// Throws std::domain_error when rhs is zero.
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Debug form such as "3/2-1/4i1"; not the matrix file syntax.
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace bcrank
