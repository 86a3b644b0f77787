#pragma once

#include "bcrank/gaussian.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <utility>

namespace bcrank {

/// Where a bicomplex number sits relative to the singular set O2 = I1 u I2.
enum class SingularityClass {
    Zero,       ///< both idempotent parts vanish
    E1Line,     ///< nonzero member of I1: second part is zero
    E2Line,     ///< nonzero member of I2: first part is zero
    Invertible, ///< both parts nonzero
};

const char* to_string(SingularityClass c) noexcept;

/// Bicomplex number z1 + i2*z2 with z1, z2 Gaussian rationals.
///
/// The (z1, z2) pair is the stored form. The idempotent parts
///   first  = z1 - i1*z2   (coefficient of e1)
///   second = z1 + i1*z2   (coefficient of e2)
/// are derived on demand; ring operations act componentwise on them.
class Bicomplex {
public:
    Bicomplex() = default;
    Bicomplex(long real) : z1_(real) {}
    Bicomplex(GaussianRational z1, GaussianRational z2 = {})
        : z1_(std::move(z1)), z2_(std::move(z2)) {}

    /// u1 + u2*i1 + u3*i2 + u4*i1*i2
    static Bicomplex from_coefficients(const Rational& u1, const Rational& u2,
                                       const Rational& u3, const Rational& u4);
    /// c1*e1 + c2*e2
    static Bicomplex from_idempotent(const GaussianRational& c1, const GaussianRational& c2);

    static Bicomplex i1() { return {GaussianRational::i(), {}}; }
    static Bicomplex i2() { return {{}, GaussianRational(1)}; }
    static Bicomplex i1i2() { return {{}, GaussianRational::i()}; }
    static Bicomplex e1();
    static Bicomplex e2();

    const GaussianRational& z1() const noexcept { return z1_; }
    const GaussianRational& z2() const noexcept { return z2_; }

    GaussianRational first_part() const { return z1_ - z2_.times_i(); }
    GaussianRational second_part() const { return z1_ + z2_.times_i(); }
    std::pair<GaussianRational, GaussianRational> idempotent_parts() const {
        return {first_part(), second_part()};
    }

    /// Real coefficients (u1, u2, u3, u4).
    std::array<Rational, 4> coefficients() const {
        return {z1_.re(), z1_.im(), z2_.re(), z2_.im()};
    }

    bool is_zero() const noexcept { return z1_.is_zero() && z2_.is_zero(); }
    SingularityClass singularity_class() const;
    bool is_invertible() const { return singularity_class() == SingularityClass::Invertible; }
    /// Member of O2 (includes zero).
    bool is_singular() const { return !is_invertible(); }
    bool in_I1() const { return second_part().is_zero(); }
    bool in_I2() const { return first_part().is_zero(); }

    /// Throws NotInvertible when this is a member of O2.
    Bicomplex inverse() const;

    Bicomplex& operator+=(const Bicomplex& rhs);
    Bicomplex& operator-=(const Bicomplex& rhs);
    Bicomplex& operator*=(const Bicomplex& rhs);

    friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
    friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
    Bicomplex operator-() const { return {-z1_, -z2_}; }

    friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.z1_ == b.z1_ && a.z2_ == b.z2_;
    }

private:
    GaussianRational z1_;
    GaussianRational z2_;
};

/// Canonical literal u1+u2i1+u3i2+u4i1i2 with zero terms omitted ("0" for zero).
std::string to_string(const Bicomplex& x);
std::ostream& operator<<(std::ostream& os, const Bicomplex& x);

} // namespace bcrank
