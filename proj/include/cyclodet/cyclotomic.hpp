#pragma once

#include "cyclodet/rational.hpp"

#include <array>
#include <complex>
#include <string>

namespace cyclodet {

// The field Q(zeta), zeta = e^{i pi/12} a primitive 24th root of unity.
// Elements are rational coordinate vectors on the power basis
// 1, zeta, ..., zeta^7, reduced by zeta^8 = zeta^4 - 1 (the 24th cyclotomic
// polynomial is x^8 - x^4 + 1). The representation is canonical, so equality
// is coordinatewise. This single field hosts every constant the catalog
// needs:
//   i = zeta^6, omega = e^{2 pi i/3} = zeta^8, sqrt2 = zeta^3 + zeta^{21},
//   sqrt3 = zeta^2 + zeta^{22}, e^{i pi/6} = zeta^2, e^{i pi/4} = zeta^3,
//   e^{i pi/3} = zeta^4.
class Cyclotomic {
public:
    static constexpr int degree = 8;

    Cyclotomic() = default; // zero
    Cyclotomic(const Rational& r);
    Cyclotomic(long v);
    Cyclotomic(int v);

    static Cyclotomic ratio(long num, long den);
    static Cyclotomic zeta(long k); // zeta^k, any integer k
    static Cyclotomic i();
    static Cyclotomic omega();
    static Cyclotomic sqrt2();
    static Cyclotomic sqrt3();
    // Exact half-integer powers 2^{e/2} and 3^{e/2}, e any integer.
    static Cyclotomic sqrt2_pow(long e);
    static Cyclotomic sqrt3_pow(long e);

    const Rational& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational(); throws std::logic_error otherwise.
    const Rational& rational_part() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Throws std::domain_error on zero.
    Cyclotomic inverse() const;
    // Integer exponent; negative goes through inverse().
    Cyclotomic pow(long e) const;
    // The automorphism zeta -> zeta^{-1} (complex conjugation).
    Cyclotomic conjugate() const;
    std::complex<double> to_complex() const;

    // Debug form "[a0, a1, ..., a7]" with "num/den" coordinates.
    std::string str() const;

private:
    std::array<Rational, degree> c_{};

    static const std::array<Cyclotomic, 24>& zeta_table();
};

} // namespace cyclodet
