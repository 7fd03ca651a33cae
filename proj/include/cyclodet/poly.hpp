#pragma once

#include "cyclodet/cyclotomic.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace cyclodet {

// Variable tag carried by dense polynomials. X is a plain variable, XSq
// marks a polynomial whose variable stands for x^2 (Wilson and continuous
// dual Hahn polynomials live there), Z tags dense polynomials in z.
enum class Var { X, XSq, Z };

std::string var_name(Var v);

// Dense univariate polynomial over Q(zeta). Coefficients are stored in
// ascending order with no trailing zeros, so degree() is size-1 and the
// zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default; // zero polynomial tagged X
    explicit Poly(Var v) : var_(v) {}
    Poly(Var v, std::vector<Cyclotomic> coeffs);

    static Poly constant(Var v, const Cyclotomic& c);
    static Poly monomial(Var v, int deg, const Cyclotomic& c);

    Var var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Cyclotomic coeff(int k) const;
    Cyclotomic leading() const; // zero for the zero polynomial

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Cyclotomic& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Cyclotomic& s) { return a *= s; }
    friend Poly operator*(const Cyclotomic& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Cyclotomic eval(const Cyclotomic& x) const;

    // var^k * p
    Poly times_var(int k) const;
    // p(c * var), same tag
    Poly scale_arg(const Cyclotomic& c) const;
    // p(alpha * var + beta), same tag
    Poly affine_arg(const Cyclotomic& alpha, const Cyclotomic& beta) const;
    // Reinterprets a polynomial tagged XSq as the even polynomial q(x^2) in x.
    // Throws std::logic_error on any other tag.
    Poly compose_square() const;
    // Synthetic division by (var - a): returns the quotient and stores the
    // remainder p(a) in *remainder when given.
    Poly divide_linear(const Cyclotomic& a, Cyclotomic* remainder = nullptr) const;

    std::string str() const;

private:
    Var var_ = Var::X;
    std::vector<Cyclotomic> c_;

    void trim();
    // Tags must agree unless one side is constant; the non-constant tag wins.
    static Var join(const Poly& a, const Poly& b);
};

// Laurent polynomial in z over Q(zeta), a sparse exponent -> coefficient map
// with no stored zeros. Also serves as the coefficient ring for truncated
// q-series.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    LaurentPoly(const Cyclotomic& c);
    LaurentPoly(long v);
    LaurentPoly(int v);

    static LaurentPoly term(int e, const Cyclotomic& c);

    void add_term(int e, const Cyclotomic& c);
    Cyclotomic coeff(int e) const;
    bool is_zero() const { return t_.empty(); }
    // Throw std::logic_error on the zero polynomial.
    int min_exp() const;
    int max_exp() const;
    const std::map<int, Cyclotomic>& terms() const { return t_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Cyclotomic& s);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Cyclotomic& s) { return a *= s; }
    friend LaurentPoly operator*(const Cyclotomic& s, LaurentPoly a) { return a *= s; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int k) const; // z^k * this
    LaurentPoly invert_z() const;     // z -> 1/z

    // A monic Laurent polynomial of degree k is supported on the first k+1
    // terms of 1, z, z^{-1}, z^2, z^{-2}, ... with coefficient 1 on the
    // (k+1)st.
    bool is_monic_laurent(int k) const;

    // Exact evaluation; z must be invertible when negative exponents occur.
    Cyclotomic eval_field(const Cyclotomic& z) const;
    std::complex<double> eval(const std::complex<double>& z) const;

    std::string str() const;

private:
    std::map<int, Cyclotomic> t_;
};

// Exponent of the (k+1)st entry of the sequence 1, z, z^{-1}, z^2, z^{-2}, ...
int laurent_step_exponent(int k);

} // namespace cyclodet
