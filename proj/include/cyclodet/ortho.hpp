#pragma once

#include "cyclodet/hyper.hpp"
#include "cyclodet/poly.hpp"

#include <utility>
#include <vector>

namespace cyclodet {

// The five polynomial families, exactly over Q(zeta), plus their norm
// formulas, the Christoffel transform, and the Meixner-Pollaczek connection
// identity. Angles enter as the integer k with e^{i phi} = zeta^k.

// W_n(X; a1,a2,a3,a4), a polynomial in X = x^2: each pair
// (a1 + ix)_k (a1 - ix)_k expands to prod_{j<k} ((a1+j)^2 + X).
Poly wilson(int n, const Cyclotomic& a1, const Cyclotomic& a2,
            const Cyclotomic& a3, const Cyclotomic& a4);
Cyclotomic wilson_norm(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                       const Cyclotomic& a3, const Cyclotomic& a4);

// Continuous dual Hahn S_n(X; a1,a2,a3) in X = x^2.
Poly cdh(int n, const Cyclotomic& a1, const Cyclotomic& a2, const Cyclotomic& a3);
Cyclotomic cdh_norm(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                    const Cyclotomic& a3);

// Meixner-Pollaczek P_n^{(lambda)}(x; phi) with e^{i phi} = zeta^phase.
Poly mp(int n, const Rational& lambda, int phase);
Cyclotomic mp_norm(int n, const Rational& lambda);
// 2 sin(phi) = -i (zeta^phase - zeta^{-phase}) as a field element.
Cyclotomic two_sin(int phase);
// Verifies P_n(x; pi/2 + phi) = (-1)^n ((2 lambda)_n / n!)
//   * sum_k [(-n)_k / (2 lambda)_k] (2 sin phi)^{n-k} P_k(x; pi/2 - phi)
// as an exact polynomial identity; phase encodes the offset phi.
bool mp_connection_check(int n, const Rational& lambda, int phase);

// Askey-Wilson p_n((z + z^{-1})/2; a1,a2,a3,a4 | q) as a symmetric Laurent
// polynomial in z.
LaurentPoly askey_wilson(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                         const Cyclotomic& a3, const Cyclotomic& a4,
                         const Cyclotomic& q);

// Biorthogonal Laurent polynomials on the circle:
// P_n^{(a,b;q)}(z) = z^{-[n/2]} 2phi1(q^{-n}, b/a; q^{1-n}/ab; q, qz/b),
// returned with the constant C_n making P_n / C_n monic Laurent of degree n.
std::pair<LaurentPoly, Cyclotomic> pastro(int n, const Cyclotomic& a,
                                          const Cyclotomic& b, const Cyclotomic& q);
// Closed-form norm of P_n under mu_{a,b}.
Cyclotomic pastro_norm(int n, const Cyclotomic& a, const Cyclotomic& b,
                       const Cyclotomic& q);
// Closed form of mu_{c,b}(P_m^{(a,b;q)} P_n^{(a,b;q)}).
Cyclotomic pastro_pairing(int m, int n, const Cyclotomic& a, const Cyclotomic& c,
                          const Cyclotomic& b, const Cyclotomic& q);

// The interleaved circle family: even index 2n is the Askey-Wilson
// polynomial with parameters (1, b, bq, bq^2), base q^3, normalized by
// (b^3 q^{3n}; q^3)_n; odd index 2n+1 carries an extra factor (z - 1) and
// parameters (q^3, b, bq, bq^2). Returns the polynomial and its norm.
std::pair<LaurentPoly, Cyclotomic> laurent_p0(int k, const Cyclotomic& b,
                                              const Cyclotomic& q);

// Christoffel transform at the point a: from monic orthogonal p_n with norms
// h_n to the monic family for the measure multiplied by (x - a),
//   p~_n = (p_{n+1} - (p_{n+1}(a)/p_n(a)) p_n) / (x - a),
//   h~_n = -(p_{n+1}(a)/p_n(a)) h_n.
// Needs h.size() >= p.size() - 1; returns lists of length p.size() - 1.
std::pair<std::vector<Poly>, std::vector<Cyclotomic>>
christoffel(const std::vector<Poly>& p, const std::vector<Cyclotomic>& h,
            const Cyclotomic& a);

} // namespace cyclodet
