#pragma once

#include "cyclodet/ortho.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace cyclodet {

// Floating-point corroboration of the integral statements behind the exact
// catalog: the four line/circle orthogonality relations, the nine-row weight
// table, the shifted Meixner-Pollaczek pairing, and the circle measures for
// the Laurent families.

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    // Estimated, not guaranteed. Quadrature ops report the change under the
    // final refinement; check_* ops report the deviation from the closed form
    // they compare against (relative for check_sp, absolute otherwise).
    double est_error = 0.0;
    int panels = 0;
};

// One row of the weight summary table: the pair
//   w_{+-1}(x) = l (2 cos(pi k / 2l))^b / (4 pi Gamma(b))
//                * (+-1)^delta e^{+-k pi x} Gamma(b/2 + lix + eps) Gamma(b/2 - lix)
// with w_0 = w_1 + w_{-1} equal to the cosh (delta = 0) or sinh (delta = 1)
// closed form. sign selects which of w_{+-1} weight_side evaluates.
struct WeightSpec {
    int k = 1;
    int l = 3;
    int delta = 0;
    int epsilon = 0;
    double b = 1.0;
    int sign = 1;
};

// Principal-branch log Gamma (Lanczos, reflection for Re z < 1/2).
// Throws PoleError at nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> gamma_fn(std::complex<double> z);
// |Gamma(a + ix)|^2 for real a, x as exp(2 Re log_gamma).
double gamma_abs2(double a, double x);

// Tail bound coeff * |x|^power * e^{-rate |x|} used to pick the truncation
// point of a line integral; rate must be positive.
struct DecayHint {
    double coeff = 1.0e4;
    double power = 0.0;
    double rate = 0.0;
};

// Integral of f over the real line: truncation [-X, X] from the decay hint
// (then widened until the outermost panels are negligible), 32-point
// Gauss-Legendre panels of width 1, panel width halved until the value moves
// by less than tol. Throws NoConvergence when the budget runs out.
QuadResult integrate_line(const std::function<std::complex<double>(double)>& f,
                          const DecayHint& hint, double tol);

// Contour average f -> (1/2 pi i) \oint f(z) dz / z over the unit circle:
// M-point trapezoid rule with all nodes offset by half a step (z = +-1 is
// never sampled), M doubled from `points` up to 4096 until stable.
QuadResult integrate_circle(const std::function<std::complex<double>(std::complex<double>)>& f,
                            int points = 256);

// (a; q)_infty, truncated when the next factor differs from 1 by < 1e-18.
// Needs |q| < 1.
std::complex<double> qpoch_inf(std::complex<double> a, std::complex<double> q);
std::complex<double> qpoch_fin(std::complex<double> a, std::complex<double> q, int n);

// Terminating hypergeometric evaluators in double precision, one sum each.
double wilson_eval(int n, double xsq, double a1, double a2, double a3, double a4);
double cdh_eval(int n, double xsq, double a1, double a2, double a3);
std::complex<double> mp_eval(int n, std::complex<double> x, double lambda, double phi);
std::complex<double> aw_eval(int n, std::complex<double> z, std::complex<double> a1,
                             std::complex<double> a2, std::complex<double> a3,
                             std::complex<double> a4, std::complex<double> q);

// Closed-form norms for the same families.
double wilson_h(int n, double a1, double a2, double a3, double a4);
double cdh_h(int n, double a1, double a2, double a3);
double mp_h(int n, double lambda);
std::complex<double> aw_h(int n, std::complex<double> a1, std::complex<double> a2,
                          std::complex<double> a3, std::complex<double> a4,
                          std::complex<double> q);

// Normalized orthogonality pairings <p_m, p_n> by quadrature; each should
// equal h_n delta_{mn} of the matching closed form. a1 = 0 is admitted for
// the Wilson and dual Hahn forms and a1 = 1 for the Askey-Wilson form.
QuadResult wilson_pairing(int m, int n, double a1, double a2, double a3, double a4,
                          double tol = 1.0e-10);
QuadResult cdh_pairing(int m, int n, double a1, double a2, double a3,
                       double tol = 1.0e-10);
QuadResult mp_pairing(int m, int n, double lambda, double phi, double tol = 1.0e-10);
QuadResult aw_pairing(int m, int n, std::complex<double> a1, std::complex<double> a2,
                      std::complex<double> a3, std::complex<double> a4,
                      std::complex<double> q, int points = 256);

// Evaluate a dense exact polynomial at a complex point (coefficients are
// embedded one by one; the variable tag is ignored, so pass x^2 yourself for
// an XSq-tagged polynomial).
std::complex<double> poly_eval_c(const Poly& p, std::complex<double> x);

double weight_front(const WeightSpec& s);
std::complex<double> weight_side(const WeightSpec& s, double x);
std::complex<double> weight_even(const WeightSpec& s, double x);
// Pointwise |w0 - w1 - w_{-1}| < 1e-12 |w0| at each sample.
bool check_weight_split(const WeightSpec& s, const std::vector<double>& xs);
// The (1,3,0,0) weight against its two rewritings as a normalized Wilson
// weight with parameters (0, b/6, b/6+1/3, b/6+2/3), pointwise at x.
bool check_wilson_rewrite(double b, double x, double tol = 1.0e-10);
// Total mass of w0 for a delta = 0 row (should be 1).
QuadResult weight_mass(const WeightSpec& s, double tol = 1.0e-10);

// Shifted Meixner-Pollaczek pairing: numeric <p_m, p_n>_phi and
// <p_m, p_n>_{-phi} for p_n(x) = n!/(2t cos phi)^n P_n^{((b+1)/2)}(tx - i/2)
// at angle pi/2 + phi. est_error carries the absolute deviation from the
// closed diagonal form resp. the terminating 2F1 form. Needs b, t > 0 and
// |phi| < pi/2.
std::pair<QuadResult, QuadResult> check_mml(double b, double t, double phi, int m, int n);

// Circle pairing of the interleaved Laurent family (exact polynomials
// embedded): should equal the closed-form norm times delta_{mn}.
QuadResult all_pairing(int m, int n, const Rational& b, const Rational& q);

// mu_{a,b}(f) for an exact Laurent polynomial f, by circle quadrature.
QuadResult mu_pairing(const LaurentPoly& f, std::complex<double> a,
                      std::complex<double> b, std::complex<double> q,
                      int points = 256);

// Numeric mu_{c,b}(P_m P_n) against the closed form evaluated in the field
// and embedded; at c = a the closed form degenerates and the orthogonality
// norm h_n delta_{mn} is used instead. est_error is relative when the
// reference is nonzero, absolute otherwise. a and c should lie on the unit
// circle and |b|, |q| < 1.
QuadResult check_sp(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                    const Cyclotomic& q, int m, int n);

} // namespace cyclodet
