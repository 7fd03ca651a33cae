#include "cyclodet/numquad.hpp"

#include "cyclodet/errors.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace cyclodet {

namespace {

using cdbl = std::complex<double>;

constexpr double pi = 3.141592653589793238462643383279502884;

double factorial_d(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

double poch_d(double x, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x + k;
    return r;
}

// 32-point Gauss-Legendre rule on (-1, 1), nodes by Newton iteration on P_32.
struct GlRule {
    std::array<double, 32> x{};
    std::array<double, 32> w{};
};

const GlRule& gl32() {
    static const GlRule rule = [] {
        GlRule r;
        const int n = 32;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 64; ++it) {
                double p0 = 1.0, p1 = t;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1.0e-15) break;
            }
            const double wt = 2.0 / ((1.0 - t * t) * dp * dp);
            r.x[i] = -t;
            r.w[i] = wt;
            r.x[n - 1 - i] = t;
            r.w[n - 1 - i] = wt;
        }
        return r;
    }();
    return rule;
}

cdbl gl_panel(const std::function<cdbl(double)>& f, double lo, double width) {
    const GlRule& r = gl32();
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    cdbl s{0.0, 0.0};
    for (int i = 0; i < 32; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return half * s;
}

cdbl gl_sum(const std::function<cdbl(double)>& f, int reach, double width) {
    const long count = std::lround(2.0 * reach / width);
    cdbl s{0.0, 0.0};
    for (long i = 0; i < count; ++i) s += gl_panel(f, -reach + i * width, width);
    return s;
}

bool nonpositive_integer(cdbl z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos coefficients, g = 7.
constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

cdbl log_gamma_core(cdbl z) {
    z -= 1.0;
    cdbl a{lanczos[0], 0.0};
    for (int i = 1; i < 9; ++i) a += lanczos[i] / (z + static_cast<double>(i));
    const cdbl t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

const WeightSpec table_rows[] = {
    {1, 3, 0, 0, 0, 0}, {1, 3, 0, 1, 0, 0}, {1, 3, 1, 1, 0, 0},
    {1, 3, 1, 0, 0, 0}, {1, 2, 0, 0, 0, 0}, {1, 2, 1, 1, 0, 0},
    {1, 2, 1, 0, 0, 0}, {2, 3, 1, 1, 0, 0}, {2, 3, 1, 0, 0, 0}};

void validate_spec(const WeightSpec& s) {
    bool listed = false;
    for (const WeightSpec& r : table_rows)
        listed = listed || (r.k == s.k && r.l == s.l && r.delta == s.delta &&
                            r.epsilon == s.epsilon);
    if (!listed)
        throw std::invalid_argument("weight parameters (k,l,delta,epsilon) are not a table row");
    if (!(s.b > 0.0)) throw std::invalid_argument("weight needs b > 0");
    if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("weight sign must be +-1");
}

// Gamma(u + itx) Gamma(v - itx) folded with an exponential, computed in one
// exp so intermediate magnitudes stay representable.
cdbl gamma_pair_exp(double u, double v, double t, double x, double expo) {
    return std::exp(log_gamma(cdbl(u, t * x)) + log_gamma(cdbl(v, -t * x)) + expo);
}

double f21_d(int m, int n, double b, double z) {
    const int top = std::min(m, n);
    double acc = 0.0, term = 1.0;
    for (int k = 0;; ++k) {
        acc += term;
        if (k == top) break;
        term *= (k - m) * (k - n) * z / ((b + k) * (k + 1.0));
    }
    return acc;
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (nonpositive_integer(z)) throw PoleError("log_gamma pole at a nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_core(1.0 - z);
}

std::complex<double> gamma_fn(std::complex<double> z) { return std::exp(log_gamma(z)); }

double gamma_abs2(double a, double x) {
    return std::exp(2.0 * log_gamma(cdbl(a, x)).real());
}

QuadResult integrate_line(const std::function<std::complex<double>(double)>& f,
                          const DecayHint& hint, double tol) {
    if (!(hint.rate > 0.0)) throw std::invalid_argument("integrate_line needs a positive decay rate");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_line needs a positive tolerance");
    const auto tail = [&hint](int x) {
        return hint.coeff * std::pow(std::max(static_cast<double>(x), 1.0), hint.power) *
               std::exp(-hint.rate * x) / hint.rate;
    };
    const int cap = 300;
    int reach = 2;
    while (reach < cap && tail(reach) >= 0.1 * tol) ++reach;
    if (tail(reach) >= 0.1 * tol)
        throw NoConvergence("line truncation exceeds the panel budget");
    // widen until the outermost unit panels are themselves negligible
    while (reach < cap) {
        const double edge = std::abs(gl_panel(f, reach - 1.0, 1.0)) +
                            std::abs(gl_panel(f, -static_cast<double>(reach), 1.0));
        if (edge < 0.1 * tol) break;
        reach += 4;
    }
    if (reach >= cap) throw NoConvergence("line truncation exceeds the panel budget");

    double width = 1.0;
    cdbl prev = gl_sum(f, reach, width);
    for (int pass = 0; pass < 4; ++pass) {
        width *= 0.5;
        const cdbl cur = gl_sum(f, reach, width);
        const double diff = std::abs(cur - prev);
        if (diff < tol) {
            QuadResult out;
            out.value = cur;
            out.est_error = diff + tail(reach) + 64.0 * DBL_EPSILON * (1.0 + std::abs(cur));
            out.panels = static_cast<int>(std::lround(2.0 * reach / width));
            return out;
        }
        prev = cur;
    }
    throw NoConvergence("line quadrature did not stabilize within the refinement budget");
}

QuadResult integrate_circle(const std::function<std::complex<double>(std::complex<double>)>& f,
                            int points) {
    int m = std::clamp(points, 8, 2048);
    const auto average = [&f](int count) {
        cdbl s{0.0, 0.0};
        for (int j = 0; j < count; ++j) {
            const double th = 2.0 * pi * (j + 0.5) / count;
            s += f(std::polar(1.0, th));
        }
        return s / static_cast<double>(count);
    };
    cdbl prev = average(m);
    while (m < 4096) {
        m *= 2;
        const cdbl cur = average(m);
        const double diff = std::abs(cur - prev);
        if (diff <= std::max(1.0e-12, 1.0e-11 * std::abs(cur))) {
            QuadResult out;
            out.value = cur;
            out.est_error = diff + 64.0 * DBL_EPSILON * (1.0 + std::abs(cur));
            out.panels = m;
            return out;
        }
        prev = cur;
    }
    throw NoConvergence("circle quadrature did not stabilize at 4096 points");
}

std::complex<double> qpoch_inf(std::complex<double> a, std::complex<double> q) {
    if (!(std::abs(q) < 1.0))
        throw std::domain_error("infinite q-factorial needs |q| < 1");
    cdbl r{1.0, 0.0};
    while (std::abs(a) >= 1.0e-18) {
        r *= 1.0 - a;
        a *= q;
    }
    return r;
}

std::complex<double> qpoch_fin(std::complex<double> a, std::complex<double> q, int n) {
    cdbl r{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        r *= 1.0 - a;
        a *= q;
    }
    return r;
}

double wilson_eval(int n, double xsq, double a1, double a2, double a3, double a4) {
    const double s4 = a1 + a2 + a3 + a4;
    const double pref = poch_d(a1 + a2, n) * poch_d(a1 + a3, n) * poch_d(a1 + a4, n);
    double acc = 0.0, term = 1.0;
    for (int k = 0;; ++k) {
        acc += term;
        if (k == n) break;
        const double ak = a1 + k;
        term *= (k - n) * (s4 + n - 1 + k) * (ak * ak + xsq);
        term /= (a1 + a2 + k) * (a1 + a3 + k) * (a1 + a4 + k) * (k + 1.0);
    }
    return pref * acc;
}

double cdh_eval(int n, double xsq, double a1, double a2, double a3) {
    const double pref = poch_d(a1 + a2, n) * poch_d(a1 + a3, n);
    double acc = 0.0, term = 1.0;
    for (int k = 0;; ++k) {
        acc += term;
        if (k == n) break;
        const double ak = a1 + k;
        term *= (k - n) * (ak * ak + xsq);
        term /= (a1 + a2 + k) * (a1 + a3 + k) * (k + 1.0);
    }
    return pref * acc;
}

std::complex<double> mp_eval(int n, std::complex<double> x, double lambda, double phi) {
    const cdbl pref = poch_d(2.0 * lambda, n) / factorial_d(n) *
                      std::exp(cdbl(0.0, n * phi));
    const cdbl z = 1.0 - std::exp(cdbl(0.0, -2.0 * phi));
    cdbl acc{0.0, 0.0}, term{1.0, 0.0};
    for (int k = 0;; ++k) {
        acc += term;
        if (k == n) break;
        term *= static_cast<double>(k - n) * (lambda + cdbl(0.0, 1.0) * x + static_cast<double>(k));
        term *= z / ((2.0 * lambda + k) * (k + 1.0));
    }
    return pref * acc;
}

std::complex<double> aw_eval(int n, std::complex<double> z, std::complex<double> a1,
                             std::complex<double> a2, std::complex<double> a3,
                             std::complex<double> a4, std::complex<double> q) {
    const cdbl big = a1 * a2 * a3 * a4;
    const cdbl pref = qpoch_fin(a1 * a2, q, n) * qpoch_fin(a1 * a3, q, n) *
                      qpoch_fin(a1 * a4, q, n) / std::pow(a1, n);
    const cdbl zi = 1.0 / z;
    const cdbl qm = std::pow(q, -n);
    cdbl acc{0.0, 0.0}, term{1.0, 0.0};
    cdbl qk{1.0, 0.0};
    for (int k = 0;; ++k) {
        acc += term;
        if (k == n) break;
        term *= (1.0 - qm * qk) * (1.0 - big * std::pow(q, n - 1) * qk) *
                (1.0 - a1 * z * qk) * (1.0 - a1 * zi * qk) * q;
        term /= (1.0 - q * qk) * (1.0 - a1 * a2 * qk) * (1.0 - a1 * a3 * qk) *
                (1.0 - a1 * a4 * qk);
        qk *= q;
    }
    return pref * acc;
}

double wilson_h(int n, double a1, double a2, double a3, double a4) {
    const double s4 = a1 + a2 + a3 + a4;
    double prod = factorial_d(n);
    const double ps[6] = {a1 + a2, a1 + a3, a1 + a4, a2 + a3, a2 + a4, a3 + a4};
    for (double p : ps) prod *= poch_d(p, n);
    return (s4 - 1.0) / (s4 - 1.0 + 2.0 * n) * prod / poch_d(s4 - 1.0, n);
}

double cdh_h(int n, double a1, double a2, double a3) {
    return factorial_d(n) * poch_d(a1 + a2, n) * poch_d(a1 + a3, n) * poch_d(a2 + a3, n);
}

double mp_h(int n, double lambda) { return poch_d(2.0 * lambda, n) / factorial_d(n); }

std::complex<double> aw_h(int n, std::complex<double> a1, std::complex<double> a2,
                          std::complex<double> a3, std::complex<double> a4,
                          std::complex<double> q) {
    const cdbl big = a1 * a2 * a3 * a4;
    cdbl prod = qpoch_fin(q, q, n);
    const cdbl ps[6] = {a1 * a2, a1 * a3, a1 * a4, a2 * a3, a2 * a4, a3 * a4};
    for (const cdbl& p : ps) prod *= qpoch_fin(p, q, n);
    return (1.0 - big / q) / (1.0 - big * std::pow(q, 2 * n - 1)) * prod /
           qpoch_fin(big / q, q, n);
}

QuadResult wilson_pairing(int m, int n, double a1, double a2, double a3, double a4,
                          double tol) {
    const double s4 = a1 + a2 + a3 + a4;
    const double ps[6] = {a1 + a2, a1 + a3, a1 + a4, a2 + a3, a2 + a4, a3 + a4};
    double lg = log_gamma(cdbl(s4, 0.0)).real() - std::log(2.0 * pi);
    for (double p : ps) lg -= log_gamma(cdbl(p, 0.0)).real();
    const double pref = std::exp(lg);
    const auto f = [&](double x) -> cdbl {
        const double w = std::exp(2.0 * (log_gamma(cdbl(a1, x)).real() +
                                         log_gamma(cdbl(a2, x)).real() +
                                         log_gamma(cdbl(a3, x)).real() +
                                         log_gamma(cdbl(a4, x)).real() -
                                         log_gamma(cdbl(0.0, 2.0 * x)).real()));
        const double y = x * x;
        return w * wilson_eval(m, y, a1, a2, a3, a4) * wilson_eval(n, y, a1, a2, a3, a4);
    };
    DecayHint hint;
    hint.power = 2.0 * s4 - 3.0 + 2.0 * (m + n);
    hint.rate = 2.0 * pi;
    QuadResult out = integrate_line(f, hint, tol);
    out.value *= 0.5 * pref;
    out.est_error *= 0.5 * pref;
    return out;
}

QuadResult cdh_pairing(int m, int n, double a1, double a2, double a3, double tol) {
    const double ps[3] = {a1 + a2, a1 + a3, a2 + a3};
    double lg = -std::log(2.0 * pi);
    for (double p : ps) lg -= log_gamma(cdbl(p, 0.0)).real();
    const double pref = std::exp(lg);
    const auto f = [&](double x) -> cdbl {
        const double w = std::exp(2.0 * (log_gamma(cdbl(a1, x)).real() +
                                         log_gamma(cdbl(a2, x)).real() +
                                         log_gamma(cdbl(a3, x)).real() -
                                         log_gamma(cdbl(0.0, 2.0 * x)).real()));
        const double y = x * x;
        return w * cdh_eval(m, y, a1, a2, a3) * cdh_eval(n, y, a1, a2, a3);
    };
    DecayHint hint;
    hint.power = 2.0 * (a1 + a2 + a3) - 2.0 + 2.0 * (m + n);
    hint.rate = pi;
    QuadResult out = integrate_line(f, hint, tol);
    out.value *= 0.5 * pref;
    out.est_error *= 0.5 * pref;
    return out;
}

QuadResult mp_pairing(int m, int n, double lambda, double phi, double tol) {
    if (!(lambda > 0.0) || !(phi > 0.0) || !(phi < pi))
        throw std::invalid_argument("mp_pairing needs lambda > 0 and 0 < phi < pi");
    const double pref = std::pow(2.0 * std::sin(phi), 2.0 * lambda) /
                        (2.0 * pi * std::exp(log_gamma(cdbl(2.0 * lambda, 0.0)).real()));
    const auto f = [&](double x) -> cdbl {
        const double w =
            std::exp(2.0 * log_gamma(cdbl(lambda, x)).real() + (2.0 * phi - pi) * x);
        return w * mp_eval(m, cdbl(x, 0.0), lambda, phi) * mp_eval(n, cdbl(x, 0.0), lambda, phi);
    };
    DecayHint hint;
    hint.power = 2.0 * lambda - 1.0 + m + n;
    hint.rate = pi - std::abs(2.0 * phi - pi);
    QuadResult out = integrate_line(f, hint, tol);
    out.value *= pref;
    out.est_error *= pref;
    return out;
}

QuadResult aw_pairing(int m, int n, std::complex<double> a1, std::complex<double> a2,
                      std::complex<double> a3, std::complex<double> a4,
                      std::complex<double> q, int points) {
    const cdbl big = a1 * a2 * a3 * a4;
    const cdbl ps[6] = {a1 * a2, a1 * a3, a1 * a4, a2 * a3, a2 * a4, a3 * a4};
    cdbl pref = qpoch_inf(q, q);
    for (const cdbl& p : ps) pref *= qpoch_inf(p, q);
    pref /= 2.0 * qpoch_inf(big, q);
    const auto f = [&](cdbl z) -> cdbl {
        const cdbl zi = 1.0 / z;
        cdbl w = qpoch_inf(z * z, q) * qpoch_inf(zi * zi, q);
        w /= qpoch_inf(a1 * z, q) * qpoch_inf(a1 * zi, q) * qpoch_inf(a2 * z, q) *
             qpoch_inf(a2 * zi, q) * qpoch_inf(a3 * z, q) * qpoch_inf(a3 * zi, q) *
             qpoch_inf(a4 * z, q) * qpoch_inf(a4 * zi, q);
        return w * aw_eval(m, z, a1, a2, a3, a4, q) * aw_eval(n, z, a1, a2, a3, a4, q);
    };
    QuadResult out = integrate_circle(f, points);
    out.value *= pref;
    out.est_error *= std::abs(pref);
    return out;
}

std::complex<double> poly_eval_c(const Poly& p, std::complex<double> x) {
    cdbl acc{0.0, 0.0};
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).to_complex();
    return acc;
}

double weight_front(const WeightSpec& s) {
    validate_spec(s);
    return s.l * std::pow(2.0 * std::cos(pi * s.k / (2.0 * s.l)), s.b) /
           (4.0 * pi * std::exp(log_gamma(cdbl(s.b, 0.0)).real()));
}

std::complex<double> weight_side(const WeightSpec& s, double x) {
    const double front = weight_front(s);
    const double flip = (s.sign < 0 && s.delta == 1) ? -1.0 : 1.0;
    return front * flip *
           gamma_pair_exp(0.5 * s.b + s.epsilon, 0.5 * s.b, s.l, x, s.sign * s.k * pi * x);
}

std::complex<double> weight_even(const WeightSpec& s, double x) {
    const double front = weight_front(s);
    const double h = s.delta == 1 ? std::sinh(s.k * pi * x) : std::cosh(s.k * pi * x);
    return front * 2.0 * h * gamma_pair_exp(0.5 * s.b + s.epsilon, 0.5 * s.b, s.l, x, 0.0);
}

bool check_weight_split(const WeightSpec& s, const std::vector<double>& xs) {
    WeightSpec plus = s, minus = s;
    plus.sign = 1;
    minus.sign = -1;
    for (double x : xs) {
        const cdbl w0 = weight_even(s, x);
        const cdbl sum = weight_side(plus, x) + weight_side(minus, x);
        if (std::abs(w0 - sum) >= 1.0e-12 * std::abs(w0)) return false;
    }
    return true;
}

bool check_wilson_rewrite(double b, double x, double tol) {
    WeightSpec s;
    s.b = b;
    const double w0 = weight_even(s, x).real();
    const double core = 2.0 * (log_gamma(cdbl(0.0, x)).real() +
                               log_gamma(cdbl(b / 6.0, x)).real() +
                               log_gamma(cdbl(b / 6.0 + 1.0 / 3.0, x)).real() +
                               log_gamma(cdbl(b / 6.0 + 2.0 / 3.0, x)).real() -
                               log_gamma(cdbl(0.0, 2.0 * x)).real());
    const double direct = std::pow(3.0, 1.5 * b) /
                          (32.0 * pi * pi * pi *
                           std::exp(log_gamma(cdbl(b, 0.0)).real())) *
                          std::exp(core);
    const double a[4] = {0.0, b / 6.0, b / 6.0 + 1.0 / 3.0, b / 6.0 + 2.0 / 3.0};
    double lg = log_gamma(cdbl(a[0] + a[1] + a[2] + a[3], 0.0)).real() - std::log(4.0 * pi);
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) lg -= log_gamma(cdbl(a[j] + a[k], 0.0)).real();
    const double normalized = std::exp(lg + core);
    return std::abs(direct - w0) <= tol * std::abs(w0) &&
           std::abs(normalized - w0) <= tol * std::abs(w0);
}

QuadResult weight_mass(const WeightSpec& s, double tol) {
    validate_spec(s);
    if (s.delta != 0 || s.epsilon != 0)
        throw std::invalid_argument("total mass 1 is stated for delta = epsilon = 0 rows");
    const auto f = [&s](double x) -> cdbl { return weight_even(s, x); };
    DecayHint hint;
    hint.power = s.b - 1.0;
    hint.rate = pi * (s.l - s.k);
    return integrate_line(f, hint, tol);
}

std::pair<QuadResult, QuadResult> check_mml(double b, double t, double phi, int m, int n) {
    if (!(b > 0.0) || !(t > 0.0) || !(std::abs(phi) < 0.5 * pi))
        throw std::invalid_argument("check_mml needs b, t > 0 and |phi| < pi/2");
    const double lambda = 0.5 * (b + 1.0);
    const double scale = 2.0 * t * std::cos(phi);
    const auto poly = [&](int deg, double x) -> cdbl {
        return factorial_d(deg) / std::pow(scale, deg) *
               mp_eval(deg, cdbl(t * x, -0.5), lambda, 0.5 * pi + phi);
    };
    const double pref = t * std::pow(2.0 * std::cos(phi), b + 1.0) /
                        (2.0 * pi * std::exp(log_gamma(cdbl(b + 1.0, 0.0)).real()));
    const auto pairing = [&](double angle) {
        const auto f = [&](double x) -> cdbl {
            return poly(m, x) * poly(n, x) *
                   gamma_pair_exp(0.5 * b + 1.0, 0.5 * b, t, x, 2.0 * angle * t * x);
        };
        DecayHint hint;
        hint.power = b + 1.0 + m + n;
        hint.rate = t * (pi - 2.0 * std::abs(phi));
        QuadResult out = integrate_line(f, hint, 1.0e-12);
        out.value *= pref;
        out.est_error *= pref;
        return out;
    };
    QuadResult same = pairing(phi);
    QuadResult cross = pairing(-phi);
    const cdbl diag = m == n ? std::exp(cdbl(0.0, phi)) * factorial_d(n) *
                                   poch_d(b + 1.0, n) / std::pow(scale, 2 * n)
                             : cdbl{0.0, 0.0};
    const double zz = 1.0 / (4.0 * std::sin(phi) * std::sin(phi));
    const cdbl off = std::exp(cdbl(0.0, -phi)) *
                     std::pow(-std::tan(phi) / t, m + n) * poch_d(b + 1.0, m) *
                     poch_d(b + 1.0, n) * f21_d(m, n, b + 1.0, zz);
    same.est_error = std::abs(same.value - diag);
    cross.est_error = std::abs(cross.value - off);
    return {same, cross};
}

QuadResult all_pairing(int m, int n, const Rational& b, const Rational& q) {
    const double bd = b.get_d();
    const double qd = q.get_d();
    if (!(std::abs(bd) < 1.0) || !(std::abs(qd) < 1.0) || q == 0)
        throw std::invalid_argument("all_pairing needs |b| < 1 and 0 < |q| < 1");
    const Cyclotomic bf(b), qf(q);
    const LaurentPoly fg = laurent_p0(m, bf, qf).first * laurent_p0(n, bf, qf).first;
    const double q3 = qd * qd * qd;
    const double pref = qpoch_inf(q3, q3).real() * qpoch_inf(bd, qd).real() *
                        qpoch_inf(bd * bd * qd, qd).real() /
                        qpoch_inf(bd * bd * bd * q3, q3).real();
    const auto f = [&](cdbl z) -> cdbl {
        const cdbl zi = 1.0 / z;
        cdbl w = qpoch_inf(z * z, q3) * qpoch_inf(zi * zi, q3) / (1.0 + z);
        w /= qpoch_inf(z, q3) * qpoch_inf(zi, q3) * qpoch_inf(bd * z, qd) *
             qpoch_inf(bd * zi, qd);
        return fg.eval(z) * w;
    };
    QuadResult out = integrate_circle(f);
    out.value *= pref;
    out.est_error *= std::abs(pref);
    return out;
}

QuadResult mu_pairing(const LaurentPoly& f, std::complex<double> a,
                      std::complex<double> b, std::complex<double> q, int points) {
    const cdbl pref = qpoch_inf(q, q) * qpoch_inf(b * b, q) /
                      (qpoch_inf(q * a * b, q) * qpoch_inf(b / a, q));
    const auto g = [&](cdbl z) -> cdbl {
        return f.eval(z) * qpoch_inf(q * a * z, q) * qpoch_inf(1.0 / (a * z), q) /
               (qpoch_inf(b * z, q) * qpoch_inf(b / z, q));
    };
    QuadResult out = integrate_circle(g, points);
    out.value *= pref;
    out.est_error *= std::abs(pref);
    return out;
}

QuadResult check_sp(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                    const Cyclotomic& q, int m, int n) {
    const cdbl ac = a.to_complex();
    const cdbl bc = b.to_complex();
    const cdbl cc = c.to_complex();
    const cdbl qc = q.to_complex();
    if (std::abs(std::abs(ac) - 1.0) > 1.0e-12 || std::abs(std::abs(cc) - 1.0) > 1.0e-12)
        throw std::invalid_argument("check_sp needs a and c on the unit circle");
    if (!(std::abs(bc) < 1.0) || !(std::abs(qc) < 1.0))
        throw std::invalid_argument("check_sp needs |b| < 1 and |q| < 1");
    const LaurentPoly prod = pastro(m, a, b, q).first * pastro(n, a, b, q).first;
    QuadResult out = mu_pairing(prod, cc, bc, qc);
    // at c = a the closed pairing form degenerates; the orthogonality norm
    // takes over
    const Cyclotomic ref = c == a
                               ? (m == n ? pastro_norm(n, a, b, q) : Cyclotomic(0))
                               : pastro_pairing(m, n, a, c, b, q);
    const cdbl refc = ref.to_complex();
    out.est_error = std::abs(refc) > 0.0 ? std::abs(out.value - refc) / std::abs(refc)
                                         : std::abs(out.value);
    return out;
}

} // namespace cyclodet
