#include "cyclodet/ortho.hpp"

#include "cyclodet/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclodet {

namespace {

void need_nonzero(const Cyclotomic& v, const std::string& what) {
    if (v.is_zero()) throw PoleError(what + " vanishes");
}

void need_degree(int n, const char* who) {
    if (n < 0) throw std::logic_error(std::string(who) + " needs n >= 0");
}

} // namespace

Poly wilson(int n, const Cyclotomic& a1, const Cyclotomic& a2,
            const Cyclotomic& a3, const Cyclotomic& a4) {
    need_degree(n, "wilson");
    const Cyclotomic s = a1 + a2 + a3 + a4;
    const Cyclotomic pref =
        pochhammer(a1 + a2, n) * pochhammer(a1 + a3, n) * pochhammer(a1 + a4, n);
    Poly acc(Var::XSq);
    Poly run = Poly::constant(Var::XSq, 1);
    Cyclotomic r = 1;
    for (int k = 0;; ++k) {
        acc += run * r;
        if (k == n) break;
        const Cyclotomic ak = a1 + Cyclotomic(k);
        run *= Poly(Var::XSq, {ak * ak, Cyclotomic(1)});
        const Cyclotomic d1 = a1 + a2 + Cyclotomic(k);
        const Cyclotomic d2 = a1 + a3 + Cyclotomic(k);
        const Cyclotomic d3 = a1 + a4 + Cyclotomic(k);
        need_nonzero(d1, "Wilson factor (a1+a2+k)");
        need_nonzero(d2, "Wilson factor (a1+a3+k)");
        need_nonzero(d3, "Wilson factor (a1+a4+k)");
        r *= Cyclotomic(k - n) * (s + Cyclotomic(n - 1 + k));
        r /= d1 * d2 * d3 * Cyclotomic(k + 1);
    }
    return acc * pref;
}

Cyclotomic wilson_norm(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                       const Cyclotomic& a3, const Cyclotomic& a4) {
    need_degree(n, "wilson_norm");
    const Cyclotomic s = a1 + a2 + a3 + a4;
    const Cyclotomic den1 = s - Cyclotomic(1) + Cyclotomic(2 * n);
    need_nonzero(den1, "Wilson norm factor (s-1+2n)");
    const Cyclotomic den2 = pochhammer(s - Cyclotomic(1), n);
    need_nonzero(den2, "Wilson norm factor (s-1)_n");
    Cyclotomic h = (s - Cyclotomic(1)) / den1;
    h *= Cyclotomic(rat_factorial(n));
    h *= pochhammer(a1 + a2, n) * pochhammer(a1 + a3, n) * pochhammer(a1 + a4, n);
    h *= pochhammer(a2 + a3, n) * pochhammer(a2 + a4, n) * pochhammer(a3 + a4, n);
    return h / den2;
}

Poly cdh(int n, const Cyclotomic& a1, const Cyclotomic& a2, const Cyclotomic& a3) {
    need_degree(n, "cdh");
    const Cyclotomic pref = pochhammer(a1 + a2, n) * pochhammer(a1 + a3, n);
    Poly acc(Var::XSq);
    Poly run = Poly::constant(Var::XSq, 1);
    Cyclotomic r = 1;
    for (int k = 0;; ++k) {
        acc += run * r;
        if (k == n) break;
        const Cyclotomic ak = a1 + Cyclotomic(k);
        run *= Poly(Var::XSq, {ak * ak, Cyclotomic(1)});
        const Cyclotomic d1 = a1 + a2 + Cyclotomic(k);
        const Cyclotomic d2 = a1 + a3 + Cyclotomic(k);
        need_nonzero(d1, "dual Hahn factor (a1+a2+k)");
        need_nonzero(d2, "dual Hahn factor (a1+a3+k)");
        r *= Cyclotomic(k - n);
        r /= d1 * d2 * Cyclotomic(k + 1);
    }
    return acc * pref;
}

Cyclotomic cdh_norm(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                    const Cyclotomic& a3) {
    need_degree(n, "cdh_norm");
    return Cyclotomic(rat_factorial(n)) * pochhammer(a1 + a2, n) *
           pochhammer(a1 + a3, n) * pochhammer(a2 + a3, n);
}

Poly mp(int n, const Rational& lambda, int phase) {
    need_degree(n, "mp");
    const Rational two_lambda(2 * lambda);
    const Cyclotomic pref = Cyclotomic(Rational(pochhammer(two_lambda, n) / rat_factorial(n))) *
                            Cyclotomic::zeta(static_cast<long>(n) * phase);
    const Cyclotomic w = Cyclotomic(1) - Cyclotomic::zeta(-2L * phase);
    Poly acc(Var::X);
    Poly run = Poly::constant(Var::X, 1);
    Cyclotomic r = 1;
    for (int k = 0;; ++k) {
        acc += run * r;
        if (k == n) break;
        const Rational lk(lambda + k);
        run *= Poly(Var::X, {Cyclotomic(lk), Cyclotomic::i()});
        const Rational dk(two_lambda + k);
        if (dk == 0) throw PoleError("MP factor (2 lambda + k) vanishes");
        r *= Cyclotomic(k - n) * w;
        r /= Cyclotomic(dk) * Cyclotomic(k + 1);
    }
    return acc * pref;
}

Cyclotomic mp_norm(int n, const Rational& lambda) {
    need_degree(n, "mp_norm");
    return Cyclotomic(Rational(pochhammer(Rational(2 * lambda), n) / rat_factorial(n)));
}

Cyclotomic two_sin(int phase) {
    return -(Cyclotomic::i() * (Cyclotomic::zeta(phase) - Cyclotomic::zeta(-phase)));
}

bool mp_connection_check(int n, const Rational& lambda, int phase) {
    need_degree(n, "mp_connection_check");
    const Poly lhs = mp(n, lambda, 6 + phase);
    const Cyclotomic s2 = two_sin(phase);
    const Rational two_lambda(2 * lambda);
    Poly sum(Var::X);
    Cyclotomic coef = 1; // (-n)_k / (2 lambda)_k
    for (int k = 0; k <= n; ++k) {
        sum += mp(k, lambda, 6 - phase) * (coef * s2.pow(n - k));
        if (k < n) {
            const Rational dk(two_lambda + k);
            if (dk == 0) throw PoleError("connection factor (2 lambda + k) vanishes");
            coef *= Cyclotomic(k - n);
            coef /= Cyclotomic(dk);
        }
    }
    Cyclotomic pre = Cyclotomic(Rational(pochhammer(two_lambda, n) / rat_factorial(n)));
    if (n % 2) pre = -pre;
    return lhs == sum * pre;
}

LaurentPoly askey_wilson(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                         const Cyclotomic& a3, const Cyclotomic& a4,
                         const Cyclotomic& q) {
    need_degree(n, "askey_wilson");
    need_nonzero(a1, "Askey-Wilson parameter a1");
    need_nonzero(q, "Askey-Wilson base q");
    const Cyclotomic A = a1 * a2 * a3 * a4;
    const Cyclotomic pref = q_pochhammer(a1 * a2, q, n) * q_pochhammer(a1 * a3, q, n) *
                            q_pochhammer(a1 * a4, q, n) * a1.pow(-n);
    LaurentPoly acc;
    LaurentPoly run(Cyclotomic(1));
    Cyclotomic r = 1;
    Cyclotomic qk = 1; // q^k
    for (int k = 0;; ++k) {
        acc += run * r;
        if (k == n) break;
        LaurentPoly f1(Cyclotomic(1));
        f1.add_term(1, -(a1 * qk));
        LaurentPoly f2(Cyclotomic(1));
        f2.add_term(-1, -(a1 * qk));
        run *= f1;
        run *= f2;
        const Cyclotomic d1 = Cyclotomic(1) - a1 * a2 * qk;
        const Cyclotomic d2 = Cyclotomic(1) - a1 * a3 * qk;
        const Cyclotomic d3 = Cyclotomic(1) - a1 * a4 * qk;
        const Cyclotomic d4 = Cyclotomic(1) - q * qk;
        need_nonzero(d1, "Askey-Wilson factor (1 - a1 a2 q^k)");
        need_nonzero(d2, "Askey-Wilson factor (1 - a1 a3 q^k)");
        need_nonzero(d3, "Askey-Wilson factor (1 - a1 a4 q^k)");
        need_nonzero(d4, "Askey-Wilson factor (1 - q^{k+1})");
        r *= (Cyclotomic(1) - q.pow(k - n)) * (Cyclotomic(1) - A * q.pow(n - 1 + k)) * q;
        r /= d1 * d2 * d3 * d4;
        qk *= q;
    }
    return acc * pref;
}

std::pair<LaurentPoly, Cyclotomic> pastro(int n, const Cyclotomic& a,
                                          const Cyclotomic& b, const Cyclotomic& q) {
    need_degree(n, "pastro");
    need_nonzero(a, "parameter a");
    need_nonzero(b, "parameter b");
    need_nonzero(q, "base q");
    const Cyclotomic ba = b / a;
    const int base = -(n / 2);
    LaurentPoly P;
    Cyclotomic c = 1;
    Cyclotomic qk = 1;
    for (int k = 0;; ++k) {
        P.add_term(base + k, c);
        if (k == n) break;
        const Cyclotomic d1 = Cyclotomic(1) - q * qk;
        const Cyclotomic d2 = Cyclotomic(1) - q.pow(1 - n + k) / (a * b);
        need_nonzero(d1, "factor (1 - q^{k+1})");
        need_nonzero(d2, "factor (1 - q^{1-n+k}/ab)");
        c *= (Cyclotomic(1) - q.pow(k - n)) * (Cyclotomic(1) - ba * qk) * q / b;
        c /= d1 * d2;
        qk *= q;
    }
    Cyclotomic C = 1;
    if (n % 2) {
        const Cyclotomic den = q_pochhammer(a * b, q, n);
        need_nonzero(den, "(ab; q)_n");
        C = a.pow(n) * q_pochhammer(ba, q, n) / den;
    }
    return {P, C};
}

Cyclotomic pastro_norm(int n, const Cyclotomic& a, const Cyclotomic& b,
                       const Cyclotomic& q) {
    need_degree(n, "pastro_norm");
    need_nonzero(a, "parameter a");
    const Cyclotomic ba = b / a;
    const Cyclotomic num =
        q_pochhammer(q, q, n) * q_pochhammer(b * b, q, n) * q_pochhammer(ba, q, n);
    const Cyclotomic den = q_pochhammer(a * b, q, n) *
                           q_pochhammer(a * b * q, q, 2 * (n / 2)) *
                           q_pochhammer(ba, q, 2 * ((n + 1) / 2));
    need_nonzero(den, "norm denominator");
    Cyclotomic h = a.pow(2 * (n / 2)) * num / den;
    if (n % 2) h = -h;
    return h;
}

Cyclotomic pastro_pairing(int m, int n, const Cyclotomic& a, const Cyclotomic& c,
                          const Cyclotomic& b, const Cyclotomic& q) {
    need_degree(m, "pastro_pairing");
    need_degree(n, "pastro_pairing");
    need_nonzero(a, "parameter a");
    need_nonzero(c, "parameter c");
    need_nonzero(b, "parameter b");
    need_nonzero(q, "base q");
    const int u = m / 2 + n / 2;
    const int v = (m + 1) / 2 + (n + 1) / 2;
    const Cyclotomic b2 = b * b;
    const Cyclotomic num = q_pochhammer(b2, q, m) * q_pochhammer(b2, q, n) *
                           q_pochhammer(q * c / a, q, u) * q_pochhammer(a / c, q, v);
    const Cyclotomic den = q_pochhammer(a * b, q, m) * q_pochhammer(a * b, q, n) *
                           q_pochhammer(q * b * c, q, u) * q_pochhammer(b / c, q, v);
    need_nonzero(den, "pairing denominator");
    QHypSpec spec;
    spec.num = {q.pow(-m), q.pow(-n), a * b, b / a};
    spec.den = {b2, q.pow(-u) * a / c, q.pow(1 - v) * c / a};
    spec.q = q;
    spec.z = q;
    spec.termination = std::min(m, n);
    return a.pow(u) * (num / den) * qhyp_terminating(spec);
}

std::pair<LaurentPoly, Cyclotomic> laurent_p0(int k, const Cyclotomic& b,
                                              const Cyclotomic& q) {
    need_degree(k, "laurent_p0");
    need_nonzero(b, "parameter b");
    need_nonzero(q, "base q");
    const Cyclotomic q3 = q.pow(3);
    const Cyclotomic b3 = b.pow(3);
    const int n = k / 2;
    if (k % 2 == 0) {
        const LaurentPoly aw = askey_wilson(n, Cyclotomic(1), b, b * q, b * q * q, q3);
        const Cyclotomic den = q_pochhammer(b3 * q3.pow(n), q3, n);
        need_nonzero(den, "(b^3 q^{3n}; q^3)_n");
        const Cyclotomic hden = q_pochhammer(b3, q3, 2 * n) * q_pochhammer(b3 * q3, q3, 2 * n);
        need_nonzero(hden, "even norm denominator");
        const Cyclotomic h = q_pochhammer(q3, q3, n) * q_pochhammer(b3, q3, n) *
                             q_pochhammer(b, q, 3 * n) * q_pochhammer(b * b * q, q, 3 * n) / hden;
        return {aw * den.inverse(), h};
    }
    const LaurentPoly aw = askey_wilson(n, q3, b, b * q, b * q * q, q3);
    const Cyclotomic den = q_pochhammer(b3 * q3.pow(n + 1), q3, n);
    need_nonzero(den, "(b^3 q^{3n+3}; q^3)_n");
    LaurentPoly zm1(Cyclotomic(-1));
    zm1.add_term(1, Cyclotomic(1));
    const Cyclotomic om = Cyclotomic::omega();
    const Cyclotomic mden =
        (Cyclotomic(1) - om * b * q) * (Cyclotomic(1) - om * om * b * q);
    need_nonzero(mden, "(1 - omega b q)(1 - omega^2 b q)");
    const Cyclotomic hden =
        q_pochhammer(b3 * q3, q3, 2 * n) * q_pochhammer(b3 * q3 * q3, q3, 2 * n);
    need_nonzero(hden, "odd norm denominator");
    Cyclotomic h = -((Cyclotomic(1) - b) * (Cyclotomic(1) - b * q * q) / mden);
    h *= q_pochhammer(q3, q3, n) * q_pochhammer(b3 * q3, q3, n) *
         q_pochhammer(b * q3, q, 3 * n) * q_pochhammer(b * b * q, q, 3 * n);
    return {zm1 * aw * den.inverse(), h / hden};
}

std::pair<std::vector<Poly>, std::vector<Cyclotomic>>
christoffel(const std::vector<Poly>& p, const std::vector<Cyclotomic>& h,
            const Cyclotomic& a) {
    if (p.empty()) throw std::logic_error("christoffel needs at least one polynomial");
    const std::size_t count = p.size() - 1;
    if (h.size() < count)
        throw std::logic_error("christoffel needs a norm for each output index");
    std::vector<Poly> pt;
    std::vector<Cyclotomic> ht;
    pt.reserve(count);
    ht.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Cyclotomic pa = p[i].eval(a);
        if (pa.is_zero())
            throw ZeroAtNode("p_" + std::to_string(i) + " vanishes at the transform point");
        const Cyclotomic ratio = p[i + 1].eval(a) / pa;
        const Poly num = p[i + 1] - ratio * p[i];
        Cyclotomic rem;
        Poly quot = num.divide_linear(a, &rem);
        if (!rem.is_zero())
            throw RemainderError("Christoffel division left a nonzero remainder at index " +
                                 std::to_string(i));
        pt.push_back(std::move(quot));
        ht.push_back(-(ratio * h[i]));
    }
    return {pt, ht};
}

} // namespace cyclodet
