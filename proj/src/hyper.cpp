#include "cyclodet/hyper.hpp"

#include <algorithm>

namespace cyclodet {

Cyclotomic pochhammer(const Cyclotomic& a, int n) {
    Cyclotomic p(1), f = a;
    for (int k = 0; k < n; ++k) {
        p *= f;
        f += 1;
    }
    return p;
}

Rational pochhammer(const Rational& a, int n) {
    Rational p(1), f = a;
    for (int k = 0; k < n; ++k) {
        p *= f;
        f += 1;
    }
    return p;
}

Cyclotomic q_pochhammer(const Cyclotomic& a, const Cyclotomic& q, int n) {
    Cyclotomic p(1);
    if (n >= 0) {
        Cyclotomic qk(1);
        for (int k = 0; k < n; ++k) {
            p *= Cyclotomic(1) - a * qk;
            qk *= q;
        }
        return p;
    }
    Cyclotomic qk(1);
    const Cyclotomic qinv = q.inverse();
    for (int k = 1; k <= -n; ++k) {
        qk *= qinv;
        Cyclotomic f = Cyclotomic(1) - a * qk;
        if (f.is_zero()) throw PoleError("q_pochhammer: zero factor at negative index " + std::to_string(-k));
        p *= f;
    }
    return p.inverse();
}

Cyclotomic q_pochhammer(const std::vector<Cyclotomic>& as, const Cyclotomic& q, int n) {
    Cyclotomic p(1);
    for (const auto& a : as) p *= q_pochhammer(a, q, n);
    return p;
}

Cyclotomic binomial(const Cyclotomic& x, int n) {
    return pochhammer(x - Cyclotomic(n) + 1, n) / Cyclotomic(rat_factorial(n));
}

Rational binomial(const Rational& x, int n) {
    return pochhammer(x - n + 1, n) / rat_factorial(n);
}

Cyclotomic hyp_terminating(const HypSpec& spec) {
    const Cyclotomic witness(-static_cast<long>(spec.termination));
    if (spec.termination < 0 || std::find(spec.num.begin(), spec.num.end(), witness) == spec.num.end())
        throw ApplicabilityError("hyp_terminating: termination witness " + witness.str() +
                                 " not among numerator parameters");
    Cyclotomic sum(0), term(1);
    for (int k = 0;; ++k) {
        sum += term;
        if (k == spec.termination) break;
        Cyclotomic p(1);
        for (const auto& a : spec.num) p *= a + Cyclotomic(k);
        if (p.is_zero()) break; // numerator ran out first: sum is complete
        Cyclotomic d(static_cast<long>(k) + 1);
        for (const auto& b : spec.den) d *= b + Cyclotomic(k);
        if (d.is_zero())
            throw PoleError("hyp_terminating: denominator parameter hits a pole at k = " + std::to_string(k));
        term *= p * spec.z / d;
    }
    return sum;
}

Cyclotomic qhyp_terminating(const QHypSpec& spec) {
    if (spec.num.size() != spec.den.size() + 1)
        throw ShapeError("qhyp_terminating: shape must be r = s + 1, got r = " + std::to_string(spec.num.size()) +
                         ", s = " + std::to_string(spec.den.size()));
    const Cyclotomic witness = spec.q.pow(-static_cast<long>(spec.termination));
    if (spec.termination < 0 || std::find(spec.num.begin(), spec.num.end(), witness) == spec.num.end())
        throw ApplicabilityError("qhyp_terminating: termination witness q^" + std::to_string(-spec.termination) +
                                 " not among numerator parameters");
    Cyclotomic sum(0), term(1), qk(1);
    for (int k = 0;; ++k) {
        sum += term;
        if (k == spec.termination) break;
        Cyclotomic p(1);
        for (const auto& a : spec.num) p *= Cyclotomic(1) - a * qk;
        if (p.is_zero()) break;
        Cyclotomic d = Cyclotomic(1) - spec.q * qk;
        for (const auto& b : spec.den) d *= Cyclotomic(1) - b * qk;
        if (d.is_zero())
            throw PoleError("qhyp_terminating: denominator parameter hits a pole at k = " + std::to_string(k));
        term *= p * spec.z / d;
        qk *= spec.q;
    }
    return sum;
}

} // namespace cyclodet
