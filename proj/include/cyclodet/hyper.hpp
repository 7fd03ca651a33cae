#pragma once

#include "cyclodet/cyclotomic.hpp"
#include "cyclodet/errors.hpp"

#include <vector>

namespace cyclodet {

// (a)_n = a (a+1) ... (a+n-1); the empty product (n = 0) is 1.
Cyclotomic pochhammer(const Cyclotomic& a, int n);
Rational pochhammer(const Rational& a, int n);

// (a; q)_n.  For n >= 0 this is prod_{k=0}^{n-1} (1 - a q^k); for n < 0 the
// standard extension prod_{k=1}^{-n} 1/(1 - a q^{-k}), whose factors must be
// nonzero (PoleError otherwise).
Cyclotomic q_pochhammer(const Cyclotomic& a, const Cyclotomic& q, int n);
// (a_1, ..., a_r; q)_n = prod_j (a_j; q)_n.
Cyclotomic q_pochhammer(const std::vector<Cyclotomic>& as, const Cyclotomic& q, int n);

// binom(x, n) = (x - n + 1)_n / n! for field x and integer n >= 0.
Cyclotomic binomial(const Cyclotomic& x, int n);
Rational binomial(const Rational& x, int n);

struct HypSpec {
    std::vector<Cyclotomic> num;
    std::vector<Cyclotomic> den; // the k! factor is implicit, not listed here
    Cyclotomic z;
    // Smallest m such that -m appears among num; always supplied explicitly
    // by the caller, never recovered from the field elements.
    int termination = 0;
};

// Terminating sum  sum_{k=0}^{m} [prod_j (num_j)_k / prod_j (den_j)_k] z^k / k!.
// A numerator factor reaching zero cuts the sum short; a denominator factor
// reaching zero first raises PoleError.
Cyclotomic hyp_terminating(const HypSpec& spec);

struct QHypSpec {
    std::vector<Cyclotomic> num;
    std::vector<Cyclotomic> den; // the (q; q)_k factor is implicit
    Cyclotomic q;
    Cyclotomic z;
    // Smallest m such that q^{-m} appears among num, supplied as an integer.
    int termination = 0;
};

// Terminating sum  sum_{k=0}^{m} [prod_j (num_j; q)_k / prod_j (den_j; q)_k]
// z^k / (q; q)_k.  Only the shape num.size() == den.size() + 1 is accepted
// (ShapeError otherwise); for that shape the usual (-1)^k q^binom(k,2)
// correction is absent.
Cyclotomic qhyp_terminating(const QHypSpec& spec);

} // namespace cyclodet
