#pragma once

#include "cyclodet/poly.hpp"

#include <string>
#include <vector>

namespace cyclodet {

// One geometric factor family (1 - c q^{d + step k} z^j), k = 0, 1, 2, ...
// The step is shared by all families passed to a series_product call.
struct QFactor {
    Cyclotomic c;
    int d = 0;
    int j = 0;
};

// Power series in q modulo q^{K+1} whose coefficients are Laurent
// polynomials in z. All arithmetic truncates at order K.
class TruncatedQSeries {
public:
    explicit TruncatedQSeries(int order);
    TruncatedQSeries(int order, const Cyclotomic& constant);
    TruncatedQSeries(int order, const LaurentPoly& constant);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const LaurentPoly& coeff(int k) const;
    void add_term(int k, const LaurentPoly& v);
    bool is_zero() const;

    // Largest value of max_exp - min_exp + 1 over the nonzero coefficients.
    int max_support_width() const;

    TruncatedQSeries& operator+=(const TruncatedQSeries& o);
    TruncatedQSeries& operator-=(const TruncatedQSeries& o);
    TruncatedQSeries& operator*=(const TruncatedQSeries& o);
    TruncatedQSeries& operator*=(const LaurentPoly& f);
    TruncatedQSeries& operator*=(const Cyclotomic& s);

    // Multiplies in place by the single factor (1 - c q^e z^j), 0 <= e.
    void mul_one_minus(const Cyclotomic& c, int e, int j);

    TruncatedQSeries operator-() const;

    friend TruncatedQSeries operator+(TruncatedQSeries a, const TruncatedQSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedQSeries operator-(TruncatedQSeries a, const TruncatedQSeries& b) {
        a -= b;
        return a;
    }
    friend TruncatedQSeries operator*(TruncatedQSeries a, const TruncatedQSeries& b) {
        a *= b;
        return a;
    }
    friend TruncatedQSeries operator*(TruncatedQSeries a, const LaurentPoly& f) {
        a *= f;
        return a;
    }
    friend TruncatedQSeries operator*(TruncatedQSeries a, const Cyclotomic& s) {
        a *= s;
        return a;
    }
    friend TruncatedQSeries operator*(const Cyclotomic& s, TruncatedQSeries a) {
        a *= s;
        return a;
    }

    friend bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b);
    friend bool operator!=(const TruncatedQSeries& a, const TruncatedQSeries& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    std::vector<LaurentPoly> c_;
    void check_order(const TruncatedQSeries& o) const;
};

// prod over families of prod_{k >= 0, d + step k <= K} (1 - c q^{d + step k} z^j),
// truncated at order K. An empty list gives 1.
TruncatedQSeries series_product(const std::vector<QFactor>& factors, int step, int K);

// The quintuple-product split of the circle weight, cross-multiplied:
//   (q^3;q^3)_inf (z^2, z^-2; q^3)_inf
//     = (1+z)(z, z^-1; q^3)_inf ((1-w)/3)(q;q)_inf
//       [(qzw, w^2/z; q)_inf - w^2 (qzw^2, w/z; q)_inf],   w = zeta^8.
// Checked coefficient by coefficient through order K.
bool wq_check(int K);

// The two bilateral Laurent expansions behind wq_check: each sum times
// (q^3;q^3)_inf against its product side, plus their mutual equality.
bool laurent_expansions_check(int K);

} // namespace cyclodet
