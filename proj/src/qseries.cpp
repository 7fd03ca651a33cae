#include "cyclodet/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclodet {

TruncatedQSeries::TruncatedQSeries(int order) {
    if (order < 0) throw std::logic_error("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, LaurentPoly());
}

TruncatedQSeries::TruncatedQSeries(int order, const Cyclotomic& constant)
    : TruncatedQSeries(order) {
    c_[0] = LaurentPoly(constant);
}

TruncatedQSeries::TruncatedQSeries(int order, const LaurentPoly& constant)
    : TruncatedQSeries(order) {
    c_[0] = constant;
}

const LaurentPoly& TruncatedQSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
    return c_[static_cast<std::size_t>(k)];
}

void TruncatedQSeries::add_term(int k, const LaurentPoly& v) {
    if (k < 0) throw std::out_of_range("series coefficient index");
    if (k > order()) return;
    c_[static_cast<std::size_t>(k)] += v;
}

bool TruncatedQSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

int TruncatedQSeries::max_support_width() const {
    int best = 0;
    for (const auto& p : c_) {
        if (p.is_zero()) continue;
        int w = p.max_exp() - p.min_exp() + 1;
        if (w > best) best = w;
    }
    return best;
}

void TruncatedQSeries::check_order(const TruncatedQSeries& o) const {
    if (c_.size() != o.c_.size()) throw std::logic_error("series orders differ");
}

TruncatedQSeries& TruncatedQSeries::operator+=(const TruncatedQSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedQSeries& TruncatedQSeries::operator-=(const TruncatedQSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedQSeries& TruncatedQSeries::operator*=(const TruncatedQSeries& o) {
    check_order(o);
    const std::size_t n = c_.size();
    std::vector<LaurentPoly> out(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; a + b < n; ++b) {
            if (o.c_[b].is_zero()) continue;
            out[a + b] += c_[a] * o.c_[b];
        }
    }
    c_ = std::move(out);
    return *this;
}

TruncatedQSeries& TruncatedQSeries::operator*=(const LaurentPoly& f) {
    for (auto& p : c_) p *= f;
    return *this;
}

TruncatedQSeries& TruncatedQSeries::operator*=(const Cyclotomic& s) {
    for (auto& p : c_) p *= s;
    return *this;
}

void TruncatedQSeries::mul_one_minus(const Cyclotomic& c, int e, int j) {
    if (e < 0) throw std::logic_error("factor q-exponent must be nonnegative");
    if (e > order()) return;
    const LaurentPoly shift = LaurentPoly::term(j, c);
    for (int k = order(); k >= e; --k)
        c_[static_cast<std::size_t>(k)] -= shift * c_[static_cast<std::size_t>(k - e)];
}

TruncatedQSeries TruncatedQSeries::operator-() const {
    TruncatedQSeries out(*this);
    for (auto& p : out.c_) p = -p;
    return out;
}

bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b) {
    return a.c_ == b.c_;
}

std::string TruncatedQSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[static_cast<std::size_t>(k)].str() << ")*q^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << order() + 1 << ")";
    return os.str();
}

TruncatedQSeries series_product(const std::vector<QFactor>& factors, int step, int K) {
    if (step <= 0) throw std::logic_error("series_product step must be positive");
    TruncatedQSeries s(K, Cyclotomic(1));
    for (const auto& f : factors) {
        if (f.d < 0) throw std::logic_error("series_product needs d >= 0");
        for (int e = f.d; e <= K; e += step) s.mul_one_minus(f.c, e, f.j);
    }
    return s;
}

namespace {

int binom2(long m) { return static_cast<int>(m * (m - 1) / 2); }

// sum_n (-1)^n q^{binom(3n,2)} z^{3n-1} (1 + z q^{3n}), monomials kept to order K
TruncatedQSeries quintuple_sum(int K) {
    TruncatedQSeries s(K);
    for (long n = -(K + 2); n <= K + 2; ++n) {
        const Cyclotomic sign(n % 2 ? -1 : 1);
        const int e1 = binom2(3 * n);
        if (e1 >= 0 && e1 <= K) s.add_term(e1, LaurentPoly::term(static_cast<int>(3 * n - 1), sign));
        const int e2 = binom2(3 * n + 1);
        if (e2 >= 0 && e2 <= K) s.add_term(e2, LaurentPoly::term(static_cast<int>(3 * n), sign));
    }
    return s;
}

// sum_n (-1)^n q^{binom(n+1,2)} z^n (w^n - w^{2n+2})
TruncatedQSeries triple_sum_combined(int K) {
    const Cyclotomic w = Cyclotomic::omega();
    TruncatedQSeries s(K);
    for (long n = -(K + 2); n <= K + 2; ++n) {
        const int e = binom2(n + 1);
        if (e < 0 || e > K) continue;
        Cyclotomic coef = w.pow(((n % 3) + 3) % 3) - w.pow(((2 * n + 2) % 3 + 3) % 3);
        if (n % 2) coef = -coef;
        s.add_term(e, LaurentPoly::term(static_cast<int>(n), coef));
    }
    return s;
}

// sum_n (-1)^n q^{binom(n+1,2)} (wz)^n
TruncatedQSeries triple_sum_single(int K) {
    const Cyclotomic w = Cyclotomic::omega();
    TruncatedQSeries s(K);
    for (long n = -(K + 2); n <= K + 2; ++n) {
        const int e = binom2(n + 1);
        if (e < 0 || e > K) continue;
        Cyclotomic coef = w.pow(((n % 3) + 3) % 3);
        if (n % 2) coef = -coef;
        s.add_term(e, LaurentPoly::term(static_cast<int>(n), coef));
    }
    return s;
}

const Cyclotomic& omega2() {
    static const Cyclotomic w2 = Cyclotomic::omega() * Cyclotomic::omega();
    return w2;
}

// (q;q)_inf [(qzw, w^2/z; q)_inf - w^2 (qzw^2, w/z; q)_inf]
TruncatedQSeries euler_bracket(int K) {
    const Cyclotomic w = Cyclotomic::omega();
    const Cyclotomic w2 = omega2();
    TruncatedQSeries first = series_product({{w, 1, 1}, {w2, 0, -1}}, 1, K);
    TruncatedQSeries second = series_product({{w2, 1, 1}, {w, 0, -1}}, 1, K);
    TruncatedQSeries euler = series_product({{Cyclotomic(1), 1, 0}}, 1, K);
    return euler * (first - second * w2);
}

} // namespace

bool wq_check(int K) {
    if (K < 1) throw std::logic_error("wq_check needs K >= 1");
    const Cyclotomic one(1);
    TruncatedQSeries lhs = series_product({{one, 3, 0}}, 3, K) *
                           series_product({{one, 0, 2}, {one, 0, -2}}, 3, K);

    TruncatedQSeries rhs = series_product({{one, 0, 1}, {one, 0, -1}}, 3, K);
    rhs *= LaurentPoly(one) + LaurentPoly::term(1, one);
    rhs *= (one - Cyclotomic::omega()) * Cyclotomic::ratio(1, 3);
    rhs *= euler_bracket(K);
    return lhs == rhs;
}

bool laurent_expansions_check(int K) {
    if (K < 1) throw std::logic_error("laurent_expansions_check needs K >= 1");
    const Cyclotomic one(1);
    const Cyclotomic w = Cyclotomic::omega();

    // quintuple product side: z^-1 (-z, -q^3/z; q^3)_inf (q^3 z^2, q^3 z^-2; q^6)_inf
    TruncatedQSeries prod_a = series_product({{-one, 0, 1}, {-one, 3, -1}}, 3, K) *
                              series_product({{one, 3, 2}, {one, 3, -2}}, 6, K);
    prod_a *= LaurentPoly::term(-1, one);
    prod_a *= series_product({{one, 3, 0}}, 3, K);
    if (prod_a != quintuple_sum(K)) return false;

    // triple product ingredient: (q;q)_inf (qzw; q)_inf (w^2/z; q)_inf
    TruncatedQSeries prod_t =
        series_product({{one, 1, 0}, {w, 1, 1}, {omega2(), 0, -1}}, 1, K);
    if (prod_t != triple_sum_single(K)) return false;

    // combined bracket against its bilateral sum
    if (euler_bracket(K) != triple_sum_combined(K)) return false;

    // the two expansions describe the same function
    TruncatedQSeries scaled_b = triple_sum_combined(K);
    scaled_b *= (one - w) * Cyclotomic::ratio(1, 3);
    return quintuple_sum(K) == scaled_b;
}

} // namespace cyclodet
