#include "cyclodet/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclodet {

Cyclotomic::Cyclotomic(const Rational& r) { c_[0] = r; }
Cyclotomic::Cyclotomic(long v) { c_[0] = v; }
Cyclotomic::Cyclotomic(int v) { c_[0] = v; }

Cyclotomic Cyclotomic::ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Cyclotomic(r);
}

const std::array<Cyclotomic, 24>& Cyclotomic::zeta_table() {
    static const std::array<Cyclotomic, 24> table = [] {
        std::array<Cyclotomic, 24> t;
        t[0] = Cyclotomic(1);
        Cyclotomic z;
        z.c_[1] = 1;
        for (int k = 1; k < 24; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)] * z;
        return t;
    }();
    return table;
}

Cyclotomic Cyclotomic::zeta(long k) {
    long r = k % 24;
    if (r < 0) r += 24;
    return zeta_table()[static_cast<std::size_t>(r)];
}

Cyclotomic Cyclotomic::i() { return zeta(6); }
Cyclotomic Cyclotomic::omega() { return zeta(8); }
Cyclotomic Cyclotomic::sqrt2() { return zeta(3) + zeta(21); }
Cyclotomic Cyclotomic::sqrt3() { return zeta(2) + zeta(22); }

Cyclotomic Cyclotomic::sqrt2_pow(long e) {
    long q = e >= 0 ? e / 2 : -((-e + 1) / 2);
    long r = e - 2 * q; // 0 or 1
    Cyclotomic out(rat_pow(Rational(2), q));
    if (r) out *= sqrt2();
    return out;
}

Cyclotomic Cyclotomic::sqrt3_pow(long e) {
    long q = e >= 0 ? e / 2 : -((-e + 1) / 2);
    long r = e - 2 * q;
    Cyclotomic out(rat_pow(Rational(3), q));
    if (r) out *= sqrt3();
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (int j = 1; j < degree; ++j)
        if (c_[static_cast<std::size_t>(j)] != 0) return false;
    return true;
}

const Rational& Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::logic_error("rational_part of a non-rational element: " + str());
    return c_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    for (int j = 0; j < degree; ++j) c_[static_cast<std::size_t>(j)] += o.c_[static_cast<std::size_t>(j)];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    for (int j = 0; j < degree; ++j) c_[static_cast<std::size_t>(j)] -= o.c_[static_cast<std::size_t>(j)];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    std::array<Rational, 2 * degree - 1> t{};
    for (int a = 0; a < degree; ++a) {
        const Rational& ca = c_[static_cast<std::size_t>(a)];
        if (ca == 0) continue;
        for (int b = 0; b < degree; ++b) {
            const Rational& cb = o.c_[static_cast<std::size_t>(b)];
            if (cb == 0) continue;
            t[static_cast<std::size_t>(a + b)] += ca * cb;
        }
    }
    // zeta^k = zeta^{k-4} - zeta^{k-8} for k >= 8; cascade settles going down.
    for (int k = 2 * degree - 2; k >= degree; --k) {
        Rational& v = t[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        t[static_cast<std::size_t>(k - 4)] += v;
        t[static_cast<std::size_t>(k - 8)] -= v;
    }
    for (int j = 0; j < degree; ++j) c_[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j)];
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out;
    for (int j = 0; j < degree; ++j) out.c_[static_cast<std::size_t>(j)] = -c_[static_cast<std::size_t>(j)];
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
    // Column k of A holds the coordinates of (*this) * zeta^k; solving
    // A v = e_0 yields the coordinates of the inverse. A is invertible
    // because multiplication by a nonzero element of a field is.
    Rational A[degree][degree + 1];
    for (int k = 0; k < degree; ++k) {
        Cyclotomic col = *this * zeta(k);
        for (int j = 0; j < degree; ++j) A[j][k] = col.c_[static_cast<std::size_t>(j)];
    }
    A[0][degree] = 1;
    for (int col = 0; col < degree; ++col) {
        int p = col;
        while (A[p][col] == 0) ++p;
        if (p != col)
            for (int cc = 0; cc <= degree; ++cc) std::swap(A[p][cc], A[col][cc]);
        for (int r = 0; r < degree; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col] / A[col][col];
            for (int cc = col; cc <= degree; ++cc) A[r][cc] -= f * A[col][cc];
        }
    }
    Cyclotomic out;
    for (int j = 0; j < degree; ++j) out.c_[static_cast<std::size_t>(j)] = A[j][degree] / A[j][j];
    return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc(1), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::conjugate() const {
    Cyclotomic out;
    for (int j = 0; j < degree; ++j) {
        const Rational& cj = c_[static_cast<std::size_t>(j)];
        if (cj == 0) continue;
        out += Cyclotomic(cj) * zeta((24 - j) % 24);
    }
    return out;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> s = 0;
    for (int j = 0; j < degree; ++j) {
        const Rational& cj = c_[static_cast<std::size_t>(j)];
        if (cj == 0) continue;
        s += cj.get_d() * std::polar(1.0, j * M_PI / 12.0);
    }
    return s;
}

std::string Cyclotomic::str() const {
    std::string out = "[";
    for (int j = 0; j < degree; ++j) {
        if (j) out += ", ";
        out += rat_str(c_[static_cast<std::size_t>(j)]);
    }
    return out + "]";
}

} // namespace cyclodet
