#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace conefold {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer point/vector of the triangular lattice, a + b·ω with ω = e^{iπ/3}.
/// Multiplication satisfies ω² = ω − 1 (hence ω³ = −1, ω⁶ = 1).
struct EisensteinInt {
    Int a{};
    Int b{};

    EisensteinInt() = default;
    EisensteinInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    EisensteinInt(long a_, long b_) : a(a_), b(b_) {}

    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
        return {x.a - y.a, x.b - y.b};
    }
    EisensteinInt operator-() const { return {-a, -b}; }
    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const EisensteinInt& x, const EisensteinInt& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

/// a² + ab + b², the squared Euclidean length. Multiplicative.
inline Int norm(const EisensteinInt& x) { return x.a * x.a + x.a * x.b + x.b * x.b; }

/// Complex conjugate: conj(a + bω) = (a + b) − bω.
inline EisensteinInt conj(const EisensteinInt& x) { return {x.a + x.b, -x.b}; }

/// ω^k as an Eisenstein integer, k taken mod 6.
inline EisensteinInt omega_pow(long k) {
    static const std::array<std::pair<int, int>, 6> tab = {
        {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
    long r = k % 6;
    if (r < 0) r += 6;
    return {tab[static_cast<size_t>(r)].first, tab[static_cast<size_t>(r)].second};
}

/// Exact point/vector of the Eisenstein plane with rational coefficients.
/// All geometry in this library is done in this type; no floating point.
struct EisRat {
    Rat a{};
    Rat b{};

    EisRat() = default;
    EisRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    EisRat(long a_, long b_) : a(a_), b(b_) {}
    EisRat(const EisensteinInt& x) : a(x.a), b(x.b) {}  // NOLINT(google-explicit-constructor)

    bool integral() const {
        return boost::multiprecision::denominator(a) == 1 &&
               boost::multiprecision::denominator(b) == 1;
    }
    EisensteinInt as_int() const {
        return {boost::multiprecision::numerator(a), boost::multiprecision::numerator(b)};
    }
    bool is_zero() const { return a == 0 && b == 0; }

    friend EisRat operator+(const EisRat& x, const EisRat& y) { return {x.a + y.a, x.b + y.b}; }
    friend EisRat operator-(const EisRat& x, const EisRat& y) { return {x.a - y.a, x.b - y.b}; }
    EisRat operator-() const { return {-a, -b}; }
    friend EisRat operator*(const EisRat& x, const EisRat& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend EisRat operator*(const EisRat& x, const Rat& s) { return {x.a * s, x.b * s}; }
    friend EisRat operator*(const Rat& s, const EisRat& x) { return x * s; }
    friend EisRat operator/(const EisRat& x, const Rat& s) { return {x.a / s, x.b / s}; }
    friend bool operator==(const EisRat& x, const EisRat& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const EisRat& x, const EisRat& y) { return !(x == y); }
    friend bool operator<(const EisRat& x, const EisRat& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline Rat norm(const EisRat& x) { return x.a * x.a + x.a * x.b + x.b * x.b; }
inline EisRat conj(const EisRat& x) { return {x.a + x.b, -x.b}; }

/// x · ω^k: exact rotation by k·60° about the origin.
inline EisRat rotate60(const EisRat& x, long k) { return x * EisRat(omega_pow(k)); }
inline EisensteinInt rotate60(const EisensteinInt& x, long k) { return x * omega_pow(k); }

/// Exact division in Q(ω). Divisor must be nonzero.
inline EisRat div(const EisRat& x, const EisRat& y) {
    Rat n = norm(y);
    EisRat p = x * conj(y);
    return {p.a / n, p.b / n};
}

/// Cartesian coordinates of a + bω as (x, y·√3): x = a + b/2, y = b/2.
/// The √3 stays symbolic; both components are exact rationals.
struct CartesianExact {
    Rat x;
    Rat y_sqrt3;
};
inline CartesianExact to_cartesian(const EisRat& p) { return {p.a + p.b / 2, p.b / 2}; }

/// Lattice displacement (m, n) between singularities; interchangeable with
/// the Eisenstein value m + nω. Denominators 2 and 3 appear for unconventional
/// parent singularities.
struct CoxeterCoord {
    Rat m{};
    Rat n{};

    CoxeterCoord() = default;
    CoxeterCoord(Rat m_, Rat n_) : m(std::move(m_)), n(std::move(n_)) {}
    CoxeterCoord(long m_, long n_) : m(m_), n(n_) {}

    EisRat to_eisenstein() const { return {m, n}; }
    static CoxeterCoord from_eisenstein(const EisRat& e) { return {e.a, e.b}; }

    bool integral() const {
        return boost::multiprecision::denominator(m) == 1 &&
               boost::multiprecision::denominator(n) == 1;
    }
    friend bool operator==(const CoxeterCoord& x, const CoxeterCoord& y) {
        return x.m == y.m && x.n == y.n;
    }
    friend bool operator!=(const CoxeterCoord& x, const CoxeterCoord& y) { return !(x == y); }
    friend CoxeterCoord operator+(const CoxeterCoord& x, const CoxeterCoord& y) {
        return {x.m + y.m, x.n + y.n};
    }
};

inline Rat norm(const CoxeterCoord& c) { return c.m * c.m + c.m * c.n + c.n * c.n; }

/// The k with to = from·ω^k, if one exists. Angle predicates are expressed
/// through this rather than floating-point comparison.
inline std::optional<int> rotation_between(const EisRat& from, const EisRat& to) {
    for (int k = 0; k < 6; ++k)
        if (rotate60(from, k) == to) return k;
    return std::nullopt;
}

/// Explicit canonicalization into the sextant m > 0, n >= 0 (zero maps to
/// itself): returns the representative and the rotation applied. Never done
/// implicitly; seam isometries depend on uncanonicalized coordinates.
inline std::pair<CoxeterCoord, int> canonical_sextant(const CoxeterCoord& c) {
    EisRat v = c.to_eisenstein();
    if (v.is_zero()) return {c, 0};
    for (int k = 0; k < 6; ++k) {
        EisRat r = rotate60(v, k);
        if (r.a > 0 && r.b >= 0) return {CoxeterCoord::from_eisenstein(r), k};
    }
    return {c, 0};  // unreachable: the six sextants cover the plane
}

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const EisRat& x) {
    std::ostringstream os;
    os << to_string(x.a);
    if (x.b != 0) {
        os << (x.b > 0 ? "+" : "-");
        Rat ab = boost::multiprecision::abs(x.b);
        if (ab != 1) os << to_string(ab);
        os << "w";
    }
    return os.str();
}

inline std::string to_string(const CoxeterCoord& c) {
    return "(" + to_string(c.m) + ", " + to_string(c.n) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const EisRat& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const CoxeterCoord& c) {
    return os << to_string(c);
}

}  // namespace conefold
