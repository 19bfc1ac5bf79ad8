#ifndef HURSUM_COMPLEX_HPP
#define HURSUM_COMPLEX_HPP

#include "precision.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace hursum {

// std::complex only admits built-in floating types, so the library carries
// its own complex value type over the multiprecision reals. Only the
// operations the evaluators need are provided.
template <class Real>
struct Cx {
    Real re{0}, im{0};

    Cx() = default;
    Cx(Real r) : re(std::move(r)) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cx(int r) : re(r) {}
    Cx(long r) : re(r) {}
    Cx(double r) : re(r) {}

    static Cx from_doubles(double r, double i) { return Cx(Real(r), Real(i)); }

    bool is_real_zero_im() const { return im == 0; }

    Cx operator-() const { return Cx(-re, -im); }
    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator-=(const Cx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cx& operator*=(const Cx& o) { return *this = *this * o; }
    Cx& operator/=(const Cx& o) { return *this = *this / o; }

    friend Cx operator+(const Cx& a, const Cx& b) { return Cx(a.re + b.re, a.im + b.im); }
    friend Cx operator-(const Cx& a, const Cx& b) { return Cx(a.re - b.re, a.im - b.im); }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Cx operator*(const Real& a, const Cx& b) { return Cx(a * b.re, a * b.im); }
    friend Cx operator*(const Cx& a, const Real& b) { return Cx(a.re * b, a.im * b); }
    friend Cx operator/(const Cx& a, const Cx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Cx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    friend Cx operator/(const Cx& a, const Real& b) { return Cx(a.re / b, a.im / b); }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

template <class Real>
Cx<Real> conj(const Cx<Real>& z) {
    return {z.re, -z.im};
}
template <class Real>
Real norm_sq(const Cx<Real>& z) {
    return z.re * z.re + z.im * z.im;
}
template <class Real>
Real abs(const Cx<Real>& z) {
    using mp::sqrt;
    if (z.im == 0) return z.re < 0 ? Real(-z.re) : z.re;
    if (z.re == 0) return z.im < 0 ? Real(-z.im) : z.im;
    return sqrt(norm_sq(z));
}
template <class Real>
Cx<Real> reciprocal(const Cx<Real>& z) {
    Real d = norm_sq(z);
    return {z.re / d, -z.im / d};
}

template <class Real>
Cx<Real> log(const Cx<Real>& z) {
    using mp::atan2;
    using mp::log;
    return {Real(log(norm_sq(z)) / 2), atan2(z.im, z.re)};
}
template <class Real>
Cx<Real> exp(const Cx<Real>& z) {
    using mp::cos;
    using mp::exp;
    using mp::sin;
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}
template <class Real>
Cx<Real> sin(const Cx<Real>& z) {
    using mp::cos;
    using mp::cosh;
    using mp::sin;
    using mp::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}
template <class Real>
Cx<Real> cos(const Cx<Real>& z) {
    using mp::cos;
    using mp::cosh;
    using mp::sin;
    using mp::sinh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

// z^k for integer k by binary powering.
template <class Real>
Cx<Real> pow_int(Cx<Real> z, long k) {
    if (k < 0) return pow_int(reciprocal(z), -k);
    Cx<Real> r(Real(1));
    while (k) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

template <class Real>
double abs_d(const Cx<Real>& z) {
    return static_cast<double>(abs(z));
}

template <class Real>
std::string to_string(const Cx<Real>& z, int digits = 30) {
    std::ostringstream os;
    os.precision(digits);
    os << z.re;
    if (z.im != 0) {
        os << (z.im < 0 ? " - " : " + ");
        Real a = z.im < 0 ? Real(-z.im) : z.im;
        os << a << "i";
    }
    return os.str();
}

template <class Real>
std::ostream& operator<<(std::ostream& os, const Cx<Real>& z) {
    return os << to_string(z, 17);
}

}  // namespace hursum

#endif
