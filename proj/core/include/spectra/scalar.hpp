#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spectra {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline Integer int_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

enum class FieldTag { Q, Qi };

/// Element of Q(i). For FieldTag::Q scalars the imaginary part is zero.
struct GQ {
    Rational re;
    Rational im;

    GQ() = default;
    GQ(Rational r) : re(std::move(r)) {}
    GQ(long r) : re(r) {}
    GQ(int r) : re(r) {}
    GQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    GQ conj() const { return {re, -im}; }

    /// |z|^2, always a rational.
    Rational norm_sq() const { return re * re + im * im; }

    friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GQ operator-(const GQ& a) { return {-a.re, -a.im}; }
    friend GQ operator*(const GQ& a, const GQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GQ operator/(const GQ& a, const GQ& b) {
        Rational n = b.norm_sq();
        if (n == 0) throw DivisionByZero();
        GQ num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    GQ& operator+=(const GQ& o) { return *this = *this + o; }
    GQ& operator-=(const GQ& o) { return *this = *this - o; }
    GQ& operator*=(const GQ& o) { return *this = *this * o; }
    GQ& operator/=(const GQ& o) { return *this = *this / o; }

    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

    std::string str() const {
        if (is_real()) return re.str();
        return re.str() + (im < 0 ? "-" : "+") + rat_abs(im).str() + "i";
    }
    friend std::ostream& operator<<(std::ostream& os, const GQ& z) { return os << z.str(); }
};

inline GQ gq_i() { return GQ(Rational(0), Rational(1)); }

}  // namespace spectra
