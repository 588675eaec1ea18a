#pragma once

#include <utility>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/scalar.hpp"

namespace spectra {

/// Univariate polynomial, coefficients lowest degree first, leading
/// coefficient nonzero unless the zero polynomial.
template <typename S>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(S v) { return Poly(std::vector<S>{std::move(v)}); }
    static Poly monomial(std::size_t deg, S lead = S(1)) {
        std::vector<S> c(deg + 1, S(0));
        c[deg] = std::move(lead);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }
    S leading() const { return c_.back(); }

    S eval(const S& x) const {
        S r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Long division: f = q*g + r with deg r < deg g.
    friend std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
        if (g.is_zero()) throw DivisionByZero();
        std::vector<S> rem = f.c_;
        std::vector<S> quot;
        long dg = g.degree();
        long dr = f.degree();
        if (dr >= dg) quot.assign(dr - dg + 1, S(0));
        while (dr >= dg) {
            S factor = rem[dr] / g.leading();
            quot[dr - dg] = factor;
            for (long i = 0; i <= dg; ++i) rem[dr - dg + i] -= factor * g.c_[i];
            rem.pop_back();
            dr = static_cast<long>(rem.size()) - 1;
            while (dr >= 0 && rem[dr] == S(0)) {
                rem.pop_back();
                --dr;
            }
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    /// Multiplicity of x as a root (0 when not a root).
    std::size_t root_multiplicity(const S& x) const {
        Poly lin(std::vector<S>{-x, S(1)});
        Poly f = *this;
        std::size_t m = 0;
        while (!f.is_zero() && f.eval(x) == S(0)) {
            f = poly_divmod(f, lin).first;
            ++m;
        }
        return m;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }
    std::vector<S> c_;
};

using PolyQ = Poly<Rational>;
using PolyGQ = Poly<GQ>;

/// Monic characteristic polynomial via the Faddeev-LeVerrier recursion
/// (exact: only divisions by integer scalars occur).
template <typename S>
Poly<S> char_poly(const Matrix<S>& m) {
    if (!m.square()) throw NotSquare();
    std::size_t n = m.rows();
    std::vector<S> c(n + 1, S(0));
    c[n] = S(1);
    Matrix<S> mk = Matrix<S>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        S ck = -(mk.trace() / S(static_cast<long>(k)));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return Poly<S>(std::move(c));
}

struct NormCapExceeded : std::domain_error {
    NormCapExceeded() : std::domain_error("integer factorization cap (1e12) exceeded") {}
};

/// All rational roots of a nonzero polynomial, by clearing denominators and
/// enumerating divisors of the constant and leading integer coefficients.
std::vector<Rational> rational_roots(const PolyQ& f);

/// All Gaussian-rational roots of a nonzero polynomial, via Gaussian-divisor
/// enumeration driven by integer factorization of coefficient norms.
std::vector<GQ> gaussian_rational_roots(const PolyGQ& f);

}  // namespace spectra
