#include "spectra/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spectra {
namespace {

const Integer kFactorCap = Integer("1000000000000");  // 1e12

// Trial division up to 1e6. Any cofactor left after that is prime, because a
// composite cofactor would exceed the cap.
std::map<Integer, unsigned> factorize(Integer n) {
    if (n < 0) n = -n;
    if (n > kFactorCap) throw NormCapExceeded();
    std::map<Integer, unsigned> f;
    if (n <= 1) return f;
    for (Integer d = 2; d * d <= n && d <= 1000000; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

std::vector<Integer> divisors_of(const Integer& n) {
    auto fac = factorize(n);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

struct GInt {
    Integer re, im;
    Integer norm() const { return re * re + im * im; }
    friend GInt operator*(const GInt& a, const GInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GInt& a, const GInt& b) { return a.re == b.re && a.im == b.im; }
};

// Exact quotient z / d, or nullopt when d does not divide z in Z[i].
std::optional<GInt> gdiv(const GInt& z, const GInt& d) {
    Integer n = d.norm();
    if (n == 0) return std::nullopt;
    GInt num{z.re * d.re + z.im * d.im, z.im * d.re - z.re * d.im};
    if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
    return GInt{num.re / n, num.im / n};
}

unsigned gint_valuation(GInt& z, const GInt& pi) {
    unsigned v = 0;
    while (true) {
        auto q = gdiv(z, pi);
        if (!q) return v;
        z = *q;
        ++v;
    }
}

// Decompose p = a^2 + b^2 for a prime p = 2 or p = 1 mod 4.
GInt two_squares(const Integer& p) {
    for (Integer a = 1; a * a * 2 <= p; ++a) {
        Integer b2 = p - a * a;
        Integer b = boost::multiprecision::sqrt(b2);
        if (b * b == b2) return {a, b};
    }
    throw std::logic_error("two_squares: no decomposition found");
}

// All divisors of z in Z[i], up to unit multiples.
std::vector<GInt> gaussian_divisors(GInt z) {
    std::vector<std::pair<GInt, unsigned>> primes;
    for (const auto& [p, e] : factorize(z.norm())) {
        (void)e;
        if (p == 2) {
            GInt pi{1, 1};
            GInt w = z;
            unsigned v = gint_valuation(w, pi);
            if (v) primes.push_back({pi, v});
        } else if (p % 4 == 3) {
            GInt pi{p, 0};
            GInt w = z;
            unsigned v = gint_valuation(w, pi);
            if (v) primes.push_back({pi, v});
        } else {
            GInt ab = two_squares(p);
            for (GInt pi : {GInt{ab.re, ab.im}, GInt{ab.re, -ab.im}}) {
                GInt w = z;
                unsigned v = gint_valuation(w, pi);
                if (v) primes.push_back({pi, v});
            }
        }
    }
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [pi, v] : primes) {
        std::size_t sz = divs.size();
        GInt pk{1, 0};
        for (unsigned k = 1; k <= v; ++k) {
            pk = pk * pi;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

Integer lcm_int(const Integer& a, const Integer& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    PolyQ g = f;
    if (g.coeff(0) == 0) {
        roots.push_back(0);
        PolyQ t = PolyQ::monomial(1);
        while (g.coeff(0) == 0 && g.degree() > 0) g = poly_divmod(g, t).first;
    }
    if (g.degree() < 1) return roots;

    Integer den = 1;
    for (const auto& c : g.coeffs()) den = lcm_int(den, boost::multiprecision::denominator(c));
    std::vector<Integer> a;
    Integer content = 0;
    for (const auto& c : g.coeffs()) {
        Integer ci = boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c));
        a.push_back(ci);
        content = boost::multiprecision::gcd(content, ci);
    }
    if (content > 1)
        for (auto& ci : a) ci /= content;

    for (const Integer& p : divisors_of(a.front()))
        for (const Integer& q : divisors_of(a.back())) {
            if (boost::multiprecision::gcd(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                if (g.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<GQ> gaussian_rational_roots(const PolyGQ& f) {
    if (f.is_zero()) throw std::invalid_argument("gaussian_rational_roots: zero polynomial");
    std::vector<GQ> roots;
    PolyGQ g = f;
    if (g.coeff(0).is_zero()) {
        roots.push_back(GQ(0));
        PolyGQ t = PolyGQ::monomial(1);
        while (g.coeff(0).is_zero() && g.degree() > 0) g = poly_divmod(g, t).first;
    }
    if (g.degree() < 1) return roots;

    Integer den = 1;
    for (const auto& c : g.coeffs()) {
        den = lcm_int(den, boost::multiprecision::denominator(c.re));
        den = lcm_int(den, boost::multiprecision::denominator(c.im));
    }
    auto to_gint = [&](const GQ& c) {
        Rational re = c.re * den, im = c.im * den;
        return GInt{boost::multiprecision::numerator(re), boost::multiprecision::numerator(im)};
    };
    GInt c0 = to_gint(g.coeff(0));
    GInt cl = to_gint(g.leading());

    static const GQ units[4] = {GQ(1), gq_i(), GQ(-1), GQ(0) - gq_i()};
    for (const GInt& z : gaussian_divisors(c0))
        for (const GInt& w : gaussian_divisors(cl)) {
            GQ base = GQ(Rational(z.re), Rational(z.im)) / GQ(Rational(w.re), Rational(w.im));
            for (const GQ& u : units) {
                GQ cand = u * base;
                if (g.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    return roots;
}

}  // namespace spectra
