#include "spectra/mspec.hpp"

#include <algorithm>
#include <numeric>

namespace spectra {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Roots of p in the base field, with multiplicities.
std::vector<std::pair<GQ, std::size_t>> field_roots(const Poly<GQ>& p, FieldTag field) {
    std::vector<std::pair<GQ, std::size_t>> out;
    if (field == FieldTag::Q) {
        std::vector<Rational> re;
        for (const auto& c : p.coeffs()) {
            if (!c.is_real()) throw std::logic_error("non-real char poly over Q");
            re.push_back(c.re);
        }
        for (const auto& r : rational_roots(PolyQ(re))) {
            GQ z(r);
            out.push_back({z, p.root_multiplicity(z)});
        }
    } else {
        for (const auto& z : gaussian_rational_roots(p))
            out.push_back({z, p.root_multiplicity(z)});
    }
    return out;
}

// R with B * R = M * B, i.e. the action of M on the column space of B.
Matrix<GQ> restrict_to(const Matrix<GQ>& m, const Matrix<GQ>& basis) {
    Matrix<GQ> r(basis.cols(), basis.cols());
    Matrix<GQ> mb = m * basis;
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        auto x = solve(basis, mb.column(j));
        if (!x) throw std::logic_error("block is not invariant under multiplication");
        r.set_column(j, *x);
    }
    return r;
}

std::uint64_t egcd_inverse(std::uint64_t a, std::uint64_t n) {
    long long t = 0, newt = 1, r = static_cast<long long>(n), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<long long>(n);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool char_valid(const Character& chi) {
    const SCAlgebra& alg = chi.source->sc();
    if (chi.values.size() != alg.dim) return false;
    if (alg.field == FieldTag::Q)
        for (const auto& v : chi.values)
            if (!v.is_real()) return false;
    if (chi.apply(alg.unit) != GQ(1)) return false;
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (chi.apply(alg.table[i][j]) != chi.values[i] * chi.values[j]) return false;
    return true;
}

std::vector<Character> split_characters(const RingPtr& a) {
    const SCAlgebra& alg = a->sc();
    if (alg.dim == 0) return {};

    struct Block {
        Matrix<GQ> basis;          // columns span the block
        std::vector<GQ> eigvals;   // recorded eigenvalue per processed basis element
    };
    std::vector<Block> blocks{{Matrix<GQ>::identity(alg.dim), {}}};

    for (std::size_t i = 0; i < alg.dim; ++i) {
        std::vector<GQ> ei(alg.dim, GQ(0));
        ei[i] = GQ(1);
        Matrix<GQ> mult = mult_matrix(alg, ei);

        std::vector<Block> next;
        for (auto& blk : blocks) {
            std::size_t d = blk.basis.cols();
            Matrix<GQ> r = restrict_to(mult, blk.basis);
            Poly<GQ> p = char_poly(r);
            auto roots = field_roots(p, alg.field);
            std::size_t total = 0;
            for (const auto& [z, mult_z] : roots) total += mult_z;
            if (total < d)
                throw NotKValued(
                    "characteristic polynomial of a multiplication operator has an "
                    "irreducible factor of degree >= 2 over the base field");
            if (roots.size() == 1) {
                blk.eigvals.push_back(roots.front().first);
                next.push_back(std::move(blk));
                continue;
            }
            for (const auto& [z, mult_z] : roots) {
                Matrix<GQ> shifted = r;
                for (std::size_t k = 0; k < d; ++k) shifted(k, k) -= z;
                auto ker = kernel_basis(matrix_pow(shifted, d));
                Matrix<GQ> sub = blk.basis * Matrix<GQ>::from_columns(ker, d);
                Block nb{std::move(sub), blk.eigvals};
                nb.eigvals.push_back(z);
                next.push_back(std::move(nb));
            }
        }
        blocks = std::move(next);
    }

    std::vector<Character> chars;
    for (auto& blk : blocks) {
        Character chi{a, std::move(blk.eigvals)};
        if (!char_valid(chi))
            throw NotKValued("eigen-splitting produced a non-multiplicative value vector");
        chars.push_back(std::move(chi));
    }
    return chars;
}

std::vector<MaxIdealRep> mspec(const RingPtr& a) {
    std::vector<MaxIdealRep> out;
    if (a->is_zmod()) {
        if (a->zmod().n == 1) return out;
        for (auto p : prime_factors(a->zmod().n)) out.push_back({p});
        return out;
    }
    if (a->is_bool()) {
        for (int x = 0; x < static_cast<int>(a->bool_ring().ground.size()); ++x)
            out.push_back({x});
        return out;
    }
    for (auto& chi : split_characters(a)) out.push_back({std::move(chi)});
    return out;
}

bool ideal_contains(const MaxIdealRep& m, const RingElement& a) {
    if (m.is_prime()) return a.residue() % m.prime() == 0;
    if (m.is_point()) return !a.subset()[m.point()];
    return m.character().apply(a).is_zero();
}

ZariskiSet zer(const RingElement& a) {
    ZariskiSet z{mspec(a.owner), {}};
    for (std::size_t i = 0; i < z.ambient.size(); ++i)
        if (ideal_contains(z.ambient[i], a)) z.members.push_back(i);
    return z;
}

ZariskiSet nzer(const RingElement& a) {
    ZariskiSet z{mspec(a.owner), {}};
    for (std::size_t i = 0; i < z.ambient.size(); ++i)
        if (!ideal_contains(z.ambient[i], a)) z.members.push_back(i);
    return z;
}

Character ev_hom(const RingPtr& a, const MaxIdealRep& m) {
    if (!a->is_sc() || !m.is_char_kernel())
        throw NotKValued("residue field at this maximal ideal is not the base field");
    return m.character();
}

DevTransform dev(const RingPtr& a) {
    DevTransform d;
    d.source = a;
    d.characters = split_characters(a);
    d.matrix = Matrix<GQ>(d.characters.size(), a->sc().dim);
    for (std::size_t i = 0; i < d.characters.size(); ++i)
        for (std::size_t j = 0; j < a->sc().dim; ++j) d.matrix(i, j) = d.characters[i].values[j];
    d.bijective = d.matrix.square() && try_inverse(d.matrix).has_value();
    return d;
}

std::vector<std::size_t> mspec_map(const RingHom& phi) {
    std::vector<std::size_t> out;
    if (phi.source->is_sc() && phi.target->is_sc()) {
        auto src_chars = split_characters(phi.source);
        auto tgt_chars = split_characters(phi.target);
        const auto& f = std::get<Matrix<GQ>>(phi.action);
        for (const auto& chi : tgt_chars) {
            std::vector<GQ> composed(phi.source->sc().dim, GQ(0));
            for (std::size_t j = 0; j < composed.size(); ++j)
                composed[j] = chi.apply(f.column(j));
            auto it = std::find_if(src_chars.begin(), src_chars.end(),
                                   [&](const Character& c) { return c.values == composed; });
            if (it == src_chars.end())
                throw NotKValued("composed character is missing from the source spectrum");
            out.push_back(static_cast<std::size_t>(it - src_chars.begin()));
        }
        return out;
    }
    auto src = mspec(phi.source);
    auto tgt = mspec(phi.target);
    if (phi.source->is_zmod()) {
        for (const auto& m : tgt) {
            auto it = std::find_if(src.begin(), src.end(),
                                   [&](const MaxIdealRep& s) { return s.prime() == m.prime(); });
            if (it == src.end()) throw std::logic_error("prime of target modulus missing in source");
            out.push_back(static_cast<std::size_t>(it - src.begin()));
        }
        return out;
    }
    const auto& g = std::get<std::vector<int>>(phi.action);
    for (const auto& m : tgt) out.push_back(static_cast<std::size_t>(g[m.point()]));
    return out;
}

UnitCheck is_unit(const RingElement& a) {
    const RingPtr& r = a.owner;
    UnitCheck res;
    if (r->is_zmod()) {
        std::uint64_t n = r->zmod().n;
        if (n == 1) {  // zero ring: 0 = 1 is invertible
            res.invertible = true;
            res.inverse = zmod_elt(r, 0);
            return res;
        }
        std::uint64_t g = std::gcd(a.residue(), n);
        if (g == 1) {
            res.invertible = true;
            res.inverse = zmod_elt(r, egcd_inverse(a.residue(), n));
        } else {
            res.witness = UnitWitness{prime_factors(g).front()};
        }
        return res;
    }
    if (r->is_bool()) {
        const auto& s = a.subset();
        auto missing = std::find(s.begin(), s.end(), false);
        if (missing == s.end()) {
            res.invertible = true;
            res.inverse = a;
        } else {
            res.witness = UnitWitness{static_cast<int>(missing - s.begin())};
        }
        return res;
    }
    const SCAlgebra& alg = r->sc();
    if (alg.dim == 0) {
        res.invertible = true;
        res.inverse = a;
        return res;
    }
    auto x = solve(mult_matrix(alg, a.coords()), alg.unit);
    if (x && ring_eq(ring_mul(a, sc_elt(r, *x)), ring_one(r))) {
        res.invertible = true;
        res.inverse = sc_elt(r, std::move(*x));
        return res;
    }
    for (auto& chi : split_characters(r))
        if (chi.apply(a).is_zero()) {
            res.witness = UnitWitness{std::move(chi.values)};
            return res;
        }
    throw std::logic_error("non-unit with no vanishing character");
}

std::string MaxIdealRep::describe(const RingSpec& ring) const {
    if (is_prime()) return "(" + std::to_string(prime()) + ")";
    if (is_point()) return "point " + ring.bool_ring().ground[point()];
    std::string s = "Ker(chi), chi = (";
    const auto& vals = character().values;
    for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? ", " : "") + vals[i].str();
    return s + ")";
}

bool principal_ideal_maximal(const PolyQ& g, bool ambient_is_field) {
    if (ambient_is_field) return g.is_zero();  // the only proper ideal of a field
    if (g.is_zero()) return false;             // residue ring Q[t] is not a field
    if (g.degree() == 0) return false;         // unit ideal, not proper
    if (g.degree() == 1) return true;
    if (g.degree() <= 3) return rational_roots(g).empty();
    throw std::invalid_argument("maximality test supports degree <= 3 only");
}

PreimageReport demo_preimage_not_maximal() {
    PreimageReport rep;
    rep.source_ring = "Q[t]";
    rep.target_ring = "Q(t)";
    // (0) is maximal in the field Q(t); its preimage under the inclusion is
    // (0) in Q[t], whose residue ring is Q[t] itself.
    if (!principal_ideal_maximal(PolyQ(), true))
        throw std::logic_error("(0) should be maximal in a field");
    rep.preimage_maximal = principal_ideal_maximal(PolyQ(), false);
    if (!rep.preimage_maximal) {
        // t is a nonzero noninvertible element of the residue ring Q[t]:
        // units of Q[t] are the nonzero constants.
        PolyQ t = PolyQ::monomial(1);
        if (t.is_zero() || t.degree() == 0) throw std::logic_error("bad witness");
        rep.witness = "t";
    }
    return rep;
}

Rational demo_non_hausdorff(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroPolynomial();
    long budget = a.degree() + b.degree() + 1;
    // a*b has at most deg(a) + deg(b) roots, so some candidate in
    // 0, 1, ..., deg(a) + deg(b) avoids them all
    for (long step = 0; step < budget; ++step) {
        Rational c(step);
        if (a.eval(c) != 0 && b.eval(c) != 0) return c;
    }
    throw std::logic_error("no candidate within the degree bound");
}

}  // namespace spectra
