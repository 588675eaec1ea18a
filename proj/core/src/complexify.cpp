#include "spectra/complexify.hpp"

#include <algorithm>

namespace spectra {
namespace {

Matrix<GQ> conj_matrix(const Matrix<GQ>& m) {
    Matrix<GQ> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

std::vector<GQ> conj_vector(const std::vector<GQ>& v) {
    std::vector<GQ> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

bool all_real(const std::vector<GQ>& v) {
    return std::all_of(v.begin(), v.end(), [](const GQ& z) { return z.is_real(); });
}

}  // namespace

std::vector<GQ> apply_star(const InvolutiveAlgebra& a, const std::vector<GQ>& coords) {
    return a.star.apply(conj_vector(coords));
}

InvolutiveAlgebra make_involutive(const RingPtr& a, Matrix<GQ> star) {
    const SCAlgebra& alg = a->sc();
    if (alg.field != FieldTag::Qi) throw AxiomViolation("involutions live on Q(i) algebras");
    if (!star.square() || star.rows() != alg.dim) throw AxiomViolation("star matrix shape");
    // star(star(v)) = S * conj(S * conj(v)) = S * conj(S) * v
    if (!(star * conj_matrix(star) == Matrix<GQ>::identity(alg.dim)))
        throw AxiomViolation("involution is not self-inverse");
    InvolutiveAlgebra inv{a, std::move(star)};
    if (apply_star(inv, alg.unit) != alg.unit) throw AxiomViolation("involution moves the unit");
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            auto lhs = apply_star(inv, alg.table[i][j]);
            auto prod = ring_mul(sc_elt(a, inv.star.column(i)), sc_elt(a, inv.star.column(j)));
            if (lhs != prod.coords())
                throw AxiomViolation("involution is not multiplicative on basis pair (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return inv;
}

InvolutiveAlgebra canonical_involution(const RingPtr& a) {
    auto d = dev(a);
    if (!d.bijective)
        throw NotKValued("canonical involution needs a bijective double evaluation");
    Matrix<GQ> dinv = inverse(d.matrix);
    return make_involutive(a, dinv * conj_matrix(d.matrix));
}

HermitianBasis hermitian_subring(const InvolutiveAlgebra& a) {
    const SCAlgebra& alg = a.algebra->sc();
    std::size_t n = alg.dim;
    // fixed points of v -> S conj(v): with S = P + iQ and v = x + iy,
    // (P - I) x + Q y = 0 and Q x - (P + I) y = 0
    Matrix<GQ> sys(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational p = a.star(i, j).re, q = a.star(i, j).im;
            sys(i, j) = GQ(p) - (i == j ? GQ(1) : GQ(0));
            sys(i, n + j) = GQ(q);
            sys(n + i, j) = GQ(q);
            sys(n + i, n + j) = -GQ(p) - (i == j ? GQ(1) : GQ(0));
        }
    auto ker = kernel_basis(sys);
    if (ker.size() != n)
        throw AxiomViolation("hermitian subspace has dimension " + std::to_string(ker.size()) +
                             ", expected " + std::to_string(n));
    HermitianBasis h;
    for (const auto& xy : ker) {
        std::vector<GQ> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = GQ(xy[i].re, xy[n + i].re);
        h.vectors.push_back(std::move(v));
    }
    // transport the multiplication to the hermitian basis; the structure
    // constants must come out rational
    Matrix<GQ> hmat = Matrix<GQ>::from_columns(h.vectors, n);
    Matrix<GQ> hinv = inverse(hmat);
    std::vector<std::vector<std::vector<GQ>>> table(
        n, std::vector<std::vector<GQ>>(n, std::vector<GQ>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            auto prod = ring_mul(sc_elt(a.algebra, h.vectors[i]), sc_elt(a.algebra, h.vectors[j]));
            auto coords = hinv.apply(prod.coords());
            if (!all_real(coords))
                throw AxiomViolation("hermitian subspace is not closed under multiplication");
            table[i][j] = coords;
            if (i != j) table[j][i] = std::move(coords);
        }
    auto unit = hinv.apply(alg.unit);
    if (!all_real(unit)) throw AxiomViolation("unit is not hermitian");
    h.real_form = make_sc_algebra(FieldTag::Q, std::move(table), std::move(unit), {},
                                  std::max<std::size_t>(n, kDefaultDimCap));
    return h;
}

InvolutiveAlgebra induce(const RingPtr& a0) {
    const SCAlgebra& alg = a0->sc();
    if (alg.field != FieldTag::Q) throw InvalidRing("induce expects a rational algebra");
    auto complexified = make_sc_algebra(FieldTag::Qi, alg.table, alg.unit, alg.labels,
                                        std::max<std::size_t>(alg.dim, kDefaultDimCap));
    return make_involutive(complexified, Matrix<GQ>::identity(alg.dim));
}

RoundtripCert roundtrip_hi(const RingPtr& a0) {
    RoundtripCert cert;
    auto ind = induce(a0);
    auto h = hermitian_subring(ind);
    std::size_t n = a0->sc().dim;
    // coordinates of the original basis in the hermitian basis
    Matrix<GQ> hmat = Matrix<GQ>::from_columns(h.vectors, n);
    cert.iso = inverse(hmat);
    RingHom hom{a0, h.real_form, cert.iso};
    cert.valid = hom_validate(hom).valid && try_inverse(cert.iso).has_value();
    cert.note = "zeta: A0 -> H(I(A0)) realized by an exact basis-change matrix";
    return cert;
}

RoundtripCert roundtrip_ih(const InvolutiveAlgebra& a) {
    RoundtripCert cert;
    auto h = hermitian_subring(a);
    auto ind = induce(h.real_form);
    std::size_t n = a.algebra->sc().dim;
    cert.iso = Matrix<GQ>::from_columns(h.vectors, n);  // I(H(A)) -> A
    RingHom hom{ind.algebra, a.algebra, cert.iso};
    bool star_ok = check_hom_star_compat(hom, ind, a);
    cert.valid = hom_validate(hom).valid && try_inverse(cert.iso).has_value() && star_ok;
    cert.note = "eta: I(H(A)) -> A realized by the hermitian basis matrix, star-compatible";
    return cert;
}

std::vector<std::size_t> base_change_mspec(const RingPtr& a0) {
    if (a0->sc().field != FieldTag::Q) throw InvalidRing("base change starts from a rational algebra");
    auto chars0 = split_characters(a0);
    for (const auto& chi : chars0)
        if (!all_real(chi.values))
            throw NotKValued("real form is not rational-valued");
    auto ind = induce(a0);
    auto chars1 = split_characters(ind.algebra);
    std::vector<std::size_t> match;
    std::vector<bool> hit(chars0.size(), false);
    for (const auto& chi : chars1) {
        auto it = std::find_if(chars0.begin(), chars0.end(),
                               [&](const Character& c) { return c.values == chi.values; });
        if (it == chars0.end())
            throw NotKValued("character of the extension does not restrict to the real form");
        std::size_t idx = static_cast<std::size_t>(it - chars0.begin());
        hit[idx] = true;
        match.push_back(idx);
    }
    if (match.size() != chars0.size() || !std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
        throw NotKValued("base change did not give a bijection of spectra");
    return match;
}

AxiomReport check_banach_star_complex(const InvolutiveAlgebra& a,
                                      const std::vector<RingElement>& samples) {
    auto d = dev(a.algebra);
    if (!d.bijective) return {false, "double evaluation is not bijective"};
    for (std::size_t s = 0; s < samples.size(); ++s) {
        auto coords = d.apply(samples[s].coords());
        Rational norm_sq = 0;
        for (const auto& c : coords) norm_sq = std::max(norm_sq, c.norm_sq());
        auto star_elt = sc_elt(a.algebra, apply_star(a, samples[s].coords()));
        auto prod = ring_mul(samples[s], star_elt);
        auto pc = d.apply(prod.coords());
        Rational prod_norm = 0;
        for (const auto& c : pc) {
            if (!c.is_real() || c.re < 0)
                return {false, "a.a* is not coordinatewise nonnegative at sample " +
                                   std::to_string(s)};
            prod_norm = std::max(prod_norm, c.re);
        }
        if (prod_norm != norm_sq)
            return {false, "||a.a*|| != ||a||^2 at sample " + std::to_string(s)};
    }
    return {};
}

bool check_hom_star_compat(const RingHom& phi, const InvolutiveAlgebra& src,
                           const InvolutiveAlgebra& tgt) {
    const auto& m = std::get<Matrix<GQ>>(phi.action);
    // as conjugate-linear maps: phi . star_src = star_tgt . phi
    // iff M * S_src = S_tgt * conj(M)
    return m * src.star == tgt.star * conj_matrix(m);
}

}  // namespace spectra
