#include "spectra/rings.hpp"

#include <algorithm>
#include <set>

namespace spectra {
namespace {

std::vector<GQ> sc_mul(const SCAlgebra& alg, const std::vector<GQ>& a, const std::vector<GQ>& b) {
    std::vector<GQ> r(alg.dim, GQ(0));
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (b[j].is_zero()) continue;
            GQ c = a[i] * b[j];
            const auto& tij = alg.table[i][j];
            for (std::size_t k = 0; k < alg.dim; ++k)
                if (!tij[k].is_zero()) r[k] += c * tij[k];
        }
    }
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % n);
}

void check_same_owner(const RingElement& a, const RingElement& b) {
    if (!(*a.owner == *b.owner)) throw OwnerMismatch();
}

}  // namespace

bool RingSpec::is_zero_ring() const {
    if (is_zmod()) return zmod().n == 1;
    if (is_bool()) return bool_ring().ground.empty();
    return sc().dim == 0;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.v.index() != b.v.index()) return false;
    if (a.is_zmod()) return a.zmod().n == b.zmod().n;
    if (a.is_bool()) return a.bool_ring().ground == b.bool_ring().ground;
    const auto& x = a.sc();
    const auto& y = b.sc();
    return x.field == y.field && x.dim == y.dim && x.table == y.table && x.unit == y.unit;
}

RingPtr make_zmod(std::uint64_t n) {
    if (n < 1) throw InvalidRing("ZMod modulus must be >= 1");
    return std::make_shared<RingSpec>(RingSpec{ZMod{n}});
}

RingPtr make_bool_ring(std::vector<std::string> ground) {
    std::set<std::string> seen(ground.begin(), ground.end());
    if (seen.size() != ground.size()) throw InvalidRing("boolean ring ground labels must be distinct");
    return std::make_shared<RingSpec>(RingSpec{BoolRing{std::move(ground)}});
}

RingPtr make_sc_algebra(FieldTag field, std::vector<std::vector<std::vector<GQ>>> table,
                        std::vector<GQ> unit, std::vector<std::string> labels,
                        std::size_t dim_cap) {
    std::size_t n = unit.size();
    if (n > dim_cap) throw InvalidRing("SC algebra dimension exceeds configured cap");
    if (table.size() != n) throw InvalidRing("SC table has wrong shape");
    for (const auto& row : table) {
        if (row.size() != n) throw InvalidRing("SC table has wrong shape");
        for (const auto& entry : row)
            if (entry.size() != n) throw InvalidRing("SC table has wrong shape");
    }
    if (field == FieldTag::Q) {
        auto real = [](const GQ& z) { return z.is_real(); };
        for (const auto& row : table)
            for (const auto& entry : row)
                if (!std::all_of(entry.begin(), entry.end(), real))
                    throw InvalidRing("Q algebra has non-real structure constants");
        if (!std::all_of(unit.begin(), unit.end(), [](const GQ& z) { return z.is_real(); }))
            throw InvalidRing("Q algebra has non-real unit");
    }

    SCAlgebra alg{field, n, std::move(table), std::move(unit), std::move(labels)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (alg.table[i][j] != alg.table[j][i])
                throw InvalidRing("SC table is not commutative");

    auto basis = [&](std::size_t i) {
        std::vector<GQ> e(n, GQ(0));
        e[i] = GQ(1);
        return e;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (sc_mul(alg, alg.unit, basis(i)) != basis(i))
            throw InvalidRing("SC unit law fails on a basis vector");
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = sc_mul(alg, alg.table[i][j], basis(k));
                auto rhs = sc_mul(alg, basis(i), alg.table[j][k]);
                if (lhs != rhs) throw InvalidRing("SC table is not associative");
            }
    }
    return std::make_shared<RingSpec>(RingSpec{std::move(alg)});
}

RingPtr mk_function_ring(const std::vector<std::string>& points, FieldTag field) {
    std::size_t n = points.size();
    std::vector<std::vector<std::vector<GQ>>> table(
        n, std::vector<std::vector<GQ>>(n, std::vector<GQ>(n, GQ(0))));
    for (std::size_t i = 0; i < n; ++i) table[i][i][i] = GQ(1);
    std::vector<GQ> unit(n, GQ(1));
    return make_sc_algebra(field, std::move(table), std::move(unit), points,
                           std::max<std::size_t>(n, kDefaultDimCap));
}

RingPtr mk_quotient_by(const Poly<GQ>& f, FieldTag field) {
    if (f.degree() < 1) throw InvalidRing("quotient modulus must have degree >= 1");
    std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<std::vector<std::vector<GQ>>> table(
        n, std::vector<std::vector<GQ>>(n, std::vector<GQ>(n, GQ(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto rem = poly_divmod(Poly<GQ>::monomial(i + j), f).second;
            for (std::size_t k = 0; k < n; ++k) table[i][j][k] = rem.coeff(k);
        }
    std::vector<GQ> unit(n, GQ(0));
    unit[0] = GQ(1);
    return make_sc_algebra(field, std::move(table), std::move(unit), {},
                           std::max<std::size_t>(n, kDefaultDimCap));
}

RingElement zmod_elt(const RingPtr& r, std::uint64_t value) {
    return {r, value % r->zmod().n};
}
RingElement bool_elt(const RingPtr& r, std::vector<bool> subset) {
    if (subset.size() != r->bool_ring().ground.size())
        throw std::invalid_argument("subset size mismatch");
    return {r, std::move(subset)};
}
RingElement sc_elt(const RingPtr& r, std::vector<GQ> coords) {
    if (coords.size() != r->sc().dim) throw std::invalid_argument("coordinate size mismatch");
    return {r, std::move(coords)};
}

RingElement ring_zero(const RingPtr& r) {
    if (r->is_zmod()) return zmod_elt(r, 0);
    if (r->is_bool()) return {r, std::vector<bool>(r->bool_ring().ground.size(), false)};
    return {r, std::vector<GQ>(r->sc().dim, GQ(0))};
}

RingElement ring_one(const RingPtr& r) {
    if (r->is_zmod()) return zmod_elt(r, 1);
    if (r->is_bool()) return {r, std::vector<bool>(r->bool_ring().ground.size(), true)};
    return {r, r->sc().unit};
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_same_owner(a, b);
    const RingPtr& r = a.owner;
    if (r->is_zmod()) return zmod_elt(r, a.residue() + b.residue());
    if (r->is_bool()) {
        auto s = a.subset();
        const auto& t = b.subset();
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = s[i] != t[i];  // symmetric difference
        return {r, std::move(s)};
    }
    auto c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return {r, std::move(c)};
}

RingElement ring_neg(const RingElement& a) {
    const RingPtr& r = a.owner;
    if (r->is_zmod()) return zmod_elt(r, r->zmod().n - a.residue());
    if (r->is_bool()) return a;  // characteristic 2
    auto c = a.coords();
    for (auto& x : c) x = -x;
    return {r, std::move(c)};
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    return ring_add(a, ring_neg(b));
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_same_owner(a, b);
    const RingPtr& r = a.owner;
    if (r->is_zmod()) return {r, mulmod(a.residue(), b.residue(), r->zmod().n)};
    if (r->is_bool()) {
        auto s = a.subset();
        const auto& t = b.subset();
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = s[i] && t[i];  // intersection
        return {r, std::move(s)};
    }
    return {r, sc_mul(r->sc(), a.coords(), b.coords())};
}

bool ring_eq(const RingElement& a, const RingElement& b) {
    check_same_owner(a, b);
    return a.data == b.data;
}

Matrix<GQ> mult_matrix(const SCAlgebra& alg, const std::vector<GQ>& coords) {
    Matrix<GQ> m(alg.dim, alg.dim);
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t k = 0; k < alg.dim; ++k)
                m(k, j) += coords[i] * alg.table[i][j][k];
    return m;
}

ScrambleResult scramble(const RingPtr& a, const Matrix<GQ>& p) {
    const SCAlgebra& alg = a->sc();
    if (!p.square() || p.rows() != alg.dim) throw std::invalid_argument("scramble matrix shape");
    auto pinv_opt = try_inverse(p);
    if (!pinv_opt) throw SingularMatrix();
    const Matrix<GQ>& pinv = *pinv_opt;

    std::vector<std::vector<std::vector<GQ>>> table(
        alg.dim, std::vector<std::vector<GQ>>(alg.dim, std::vector<GQ>(alg.dim, GQ(0))));
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            auto prod = pinv.apply(sc_mul(alg, p.column(i), p.column(j)));
            table[i][j] = prod;
            table[j][i] = std::move(prod);
        }
    auto unit = pinv.apply(alg.unit);
    ScrambleResult res;
    res.algebra = make_sc_algebra(alg.field, std::move(table), std::move(unit), {},
                                  std::max<std::size_t>(alg.dim, kDefaultDimCap));
    res.basis_change = p;
    res.basis_change_inv = pinv;
    return res;
}

HomReport hom_validate(const RingHom& phi) {
    if (phi.source->is_sc() && phi.target->is_sc()) {
        const auto& s = phi.source->sc();
        const auto& t = phi.target->sc();
        const auto& m = std::get<Matrix<GQ>>(phi.action);
        if (m.rows() != t.dim || m.cols() != s.dim) return {false, "matrix shape mismatch"};
        if (s.field != t.field && !(s.field == FieldTag::Q)) return {false, "field mismatch"};
        if (m.apply(s.unit) != t.unit) return {false, "unit not preserved"};
        for (std::size_t i = 0; i < s.dim; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                auto lhs = m.apply(s.table[i][j]);
                auto rhs = sc_mul(t, m.column(i), m.column(j));
                if (lhs != rhs)
                    return {false, "product not preserved on basis pair (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")"};
            }
        return {};
    }
    if (phi.source->is_zmod() && phi.target->is_zmod()) {
        std::uint64_t n = phi.source->zmod().n, m = phi.target->zmod().n;
        if (n % m != 0) return {false, "residue projection requires target modulus dividing source"};
        return {};
    }
    if (phi.source->is_bool() && phi.target->is_bool()) {
        const auto& g = std::get<std::vector<int>>(phi.action);
        std::size_t nx = phi.source->bool_ring().ground.size();
        if (g.size() != phi.target->bool_ring().ground.size())
            return {false, "ground map has wrong arity"};
        for (int x : g)
            if (x < 0 || static_cast<std::size_t>(x) >= nx) return {false, "ground map out of range"};
        return {};
    }
    return {false, "unsupported ring-variant combination"};
}

RingHom make_sc_hom(const RingPtr& source, const RingPtr& target, Matrix<GQ> action) {
    RingHom h{source, target, std::move(action)};
    auto rep = hom_validate(h);
    if (!rep.valid) throw InvalidRing("invalid homomorphism: " + rep.violation);
    return h;
}

RingHom make_zmod_hom(const RingPtr& source, const RingPtr& target) {
    RingHom h{source, target, std::monostate{}};
    auto rep = hom_validate(h);
    if (!rep.valid) throw InvalidRing("invalid homomorphism: " + rep.violation);
    return h;
}

RingHom make_bool_hom(const RingPtr& source, const RingPtr& target, std::vector<int> ground_map) {
    RingHom h{source, target, std::move(ground_map)};
    auto rep = hom_validate(h);
    if (!rep.valid) throw InvalidRing("invalid homomorphism: " + rep.violation);
    return h;
}

RingElement apply_hom(const RingHom& phi, const RingElement& a) {
    if (!(*a.owner == *phi.source)) throw OwnerMismatch();
    if (phi.source->is_sc()) return {phi.target, std::get<Matrix<GQ>>(phi.action).apply(a.coords())};
    if (phi.source->is_zmod()) return zmod_elt(phi.target, a.residue());
    const auto& g = std::get<std::vector<int>>(phi.action);
    std::vector<bool> img(g.size());
    for (std::size_t y = 0; y < g.size(); ++y) img[y] = a.subset()[g[y]];
    return {phi.target, std::move(img)};
}

RingHom compose_homs(const RingHom& psi, const RingHom& phi) {
    if (!(*phi.target == *psi.source)) throw OwnerMismatch();
    if (phi.source->is_sc())
        return {phi.source, psi.target,
                std::get<Matrix<GQ>>(psi.action) * std::get<Matrix<GQ>>(phi.action)};
    if (phi.source->is_zmod()) return {phi.source, psi.target, std::monostate{}};
    const auto& g1 = std::get<std::vector<int>>(phi.action);  // target(phi) ground -> source(phi)
    const auto& g2 = std::get<std::vector<int>>(psi.action);  // target(psi) ground -> source(psi)
    std::vector<int> g(g2.size());
    for (std::size_t y = 0; y < g2.size(); ++y) g[y] = g1[g2[y]];
    return {phi.source, psi.target, std::move(g)};
}

}  // namespace spectra
