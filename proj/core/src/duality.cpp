#include "spectra/duality.hpp"

#include <algorithm>

namespace spectra {
namespace {

bool is_diagonal_function_ring(const SCAlgebra& alg) {
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (alg.unit[i] != GQ(1)) return false;
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                GQ expect = (i == j && j == k) ? GQ(1) : GQ(0);
                if (alg.table[i][j][k] != expect) return false;
            }
    }
    return true;
}

std::vector<GQ> indicator_vector(std::size_t n, std::size_t at) {
    std::vector<GQ> v(n, GQ(0));
    v[at] = GQ(1);
    return v;
}

}  // namespace

SpaceMap identity_map(const FinSpace& x) {
    std::vector<int> a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) a[i] = static_cast<int>(i);
    return {x, x, std::move(a)};
}

SpaceMap compose_maps(const SpaceMap& g, const SpaceMap& f) {
    if (!(f.target == g.source)) throw std::invalid_argument("maps are not composable");
    std::vector<int> a(f.assignment.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.assignment[f.assignment[i]];
    return {f.source, g.target, std::move(a)};
}

RingHom f_functor(const SpaceMap& f, FieldTag field) {
    RingPtr source_ring = mk_function_ring(f.target.points, field);  // K^target
    RingPtr target_ring = mk_function_ring(f.source.points, field);  // K^source
    Matrix<GQ> m(f.source.size(), f.target.size());
    for (std::size_t s = 0; s < f.source.size(); ++s) m(s, f.assignment[s]) = GQ(1);
    return make_sc_hom(source_ring, target_ring, std::move(m));
}

ReflResult refl_alg(const FinSpace& x, FieldTag field) {
    ReflResult res;
    res.ring = mk_function_ring(x.points, field);
    res.spectrum = mspec(res.ring);
    std::vector<bool> hit(res.spectrum.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto proj = indicator_vector(x.size(), i);
        auto it = std::find_if(res.spectrum.begin(), res.spectrum.end(),
                               [&](const MaxIdealRep& m) {
                                   return m.character().values == proj;
                               });
        if (it == res.spectrum.end())
            throw std::logic_error("point evaluation missing from the spectrum");
        std::size_t idx = static_cast<std::size_t>(it - res.spectrum.begin());
        res.point_to_ideal.push_back(idx);
        hit[idx] = true;
    }
    res.bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return res;
}

SpaceMap hom_to_map(const RingHom& phi) {
    auto rep = hom_validate(phi);
    if (!rep.valid) throw InvalidRing("hom_to_map requires a valid homomorphism");
    const SCAlgebra& s = phi.source->sc();  // K^X
    const SCAlgebra& t = phi.target->sc();  // K^Y
    const auto& m = std::get<Matrix<GQ>>(phi.action);
    std::vector<int> assignment(t.dim);
    for (std::size_t y = 0; y < t.dim; ++y) {
        // row y of the matrix is chi := pi_y . phi, a character of K^X;
        // it must be a point evaluation.
        int found = -1;
        for (std::size_t x = 0; x < s.dim; ++x) {
            bool match = true;
            for (std::size_t j = 0; j < s.dim; ++j)
                if (m(y, j) != (j == x ? GQ(1) : GQ(0))) {
                    match = false;
                    break;
                }
            if (match) {
                found = static_cast<int>(x);
                break;
            }
        }
        if (found < 0) throw NotInduced();
        assignment[y] = found;
    }
    return {FinSpace{t.labels}, FinSpace{s.labels}, std::move(assignment)};
}

bool check_naturality(const SpaceMap& f, FieldTag field) {
    auto phi = f_functor(f, field);
    auto rs = refl_alg(f.source, field);
    auto rt = refl_alg(f.target, field);
    // mspec_map(phi) : MSpec(K^source) -> MSpec(K^target); note phi goes
    // K^target -> K^source, so source/target swap under MSpec.
    auto spec_map = mspec_map(phi);
    for (std::size_t x = 0; x < f.source.size(); ++x) {
        std::size_t via_alg = spec_map[rs.point_to_ideal[x]];
        std::size_t via_top = rt.point_to_ideal[f.assignment[x]];
        if (via_alg != via_top) return false;
    }
    return true;
}

SccCertificate scc_finite(const FinSpace& x, FieldTag field, std::size_t target_cap) {
    SccCertificate cert;
    cert.target_cap = target_cap;
    auto refl = refl_alg(x, field);
    for (std::size_t i = 0; i < refl.spectrum.size(); ++i)
        cert.bar_x.points.push_back("m" + std::to_string(i));
    cert.c = refl.point_to_ideal;
    cert.c_bijective = refl.bijective && refl.spectrum.size() >= x.size();

    std::size_t n = x.size();
    std::size_t nbar = cert.bar_x.size();
    for (std::size_t m = (n == 0 ? 0 : 1); m <= target_cap; ++m) {
        ++cert.targets_checked;
        // every f : X -> [m]
        std::vector<int> f(n, 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= m;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c2 = code;
            for (std::size_t i = 0; i < n; ++i) {
                f[i] = static_cast<int>(c2 % m);
                c2 /= m;
            }
            // count extensions g : barX -> [m] with g . c = f
            std::size_t gtotal = 1;
            for (std::size_t i = 0; i < nbar; ++i) gtotal *= m;
            std::size_t factorizations = 0;
            std::vector<int> g(nbar, 0);
            for (std::size_t gcode = 0; gcode < gtotal; ++gcode) {
                std::size_t c3 = gcode;
                for (std::size_t i = 0; i < nbar; ++i) {
                    g[i] = static_cast<int>(c3 % m);
                    c3 /= m;
                }
                bool extends = true;
                for (std::size_t i = 0; i < n; ++i)
                    if (g[cert.c[i]] != f[i]) {
                        extends = false;
                        break;
                    }
                if (extends) ++factorizations;
            }
            ++cert.maps_checked;
            if (factorizations != 1) cert.factorizations_unique = false;
        }
    }
    cert.note =
        "universal property verified by exhaustive enumeration of targets up to the stated cap";
    return cert;
}

SupNorm sup_norm_of_coords(const std::vector<GQ>& coords, FieldTag field) {
    SupNorm n;
    n.sq = 0;
    for (const auto& c : coords) n.sq = std::max(n.sq, c.norm_sq());
    if (field == FieldTag::Q) {
        n.value = 0;
        for (const auto& c : coords) n.value = std::max(n.value, rat_abs(c.re));
    } else {
        n.squared_only = true;
    }
    return n;
}

SupNorm sup_norm(const RingElement& a) {
    const SCAlgebra& alg = a.owner->sc();
    if (is_diagonal_function_ring(alg)) return sup_norm_of_coords(a.coords(), alg.field);
    auto d = dev(a.owner);
    return sup_norm_of_coords(d.apply(a.coords()), alg.field);
}

AxiomReport check_banach_star_real(const RingPtr& a, const std::vector<RingElement>& samples,
                                   const std::optional<Matrix<GQ>>& doctored_transform) {
    const SCAlgebra& alg = a->sc();
    Matrix<GQ> t;
    if (doctored_transform) {
        t = *doctored_transform;
    } else if (is_diagonal_function_ring(alg)) {
        t = Matrix<GQ>::identity(alg.dim);
    } else {
        t = dev(a).matrix;
    }
    auto norm_sq = [&](const RingElement& e) {
        return sup_norm_of_coords(t.apply(e.coords()), alg.field).sq;
    };

    if (alg.dim > 0 && norm_sq(ring_one(a)) != 1) return {false, "||1|| != 1"};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        auto sq = ring_mul(s, s);
        Rational ns = norm_sq(s);
        if (norm_sq(sq) != ns * ns)
            return {false, "||a^2|| != ||a||^2 at sample " + std::to_string(i)};
        auto one_plus = ring_add(ring_one(a), sq);
        auto unit = is_unit(one_plus);
        if (!unit.invertible || !ring_eq(ring_mul(one_plus, *unit.inverse), ring_one(a)))
            return {false, "1 + a^2 not invertible at sample " + std::to_string(i)};
        if (i + 1 < samples.size()) {
            const auto& b = samples[i + 1];
            if (norm_sq(ring_mul(s, b)) > ns * norm_sq(b))
                return {false, "submultiplicativity fails at samples " + std::to_string(i) +
                                   "," + std::to_string(i + 1)};
        }
    }
    return {};
}

ContractReport check_contractive(const RingHom& phi, const std::vector<RingElement>& samples) {
    ContractReport rep;
    const auto& m = std::get<Matrix<GQ>>(phi.action);
    bool zero_one = true;
    for (std::size_t i = 0; i < m.rows() && zero_one; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == GQ(0) || m(i, j) == GQ(1))) {
                zero_one = false;
                break;
            }
    rep.automatic = zero_one && is_diagonal_function_ring(phi.source->sc()) &&
                    is_diagonal_function_ring(phi.target->sc());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        auto img = apply_hom(phi, samples[i]);
        if (!(sup_norm(img) <= sup_norm(samples[i]))) {
            rep.ok = false;
            rep.violation = "||phi(a)|| > ||a|| at sample " + std::to_string(i);
            return rep;
        }
    }
    return rep;
}

}  // namespace spectra
