#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "spectra/duality.hpp"
#include "spectra/mspec.hpp"
#include "spectra/rings.hpp"

using namespace spectra;

namespace {

std::set<std::string> value_strings(const std::vector<Character>& chars) {
    std::set<std::string> out;
    for (const auto& c : chars) {
        std::string s;
        for (const auto& v : c.values) s += v.str() + ";";
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("maximal ideal enumeration") {
    auto spec12 = mspec(make_zmod(12));
    REQUIRE(spec12.size() == 2);
    std::set<std::uint64_t> primes{spec12[0].prime(), spec12[1].prime()};
    CHECK(primes == std::set<std::uint64_t>{2, 3});

    CHECK(mspec(make_zmod(1)).empty());

    auto b = make_bool_ring({"a", "b"});
    auto specb = mspec(b);
    REQUIRE(specb.size() == 2);
    CHECK(specb[0].is_point());
    CHECK(specb[0].describe(*b) == "point a");
}

TEST_CASE("character splitting") {
    auto idem = mk_quotient_by(Poly<GQ>({GQ(0), GQ(-1), GQ(1)}), FieldTag::Q);  // t^2 - t
    auto chars = split_characters(idem);
    REQUIRE(chars.size() == 2);
    CHECK(value_strings(chars) == std::set<std::string>{"1;0;", "1;1;"});
    for (const auto& c : chars) CHECK(char_valid(c));

    CHECK_THROWS_AS(split_characters(mk_quotient_by(Poly<GQ>({GQ(1), GQ(0), GQ(1)}), FieldTag::Q)),
                    NotKValued);

    // the same polynomial splits over Q(i)
    auto qi = mk_quotient_by(Poly<GQ>({GQ(1), GQ(0), GQ(1)}), FieldTag::Qi);
    CHECK(split_characters(qi).size() == 2);
}

TEST_CASE("splitter recovers a hidden three-dimensional scramble") {
    auto q3 = mk_function_ring({"x", "y", "z"}, FieldTag::Q);
    Matrix<GQ> p = Matrix<GQ>::identity(3);
    p(0, 1) = GQ(1);
    p(1, 2) = GQ(1);
    auto scr = scramble(q3, p);
    auto chars = split_characters(scr.algebra);
    REQUIRE(chars.size() == 3);
    std::set<std::string> expected;
    for (std::size_t r = 0; r < 3; ++r) {
        std::string s;
        for (std::size_t c = 0; c < 3; ++c) s += p(r, c).str() + ";";
        expected.insert(s);
    }
    CHECK(value_strings(chars) == expected);
    CHECK(dev(scr.algebra).bijective);
}

TEST_CASE("zero sets and their complements") {
    auto z12 = make_zmod(12);
    auto z = zer(zmod_elt(z12, 4));
    auto nz = nzer(zmod_elt(z12, 4));
    REQUIRE(z.members.size() == 1);
    REQUIRE(nz.members.size() == 1);
    CHECK(z.ambient[z.members[0]].prime() == 2);
    CHECK(nz.ambient[nz.members[0]].prime() == 3);

    CHECK(zer(zmod_elt(z12, 5)).members.empty());
    CHECK(zer(zmod_elt(z12, 0)).members.size() == 2);
}

TEST_CASE("units have empty zero sets") {
    for (std::uint64_t n : {2u, 6u, 30u, 97u}) {
        auto r = make_zmod(n);
        for (std::uint64_t a = 0; a < n; ++a) {
            bool unit = is_unit(zmod_elt(r, a)).invertible;
            bool empty_zer = zer(zmod_elt(r, a)).members.empty();
            CHECK(unit == empty_zer);
        }
    }
}

TEST_CASE("evaluation characters") {
    auto q2 = mk_function_ring({"x", "y"}, FieldTag::Q);
    auto spec = mspec(q2);
    REQUIRE(spec.size() == 2);
    auto chi = ev_hom(q2, spec[0]);
    CHECK(char_valid(chi));
    CHECK(chi.apply(sc_elt(q2, {GQ(3), GQ(5)})) * chi.apply(sc_elt(q2, {GQ(2), GQ(7)})) ==
          chi.apply(ring_mul(sc_elt(q2, {GQ(3), GQ(5)}), sc_elt(q2, {GQ(2), GQ(7)}))));

    // residue fields of Z/6 are not the base field of any SC machinery
    auto z6 = make_zmod(6);
    CHECK_THROWS_AS(ev_hom(z6, mspec(z6)[0]), NotKValued);

    auto q1 = mk_function_ring({"x"}, FieldTag::Q);
    auto chi1 = ev_hom(q1, mspec(q1)[0]);
    CHECK(chi1.values == std::vector<GQ>{GQ(1)});
}

TEST_CASE("double evaluation transform") {
    auto q2 = mk_function_ring({"x", "y"}, FieldTag::Q);
    auto d = dev(q2);
    CHECK(d.bijective);
    std::set<std::string> rows{d.matrix(0, 0).str() + d.matrix(0, 1).str(),
                              d.matrix(1, 0).str() + d.matrix(1, 1).str()};
    CHECK(rows == std::set<std::string>{"10", "01"});

    // non-reduced: Q[t]/(t^2) has one character and a non-bijective dev
    auto dual = mk_quotient_by(Poly<GQ>({GQ(0), GQ(0), GQ(1)}), FieldTag::Q);
    auto dd = dev(dual);
    CHECK(dd.characters.size() == 1);
    CHECK(dd.characters[0].values == std::vector<GQ>{GQ(1), GQ(0)});
    CHECK_FALSE(dd.bijective);
}

TEST_CASE("induced spectrum maps") {
    FinSpace x{{"x0", "x1"}}, y{{"y0", "y1", "y2"}};
    SpaceMap f{y, x, {0, 1, 0}};  // f : Y -> X
    auto phi = f_functor(f, FieldTag::Q);  // K^X -> K^Y
    auto sm = mspec_map(phi);
    auto rx = refl_alg(x, FieldTag::Q);
    auto ry = refl_alg(y, FieldTag::Q);
    for (std::size_t i = 0; i < y.size(); ++i)
        CHECK(sm[ry.point_to_ideal[i]] == rx.point_to_ideal[f.assignment[i]]);

    auto q2 = mk_function_ring({"x", "y"}, FieldTag::Q);
    auto idm = mspec_map(make_sc_hom(q2, q2, Matrix<GQ>::identity(2)));
    CHECK(idm == std::vector<std::size_t>{0, 1});

    auto q1 = mk_function_ring({"x"}, FieldTag::Q);
    Matrix<GQ> diag(2, 1);
    diag(0, 0) = diag(1, 0) = GQ(1);
    auto cm = mspec_map(make_sc_hom(q1, q2, diag));
    CHECK(cm == std::vector<std::size_t>{0, 0});

    auto zm = mspec_map(make_zmod_hom(make_zmod(12), make_zmod(4)));
    REQUIRE(zm.size() == 1);
    CHECK(mspec(make_zmod(12))[zm[0]].prime() == 2);
}

TEST_CASE("principal ideal maximality in Q[t]") {
    CHECK(principal_ideal_maximal(PolyQ(), true));
    CHECK_FALSE(principal_ideal_maximal(PolyQ(), false));
    CHECK_FALSE(principal_ideal_maximal(PolyQ({Rational(3)}), false));
    CHECK(principal_ideal_maximal(PolyQ({Rational(0), Rational(1)}), false));
    CHECK(principal_ideal_maximal(PolyQ({Rational(1), Rational(0), Rational(1)}), false));
    CHECK_FALSE(principal_ideal_maximal(PolyQ({Rational(0), Rational(-1), Rational(1)}), false));
}

TEST_CASE("preimage of a maximal ideal need not be maximal") {
    auto rep = demo_preimage_not_maximal();
    CHECK(rep.source_ring == "Q[t]");
    CHECK(rep.target_ring == "Q(t)");
    CHECK(rep.preimage == "(0)");
    CHECK_FALSE(rep.preimage_maximal);
    CHECK(rep.witness == "t");
}

TEST_CASE("common nonvanishing points") {
    PolyQ t({Rational(0), Rational(1)});
    PolyQ tm1({Rational(-1), Rational(1)});
    CHECK(demo_non_hausdorff(t, tm1) == Rational(2));
    CHECK(demo_non_hausdorff(PolyQ({Rational(1)}), PolyQ({Rational(1)})) == Rational(0));
    CHECK_THROWS_AS(demo_non_hausdorff(PolyQ(), t), ZeroPolynomial);
}
