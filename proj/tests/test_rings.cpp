#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spectra/mspec.hpp"
#include "spectra/rings.hpp"

using namespace spectra;

TEST_CASE("arithmetic in the three ring presentations") {
    auto z12 = make_zmod(12);
    CHECK(ring_mul(zmod_elt(z12, 5), zmod_elt(z12, 7)).residue() == 11);
    CHECK(ring_add(zmod_elt(z12, 7), zmod_elt(z12, 8)).residue() == 3);
    CHECK(ring_neg(zmod_elt(z12, 0)).residue() == 0);
    CHECK(ring_neg(zmod_elt(z12, 5)).residue() == 7);

    auto b = make_bool_ring({"a", "b", "c"});
    auto s = bool_elt(b, {true, true, false});
    auto t = bool_elt(b, {false, true, true});
    CHECK(ring_mul(s, t).subset() == std::vector<bool>{false, true, false});
    CHECK(ring_add(s, t).subset() == std::vector<bool>{true, false, true});
    CHECK(ring_eq(ring_add(s, s), ring_zero(b)));
    CHECK(ring_eq(ring_mul(s, s), s));

    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Q);
    auto prod = ring_mul(sc_elt(q2, {GQ(1), GQ(2)}), sc_elt(q2, {GQ(3), GQ(4)}));
    CHECK(prod.coords() == std::vector<GQ>{GQ(3), GQ(8)});
    CHECK_THROWS_AS(ring_mul(sc_elt(q2, {GQ(1), GQ(2)}), zmod_elt(z12, 1)), OwnerMismatch);
}

TEST_CASE("function rings") {
    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Q);
    const auto& alg = q2->sc();
    CHECK(alg.dim == 2);
    CHECK(alg.unit == std::vector<GQ>{GQ(1), GQ(1)});
    CHECK(alg.table[0][0] == std::vector<GQ>{GQ(1), GQ(0)});
    CHECK(alg.table[0][1] == std::vector<GQ>{GQ(0), GQ(0)});

    auto empty = mk_function_ring({}, FieldTag::Q);
    CHECK(empty->is_zero_ring());
    CHECK(mspec(empty).empty());

    auto qi1 = mk_function_ring({"p"}, FieldTag::Qi);
    CHECK(qi1->sc().dim == 1);
    auto sq = ring_mul(sc_elt(qi1, {gq_i()}), sc_elt(qi1, {gq_i()}));
    CHECK(sq.coords() == std::vector<GQ>{GQ(-1)});
}

TEST_CASE("structure constant validation") {
    // non-associative: e1*e1 = e1 with a unit that cannot exist
    std::vector<std::vector<std::vector<GQ>>> bad(
        2, std::vector<std::vector<GQ>>(2, std::vector<GQ>(2, GQ(0))));
    bad[0][0] = {GQ(1), GQ(0)};
    bad[0][1] = {GQ(0), GQ(0)};
    bad[1][0] = {GQ(0), GQ(1)};  // breaks commutativity
    bad[1][1] = {GQ(0), GQ(1)};
    CHECK_THROWS_AS(make_sc_algebra(FieldTag::Q, bad, {GQ(1), GQ(1)}), InvalidRing);

    // imaginary structure constant declared over Q
    std::vector<std::vector<std::vector<GQ>>> imag(
        1, std::vector<std::vector<GQ>>(1, std::vector<GQ>{gq_i()}));
    CHECK_THROWS_AS(make_sc_algebra(FieldTag::Q, imag, {GQ(1)}), InvalidRing);

    CHECK_THROWS_AS(make_zmod(0), InvalidRing);
}

TEST_CASE("quotient algebras") {
    auto r = mk_quotient_by(Poly<GQ>({GQ(0), GQ(-1), GQ(1)}), FieldTag::Q);  // t^2 - t
    CHECK(r->sc().dim == 2);
    // t * t = t in the quotient
    auto t = sc_elt(r, {GQ(0), GQ(1)});
    CHECK(ring_eq(ring_mul(t, t), t));
    CHECK_THROWS_AS(mk_quotient_by(Poly<GQ>({GQ(5)}), FieldTag::Q), InvalidRing);
}

TEST_CASE("invertibility with witnesses") {
    auto z12 = make_zmod(12);
    auto u = is_unit(zmod_elt(z12, 5));
    REQUIRE(u.invertible);
    CHECK(u.inverse->residue() == 5);

    auto nu = is_unit(zmod_elt(z12, 4));
    CHECK_FALSE(nu.invertible);
    REQUIRE(nu.witness.has_value());
    CHECK(std::get<std::uint64_t>(nu.witness->v) == 2);

    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Q);
    auto e1 = is_unit(sc_elt(q2, {GQ(1), GQ(0)}));
    CHECK_FALSE(e1.invertible);
    REQUIRE(e1.witness.has_value());
    // the witness character is the second projection
    CHECK(std::get<std::vector<GQ>>(e1.witness->v) == std::vector<GQ>{GQ(0), GQ(1)});

    auto inv = is_unit(sc_elt(q2, {GQ(2), GQ(Rational(-1, 3))}));
    REQUIRE(inv.invertible);
    CHECK(inv.inverse->coords() == std::vector<GQ>{GQ(Rational(1, 2)), GQ(-3)});

    auto b = make_bool_ring({"a", "b"});
    auto bu = is_unit(bool_elt(b, {true, false}));
    CHECK_FALSE(bu.invertible);
    CHECK(std::get<int>(bu.witness->v) == 1);
    CHECK(is_unit(bool_elt(b, {true, true})).invertible);
}

TEST_CASE("scrambling an algebra through a basis change") {
    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Q);
    auto id_scr = scramble(q2, Matrix<GQ>::identity(2));
    CHECK(id_scr.algebra->sc().table == q2->sc().table);
    CHECK(id_scr.algebra->sc().unit == q2->sc().unit);

    Matrix<GQ> p(2, 2);
    p(0, 0) = p(0, 1) = p(1, 1) = GQ(1);
    auto scr = scramble(q2, p);
    CHECK_FALSE(scr.algebra->sc().table == q2->sc().table);
    auto chars = split_characters(scr.algebra);
    CHECK(chars.size() == 2);

    CHECK_THROWS_AS(scramble(q2, Matrix<GQ>(2, 2)), SingularMatrix);
}

TEST_CASE("homomorphism validation") {
    auto q1 = mk_function_ring({"x"}, FieldTag::Q);
    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Q);

    Matrix<GQ> diag(2, 1);
    diag(0, 0) = diag(1, 0) = GQ(1);
    auto phi = make_sc_hom(q1, q2, diag);
    CHECK(hom_validate(phi).valid);
    CHECK(apply_hom(phi, sc_elt(q1, {GQ(7)})).coords() == std::vector<GQ>{GQ(7), GQ(7)});

    RingHom bad{q1, q2, Matrix<GQ>(2, 1)};  // kills the unit
    auto rep = hom_validate(bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.violation.find("unit") != std::string::npos);
    CHECK_THROWS_AS(make_sc_hom(q1, q2, Matrix<GQ>(2, 1)), InvalidRing);

    Matrix<GQ> swap(2, 2);
    swap(0, 1) = swap(1, 0) = GQ(1);
    CHECK(hom_validate(make_sc_hom(q2, q2, swap)).valid);

    auto z12 = make_zmod(12);
    auto z4 = make_zmod(4);
    auto proj = make_zmod_hom(z12, z4);
    CHECK(apply_hom(proj, zmod_elt(z12, 7)).residue() == 3);
    CHECK_THROWS_AS(make_zmod_hom(z12, make_zmod(5)), InvalidRing);

    auto bx = make_bool_ring({"a", "b"});
    auto by = make_bool_ring({"u"});
    auto bh = make_bool_hom(bx, by, {1});  // pull back along u -> b
    CHECK(apply_hom(bh, bool_elt(bx, {false, true})).subset() == std::vector<bool>{true});
}

TEST_CASE("hom composition") {
    auto q1 = mk_function_ring({"x"}, FieldTag::Q);
    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Q);
    Matrix<GQ> diag(2, 1);
    diag(0, 0) = diag(1, 0) = GQ(1);
    Matrix<GQ> swap(2, 2);
    swap(0, 1) = swap(1, 0) = GQ(1);
    auto comp = compose_homs(make_sc_hom(q2, q2, swap), make_sc_hom(q1, q2, diag));
    CHECK(hom_validate(comp).valid);
    CHECK(apply_hom(comp, sc_elt(q1, {GQ(3)})).coords() == std::vector<GQ>{GQ(3), GQ(3)});
}
