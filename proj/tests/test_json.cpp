#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spectra/json_io.hpp"

using namespace spectra;

TEST_CASE("scalar serialization round trips bit-exactly") {
    Rational r(-7, 3);
    CHECK(rational_to_json(r) == "-7/3");
    CHECK(rational_from_json(rational_to_json(r)) == r);
    CHECK_THROWS_AS(rational_from_json(Json(3)), SchemaError);
    CHECK_THROWS_AS(rational_from_json(Json("seven")), SchemaError);

    GQ z(Rational(1, 2), Rational(-3, 4));
    auto j = scalar_to_json(z, FieldTag::Qi);
    CHECK(j["re"] == "1/2");
    CHECK(j["im"] == "-3/4");
    CHECK(scalar_from_json(j, FieldTag::Qi) == z);
    // bare real string accepted for Q(i)
    CHECK(scalar_from_json(Json("5"), FieldTag::Qi) == GQ(5));
    CHECK(scalar_to_json(GQ(Rational(2)), FieldTag::Q) == "2");
}

TEST_CASE("ring serialization") {
    auto z12 = make_zmod(12);
    auto jz = ring_to_json(*z12);
    CHECK(jz["kind"] == "zmod");
    CHECK(jz["n"] == 12);
    CHECK(*ring_from_json(jz) == *z12);

    auto b = make_bool_ring({"a", "b"});
    CHECK(*ring_from_json(ring_to_json(*b)) == *b);

    auto q2 = mk_function_ring({"p", "q"}, FieldTag::Qi);
    auto jq = ring_to_json(*q2);
    CHECK(jq["kind"] == "sc");
    CHECK(jq["field"] == "Qi");
    CHECK(jq["dim"] == 2);
    auto back = ring_from_json(jq);
    CHECK(*back == *q2);
    CHECK(ring_to_json(*back) == jq);  // byte-stable round trip

    CHECK_THROWS_AS(ring_from_json(Json{{"kind", "frobnicate"}}), SchemaError);
    CHECK_THROWS_AS(ring_from_json(Json{{"kind", "zmod"}}), SchemaError);
    // an invalid structure-constant table is rejected with a schema error
    Json badsc = jq;
    badsc["unit"] = Json::array({Json{{"re", "0"}, {"im", "0"}}, Json{{"re", "0"}, {"im", "0"}}});
    CHECK_THROWS_AS(ring_from_json(badsc), SchemaError);
}

TEST_CASE("involutive algebra serialization") {
    auto qi2 = mk_function_ring({"p", "q"}, FieldTag::Qi);
    auto inv = canonical_involution(qi2);
    auto j = involutive_to_json(inv);
    CHECK(j.contains("star"));
    auto back = involutive_from_json(j);
    CHECK(*back.algebra == *inv.algebra);
    CHECK(back.star == inv.star);

    Json nostar = ring_to_json(*qi2);
    CHECK_THROWS_AS(involutive_from_json(nostar), SchemaError);

    Json badstar = j;
    badstar["star"][0][0] = Json{{"re", "2"}, {"im", "0"}};
    CHECK_THROWS_AS(involutive_from_json(badstar), SchemaError);
}

TEST_CASE("profinite object serialization") {
    auto sys = cantor_system(2);
    auto js = system_to_json(sys);
    CHECK(js["levels"] == Json::array({1, 2, 4}));
    auto back = system_from_json(js);
    CHECK(back.level_sizes == sys.level_sizes);
    CHECK(back.transitions == sys.transitions);
    CHECK_THROWS_AS(system_from_json(Json{{"levels", {1, 3}}, {"transitions", {{0}}}}),
                    SchemaError);

    auto c = make_clopen(sys, 2, {2, 3});
    auto jc = clopen_to_json(c);
    CHECK(jc["level"] == 1);  // canonical form is stored
    CHECK(clopen_from_json(sys, jc) == c);
    CHECK_THROWS_AS(clopen_from_json(sys, Json{{"level", 9}, {"members", {0}}}), SchemaError);

    Covering u{{make_clopen(sys, 1, {0}), make_clopen(sys, 1, {1})}};
    auto ju = covering_to_json(u);
    auto uback = covering_from_json(sys, ju);
    REQUIRE(uback.parts.size() == 2);
    CHECK(uback.parts[0] == u.parts[0]);

    StepFn s{1, {Rational(1, 3), Rational(-2)}};
    auto jf = stepfn_to_json(s);
    CHECK(jf["values"][0] == "1/3");
    CHECK(stepfn_from_json(jf) == s);
}

TEST_CASE("represented function serialization") {
    auto sys = cantor_system(3);
    auto f = cantor_binary_fn(sys, 3);
    auto j = represented_to_json(f);
    CHECK(j["depth"] == 3);
    CHECK(j["range"] == Json::array({0.0, 1.0}));
    auto back = represented_from_json(sys, j);
    CHECK(back.values == f.values);
    CHECK(back.modulus.osc == f.modulus.osc);

    Json broken = j;
    broken["osc"][3] = 1e9;  // violates monotonicity
    CHECK_THROWS_AS(represented_from_json(sys, broken), SchemaError);
}
