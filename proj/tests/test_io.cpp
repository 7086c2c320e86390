#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convkit/io.hpp"

using namespace convkit;

TEST_CASE("convergence space documents round-trip") {
    ConvSpace s(3, {PointSet(3, 0b001), PointSet(3, 0b011), PointSet(3, 0b110)});
    std::string doc = emit_space(s, {"a", "b", "c"});
    std::vector<std::string> labels;
    ConvSpace back = parse_space(doc, &labels);
    CHECK(back == s);
    CHECK(labels == std::vector<std::string>{"a", "b", "c"});
    // Default labels also round-trip.
    CHECK(parse_space(emit_space(s)) == s);
}

TEST_CASE("malformed space documents are diagnosed") {
    CHECK_THROWS_AS(parse_space("{"), ParseError);
    CHECK_THROWS_AS(parse_space("[]"), ParseError);
    CHECK_THROWS_AS(parse_space(R"({"points": ["a"], "V": {}})"), ParseError);
    // x must belong to V[x].
    CHECK_THROWS_AS(parse_space(R"({"points": ["a", "b"], "V": {"a": ["b"], "b": ["b"]}})"),
                    ParseError);
    // Unknown label inside a V entry.
    CHECK_THROWS_AS(parse_space(R"({"points": ["a"], "V": {"a": ["a", "z"]}})"), ParseError);
    // Duplicate point labels.
    CHECK_THROWS_AS(parse_space(R"({"points": ["a", "a"], "V": {"a": ["a"]}})"), ParseError);
    try {
        parse_space(R"({"points": ["a", "b"], "V": {"a": ["b"], "b": ["b"]}})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(!e.field.empty());
    }
}

TEST_CASE("net documents round-trip") {
    Net n(DirectedIndex::chain(3), {2, 0, 1}, 3);
    Net back = parse_net(emit_net(n));
    CHECK(back.index == n.index);
    CHECK(back.values == n.values);
    CHECK(back.carrier_size == n.carrier_size);

    CHECK_THROWS_AS(parse_net("{}"), ParseError);
    // A non-directed index relation is rejected.
    CHECK_THROWS_AS(
        parse_net(R"({"carrier_size": 2, "index_le": [[true, false], [false, true]],
                      "values": [0, 1]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_net(R"({"carrier_size": 1, "index_le": [[true]], "values": [3]})"), ParseError);
}

TEST_CASE("term documents round-trip with exact rationals") {
    TermPtr t = t_braid(
        2, {0, 1},
        {t_sum({t_geom(CarrierTag::QVec, {Rat(22, 7), Rat(-1, 3)}, Rat(2, 3)),
                t_harmonic(CarrierTag::QVec, {Rat(0), Rat(5)})}),
         t_shift(t_const(CarrierTag::QVec, {Rat(-4), Rat(1, 1000)}), 6)});
    TermPtr back = parse_term(emit_term(t));
    // Structural identity via re-serialization plus pointwise agreement.
    CHECK(emit_term(back) == emit_term(t));
    for (long k = 1; k <= 30; ++k) CHECK(eval_term(back, k) == eval_term(t, k));

    TermPtr uv = t_unit_vectors(Ambient::c0);
    CHECK(emit_term(parse_term(emit_term(uv))) == emit_term(uv));
    TermPtr tw = t_typewriter();
    CHECK(emit_term(parse_term(emit_term(tw))) == emit_term(tw));
    TermPtr lex = t_harmonic(CarrierTag::LexR2, {Rat(1), Rat(0)});
    CHECK(emit_term(parse_term(emit_term(lex))) == emit_term(lex));
}

TEST_CASE("malformed term documents are diagnosed") {
    CHECK_THROWS_AS(parse_term("null"), ParseError);
    CHECK_THROWS_AS(parse_term(R"({"kind": "Nope"})"), ParseError);
    CHECK_THROWS_AS(parse_term(R"({"kind": "Const", "carrier": "QVec", "v": ["1/0"]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_term(R"({"kind": "Const", "carrier": "QVec", "v": ["x"]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_term(R"({"kind": "Geom", "carrier": "QVec", "v": ["1"], "r": "3/2"})"),
        ParseError);
}

TEST_CASE("rational strings") {
    CHECK(rat_str(Rat(22, 7)) == "22/7");
    CHECK(rat_str(Rat(-3)) == "-3");
    CHECK(rat_str(Rat(0)) == "0");
    CHECK(parse_rat("22/7") == Rat(22, 7));
    CHECK(parse_rat("-5") == Rat(-5));
    CHECK(parse_rat("4/6") == Rat(2, 3));  // canonicalized on parse
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("a/b"));
    CHECK_THROWS(parse_rat(""));
    CHECK_THROWS(parse_rat("1.5"));
}
