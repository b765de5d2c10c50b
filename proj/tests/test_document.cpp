#include "mgc/bridge.hpp"
#include "mgc/document.hpp"
#include "mgc/errors.hpp"

#include <doctest.h>

using namespace mgc;

TEST_CASE("round trips are byte-identical on canonical form") {
    std::vector<Document> docs = {
        make_document(k_chain(0)),
        make_document(direct_sum(k_graded(0), insert_at_weight(k_chain(2), -1))),
        make_document(l_eps(k_graded(0))),
        make_document(to_filtered(free_mixed(k_chain(1), 0))),
    };
    for (const Document& d : docs) {
        std::string text = serialize(d);
        CHECK(serialize(parse_document(text)) == text);
    }
}

TEST_CASE("parse validates the payload") {
    // d^2 != 0 must be rejected with the offending degree named
    std::string bad = R"({
      "kind": "chain", "base": "Q",
      "payload": {"dims": {"0": 1, "1": 1, "2": 1},
                  "d": {"1": [["1"]], "2": [["1"]]}}
    })";
    try {
        parse_document(bad);
        FAIL("expected InvariantViolation");
    } catch (const InvariantViolation& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_document("not json"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"chain","base":"Z","payload":{"dims":{}}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"widget","base":"Q","payload":{}})"), ParseError);
    CHECK_THROWS_AS(
        parse_document(R"({"kind":"chain","base":"Q","payload":{"dims":{"0":1},"d":{"1":[["x"]]}}})"),
        ParseError);
}

TEST_CASE("commuting-convention mixed documents are converted on ingest") {
    MixedComplex m = l_eps(k_graded(0));
    MixedComplex c = convert_convention(m, SignConvention::Anticommuting,
                                        SignConvention::Commuting);
    Json j;
    j["kind"] = "mixed";
    j["base"] = "Q";
    j["meta"] = Json{{"version", "0.1.0"}, {"sign-convention", "commuting"}};
    j["payload"] = mixed_to_json(c);
    Document d = parse_document(j.dump());
    CHECK(d.mixed == m);
}

TEST_CASE("rational strings survive the trip exactly") {
    Matrix m(1, 2);
    m.at(0, 0) = Rational(-7, 3);
    m.at(0, 1) = Rational(22);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}
