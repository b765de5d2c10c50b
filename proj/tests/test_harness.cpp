#include "mgc/document.hpp"
#include "mgc/errors.hpp"
#include "mgc/fault.hpp"
#include "mgc/harness.hpp"

#include <doctest.h>

using namespace mgc;

namespace {

std::string report_fingerprint(const VerificationReport& r) {
    std::string s = r.suite + "|" + std::to_string(r.seed);
    for (const auto& p : r.properties)
        s += "|" + p.name + ":" + std::to_string(p.passed) + "/" + std::to_string(p.failed);
    s += "|" + r.failing_property + "|" + std::to_string(r.failing_trial) + "|" + r.counterexample;
    return s;
}

} // namespace

TEST_CASE("generators produce validating objects") {
    GenConfig cfg;
    std::mt19937_64 rng(1);
    for (int i = 0; i < 25; ++i) {
        gen_chain(rng, cfg).validate();
        gen_graded(rng, cfg).validate();
        CHECK_FALSE(validate_mixed(gen_mixed(rng, cfg)).has_value());
        FilteredComplex f = gen_filtered(rng, cfg, false);
        f.validate();
        CHECK(f.above == FilteredComplex::Tail::ZeroAbove);
        for (int p = f.lo; p < f.hi; ++p) {
            ChainMap t = f.transition(p);
            for (int n : t.src.degrees()) CHECK(is_injective(t.at(n)));
        }
        gen_filtered(rng, cfg, true).validate();
    }
}

TEST_CASE("generation is deterministic under the seed") {
    GenConfig cfg;
    std::mt19937_64 a(42), b(42);
    CHECK(gen_chain(a, cfg) == gen_chain(b, cfg));
    CHECK(gen_mixed(a, cfg) == gen_mixed(b, cfg));
    CHECK(serialize(make_document(gen_filtered(a, cfg, true))) ==
          serialize(make_document(gen_filtered(b, cfg, true))));
}

TEST_CASE("suite plumbing") {
    CHECK_THROWS_AS(run_suite("nonsense", GenConfig{}), std::invalid_argument);
    GenConfig empty;
    empty.trials = 0;
    VerificationReport r = run_suite("all", empty);
    CHECK(r.ok);
    for (const auto& p : r.properties) {
        CHECK(p.passed == 0);
        CHECK(p.failed == 0);
    }
}

TEST_CASE("reports are deterministic") {
    GenConfig cfg;
    cfg.trials = 3;
    cfg.seed = 11;
    VerificationReport a = run_suite("core", cfg);
    VerificationReport b = run_suite("core", cfg);
    CHECK(a.ok);
    CHECK(report_fingerprint(a) == report_fingerprint(b));
}

TEST_CASE("injected faults are caught by the matching suite") {
    GenConfig cfg;
    cfg.trials = 12;
    cfg.seed = 5;

    set_fault(Fault::TensorEpsSign);
    VerificationReport m = run_suite("mixed-laws", cfg);
    set_fault(Fault::None);
    CHECK_FALSE(m.ok);
    // the shrunk counterexample is itself a parseable document
    auto pos = m.counterexample.find('{');
    REQUIRE(pos != std::string::npos);
    CHECK_NOTHROW(parse_document(m.counterexample.substr(pos)));

    set_fault(Fault::DropConnecting);
    VerificationReport a = run_suite("adjunction", cfg);
    set_fault(Fault::None);
    CHECK_FALSE(a.ok);

    set_fault(Fault::TruncationBound);
    VerificationReport t = run_suite("tstructure", cfg);
    set_fault(Fault::None);
    CHECK_FALSE(t.ok);
}
