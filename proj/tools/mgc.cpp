// mgc: command-line front end. Loads JSON documents, runs exact computations
// (homology, realizations, filtrations, truncations, tensors) and the
// randomized verification suites.
//
// Exit codes: 0 success, 1 check/verdict failure, 2 parse or validation error,
// 3 usage error.
#include "mgc/bridge.hpp"
#include "mgc/document.hpp"
#include "mgc/errors.hpp"
#include "mgc/fault.hpp"
#include "mgc/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mgc;

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

void expect_kind(const Document& d, const std::string& kind, const std::string& path) {
    if (d.kind != kind)
        throw ParseError("'" + path + "' holds a " + d.kind + " document, expected " + kind);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

std::string homology_lines(const ChainComplex& c, const std::string& prefix) {
    std::ostringstream os;
    auto t = homology(c).betti_table();
    if (t.empty()) os << prefix << "0\n";
    for (auto [n, b] : t) os << prefix << "H_" << n << " = " << b << "\n";
    return os.str();
}

int cmd_homology(const std::string& in, const std::string& out) {
    Document d = load(in);
    std::ostringstream os;
    if (d.kind == "chain") {
        os << homology_lines(d.chain, "");
    } else if (d.kind == "graded" || d.kind == "mixed") {
        const GradedComplex& g = d.kind == "graded" ? d.graded : d.mixed.underlying;
        for (int p : g.weights())
            os << homology_lines(g.part(p), "weight " + std::to_string(p) + ": ");
    } else if (d.kind == "filtered") {
        for (int p = d.filtered.lo; p <= d.filtered.hi; ++p)
            os << homology_lines(d.filtered.term(p), "index " + std::to_string(p) + ": ");
    } else {
        throw ParseError("homology expects an object document, got kind '" + d.kind + "'");
    }
    emit(os.str(), out);
    return 0;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["ok"] = r.ok;
    Json props = Json::array();
    for (const auto& p : r.properties) {
        Json e;
        e["name"] = p.name;
        e["passed"] = p.passed;
        e["failed"] = p.failed;
        props.push_back(std::move(e));
    }
    j["properties"] = std::move(props);
    if (!r.ok) {
        j["failing-property"] = r.failing_property;
        j["failing-trial"] = r.failing_trial;
        j["counterexample"] = r.counterexample;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational homological computations on mixed and filtered complexes"};
    app.require_subcommand(1);

    std::string in, in2, out;
    auto add_io = [&](CLI::App* c, bool two_inputs = false) {
        c->add_option("input", in, "input document (JSON)")->required();
        if (two_inputs) c->add_option("input2", in2, "second input document (JSON)")->required();
        c->add_option("-o,--output", out, "output path (default: stdout)");
    };

    auto* c_hom = app.add_subcommand("homology", "print the homology table of a document");
    add_io(c_hom);

    bool tate = false;
    auto* c_real = app.add_subcommand("realize", "realization of a mixed complex");
    add_io(c_real);
    c_real->add_flag("--tate", tate, "use the Tate (all-weights) realization");

    int pmin = -4, pmax = 4;
    auto* c_ncw = app.add_subcommand("ncw", "weight-indexed realizations of weight twists");
    add_io(c_ncw);
    c_ncw->add_option("--pmin", pmin, "lowest weight twist");
    c_ncw->add_option("--pmax", pmax, "highest weight twist");

    auto* c_fil = app.add_subcommand("fil", "filtered tower underlying a mixed complex");
    add_io(c_fil);

    auto* c_epsgr = app.add_subcommand("epsgr",
                                       "mixed structure on the associated graded of a tower");
    add_io(c_epsgr);

    int weight = 0;
    auto* c_gr = app.add_subcommand("gr", "associated graded piece of a filtered complex");
    add_io(c_gr);
    c_gr->add_option("--weight", weight, "weight of the graded piece")->required();

    auto* c_complete = app.add_subcommand("complete", "completion of a filtered complex");
    add_io(c_complete);

    std::string structure, dir_name;
    int level = 0;
    auto* c_trunc = app.add_subcommand("truncate", "truncation functors");
    add_io(c_trunc);
    c_trunc->add_option("--structure", structure, "beilinson | postnikov | naive | clever")
        ->required()
        ->check(CLI::IsMember({"beilinson", "postnikov", "naive", "clever"}));
    c_trunc->add_option("--dir", dir_name, "le | ge")
        ->required()
        ->check(CLI::IsMember({"le", "ge"}));
    c_trunc->add_option("--n", level, "truncation level")->required();

    std::string cat;
    auto* c_tensor = app.add_subcommand("tensor", "tensor product of two documents");
    add_io(c_tensor, true);
    c_tensor->add_option("--cat", cat, "chain | graded | mixed | filtered")
        ->required()
        ->check(CLI::IsMember({"chain", "graded", "mixed", "filtered"}));

    auto* c_dual = app.add_subcommand("dualcheck",
                                      "test dual(m) (x) n -> hom(m, n) for quasi-isomorphism");
    add_io(c_dual, true);

    std::string suite = "all", inject = "none";
    GenConfig cfg;
    auto* c_check = app.add_subcommand("check", "run a randomized verification suite");
    c_check->add_option("--suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember(suite_names()));
    c_check->add_option("--trials", cfg.trials, "trials per property");
    c_check->add_option("--seed", cfg.seed, "random seed");
    c_check->add_option("--max-dim", cfg.max_dim, "dimension cap for generated objects");
    c_check->add_option("--inject", inject,
                        "none | tensor-eps-sign | drop-connecting | truncation-bound")
        ->check(CLI::IsMember({"none", "tensor-eps-sign", "drop-connecting",
                               "truncation-bound"}));
    c_check->add_option("-o,--output", out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (c_hom->parsed()) return cmd_homology(in, out);
        if (c_real->parsed()) {
            Document d = load(in);
            expect_kind(d, "mixed", in);
            ChainComplex r = tate ? tate_realization(d.mixed) : realization(d.mixed);
            emit(serialize(make_document(r)), out);
        } else if (c_ncw->parsed()) {
            Document d = load(in);
            expect_kind(d, "mixed", in);
            emit(serialize(make_document(ncw(d.mixed, pmin, pmax))), out);
        } else if (c_fil->parsed()) {
            Document d = load(in);
            expect_kind(d, "mixed", in);
            emit(serialize(make_document(to_filtered(d.mixed))), out);
        } else if (c_epsgr->parsed()) {
            Document d = load(in);
            expect_kind(d, "filtered", in);
            emit(serialize(make_document(to_mixed(d.filtered))), out);
        } else if (c_gr->parsed()) {
            Document d = load(in);
            expect_kind(d, "filtered", in);
            emit(serialize(make_document(gr(d.filtered, weight))), out);
        } else if (c_complete->parsed()) {
            Document d = load(in);
            expect_kind(d, "filtered", in);
            emit(serialize(make_document(complete(d.filtered))), out);
        } else if (c_trunc->parsed()) {
            Document d = load(in);
            Dir dir = dir_name == "le" ? Dir::Le : Dir::Ge;
            if (structure == "beilinson") {
                expect_kind(d, "filtered", in);
                FilteredComplex t =
                    dir == Dir::Le ? beilinson_le(d.filtered, level) : beilinson_ge(d.filtered, level);
                emit(serialize(make_document(t)), out);
            } else {
                expect_kind(d, "mixed", in);
                MixedComplex t = structure == "postnikov"
                                     ? postnikov_truncate(d.mixed, dir, level)
                                 : structure == "naive" ? naive_truncate(d.mixed, dir, level)
                                                        : clever_truncate(d.mixed, dir, level);
                emit(serialize(make_document(t)), out);
            }
        } else if (c_tensor->parsed()) {
            Document a = load(in), b = load(in2);
            expect_kind(a, cat, in);
            expect_kind(b, cat, in2);
            if (cat == "chain") emit(serialize(make_document(tensor_chain(a.chain, b.chain))), out);
            else if (cat == "graded")
                emit(serialize(make_document(tensor_graded(a.graded, b.graded))), out);
            else if (cat == "mixed")
                emit(serialize(make_document(tensor_mixed(a.mixed, b.mixed))), out);
            else emit(serialize(make_document(tensor_fil(a.filtered, b.filtered))), out);
        } else if (c_dual->parsed()) {
            Document a = load(in), b = load(in2);
            expect_kind(a, "mixed", in);
            expect_kind(b, "mixed", in2);
            bool ok = dualizability_check(a.mixed, b.mixed);
            Json j;
            j["check"] = "dualizability";
            j["ok"] = ok;
            emit(serialize(make_report_document(j)), out);
            return ok ? 0 : 1;
        } else if (c_check->parsed()) {
            set_fault(fault_from_name(inject).value());
            VerificationReport r = run_suite(suite, cfg);
            set_fault(Fault::None);
            emit(serialize(make_report_document(report_json(r))), out);
            return r.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
