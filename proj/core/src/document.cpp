#include "mgc/document.hpp"

#include "mgc/errors.hpp"

namespace mgc {

namespace {

constexpr const char* kVersion = "0.1.0";

int int_key(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer key, got '" + s + "'");
    }
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

} // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rational_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) {
            try {
                m.at(r, c) = rational_from_string(j[r][c].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            } catch (const Json::exception&) {
                throw ParseError("matrix entries must be rational strings");
            }
        }
    }
    return m;
}

Json chain_to_json(const ChainComplex& c) {
    Json out;
    Json dims = Json::object();
    for (int n : c.degrees()) dims[std::to_string(n)] = c.dim(n);
    out["dims"] = std::move(dims);
    Json d = Json::object();
    for (int n : c.degrees())
        if (c.dim(n - 1) > 0 && !c.d(n).is_zero()) d[std::to_string(n)] = matrix_to_json(c.d(n));
    out["d"] = std::move(d);
    return out;
}

ChainComplex chain_from_json(const Json& j) {
    ChainComplex c;
    for (auto& [k, v] : field(j, "dims").items()) c.set_dim(int_key(k), v.get<int>());
    if (j.contains("d"))
        for (auto& [k, v] : j["d"].items()) c.set_d(int_key(k), matrix_from_json(v));
    return c;
}

Json graded_to_json(const GradedComplex& g) {
    Json parts = Json::object();
    for (int p : g.weights()) parts[std::to_string(p)] = chain_to_json(g.part(p));
    Json out;
    out["parts"] = std::move(parts);
    return out;
}

GradedComplex graded_from_json(const Json& j) {
    GradedComplex g;
    for (auto& [k, v] : field(j, "parts").items()) g.set_part(int_key(k), chain_from_json(v));
    return g;
}

Json mixed_to_json(const MixedComplex& m) {
    Json out;
    out["underlying"] = graded_to_json(m.underlying);
    Json eps = Json::object();
    for (const auto& [p, comps] : m.eps) {
        Json per = Json::object();
        for (const auto& [n, mat] : comps)
            if (!mat.is_zero()) per[std::to_string(n)] = matrix_to_json(mat);
        if (!per.empty()) eps[std::to_string(p)] = std::move(per);
    }
    out["eps"] = std::move(eps);
    return out;
}

MixedComplex mixed_from_json(const Json& j) {
    MixedComplex m;
    m.underlying = graded_from_json(field(j, "underlying"));
    if (j.contains("eps"))
        for (auto& [pk, per] : j["eps"].items())
            for (auto& [nk, mat] : per.items())
                m.set_eps(int_key(pk), int_key(nk), matrix_from_json(mat));
    return m;
}

Json filtered_to_json(const FilteredComplex& f) {
    Json out;
    out["lo"] = f.lo;
    out["hi"] = f.hi;
    out["above"] = f.above == FilteredComplex::Tail::ZeroAbove ? "zero" : "constant";
    Json terms = Json::object();
    for (int p = f.lo; p <= f.hi; ++p) terms[std::to_string(p)] = chain_to_json(f.term(p));
    out["terms"] = std::move(terms);
    Json trans = Json::object();
    for (int p = f.lo; p < f.hi; ++p) {
        Json per = Json::object();
        ChainMap t = f.transition(p);
        for (int n : t.src.degrees())
            if (!t.at(n).is_zero()) per[std::to_string(n)] = matrix_to_json(t.at(n));
        if (!per.empty()) trans[std::to_string(p)] = std::move(per);
    }
    out["transitions"] = std::move(trans);
    return out;
}

FilteredComplex filtered_from_json(const Json& j) {
    FilteredComplex f;
    f.lo = field(j, "lo").get<int>();
    f.hi = field(j, "hi").get<int>();
    std::string above = field(j, "above").get<std::string>();
    if (above == "zero") f.above = FilteredComplex::Tail::ZeroAbove;
    else if (above == "constant") f.above = FilteredComplex::Tail::ConstantAbove;
    else throw ParseError("field 'above' must be \"zero\" or \"constant\"");
    for (auto& [k, v] : field(j, "terms").items()) f.terms[int_key(k)] = chain_from_json(v);
    if (j.contains("transitions"))
        for (auto& [pk, per] : j["transitions"].items())
            for (auto& [nk, mat] : per.items())
                f.trans[int_key(pk)][int_key(nk)] = matrix_from_json(mat);
    return f;
}

namespace {

Json meta_json(SignConvention conv) {
    Json meta;
    meta["version"] = kVersion;
    meta["sign-convention"] =
        conv == SignConvention::Anticommuting ? "anticommuting" : "commuting";
    return meta;
}

} // namespace

Document make_document(const ChainComplex& c) {
    Document d;
    d.kind = "chain";
    d.chain = c;
    return d;
}

Document make_document(const GradedComplex& g) {
    Document d;
    d.kind = "graded";
    d.graded = g;
    return d;
}

Document make_document(const MixedComplex& m) {
    Document d;
    d.kind = "mixed";
    d.mixed = m;
    return d;
}

Document make_document(const FilteredComplex& f) {
    Document d;
    d.kind = "filtered";
    d.filtered = f;
    return d;
}

Document make_report_document(const Json& payload) {
    Document d;
    d.kind = "report";
    d.report = payload;
    return d;
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    Document d;
    try {
        d.kind = field(j, "kind").get<std::string>();
        if (field(j, "base").get<std::string>() != "Q")
            throw ParseError("field 'base' must be \"Q\"");
        std::string conv = "anticommuting";
        if (j.contains("meta") && j["meta"].contains("sign-convention"))
            conv = j["meta"]["sign-convention"].get<std::string>();
        if (conv != "anticommuting" && conv != "commuting")
            throw ParseError("unknown sign-convention '" + conv + "'");
        const Json& payload = field(j, "payload");
        if (d.kind == "chain") {
            d.chain = chain_from_json(payload);
            d.chain.validate();
        } else if (d.kind == "graded") {
            d.graded = graded_from_json(payload);
            d.graded.validate();
        } else if (d.kind == "mixed") {
            d.mixed = mixed_from_json(payload);
            if (conv == "commuting")
                d.mixed = convert_convention(d.mixed, SignConvention::Commuting,
                                             SignConvention::Anticommuting);
            require_valid(d.mixed, "document");
        } else if (d.kind == "filtered") {
            d.filtered = filtered_from_json(payload);
            d.filtered.validate();
        } else if (d.kind == "report") {
            d.report = payload;
        } else {
            throw ParseError("unknown kind '" + d.kind + "'");
        }
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
    return d;
}

std::string serialize(const Document& doc) {
    Json j;
    j["kind"] = doc.kind;
    j["base"] = "Q";
    j["meta"] = meta_json(SignConvention::Anticommuting);
    if (doc.kind == "chain") j["payload"] = chain_to_json(doc.chain.normalized());
    else if (doc.kind == "graded") j["payload"] = graded_to_json(doc.graded.normalized());
    else if (doc.kind == "mixed") j["payload"] = mixed_to_json(doc.mixed.normalized());
    else if (doc.kind == "filtered") j["payload"] = filtered_to_json(doc.filtered);
    else j["payload"] = doc.report;
    return j.dump(2) + "\n";
}

} // namespace mgc
