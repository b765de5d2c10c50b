#include "mgc/graded.hpp"

#include "mgc/errors.hpp"

#include <set>
#include <string>

namespace mgc {

std::vector<int> GradedComplex::weights() const {
    std::vector<int> out;
    for (const auto& [p, c] : parts)
        if (!c.is_zero()) out.push_back(p);
    return out;
}

int GradedComplex::min_weight() const {
    auto ws = weights();
    return ws.empty() ? 0 : ws.front();
}

int GradedComplex::max_weight() const {
    auto ws = weights();
    return ws.empty() ? 0 : ws.back();
}

bool GradedComplex::is_zero() const { return weights().empty(); }

GradedComplex GradedComplex::normalized() const {
    GradedComplex out;
    for (const auto& [p, c] : parts)
        if (!c.is_zero()) out.parts[p] = c.normalized();
    return out;
}

bool GradedComplex::operator==(const GradedComplex& o) const {
    GradedComplex a = normalized(), b = o.normalized();
    if (a.weights() != b.weights()) return false;
    for (int p : a.weights())
        if (!(a.part(p) == b.part(p))) return false;
    return true;
}

void GradedComplex::validate() const {
    for (const auto& [p, c] : parts) {
        try {
            c.validate();
        } catch (const InvariantViolation& e) {
            throw InvariantViolation("weight " + std::to_string(p) + ": " + e.what());
        }
    }
}

ChainMap GradedMap::at_weight(int p) const {
    ChainMap m{src.part(p), tgt.part(p), {}};
    auto it = f.find(p);
    if (it != f.end()) m.f = it->second;
    return m;
}

void GradedMap::set(int p, int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0) return;
    f[p][n] = std::move(m);
}

void GradedMap::validate() const {
    std::set<int> ws;
    for (int p : src.weights()) ws.insert(p);
    for (int p : tgt.weights()) ws.insert(p);
    for (const auto& [p, comps] : f) ws.insert(p);
    for (int p : ws) {
        try {
            at_weight(p).validate();
        } catch (const InvariantViolation& e) {
            throw InvariantViolation("weight " + std::to_string(p) + ": " + e.what());
        }
    }
}

GradedMap graded_identity(const GradedComplex& c) {
    GradedMap m{c, c, {}};
    for (int p : c.weights()) m.f[p] = identity_map(c.part(p)).f;
    return m;
}

GradedMap graded_compose(const GradedMap& g, const GradedMap& f) {
    GradedMap out{f.src, g.tgt, {}};
    for (int p : f.src.weights()) {
        ChainMap c = compose(g.at_weight(p), f.at_weight(p));
        if (!c.f.empty()) out.f[p] = c.f;
    }
    return out;
}

bool graded_is_quasi_iso(const GradedMap& f) {
    std::set<int> ws;
    for (int p : f.src.weights()) ws.insert(p);
    for (int p : f.tgt.weights()) ws.insert(p);
    for (int p : ws)
        if (!is_quasi_iso(f.at_weight(p))) return false;
    return true;
}

GradedComplex insert_at_weight(const ChainComplex& c, int q) {
    GradedComplex out;
    out.set_part(q, c);
    return out;
}

GradedComplex weight_shift(const GradedComplex& m, int q) {
    GradedComplex out;
    for (const auto& [p, c] : m.parts) out.set_part(p + q, c);
    return out;
}

GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b) {
    GradedComplex out;
    std::set<int> ws;
    for (int p : a.weights()) ws.insert(p);
    for (int p : b.weights()) ws.insert(p);
    for (int p : ws) out.set_part(p, direct_sum(a.part(p), b.part(p)).total);
    return out;
}

BlockLayout tensor_weight_layout(const GradedComplex& a, const GradedComplex& b, int p, int n) {
    BlockLayout l;
    for (int i : a.weights()) {
        int sz = tensor_layout(a.part(i), b.part(p - i), n).total;
        if (sz == 0) continue;
        l.blocks.push_back({i, l.total, sz});
        l.total += sz;
    }
    return l;
}

BlockLayout hom_weight_layout(const GradedComplex& a, const GradedComplex& b, int p, int n) {
    BlockLayout l;
    for (int q : a.weights()) {
        int sz = hom_layout(a.part(q), b.part(q + p), n).total;
        if (sz == 0) continue;
        l.blocks.push_back({q, l.total, sz});
        l.total += sz;
    }
    return l;
}

GradedComplex tensor_graded(const GradedComplex& a, const GradedComplex& b) {
    GradedComplex out;
    if (a.is_zero() || b.is_zero()) return out;
    for (int p = a.min_weight() + b.min_weight(); p <= a.max_weight() + b.max_weight(); ++p) {
        ChainComplex part;
        for (int i : a.weights())
            part = direct_sum(part, tensor_chain(a.part(i), b.part(p - i))).total;
        out.set_part(p, part);
    }
    return out;
}

GradedComplex hom_graded(const GradedComplex& a, const GradedComplex& b) {
    GradedComplex out;
    if (a.is_zero() || b.is_zero()) return out;
    for (int p = b.min_weight() - a.max_weight(); p <= b.max_weight() - a.min_weight(); ++p) {
        ChainComplex part;
        for (int q : a.weights())
            part = direct_sum(part, hom_chain(a.part(q), b.part(q + p))).total;
        out.set_part(p, part);
    }
    return out;
}

GradedComplex k_graded(int q) { return insert_at_weight(k_chain(0), q); }

std::map<int, std::map<int, int>> graded_betti(const GradedComplex& m) {
    std::map<int, std::map<int, int>> out;
    for (int p : m.weights()) {
        auto b = homology(m.part(p)).betti_table();
        if (!b.empty()) out[p] = b;
    }
    return out;
}

} // namespace mgc
