#include "mgc/bridge.hpp"

#include "mgc/errors.hpp"
#include "mgc/fault.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mgc {

namespace {

// Totalization of the weight <= -p part of m, with summand offsets.
Totalization bridge_term(const MixedComplex& m, int p) {
    std::vector<int> ws;
    for (int w : m.weights())
        if (w <= -p) ws.push_back(w);
    return totalize(m, ws);
}

} // namespace

FilteredComplex to_filtered(const MixedComplex& m) {
    FilteredComplex out;
    auto ws = m.weights();
    if (ws.empty()) return out;
    out.lo = -ws.back();
    out.hi = -ws.front();
    out.above = FilteredComplex::Tail::ZeroAbove;
    std::map<int, Totalization> tot;
    for (int p = out.lo; p <= out.hi + 1; ++p) {
        tot[p] = bridge_term(m, p);
        if (p <= out.hi) out.terms[p] = tot[p].total;
    }
    for (int p = out.lo; p < out.hi; ++p) {
        const Totalization& up = tot.at(p + 1);
        const Totalization& dn = tot.at(p);
        for (int n : up.total.degrees()) {
            if (dn.total.dim(n) == 0) continue;
            Matrix t(dn.total.dim(n), up.total.dim(n));
            for (const auto& [key, off] : up.offset) {
                auto [w, deg] = key;
                if (deg != n) continue;
                int sz = m.part(w).dim(n - 2 * w);
                paste(t, Matrix::identity(sz), dn.offset.at(key), off);
            }
            if (!t.is_zero()) out.trans[p][n] = t;
        }
    }
    return out;
}

MixedComplex to_mixed(const FilteredComplex& n) {
    MixedComplex out;
    for (int q = n.lo; q <= n.hi; ++q) {
        ChainComplex g = gr(n, q);
        if (g.is_zero()) continue;
        out.underlying.set_part(-q, shift(g, 2 * q));
    }
    if (active_fault() == Fault::DropConnecting) {
        require_valid(out, "to_mixed");
        return out;
    }
    for (int q = n.lo; q < n.hi; ++q) {
        int p = -q; // eps_p : weight p -> weight p-1
        ChainMap c = connecting(n, q);
        for (int g : c.src.degrees()) {
            Matrix mat = c.at(g);
            if (mat.is_zero()) continue;
            out.set_eps(p, g + 2 * q, -mat);
        }
    }
    require_valid(out, "to_mixed");
    return out;
}

AdjunctionWitness counit_check(const MixedComplex& m) {
    AdjunctionWitness w;
    MixedComplex rt = to_mixed(to_filtered(m));
    MixedMap iota{m, rt, {}};
    for (int p : m.weights()) {
        int q = -p;
        Totalization tq = bridge_term(m, q);
        Totalization tq1 = bridge_term(m, q + 1);
        const ChainComplex src = m.part(p);
        const ChainComplex tgt = rt.part(p);
        for (int nn : src.degrees()) {
            int t = nn + 2 * p;
            if (tgt.dim(nn) == 0) continue;
            Matrix mat(tgt.dim(nn), src.dim(nn));
            paste(mat, Matrix::identity(src.dim(nn)), tq.offset.at({p, t}), 0);
            Matrix e = m.eps_at(p, nn);
            if (!e.is_zero()) {
                int base = tq.total.dim(t);
                paste(mat, -e, base + tq1.offset.at({p - 1, t - 1}), 0);
            }
            iota.set(p, nn, mat);
        }
    }
    iota.validate();
    std::set<int> ws;
    for (int p : m.weights()) ws.insert(p);
    for (int p : rt.weights()) ws.insert(p);
    w.verdict = true;
    for (int p : ws) {
        ChainMap cp = iota.at_weight(p);
        bool ok = is_quasi_iso(cp);
        w.comparison[p] = cp;
        w.weightwise[p] = ok;
        w.verdict = w.verdict && ok;
    }
    return w;
}

namespace {

// u_p : n.term(p) -> term p of to_filtered(to_mixed(n)), inclusion into the
// first component of the gr_p summand.
ChainMap unit_map(const FilteredComplex& n, const MixedComplex& mx,
                  const FilteredComplex& g, int p) {
    Totalization tp = bridge_term(mx, p);
    ChainMap u{n.term(p), g.term(p), {}};
    for (int t : u.src.degrees()) {
        if (u.tgt.dim(t) == 0) continue;
        auto it = tp.offset.find({-p, t});
        if (it == tp.offset.end()) continue;
        Matrix mat(u.tgt.dim(t), u.src.dim(t));
        paste(mat, Matrix::identity(u.src.dim(t)), it->second, 0);
        u.set(t, mat);
    }
    return u;
}

} // namespace

AdjunctionWitness unit_check(const FilteredComplex& n) {
    AdjunctionWitness w;
    MixedComplex mx = to_mixed(n);
    FilteredComplex g = to_filtered(mx);
    int lo = std::min(n.lo, g.lo), hi = std::max(n.hi, g.hi);
    w.verdict = true;
    for (int p = lo; p <= hi + 1; ++p) {
        ChainMap u = unit_map(n, mx, g, p);
        u.validate();
        bool ok = is_quasi_iso(u);
        w.comparison[p] = u;
        w.weightwise[p] = ok;
        w.verdict = w.verdict && ok;
    }
    // transition squares commute up to h(y) = y placed in the second component
    // of the gr_p summand.
    for (int p = lo; p <= hi; ++p) {
        ChainMap up = w.comparison.at(p);
        ChainMap up1 = w.comparison.at(p + 1);
        ChainMap lhs = compose(up, n.transition(p));
        ChainMap rhs = compose(g.transition(p), up1);
        Totalization tp = bridge_term(mx, p);
        Dg h;
        h.deg = 1;
        const ChainComplex src = n.term(p + 1);
        const ChainComplex tgt = g.term(p);
        for (int t : src.degrees()) {
            if (tgt.dim(t + 1) == 0) continue;
            auto it = tp.offset.find({-p, t + 1});
            if (it == tp.offset.end()) continue;
            Matrix mat(tgt.dim(t + 1), src.dim(t));
            paste(mat, Matrix::identity(src.dim(t)), it->second + n.term(p).dim(t + 1), 0);
            h.set(t, mat);
        }
        std::set<int> degs;
        for (int t : src.degrees()) degs.insert(t);
        for (int t : tgt.degrees()) degs.insert(t);
        for (int t : degs) {
            Matrix delta = lhs.at(t) + (-rhs.at(t));
            Matrix dh = tgt.d(t + 1) * h.at(t, tgt.dim(t + 1), src.dim(t));
            Matrix hd = h.at(t - 1, tgt.dim(t), src.dim(t - 1)) * src.d(t);
            if (!(delta == dh + hd))
                throw InvariantViolation("unit square homotopy fails at index " +
                                         std::to_string(p) + ", degree " + std::to_string(t));
        }
        w.homotopies[p] = std::move(h);
    }
    return w;
}

ChainComplex unit_fiber(const FilteredComplex& n, int p) {
    MixedComplex mx = to_mixed(n);
    FilteredComplex g = to_filtered(mx);
    return fiber(unit_map(n, mx, g, p));
}

MixedComplex postnikov_truncate(const MixedComplex& m, Dir dir, int n) {
    // Weight-wise truncation at level n - q, with eps restricted (>=) or
    // descended (<=); both are strict because d eps + eps d = 0 keeps eps
    // inside kernels and images of d at the matching boundary degrees.
    std::map<int, Truncation> tr;
    MixedComplex out;
    for (int q : m.weights()) {
        Truncation t = dir == Dir::Ge ? truncate_ge(m.part(q), n - q)
                                      : truncate_le(m.part(q), n - q);
        if (!t.complex.is_zero()) out.underlying.set_part(q, t.complex);
        tr[q] = std::move(t);
    }
    for (int q : m.weights()) {
        auto up = tr.find(q);
        auto dn = tr.find(q - 1);
        if (up == tr.end() || dn == tr.end()) continue;
        const Truncation& tq = up->second;
        const Truncation& tq1 = dn->second;
        for (int k : tq.complex.degrees()) {
            if (tq1.complex.dim(k + 1) == 0) continue;
            Matrix e = m.eps_at(q, k);
            if (e.is_zero()) continue;
            Matrix mat;
            if (dir == Dir::Ge) {
                // push along the inclusions, then rewrite in the kernel basis
                auto x = solve(tq1.map.at(k + 1), e * tq.map.at(k));
                if (!x)
                    throw InvariantViolation("eps does not restrict to the truncation at weight " +
                                             std::to_string(q));
                mat = *x;
            } else {
                // descend along the projections via a linear section
                auto s = solve(tq.map.at(k), Matrix::identity(tq.complex.dim(k)));
                if (!s)
                    throw InvariantViolation("truncation projection is not surjective at weight " +
                                             std::to_string(q));
                mat = tq1.map.at(k + 1) * e * (*s);
            }
            if (!mat.is_zero()) out.set_eps(q, k, mat);
        }
    }
    require_valid(out, "postnikov_truncate");
    return out;
}

ChainComplex postnikov_heart_to_chain(const MixedComplex& m) {
    for (int q : m.weights())
        for (auto [k, b] : homology(m.part(q)).betti_table())
            if (k != -q)
                throw NotInHeart("weight " + std::to_string(q) +
                                 " has homology in degree " + std::to_string(k));
    ChainComplex out;
    std::map<int, HomologyTable> h;
    for (int q : m.weights()) {
        h[q] = homology(m.part(q));
        out.set_dim(q, h[q].betti(-q));
    }
    for (int q : m.weights()) {
        if (out.dim(q) == 0 || out.dim(q - 1) == 0) continue;
        const auto& hs = h.at(q).at.at(-q);
        const auto& ht = h.at(q - 1).at.at(-q + 1);
        Matrix pushed = m.eps_at(q, -q) * hs.reps;
        auto sol = solve(hstack(ht.reps, ht.boundaries), pushed);
        if (!sol) throw InvariantViolation("heart differential failed to descend");
        Matrix d(ht.betti, hs.betti);
        for (int r = 0; r < ht.betti; ++r)
            for (int c = 0; c < hs.betti; ++c) d.at(r, c) = sol->at(r, c);
        out.set_d(q, d);
    }
    out.validate();
    return out;
}

MixedComplex chain_to_postnikov_heart(const ChainComplex& c) {
    MixedComplex out;
    for (int q : c.degrees()) {
        ChainComplex part;
        part.set_dim(-q, c.dim(q));
        out.underlying.set_part(q, part);
    }
    for (int q : c.degrees())
        if (c.dim(q - 1) > 0) out.set_eps(q, -q, c.d(q));
    require_valid(out, "chain_to_postnikov_heart");
    return out;
}

FilteredComplex chain_to_beilinson_heart(const ChainComplex& c) {
    return to_filtered(chain_to_postnikov_heart(c));
}

AdjunctionWitness monoidal_comparison(const FilteredComplex& a, const FilteredComplex& b) {
    AdjunctionWitness w;
    MixedComplex lhs = to_mixed(tensor_fil(a, b));
    MixedComplex rhs = tensor_mixed(to_mixed(a), to_mixed(b));
    auto bl = graded_betti(lhs.underlying);
    auto br = graded_betti(rhs.underlying);
    std::set<int> ws;
    for (const auto& [p, t] : bl) ws.insert(p);
    for (const auto& [p, t] : br) ws.insert(p);
    w.verdict = true;
    for (int p : ws) {
        bool ok = bl[p] == br[p];
        w.weightwise[p] = ok;
        w.verdict = w.verdict && ok;
    }
    return w;
}

bool tate_via_colimit_check(const MixedComplex& m) {
    auto lhs = homology(tate_realization(m)).betti_table();
    auto rhs = homology(colimit_neg_infty(to_filtered(m))).betti_table();
    return lhs == rhs;
}

} // namespace mgc
