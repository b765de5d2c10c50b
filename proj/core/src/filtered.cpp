#include "mgc/filtered.hpp"

#include "mgc/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mgc {

namespace {

bool maps_equal(const ChainMap& a, const ChainMap& b) {
    std::set<int> degs;
    for (int n : a.src.degrees()) degs.insert(n);
    for (int n : b.src.degrees()) degs.insert(n);
    for (int n : degs)
        if (!(a.at(n) == b.at(n))) return false;
    return true;
}

std::map<int, Matrix> identity_comps(const ChainComplex& c) {
    std::map<int, Matrix> out;
    for (int n : c.degrees()) out[n] = Matrix::identity(c.dim(n));
    return out;
}

} // namespace

ChainComplex FilteredComplex::term(int p) const {
    if (p > hi) return above == Tail::ZeroAbove ? ChainComplex{} : term(hi);
    if (p < lo) p = lo;
    auto it = terms.find(p);
    return it == terms.end() ? ChainComplex{} : it->second;
}

ChainMap FilteredComplex::transition(int p) const {
    ChainMap m{term(p + 1), term(p), {}};
    if (p < lo || (p >= hi && above == Tail::ConstantAbove)) {
        m.f = identity_comps(m.src);
        return m;
    }
    auto it = trans.find(p);
    if (it != trans.end()) m.f = it->second;
    return m;
}

ChainMap FilteredComplex::transition_composite(int from, int to) const {
    if (from < to) throw std::invalid_argument("transition_composite: from < to");
    ChainMap m = identity_map(term(from));
    for (int p = from - 1; p >= to; --p) m = compose(transition(p), m);
    return m;
}

bool FilteredComplex::is_zero() const {
    for (int p = lo; p <= hi; ++p)
        if (!term(p).is_zero()) return false;
    return true;
}

void FilteredComplex::validate() const {
    if (lo > hi) throw InvariantViolation("filtered window is empty");
    for (const auto& [p, c] : terms) {
        if (p < lo || p > hi) throw InvariantViolation("term outside window");
        c.validate();
    }
    for (const auto& [p, comps] : trans) {
        if (p < lo || p >= hi) throw InvariantViolation("transition outside window");
        try {
            transition(p).validate();
        } catch (const InvariantViolation& e) {
            throw InvariantViolation("transition at " + std::to_string(p) + ": " + e.what());
        }
    }
}

bool FilteredComplex::operator==(const FilteredComplex& o) const {
    int a = std::min(lo, o.lo) - 1, b = std::max(hi, o.hi) + 1;
    for (int p = a; p <= b; ++p) {
        if (!(term(p) == o.term(p))) return false;
        if (!maps_equal(transition(p), o.transition(p))) return false;
    }
    if (above != o.above) {
        const FilteredComplex& cst = (above == Tail::ConstantAbove) ? *this : o;
        if (!cst.term(cst.hi).is_zero()) return false;
    }
    return true;
}

ChainMap FilteredMap::at(int p) const {
    ChainMap m{src.term(p), tgt.term(p), {}};
    if (f.empty()) return m;
    int klo = f.begin()->first, khi = f.rbegin()->first;
    if (p > khi) {
        if (src.above == FilteredComplex::Tail::ConstantAbove &&
            tgt.above == FilteredComplex::Tail::ConstantAbove)
            m.f = f.at(khi);
        return m;
    }
    m.f = f.at(std::max(p, klo));
    return m;
}

void FilteredMap::set(int p, int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0) return;
    f[p][n] = std::move(m);
}

void FilteredMap::validate() const {
    src.validate();
    tgt.validate();
    int a = std::min(src.lo, tgt.lo) - 1, b = std::max(src.hi, tgt.hi) + 1;
    for (int p = a; p <= b; ++p) {
        at(p).validate();
        if (!maps_equal(compose(at(p), src.transition(p)), compose(tgt.transition(p), at(p + 1))))
            throw InvariantViolation("filtered map fails to commute with the transition at " +
                                     std::to_string(p));
    }
}

FilteredMap filtered_identity(const FilteredComplex& m) {
    FilteredMap out{m, m, {}};
    for (int p = m.lo; p <= m.hi; ++p) out.f[p] = identity_comps(m.term(p));
    return out;
}

bool filtered_is_quasi_iso(const FilteredMap& f) {
    int a = std::min(f.src.lo, f.tgt.lo) - 1, b = std::max(f.src.hi, f.tgt.hi) + 1;
    for (int p = a; p <= b; ++p)
        if (!is_quasi_iso(f.at(p))) return false;
    return true;
}

ChainComplex limit_infty(const FilteredComplex& m) {
    return m.above == FilteredComplex::Tail::ZeroAbove ? ChainComplex{} : m.term(m.hi);
}

ChainComplex colimit_neg_infty(const FilteredComplex& m) { return m.term(m.lo); }

ChainComplex gr(const FilteredComplex& m, int p) { return cone(m.transition(p)); }

ChainMap connecting(const FilteredComplex& m, int p) {
    ChainComplex src = gr(m, p), tgt = shift(gr(m, p + 1), 1);
    ChainMap out{src, tgt, {}};
    const ChainComplex tp = m.term(p), tp1 = m.term(p + 1);
    for (int n : src.degrees()) {
        int sz = tp1.dim(n - 1);
        if (sz == 0 || tgt.dim(n) == 0) continue;
        Matrix mm(tgt.dim(n), src.dim(n));
        paste(mm, Matrix::identity(sz), 0, tp.dim(n));
        out.set(n, mm);
    }
    return out;
}

GradedComplex gr_all(const FilteredComplex& m) {
    GradedComplex out;
    for (int p = m.lo; p <= m.hi; ++p) out.set_part(p, gr(m, p));
    return out;
}

bool is_complete(const FilteredComplex& m) {
    return m.above == FilteredComplex::Tail::ZeroAbove || homology(m.term(m.hi)).is_acyclic();
}

FilteredComplex complete(const FilteredComplex& m) {
    if (m.above == FilteredComplex::Tail::ZeroAbove) return m;
    FilteredComplex out;
    out.lo = m.lo;
    out.hi = m.hi;
    out.above = FilteredComplex::Tail::ZeroAbove;
    const ChainComplex lim = m.term(m.hi);
    for (int p = m.lo; p <= m.hi; ++p) out.terms[p] = cone(m.transition_composite(m.hi, p));
    for (int p = m.lo; p < m.hi; ++p) {
        // cone of (identity on the limit, transition on the terms)
        const ChainComplex& cs = out.terms.at(p + 1);
        const ChainComplex& ct = out.terms.at(p);
        ChainMap f = m.transition(p);
        for (int n : cs.degrees()) {
            if (ct.dim(n) == 0) continue;
            Matrix mm(ct.dim(n), cs.dim(n));
            paste(mm, f.at(n), 0, 0);
            paste(mm, Matrix::identity(lim.dim(n - 1)), m.term(p).dim(n), m.term(p + 1).dim(n));
            if (!mm.is_zero()) out.trans[p][n] = mm;
        }
    }
    return out;
}

// --- Day convolution ----------------------------------------------------------

namespace {

// Direct sum over the diagonal i + j = p, a-index descending from imax to imin.
struct DiagLayout {
    std::vector<int> is; // descending a-indices
    std::map<std::pair<int, int>, int> offset; // (i, degree) -> offset
    ChainComplex total;
};

DiagLayout diag_layout(const FilteredComplex& a, const FilteredComplex& b, int p,
                       int imin, int imax) {
    DiagLayout l;
    std::map<int, int> dims;
    std::map<int, ChainComplex> pieces;
    for (int i = imax; i >= imin; --i) {
        l.is.push_back(i);
        pieces[i] = tensor_chain(a.term(i), b.term(p - i));
    }
    std::set<int> degs;
    for (const auto& [i, c] : pieces)
        for (int n : c.degrees()) degs.insert(n);
    for (int n : degs) {
        int total = 0;
        for (int i : l.is) {
            l.offset[{i, n}] = total;
            total += pieces[i].dim(n);
        }
        l.total.set_dim(n, total);
    }
    for (int n : degs) {
        if (l.total.dim(n - 1) == 0) continue;
        Matrix d(l.total.dim(n - 1), l.total.dim(n));
        for (int i : l.is)
            if (pieces[i].dim(n) > 0 && pieces[i].dim(n - 1) > 0)
                paste(d, pieces[i].d(n), l.offset[{i, n - 1}], l.offset[{i, n}]);
        l.total.set_d(n, d);
    }
    return l;
}

struct Quotient {
    ChainComplex complex;
    std::map<int, Matrix> incl; // complement representatives: complex_n -> V_n
    std::map<int, Matrix> proj; // projection V_n -> complex_n
};

// V / im(s) where s is a chain map into V; complement spanned greedily by
// standard basis vectors in their natural order.
Quotient cokernel(const ChainComplex& v, const std::map<int, Matrix>& s_comps) {
    Quotient q;
    for (int n : v.degrees()) {
        int vn = v.dim(n);
        auto it = s_comps.find(n);
        Matrix img =
            it == s_comps.end() ? Matrix(vn, 0) : reduce(it->second).image;
        Matrix w = img;
        std::vector<int> comp_cols;
        for (int j = 0; j < vn && w.cols < vn; ++j) {
            Matrix ej(vn, 1);
            ej.at(j, 0) = 1;
            Matrix cand = hstack(w, ej);
            if (rank(cand) > w.cols) {
                comp_cols.push_back(j);
                w = cand;
            }
        }
        Matrix comp(vn, static_cast<int>(comp_cols.size()));
        for (size_t j = 0; j < comp_cols.size(); ++j) comp.at(comp_cols[j], static_cast<int>(j)) = 1;
        Matrix basis = hstack(img, comp);
        auto inv = solve(basis, Matrix::identity(vn));
        if (!inv) throw InvariantViolation("cokernel basis inversion failed");
        Matrix proj(comp.cols, vn);
        for (int i = 0; i < comp.cols; ++i)
            for (int j = 0; j < vn; ++j) proj.at(i, j) = inv->at(img.cols + i, j);
        q.complex.set_dim(n, comp.cols);
        q.incl[n] = comp;
        q.proj[n] = proj;
    }
    for (int n : q.complex.degrees())
        if (q.complex.dim(n - 1) > 0)
            q.complex.set_d(n, q.proj.at(n - 1) * (v.d(n) * q.incl.at(n)));
    return q;
}

} // namespace

FilteredComplex tensor_fil(const FilteredComplex& a, const FilteredComplex& b) {
    for (const FilteredComplex* t : {&a, &b}) {
        if (t->above != FilteredComplex::Tail::ZeroAbove)
            throw UnsupportedInput("tensor_fil requires zero tails");
        for (int p = t->lo; p < t->hi; ++p) {
            ChainMap f = t->transition(p);
            for (int n : f.src.degrees())
                if (!is_injective(f.at(n)))
                    throw UnsupportedInput("tensor_fil requires degree-wise injective transitions");
        }
    }
    FilteredComplex out;
    out.lo = a.lo + b.lo;
    out.hi = a.hi + b.hi;
    out.above = FilteredComplex::Tail::ZeroAbove;
    if (a.is_zero() || b.is_zero()) {
        out.lo = 0;
        out.hi = 0;
        return out;
    }

    std::map<int, DiagLayout> vlay;
    std::map<int, Quotient> quo;
    for (int p = out.lo; p <= out.hi + 1; ++p) {
        DiagLayout v = diag_layout(a, b, p, p - b.hi, a.hi);
        DiagLayout w = diag_layout(a, b, p + 1, p + 1 - b.hi, a.hi);
        // staircase: summand (i, j) of the upper diagonal maps by f_a (x) 1 into
        // (i-1, j) and by -(1 (x) f_b) into (i, j-1).
        std::map<int, Matrix> s;
        for (int n : w.total.degrees()) {
            if (v.total.dim(n) == 0) continue;
            Matrix m(v.total.dim(n), w.total.dim(n));
            for (int i : w.is) {
                int j = p + 1 - i;
                auto key = std::make_pair(i, n);
                if (!w.offset.count(key)) continue;
                int so = w.offset[key];
                ChainMap fa = a.transition(i - 1);
                ChainMap fb = b.transition(j - 1);
                Dg t1 = tensor_map_dg(a.term(i), b.term(j), a.term(i - 1), b.term(j), 0, fa.f, 0,
                                      identity_comps(b.term(j)));
                Dg t2 = tensor_map_dg(a.term(i), b.term(j), a.term(i), b.term(j - 1), 0,
                                      identity_comps(a.term(i)), 0, fb.f);
                int src_sz = tensor_layout(a.term(i), b.term(j), n).total;
                if (src_sz == 0) continue;
                auto k1 = std::make_pair(i - 1, n);
                if (v.offset.count(k1)) {
                    Matrix m1 = t1.at(n, tensor_layout(a.term(i - 1), b.term(j), n).total, src_sz);
                    paste(m, m1, v.offset[k1], so);
                }
                auto k2 = std::make_pair(i, n);
                if (v.offset.count(k2)) {
                    Matrix m2 = t2.at(n, tensor_layout(a.term(i), b.term(j - 1), n).total, src_sz);
                    paste(m, -m2, v.offset[k2], so);
                }
            }
            s[n] = m;
        }
        vlay[p] = v;
        quo[p] = cokernel(v.total, s);
        out.terms[p] = quo[p].complex;
    }
    // transitions: push the upper diagonal down through f_a (x) 1 and project.
    for (int p = out.lo; p <= out.hi; ++p) {
        const DiagLayout& vup = vlay.at(p + 1);
        const DiagLayout& vdn = vlay.at(p);
        const Quotient& qup = quo.at(p + 1);
        const Quotient& qdn = quo.at(p);
        for (int n : qup.complex.degrees()) {
            if (qdn.complex.dim(n) == 0) continue;
            Matrix rho(vdn.total.dim(n), vup.total.dim(n));
            for (int i : vup.is) {
                int j = p + 1 - i;
                auto key = std::make_pair(i, n);
                if (!vup.offset.count(key)) continue;
                int src_sz = tensor_layout(a.term(i), b.term(j), n).total;
                if (src_sz == 0) continue;
                auto k1 = std::make_pair(i - 1, n);
                if (!vdn.offset.count(k1)) continue;
                Dg t1 = tensor_map_dg(a.term(i), b.term(j), a.term(i - 1), b.term(j), 0,
                                      a.transition(i - 1).f, 0, identity_comps(b.term(j)));
                Matrix m1 = t1.at(n, tensor_layout(a.term(i - 1), b.term(j), n).total, src_sz);
                paste(rho, m1, vdn.offset.at(k1), vup.offset.at(key));
            }
            Matrix t = qdn.proj.at(n) * (rho * qup.incl.at(n));
            if (!t.is_zero()) out.trans[p][n] = t;
        }
    }
    out.terms.erase(out.hi + 1);
    return out;
}

// --- Internal hom -----------------------------------------------------------------

FilteredComplex hom_fil(const FilteredComplex& a, const FilteredComplex& b) {
    FilteredComplex out;
    if (a.is_zero() || b.is_zero()) return out;
    out.lo = b.lo - a.hi;
    out.hi = b.hi - a.lo;
    out.above = b.above;
    int qlo = std::min(a.lo, b.lo - out.hi);
    int qhi = std::max(a.hi, b.hi - out.lo);

    struct Term {
        ChainComplex h1, h2;
        std::map<std::pair<int, int>, int> off1, off2; // (q, degree) -> offset
        ChainMap phi;
    };
    std::map<int, Term> built;
    for (int p = out.lo; p <= out.hi; ++p) {
        Term t;
        // h1 = (+)_{q in [qlo, qhi]} hom(a_q, b_{p+q}); h2 drops the top index.
        std::set<int> degs1, degs2;
        std::map<int, ChainComplex> p1, p2;
        for (int q = qlo; q <= qhi; ++q) {
            p1[q] = hom_chain(a.term(q), b.term(p + q));
            for (int n : p1[q].degrees()) degs1.insert(n);
            if (q < qhi) {
                p2[q] = hom_chain(a.term(q + 1), b.term(p + q));
                for (int n : p2[q].degrees()) degs2.insert(n);
            }
        }
        auto assemble = [&](std::map<int, ChainComplex>& pieces, std::set<int>& degs,
                            std::map<std::pair<int, int>, int>& off, ChainComplex& tot) {
            for (int n : degs) {
                int total = 0;
                for (auto& [q, c] : pieces) {
                    off[{q, n}] = total;
                    total += c.dim(n);
                }
                tot.set_dim(n, total);
            }
            for (int n : degs) {
                if (tot.dim(n - 1) == 0) continue;
                Matrix d(tot.dim(n - 1), tot.dim(n));
                for (auto& [q, c] : pieces)
                    if (c.dim(n) > 0 && c.dim(n - 1) > 0) paste(d, c.d(n), off[{q, n - 1}], off[{q, n}]);
                tot.set_d(n, d);
            }
        };
        assemble(p1, degs1, t.off1, t.h1);
        assemble(p2, degs2, t.off2, t.h2);
        t.phi = ChainMap{t.h1, t.h2, {}};
        for (int n : t.h1.degrees()) {
            if (t.h2.dim(n) == 0) continue;
            Matrix m(t.h2.dim(n), t.h1.dim(n));
            for (int q = qlo; q <= qhi; ++q) {
                int src_sz = hom_layout(a.term(q), b.term(p + q), n).total;
                if (src_sz == 0) continue;
                int so = t.off1.at({q, n});
                if (q < qhi && t.off2.count({q, n})) {
                    Dg pre = hom_pre(a.term(q), a.term(q + 1), b.term(p + q), 0, a.transition(q).f);
                    Matrix mp = pre.at(n, hom_layout(a.term(q + 1), b.term(p + q), n).total, src_sz);
                    paste(m, mp, t.off2.at({q, n}), so);
                }
                if (q > qlo && t.off2.count({q - 1, n})) {
                    Dg post = hom_post(a.term(q), b.term(p + q), b.term(p + q - 1), 0,
                                       b.transition(p + q - 1).f);
                    Matrix mq = post.at(n, hom_layout(a.term(q), b.term(p + q - 1), n).total, src_sz);
                    // accumulate -post into the q-1 block
                    Matrix cur(mq.rows, mq.cols);
                    int to = t.off2.at({q - 1, n});
                    for (int r = 0; r < mq.rows; ++r)
                        for (int c = 0; c < mq.cols; ++c) cur.at(r, c) = m.at(to + r, so + c) - mq.at(r, c);
                    paste(m, cur, to, so);
                }
            }
            t.phi.set(n, m);
        }
        out.terms[p] = fiber(t.phi);
        built[p] = std::move(t);
    }
    // transitions: post-compose every factor with the b-transition.
    for (int p = out.lo; p < out.hi; ++p) {
        const Term& up = built.at(p + 1);
        const Term& dn = built.at(p);
        auto post_block = [&](const ChainComplex& aq, int bidx, int n, int src_sz) {
            Dg post = hom_post(aq, b.term(bidx + 1), b.term(bidx), 0, b.transition(bidx).f);
            return post.at(n, hom_layout(aq, b.term(bidx), n).total, src_sz);
        };
        for (int n : out.terms.at(p + 1).degrees()) {
            if (out.terms.at(p).dim(n) == 0) continue;
            // fiber_n = h2_{n+1} (+) h1_n
            Matrix m(out.terms.at(p).dim(n), out.terms.at(p + 1).dim(n));
            int row0 = 0, col0 = 0; // h2 block sits first
            for (int q = qlo; q < qhi; ++q) {
                auto ku = std::make_pair(q, n + 1);
                if (!up.off2.count(ku) || !dn.off2.count(ku)) continue;
                int sz = hom_layout(a.term(q + 1), b.term(p + 1 + q), n + 1).total;
                if (sz == 0) continue;
                paste(m, post_block(a.term(q + 1), p + q, n + 1, sz),
                      row0 + dn.off2.at(ku), col0 + up.off2.at(ku));
            }
            int row1 = dn.h2.dim(n + 1), col1 = up.h2.dim(n + 1);
            for (int q = qlo; q <= qhi; ++q) {
                auto ku = std::make_pair(q, n);
                if (!up.off1.count(ku) || !dn.off1.count(ku)) continue;
                int sz = hom_layout(a.term(q), b.term(p + 1 + q), n).total;
                if (sz == 0) continue;
                paste(m, post_block(a.term(q), p + q, n, sz),
                      row1 + dn.off1.at(ku), col1 + up.off1.at(ku));
            }
            if (!m.is_zero()) out.trans[p][n] = m;
        }
    }
    return out;
}

FilteredComplex unit_fil() {
    FilteredComplex out;
    out.lo = 0;
    out.hi = 0;
    out.above = FilteredComplex::Tail::ZeroAbove;
    out.terms[0] = k_chain(0);
    return out;
}

FilteredComplex r_fil(const GradedComplex& g) {
    FilteredComplex out;
    if (g.is_zero()) return out;
    out.lo = -g.max_weight() - 1;
    out.hi = -g.min_weight();
    out.above = FilteredComplex::Tail::ZeroAbove;
    for (int p = out.lo; p <= out.hi; ++p) out.terms[p] = shift(g.part(-p), -2 * p);
    return out;
}

// --- Beilinson t-structure ------------------------------------------------------

namespace {

struct TauIm {
    ChainComplex complex;
    Matrix image_basis; // columns in X_{a}, basis of im d_{a+1}; placed at degree a+1
    int level = 0;      // a
};

TauIm tau_im(const ChainComplex& x, int a) {
    TauIm t;
    t.level = a;
    for (int k : x.degrees())
        if (k <= a) t.complex.set_dim(k, x.dim(k));
    for (int k = x.min_deg(); k <= a; ++k)
        if (t.complex.dim(k) > 0 && t.complex.dim(k - 1) > 0) t.complex.set_d(k, x.d(k));
    t.image_basis = reduce(x.d(a + 1)).image;
    if (t.image_basis.cols > 0) {
        t.complex.set_dim(a + 1, t.image_basis.cols);
        t.complex.set_d(a + 1, t.image_basis);
    }
    return t;
}

} // namespace

FilteredComplex beilinson_le(const FilteredComplex& m, int n) {
    FilteredComplex out;
    out.above = FilteredComplex::Tail::ZeroAbove;
    ChainComplex clo = m.term(m.lo), chi = m.term(m.hi);
    out.lo = clo.is_zero() ? m.lo : std::min(m.lo, n - clo.max_deg());
    out.hi = m.hi;
    if (m.above == FilteredComplex::Tail::ConstantAbove && !chi.is_zero())
        out.hi = std::max(m.hi, n - chi.min_deg() + 1);
    if (out.lo > out.hi) out.hi = out.lo;
    std::map<int, TauIm> taus;
    for (int p = out.lo; p <= out.hi; ++p) {
        taus[p] = tau_im(m.term(p), n - p);
        out.terms[p] = taus[p].complex;
    }
    for (int p = out.lo; p < out.hi; ++p) {
        const TauIm& up = taus.at(p + 1); // level n-p-1, top degree n-p
        ChainMap f = m.transition(p);
        int top = n - p;
        for (int k : up.complex.degrees()) {
            Matrix comp;
            if (k < top) {
                comp = f.at(k);
            } else {
                // lift the image basis through d, then push forward.
                auto s = solve(m.term(p + 1).d(top), up.image_basis);
                if (!s) throw InvariantViolation("beilinson_le: image lift failed");
                comp = f.at(top) * *s;
            }
            // target degree k of tau_im(m_p, n-p) is the full term for k <= n-p.
            if (!comp.is_zero()) out.trans[p][k] = comp;
        }
    }
    return out;
}

FilteredComplex beilinson_ge(const FilteredComplex& m, int n) {
    for (int p = m.lo; p < m.hi; ++p) {
        ChainMap f = m.transition(p);
        for (int k : f.src.degrees())
            if (!is_injective(f.at(k)))
                throw UnsupportedInput("beilinson_ge requires degree-wise injective transitions");
    }
    FilteredComplex out;
    out.above = m.above;
    ChainComplex clo = m.term(m.lo), chi = m.term(m.hi);
    out.lo = clo.is_zero() ? m.lo : std::min(m.lo, n - clo.max_deg());
    out.hi = m.hi;
    if (m.above == FilteredComplex::Tail::ConstantAbove && !chi.is_zero())
        out.hi = std::max(m.hi, n + 1 - chi.min_deg());
    if (out.lo > out.hi) out.hi = out.lo;

    std::map<int, std::map<int, Matrix>> basis; // p -> degree -> columns in term(p)
    for (int p = out.lo; p <= out.hi; ++p) {
        const ChainComplex mp = m.term(p);
        ChainComplex sp;
        for (int k : mp.degrees()) {
            int r = std::max(p, n - k), rp = std::max(p, n - k + 1);
            Matrix tr = m.transition_composite(r, p).at(k);
            Matrix trp = m.transition_composite(rp, p).at(k - 1);
            // pairs (u, v) with d (tr u) = trp v
            Matrix sys = hstack(mp.d(k) * tr, -trp);
            Matrix ker = reduce(sys).kernel;
            Matrix u(tr.cols, ker.cols);
            for (int i = 0; i < tr.cols; ++i)
                for (int j = 0; j < ker.cols; ++j) u.at(i, j) = ker.at(i, j);
            Matrix b = tr * u;
            basis[p][k] = b;
            sp.set_dim(k, b.cols);
        }
        for (int k : sp.degrees()) {
            if (sp.dim(k - 1) == 0) continue;
            auto d = solve(basis[p][k - 1], m.term(p).d(k) * basis[p][k]);
            if (!d) throw InvariantViolation("beilinson_ge: differential does not restrict");
            sp.set_d(k, *d);
        }
        out.terms[p] = sp;
    }
    for (int p = out.lo; p < out.hi; ++p) {
        ChainMap f = m.transition(p);
        for (int k : out.terms.at(p + 1).degrees()) {
            if (out.terms.at(p).dim(k) == 0) continue;
            auto t = solve(basis[p][k], f.at(k) * basis[p + 1][k]);
            if (!t) throw InvariantViolation("beilinson_ge: transition does not restrict");
            if (!t->is_zero()) out.trans[p][k] = *t;
        }
    }
    return out;
}

ChainComplex beilinson_heart_to_chain(const FilteredComplex& m) {
    if (m.above == FilteredComplex::Tail::ConstantAbove &&
        !homology(m.term(m.hi)).is_acyclic())
        throw NotInHeart("constant tail with non-acyclic limit");
    for (int p = m.lo; p <= m.hi; ++p) {
        for (auto [k, b] : homology(m.term(p)).betti_table())
            if (k > -p) throw NotInHeart("term at weight " + std::to_string(p) +
                                         " has homology above degree " + std::to_string(-p));
        for (auto [k, b] : homology(gr(m, p)).betti_table())
            if (k < -p) throw NotInHeart("graded piece at weight " + std::to_string(p) +
                                         " has homology below degree " + std::to_string(-p));
    }
    ChainComplex out;
    std::map<int, HomologyTable> h;
    for (int p = m.lo; p <= m.hi; ++p) {
        h[p] = homology(gr(m, p));
        out.set_dim(-p, h[p].betti(-p));
    }
    for (int p = m.lo; p < m.hi; ++p) {
        if (out.dim(-p) == 0 || out.dim(-p - 1) == 0) continue;
        auto ind = induced_homology_map(connecting(m, p));
        auto it = ind.find(-p);
        if (it != ind.end()) out.set_d(-p, it->second);
    }
    return out;
}

} // namespace mgc
