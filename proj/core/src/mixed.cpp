#include "mgc/mixed.hpp"

#include "mgc/errors.hpp"
#include "mgc/fault.hpp"

#include <algorithm>
#include <set>

namespace mgc {

namespace {

std::map<int, Matrix> id_comps(const ChainComplex& c) {
    std::map<int, Matrix> out;
    for (int n : c.degrees()) out[n] = Matrix::identity(c.dim(n));
    return out;
}

std::map<int, Matrix> eps_comps(const MixedComplex& m, int p) {
    auto it = m.eps.find(p);
    return it == m.eps.end() ? std::map<int, Matrix>{} : it->second;
}

// Degree window [min-2, max+2] over the union of two weights' supports.
std::pair<int, int> degree_window(const ChainComplex& a, const ChainComplex& b) {
    int lo = 0, hi = -1;
    if (!a.is_zero()) { lo = a.min_deg(); hi = a.max_deg(); }
    if (!b.is_zero()) {
        lo = a.is_zero() ? b.min_deg() : std::min(lo, b.min_deg());
        hi = a.is_zero() ? b.max_deg() : std::max(hi, b.max_deg());
    }
    return {lo - 2, hi + 2};
}

} // namespace

Matrix MixedComplex::eps_at(int p, int n) const {
    int rows = part(p - 1).dim(n + 1), cols = part(p).dim(n);
    auto itp = eps.find(p);
    if (itp == eps.end()) return Matrix(rows, cols);
    auto itn = itp->second.find(n);
    if (itn == itp->second.end()) return Matrix(rows, cols);
    return itn->second;
}

void MixedComplex::set_eps(int p, int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0 || m.is_zero()) return;
    eps[p][n] = std::move(m);
}

MixedComplex MixedComplex::normalized() const {
    MixedComplex out;
    out.underlying = underlying.normalized();
    for (const auto& [p, comps] : eps)
        for (const auto& [n, m] : comps)
            if (!m.is_zero() && out.part(p).dim(n) > 0 && out.part(p - 1).dim(n + 1) > 0)
                out.eps[p][n] = m;
    return out;
}

bool MixedComplex::operator==(const MixedComplex& o) const {
    MixedComplex a = normalized(), b = o.normalized();
    if (!(a.underlying == b.underlying)) return false;
    std::set<std::pair<int, int>> keys;
    for (const auto& [p, comps] : a.eps)
        for (const auto& [n, m] : comps) keys.insert({p, n});
    for (const auto& [p, comps] : b.eps)
        for (const auto& [n, m] : comps) keys.insert({p, n});
    for (auto [p, n] : keys)
        if (!(a.eps_at(p, n) == b.eps_at(p, n))) return false;
    return true;
}

std::optional<MixedViolation> validate_mixed(const MixedComplex& m) {
    try {
        m.underlying.validate();
    } catch (const InvariantViolation& e) {
        return MixedViolation{"d", 0, 0, e.what()};
    }
    for (const auto& [p, comps] : m.eps)
        for (const auto& [n, mat] : comps) {
            int rows = m.part(p - 1).dim(n + 1), cols = m.part(p).dim(n);
            if (mat.rows != rows || mat.cols != cols)
                return MixedViolation{"eps shape", p, n,
                                      "expected " + std::to_string(rows) + "x" + std::to_string(cols)};
        }
    for (int p : m.weights()) {
        auto [lo, hi] = degree_window(m.part(p), m.part(p - 1));
        for (int n = lo; n <= hi; ++n) {
            if (!(m.eps_at(p - 1, n + 1) * m.eps_at(p, n)).is_zero())
                return MixedViolation{"eps^2", p, n, "composite into weight " + std::to_string(p - 2)};
            Matrix anti = m.part(p - 1).d(n + 1) * m.eps_at(p, n) + m.eps_at(p, n - 1) * m.part(p).d(n);
            if (!anti.is_zero())
                return MixedViolation{"d eps + eps d", p, n, ""};
        }
    }
    return std::nullopt;
}

void require_valid(const MixedComplex& m, const std::string& where) {
    auto v = validate_mixed(m);
    if (v)
        throw InvariantViolation(where + ": mixed invariant '" + v->rule + "' fails at weight " +
                                 std::to_string(v->weight) + ", degree " + std::to_string(v->degree) +
                                 (v->detail.empty() ? "" : " (" + v->detail + ")"));
}

MixedComplex convert_convention(const MixedComplex& m, SignConvention from, SignConvention to) {
    // Check the declared input convention.
    if (from == SignConvention::Anticommuting) {
        require_valid(m, "convert_convention");
    } else {
        for (int p : m.weights()) {
            auto [lo, hi] = degree_window(m.part(p), m.part(p - 1));
            for (int n = lo; n <= hi; ++n) {
                if (!(m.eps_at(p - 1, n + 1) * m.eps_at(p, n)).is_zero())
                    throw InvariantViolation("convert_convention: eps^2 != 0 at weight " +
                                             std::to_string(p));
                Matrix comm =
                    m.part(p - 1).d(n + 1) * m.eps_at(p, n) - m.eps_at(p, n - 1) * m.part(p).d(n);
                if (!comm.is_zero())
                    throw InvariantViolation("convert_convention: d eps - eps d != 0 at weight " +
                                             std::to_string(p) + ", degree " + std::to_string(n));
            }
        }
    }
    if (from == to) return m;
    MixedComplex out;
    out.underlying = m.underlying;
    for (const auto& [p, comps] : m.eps)
        for (const auto& [n, mat] : comps)
            out.eps[p][n] = (n % 2 == 0) ? mat : -mat;
    return out;
}

ChainMap MixedMap::at_weight(int p) const {
    ChainMap m{src.part(p), tgt.part(p), {}};
    auto it = f.find(p);
    if (it != f.end()) m.f = it->second;
    return m;
}

void MixedMap::set(int p, int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0) return;
    f[p][n] = std::move(m);
}

void MixedMap::validate() const {
    std::set<int> ws;
    for (int p : src.weights()) ws.insert(p);
    for (int p : tgt.weights()) ws.insert(p);
    for (int p : ws) {
        at_weight(p).validate();
        auto [lo, hi] = degree_window(src.part(p), tgt.part(p));
        ChainMap fp = at_weight(p), fq = at_weight(p - 1);
        for (int n = lo; n <= hi; ++n)
            if (!(tgt.eps_at(p, n) * fp.at(n) == fq.at(n + 1) * src.eps_at(p, n)))
                throw InvariantViolation("mixed map fails eps-naturality at weight " +
                                         std::to_string(p) + ", degree " + std::to_string(n));
    }
}

MixedMap mixed_identity(const MixedComplex& m) {
    MixedMap out{m, m, {}};
    for (int p : m.weights()) out.f[p] = identity_map(m.part(p)).f;
    return out;
}

MixedMap mixed_compose(const MixedMap& g, const MixedMap& f) {
    MixedMap out{f.src, g.tgt, {}};
    for (int p : f.src.weights()) {
        ChainMap c = compose(g.at_weight(p), f.at_weight(p));
        if (!c.f.empty()) out.f[p] = c.f;
    }
    return out;
}

bool mixed_is_quasi_iso(const MixedMap& f) {
    GradedMap g{oblv(f.src), oblv(f.tgt), f.f};
    return graded_is_quasi_iso(g);
}

GradedComplex oblv(const MixedComplex& m) { return m.underlying; }

MixedComplex triv(const GradedComplex& g) { return MixedComplex{g, {}}; }

MixedComplex l_eps(const GradedComplex& g) {
    MixedComplex out;
    if (g.is_zero()) return out;
    for (int p = g.min_weight() - 1; p <= g.max_weight(); ++p)
        out.underlying.set_part(p, direct_sum(g.part(p), shift(g.part(p + 1), 1)).total);
    for (int p = g.min_weight(); p <= g.max_weight(); ++p) {
        // eps(x, y) = (0, x): identity from the g_p summand onto g_p[1].
        const ChainComplex gp = g.part(p);
        for (int n : gp.degrees()) {
            Matrix e(out.part(p - 1).dim(n + 1), out.part(p).dim(n));
            paste(e, Matrix::identity(gp.dim(n)), g.part(p - 1).dim(n + 1), 0);
            out.set_eps(p, n, e);
        }
    }
    require_valid(out, "l_eps");
    return out;
}

MixedComplex r_eps(const GradedComplex& g) {
    MixedComplex out;
    if (g.is_zero()) return out;
    for (int p = g.min_weight(); p <= g.max_weight() + 1; ++p)
        out.underlying.set_part(p, direct_sum(g.part(p), shift(g.part(p - 1), -1)).total);
    for (int p = g.min_weight() + 1; p <= g.max_weight() + 1; ++p) {
        // eps(x, y) = (y, 0): identity from the g_{p-1}[-1] summand onto g_{p-1}.
        const ChainComplex gm = g.part(p - 1);
        for (int n : out.part(p).degrees()) {
            int sz = gm.dim(n + 1); // the shifted summand at degree n
            if (sz == 0) continue;
            Matrix e(out.part(p - 1).dim(n + 1), out.part(p).dim(n));
            paste(e, Matrix::identity(sz), 0, g.part(p).dim(n));
            out.set_eps(p, n, e);
        }
    }
    require_valid(out, "r_eps");
    return out;
}

MixedComplex free_mixed(const ChainComplex& c, int q) { return l_eps(insert_at_weight(c, q)); }

MixedComplex k_mixed(int q) { return triv(k_graded(q)); }

MixedComplex weight_shift(const MixedComplex& m, int q) {
    MixedComplex out;
    out.underlying = weight_shift(m.underlying, q);
    for (const auto& [p, comps] : m.eps) out.eps[p + q] = comps;
    return out;
}

MixedComplex shift(const MixedComplex& m, int k) {
    MixedComplex out;
    for (const auto& [p, c] : m.underlying.parts) out.underlying.set_part(p, shift(c, k));
    for (const auto& [p, comps] : m.eps)
        for (const auto& [n, mat] : comps) out.eps[p][n + k] = mat;
    return out;
}

MixedComplex direct_sum(const MixedComplex& a, const MixedComplex& b) {
    MixedComplex out;
    out.underlying = direct_sum(a.underlying, b.underlying);
    for (int p : out.underlying.weights()) {
        auto [lo, hi] = degree_window(out.part(p), out.part(p - 1));
        for (int n = lo; n <= hi; ++n) {
            Matrix ea = a.eps_at(p, n), eb = b.eps_at(p, n);
            if (ea.is_zero() && eb.is_zero()) continue;
            Matrix e(out.part(p - 1).dim(n + 1), out.part(p).dim(n));
            paste(e, ea, 0, 0);
            paste(e, eb, a.part(p - 1).dim(n + 1), a.part(p).dim(n));
            out.set_eps(p, n, e);
        }
    }
    return out;
}

MixedComplex tensor_mixed(const MixedComplex& a, const MixedComplex& b) {
    const GradedComplex& ga = a.underlying;
    const GradedComplex& gb = b.underlying;
    MixedComplex out;
    out.underlying = tensor_graded(ga, gb);
    for (int p : out.underlying.weights()) {
        // Per a-weight summand: eps_a (x) id into block i-1, parity (x) eps_b into block i.
        std::map<int, Dg> t1, t2; // a-weight i -> degree-wise components
        for (int i : ga.weights()) {
            int j = p - i;
            t1[i] = tensor_map_dg(ga.part(i), gb.part(j), ga.part(i - 1), gb.part(j),
                                  1, eps_comps(a, i), 0, id_comps(gb.part(j)));
            t2[i] = tensor_map_dg(ga.part(i), gb.part(j), ga.part(i), gb.part(j - 1),
                                  0, id_comps(ga.part(i)), 1, eps_comps(b, j));
        }
        for (int n : out.part(p).degrees()) {
            BlockLayout src = tensor_weight_layout(ga, gb, p, n);
            BlockLayout tgt = tensor_weight_layout(ga, gb, p - 1, n + 1);
            if (tgt.total == 0) continue;
            Matrix e(tgt.total, src.total);
            for (const auto& blk : src.blocks) {
                int i = blk.index, j = p - i;
                int o1 = tgt.offset_of(i - 1);
                if (o1 >= 0) {
                    Matrix m1 = t1[i].at(n, tensor_layout(ga.part(i - 1), gb.part(j), n + 1).total,
                                         blk.size);
                    paste(e, m1, o1, blk.offset);
                }
                int o2 = tgt.offset_of(i);
                if (o2 >= 0) {
                    Matrix m2 = t2[i].at(n, tensor_layout(ga.part(i), gb.part(j - 1), n + 1).total,
                                         blk.size);
                    if (active_fault() == Fault::TensorEpsSign) m2 = -m2;
                    Matrix cur(m2.rows, m2.cols);
                    for (int r = 0; r < m2.rows; ++r)
                        for (int c = 0; c < m2.cols; ++c)
                            cur.at(r, c) = e.at(o2 + r, blk.offset + c) + m2.at(r, c);
                    paste(e, cur, o2, blk.offset);
                }
            }
            out.set_eps(p, n, e);
        }
    }
    require_valid(out, "tensor_mixed");
    return out;
}

MixedComplex hom_mixed(const MixedComplex& a, const MixedComplex& b) {
    const GradedComplex& ga = a.underlying;
    const GradedComplex& gb = b.underlying;
    MixedComplex out;
    out.underlying = hom_graded(ga, gb);
    for (int p : out.underlying.weights()) {
        std::map<int, Dg> post, pre;
        for (int q : ga.weights()) {
            post[q] = hom_post(ga.part(q), gb.part(q + p), gb.part(q + p - 1),
                               1, eps_comps(b, q + p));
            pre[q] = hom_pre(ga.part(q), ga.part(q + 1), gb.part(q + p),
                             1, eps_comps(a, q + 1), /*sign_by_hom_degree=*/true);
        }
        for (int n : out.part(p).degrees()) {
            BlockLayout src = hom_weight_layout(ga, gb, p, n);
            BlockLayout tgt = hom_weight_layout(ga, gb, p - 1, n + 1);
            if (tgt.total == 0) continue;
            Matrix e(tgt.total, src.total);
            for (const auto& blk : src.blocks) {
                int q = blk.index;
                int o1 = tgt.offset_of(q);
                if (o1 >= 0) {
                    Matrix m1 = post[q].at(n, hom_layout(ga.part(q), gb.part(q + p - 1), n + 1).total,
                                           blk.size);
                    paste(e, m1, o1, blk.offset);
                }
                int o2 = tgt.offset_of(q + 1);
                if (o2 >= 0) {
                    Matrix m2 = pre[q].at(n, hom_layout(ga.part(q + 1), gb.part(q + p), n + 1).total,
                                          blk.size);
                    paste(e, -m2, o2, blk.offset);
                }
            }
            out.set_eps(p, n, e);
        }
    }
    require_valid(out, "hom_mixed");
    return out;
}

// --- Totalization -------------------------------------------------------------

Totalization totalize(const MixedComplex& m, const std::vector<int>& weights) {
    std::vector<int> ws = weights;
    std::sort(ws.begin(), ws.end());
    Totalization t;
    std::map<int, std::vector<std::pair<int, int>>> summands; // total degree -> [(w, size)]
    for (int w : ws) {
        const ChainComplex c = m.part(w);
        for (int n : c.degrees()) summands[n + 2 * w].push_back({w, c.dim(n)});
    }
    for (auto& [n, lst] : summands) {
        int total = 0;
        for (auto [w, sz] : lst) {
            t.offset[{w, n}] = total;
            total += sz;
        }
        t.total.set_dim(n, total);
    }
    for (const auto& [n, lst] : summands) {
        if (t.total.dim(n - 1) == 0) continue;
        Matrix d(t.total.dim(n - 1), t.total.dim(n));
        for (auto [w, sz] : lst) {
            int src = t.offset.at({w, n});
            auto it_d = t.offset.find({w, n - 1});
            if (it_d != t.offset.end()) paste(d, m.part(w).d(n - 2 * w), it_d->second, src);
            auto it_e = t.offset.find({w - 1, n - 1});
            if (it_e != t.offset.end()) paste(d, m.eps_at(w, n - 2 * w), it_e->second, src);
        }
        t.total.set_d(n, d);
    }
    return t;
}

ChainComplex realization(const MixedComplex& m) {
    std::vector<int> ws;
    for (int w : m.weights())
        if (w <= 0) ws.push_back(w);
    return totalize(m, ws).total;
}

ChainComplex tate_realization(const MixedComplex& m) { return totalize(m, m.weights()).total; }

ChainComplex mapping_complex(const MixedComplex& a, const MixedComplex& b) {
    return realization(hom_mixed(a, b));
}

ChainComplex mapping_complex_graded(const GradedComplex& a, const GradedComplex& b) {
    return hom_graded(a, b).part(0);
}

GradedComplex ncw(const MixedComplex& m, int pmin, int pmax) {
    GradedComplex out;
    for (int p = pmin; p <= pmax; ++p) out.set_part(p, realization(weight_shift(m, -p)));
    return out;
}

// --- Weight truncations ----------------------------------------------------------

MixedComplex naive_truncate(const MixedComplex& m, Dir dir, int p) {
    MixedComplex out;
    auto keep = [&](int w) { return dir == Dir::Le ? w <= p : w >= p; };
    for (const auto& [w, c] : m.underlying.parts)
        if (keep(w)) out.underlying.set_part(w, c);
    for (const auto& [w, comps] : m.eps)
        if (keep(w) && keep(w - 1)) out.eps[w] = comps;
    return out;
}

MixedComplex clever_truncate(const MixedComplex& m, Dir dir, int p) {
    MixedComplex out;
    if (dir == Dir::Le) {
        for (const auto& [w, c] : m.underlying.parts)
            if (w < p) out.underlying.set_part(w, c);
        for (const auto& [w, comps] : m.eps)
            if (w <= p - 1) out.eps[w] = comps;
        std::vector<int> up;
        for (int w : m.weights())
            if (w >= p) up.push_back(w);
        Totalization tot = totalize(m, up);
        ChainComplex part_p = shift(tot.total, -2 * p);
        out.underlying.set_part(p, part_p);
        // eps out of the new weight-p part: eps_p on the lowest summand.
        for (int n : part_p.degrees()) {
            auto it = tot.offset.find({p, n + 2 * p});
            if (it == tot.offset.end()) continue;
            Matrix raw = m.eps_at(p, n);
            if (raw.is_zero()) continue;
            Matrix e(m.part(p - 1).dim(n + 1), part_p.dim(n));
            paste(e, raw, 0, it->second);
            out.set_eps(p, n, e);
        }
    } else {
        for (const auto& [w, c] : m.underlying.parts)
            if (w > p) out.underlying.set_part(w, c);
        for (const auto& [w, comps] : m.eps)
            if (w - 1 > p) out.eps[w] = comps;
        std::vector<int> dn;
        for (int w : m.weights())
            if (w <= p) dn.push_back(w);
        Totalization tot = totalize(m, dn);
        ChainComplex part_p = shift(tot.total, -2 * p);
        out.underlying.set_part(p, part_p);
        // eps into the new weight-p part from weight p+1, landing in the top summand.
        auto [lo, hi] = degree_window(m.part(p + 1), m.part(p + 1));
        for (int n = lo; n <= hi; ++n) {
            Matrix raw = m.eps_at(p + 1, n);
            if (raw.is_zero()) continue;
            auto it = tot.offset.find({p, n + 1 + 2 * p});
            if (it == tot.offset.end()) continue;
            Matrix e(part_p.dim(n + 1), m.part(p + 1).dim(n));
            paste(e, raw, it->second, 0);
            out.set_eps(p + 1, n, e);
        }
    }
    require_valid(out, "clever_truncate");
    return out;
}

// --- Duality ------------------------------------------------------------------------

MixedComplex dual(const MixedComplex& m) { return hom_mixed(m, k_mixed(0)); }

bool dualizability_check(const MixedComplex& m, const MixedComplex& n) {
    MixedComplex dm = dual(m);
    MixedComplex lhs = tensor_mixed(dm, n);
    MixedComplex rhs = hom_mixed(m, n);
    const GradedComplex& gm = m.underlying;
    const GradedComplex& gn = n.underlying;
    const GradedComplex& gd = dm.underlying;
    MixedMap cmp{lhs, rhs, {}};
    for (int w : lhs.weights()) {
        for (int nn : lhs.part(w).degrees()) {
            BlockLayout src = tensor_weight_layout(gd, gn, w, nn);
            BlockLayout tgt = hom_weight_layout(gm, gn, w, nn);
            if (tgt.total == 0) continue;
            Matrix phi(tgt.total, src.total);
            for (const auto& blk : src.blocks) {
                int p = blk.index;   // dual weight
                int q = -p;          // source weight of the hom block
                int r = w - p;       // n-weight
                int tgt_blk = tgt.offset_of(q);
                if (tgt_blk < 0) continue;
                BlockLayout inner = tensor_layout(gd.part(p), gn.part(r), nn);
                BlockLayout hom_inner = hom_layout(gm.part(q), gn.part(q + w), nn);
                for (const auto& ib : inner.blocks) {
                    int s = ib.index, t = nn - s; // dual degree, n-degree
                    int ho = hom_inner.offset_of(-s);
                    if (ho < 0) continue;
                    // xi in dual degree s is a functional on (m_{-p})_{-s}; the
                    // flattened tensor and hom indices agree, up to the sign.
                    Rational sign = ((s * t) % 2 == 0) ? 1 : -1;
                    paste(phi, sign * Matrix::identity(ib.size), tgt_blk + ho, blk.offset + ib.offset);
                }
            }
            cmp.set(w, nn, phi);
        }
    }
    cmp.validate();
    return mixed_is_quasi_iso(cmp);
}

} // namespace mgc
