#include "mgc/chain.hpp"

#include "mgc/fault.hpp"
#include "mgc/linsys.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mgc {

namespace {

std::string deg_str(int n) { return std::to_string(n); }

Matrix mat_at(const std::map<int, Matrix>& m, int n, int rows, int cols) {
    auto it = m.find(n);
    if (it == m.end()) return Matrix(rows, cols);
    if (it->second.rows != rows || it->second.cols != cols)
        throw InvariantViolation("component at degree " + deg_str(n) + " has shape " +
                                 deg_str(it->second.rows) + "x" + deg_str(it->second.cols) +
                                 ", expected " + deg_str(rows) + "x" + deg_str(cols));
    return it->second;
}

} // namespace

// --- ChainComplex -----------------------------------------------------------

Matrix ChainComplex::d(int n) const { return mat_at(diff, n, dim(n - 1), dim(n)); }

void ChainComplex::set_d(int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0) diff.erase(n);
    else diff[n] = std::move(m);
}

std::vector<int> ChainComplex::degrees() const {
    std::vector<int> out;
    for (const auto& [n, v] : dims)
        if (v > 0) out.push_back(n);
    return out;
}

int ChainComplex::min_deg() const {
    auto ds = degrees();
    return ds.empty() ? 0 : ds.front();
}

int ChainComplex::max_deg() const {
    auto ds = degrees();
    return ds.empty() ? 0 : ds.back();
}

bool ChainComplex::is_zero() const { return degrees().empty(); }

ChainComplex ChainComplex::normalized() const {
    ChainComplex out;
    for (const auto& [n, v] : dims)
        if (v > 0) out.dims[n] = v;
    for (const auto& [n, m] : diff)
        if (out.dim(n) > 0 && out.dim(n - 1) > 0 && !m.is_zero()) out.diff[n] = m;
    return out;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    ChainComplex a = normalized(), b = o.normalized();
    if (a.dims != b.dims) return false;
    std::set<int> keys;
    for (const auto& [n, m] : a.diff) keys.insert(n);
    for (const auto& [n, m] : b.diff) keys.insert(n);
    for (int n : keys)
        if (!(a.d(n) == b.d(n))) return false;
    return true;
}

void ChainComplex::validate() const {
    for (const auto& [n, v] : dims)
        if (v < 0) throw InvariantViolation("negative dimension at degree " + deg_str(n));
    for (const auto& [n, m] : diff)
        if (m.rows != dim(n - 1) || m.cols != dim(n))
            throw InvariantViolation("differential at degree " + deg_str(n) + " has shape " +
                                     deg_str(m.rows) + "x" + deg_str(m.cols) + ", expected " +
                                     deg_str(dim(n - 1)) + "x" + deg_str(dim(n)));
    if (is_zero()) return;
    for (int n = min_deg(); n <= max_deg(); ++n)
        if (!(d(n) * d(n + 1)).is_zero())
            throw InvariantViolation("d*d != 0 on the component starting at degree " +
                                     deg_str(n + 1));
}

// --- ChainMap ---------------------------------------------------------------

Matrix ChainMap::at(int n) const { return mat_at(f, n, tgt.dim(n), src.dim(n)); }

void ChainMap::set(int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0) f.erase(n);
    else f[n] = std::move(m);
}

void ChainMap::validate() const {
    src.validate();
    tgt.validate();
    for (const auto& [n, m] : f)
        if (m.rows != tgt.dim(n) || m.cols != src.dim(n))
            throw InvariantViolation("chain map component at degree " + deg_str(n) +
                                     " has wrong shape");
    if (src.is_zero()) return;
    for (int n = src.min_deg(); n <= src.max_deg() + 1; ++n)
        if (!(tgt.d(n) * at(n) == at(n - 1) * src.d(n)))
            throw InvariantViolation("chain map fails to commute with d at degree " + deg_str(n));
}

ChainMap identity_map(const ChainComplex& c) {
    ChainMap m{c, c, {}};
    for (int n : c.degrees()) m.f[n] = Matrix::identity(c.dim(n));
    return m;
}

ChainMap zero_map(const ChainComplex& src, const ChainComplex& tgt) {
    return ChainMap{src, tgt, {}};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap out{f.src, g.tgt, {}};
    for (int n : f.src.degrees()) out.set(n, g.at(n) * f.at(n));
    return out;
}

ChainMap map_sum(const ChainMap& a, const ChainMap& b) {
    ChainMap out{a.src, a.tgt, {}};
    for (int n : a.src.degrees()) out.set(n, a.at(n) + b.at(n));
    return out;
}

ChainMap map_scale(const Rational& s, const ChainMap& a) {
    ChainMap out{a.src, a.tgt, {}};
    for (const auto& [n, m] : a.f) out.set(n, s * m);
    return out;
}

Matrix Dg::at(int n, int rows, int cols) const { return mat_at(comp, n, rows, cols); }

void Dg::set(int n, Matrix m) {
    if (m.rows == 0 || m.cols == 0) comp.erase(n);
    else comp[n] = std::move(m);
}

// --- Homology ---------------------------------------------------------------

std::map<int, int> HomologyTable::betti_table() const {
    std::map<int, int> out;
    for (const auto& [n, h] : at)
        if (h.betti > 0) out[n] = h.betti;
    return out;
}

bool HomologyTable::is_acyclic() const { return betti_table().empty(); }

HomologyTable homology(const ChainComplex& c) {
    HomologyTable out;
    for (int n : c.degrees()) {
        Matrix cycles = reduce(c.d(n)).kernel;
        Matrix bnd = reduce(c.d(n + 1)).image;
        // Representatives: kernel columns independent modulo the boundaries.
        Reduced red = reduce(hstack(bnd, cycles));
        std::vector<int> rep_cols;
        for (auto [pr, pc] : red.pivots)
            if (pc >= bnd.cols) rep_cols.push_back(pc - bnd.cols);
        HomologyTable::Degree h;
        h.reps = cycles.cols_subset(rep_cols);
        h.boundaries = bnd;
        h.betti = h.reps.cols;
        out.at[n] = h;
    }
    return out;
}

std::map<int, Matrix> induced_homology_map(const ChainMap& f) {
    HomologyTable ha = homology(f.src), hb = homology(f.tgt);
    std::map<int, Matrix> out;
    std::set<int> degs;
    for (const auto& [n, h] : ha.at)
        if (h.betti > 0) degs.insert(n);
    for (const auto& [n, h] : hb.at)
        if (h.betti > 0) degs.insert(n);
    for (int n : degs) {
        int ba = ha.betti(n), bb = hb.betti(n);
        if (ba == 0 || bb == 0) {
            out[n] = Matrix(bb, ba);
            continue;
        }
        const auto& da = ha.at.at(n);
        const auto& db = hb.at.at(n);
        Matrix w = f.at(n) * da.reps;
        auto x = solve(hstack(db.reps, db.boundaries), w);
        if (!x) throw InvariantViolation("map does not preserve cycles at degree " + deg_str(n));
        Matrix m(bb, ba);
        for (int i = 0; i < bb; ++i)
            for (int j = 0; j < ba; ++j) m.at(i, j) = x->at(i, j);
        out[n] = m;
    }
    return out;
}

bool is_quasi_iso(const ChainMap& f) {
    HomologyTable ha = homology(f.src), hb = homology(f.tgt);
    if (ha.betti_table() != hb.betti_table()) return false;
    for (const auto& [n, m] : induced_homology_map(f))
        if (m.rows != m.cols || rank(m) != m.rows) return false;
    return true;
}

// --- Shift, sum, cone, fiber --------------------------------------------------

ChainComplex shift(const ChainComplex& c, int k) {
    ChainComplex out;
    Rational sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [n, v] : c.dims) out.set_dim(n + k, v);
    for (const auto& [n, m] : c.diff) out.set_d(n + k, sign * m);
    return out;
}

ChainMap shift(const ChainMap& f, int k) {
    ChainMap out{shift(f.src, k), shift(f.tgt, k), {}};
    for (const auto& [n, m] : f.f) out.set(n + k, m);
    return out;
}

SumDecomposition direct_sum(const ChainComplex& a, const ChainComplex& b) {
    SumDecomposition s;
    std::set<int> degs;
    for (int n : a.degrees()) degs.insert(n);
    for (int n : b.degrees()) degs.insert(n);
    for (int n : degs) s.total.set_dim(n, a.dim(n) + b.dim(n));
    for (int n : degs) {
        Matrix d(s.total.dim(n - 1), s.total.dim(n));
        paste(d, a.d(n), 0, 0);
        paste(d, b.d(n), a.dim(n - 1), a.dim(n));
        s.total.set_d(n, d);
    }
    s.in_a = ChainMap{a, s.total, {}};
    s.in_b = ChainMap{b, s.total, {}};
    s.pr_a = ChainMap{s.total, a, {}};
    s.pr_b = ChainMap{s.total, b, {}};
    for (int n : degs) {
        Matrix ia(s.total.dim(n), a.dim(n)), ib(s.total.dim(n), b.dim(n));
        paste(ia, Matrix::identity(a.dim(n)), 0, 0);
        paste(ib, Matrix::identity(b.dim(n)), a.dim(n), 0);
        s.in_a.set(n, ia);
        s.in_b.set(n, ib);
        s.pr_a.set(n, ia.transposed());
        s.pr_b.set(n, ib.transposed());
    }
    return s;
}

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& a = f.src;
    const ChainComplex& b = f.tgt;
    ChainComplex out;
    std::set<int> degs;
    for (int n : b.degrees()) degs.insert(n);
    for (int n : a.degrees()) degs.insert(n + 1);
    for (int n : degs) out.set_dim(n, b.dim(n) + a.dim(n - 1));
    for (int n : degs) {
        Matrix d(out.dim(n - 1), out.dim(n));
        paste(d, b.d(n), 0, 0);
        paste(d, f.at(n - 1), 0, b.dim(n));
        paste(d, -a.d(n - 1), b.dim(n - 1), b.dim(n));
        out.set_d(n, d);
    }
    return out;
}

ChainMap cone_inclusion(const ChainMap& f) {
    ChainComplex c = cone(f);
    ChainMap out{f.tgt, c, {}};
    for (int n : f.tgt.degrees()) {
        Matrix m(c.dim(n), f.tgt.dim(n));
        paste(m, Matrix::identity(f.tgt.dim(n)), 0, 0);
        out.set(n, m);
    }
    return out;
}

ChainComplex fiber(const ChainMap& f) { return shift(cone(f), -1); }

ChainMap fiber_projection(const ChainMap& f) {
    ChainComplex fib = fiber(f);
    ChainMap out{fib, f.src, {}};
    for (int n : f.src.degrees()) {
        Matrix m(f.src.dim(n), fib.dim(n));
        paste(m, Matrix::identity(f.src.dim(n)), 0, f.tgt.dim(n + 1));
        out.set(n, m);
    }
    return out;
}

// --- Tensor -------------------------------------------------------------------

int BlockLayout::offset_of(int index) const {
    for (const auto& b : blocks)
        if (b.index == index) return b.offset;
    return -1;
}

BlockLayout tensor_layout(const ChainComplex& a, const ChainComplex& b, int n) {
    BlockLayout l;
    for (int i : a.degrees()) {
        int sz = a.dim(i) * b.dim(n - i);
        if (sz == 0) continue;
        l.blocks.push_back({i, l.total, sz});
        l.total += sz;
    }
    return l;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows * b.rows, a.cols * b.cols);
    for (int ia = 0; ia < a.rows; ++ia)
        for (int ja = 0; ja < a.cols; ++ja) {
            const Rational& x = a.at(ia, ja);
            if (x == 0) continue;
            for (int ib = 0; ib < b.rows; ++ib)
                for (int jb = 0; jb < b.cols; ++jb)
                    c.at(ia * b.rows + ib, ja * b.cols + jb) = x * b.at(ib, jb);
        }
    return c;
}

ChainComplex tensor_chain(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex out;
    if (a.is_zero() || b.is_zero()) return out;
    int lo = a.min_deg() + b.min_deg(), hi = a.max_deg() + b.max_deg();
    for (int n = lo; n <= hi; ++n) out.set_dim(n, tensor_layout(a, b, n).total);
    for (int n = lo; n <= hi; ++n) {
        BlockLayout src = tensor_layout(a, b, n), tgt = tensor_layout(a, b, n - 1);
        if (src.total == 0 || tgt.total == 0) continue;
        Matrix d(tgt.total, src.total);
        for (const auto& blk : src.blocks) {
            int i = blk.index, j = n - i;
            int o1 = tgt.offset_of(i - 1);
            if (o1 >= 0 && a.dim(i - 1) > 0)
                paste(d, kron(a.d(i), Matrix::identity(b.dim(j))), o1, blk.offset);
            int o2 = tgt.offset_of(i);
            if (o2 >= 0 && b.dim(j - 1) > 0) {
                Rational sign = (i % 2 == 0) ? 1 : -1;
                paste(d, sign * kron(Matrix::identity(a.dim(i)), b.d(j)), o2, blk.offset);
            }
        }
        out.set_d(n, d);
    }
    return out;
}

Dg tensor_map_dg(const ChainComplex& a, const ChainComplex& b,
                 const ChainComplex& a2, const ChainComplex& b2,
                 int du, const std::map<int, Matrix>& u,
                 int dv, const std::map<int, Matrix>& v) {
    Dg out;
    out.deg = du + dv;
    if (a.is_zero() || b.is_zero()) return out;
    int lo = a.min_deg() + b.min_deg(), hi = a.max_deg() + b.max_deg();
    for (int n = lo; n <= hi; ++n) {
        BlockLayout src = tensor_layout(a, b, n), tgt = tensor_layout(a2, b2, n + out.deg);
        if (src.total == 0 || tgt.total == 0) continue;
        Matrix m(tgt.total, src.total);
        for (const auto& blk : src.blocks) {
            int i = blk.index, j = n - i;
            int o = tgt.offset_of(i + du);
            if (o < 0 || b2.dim(j + dv) == 0) continue;
            Matrix ui = mat_at(u, i, a2.dim(i + du), a.dim(i));
            Matrix vj = mat_at(v, j, b2.dim(j + dv), b.dim(j));
            Rational sign = ((dv * i) % 2 == 0) ? 1 : -1;
            paste(m, sign * kron(ui, vj), o, blk.offset);
        }
        out.set(n, m);
    }
    return out;
}

ChainMap tensor_map(const ChainMap& u, const ChainMap& v) {
    std::map<int, Matrix> um, vm;
    for (int n : u.src.degrees()) um[n] = u.at(n);
    for (int n : v.src.degrees()) vm[n] = v.at(n);
    Dg dg = tensor_map_dg(u.src, v.src, u.tgt, v.tgt, 0, um, 0, vm);
    ChainMap out{tensor_chain(u.src, v.src), tensor_chain(u.tgt, v.tgt), {}};
    out.f = dg.comp;
    return out;
}

// --- Hom ------------------------------------------------------------------------

BlockLayout hom_layout(const ChainComplex& a, const ChainComplex& b, int n) {
    BlockLayout l;
    for (int m : a.degrees()) {
        int sz = a.dim(m) * b.dim(m + n);
        if (sz == 0) continue;
        l.blocks.push_back({m, l.total, sz});
        l.total += sz;
    }
    return l;
}

ChainComplex hom_chain(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex out;
    if (a.is_zero() || b.is_zero()) return out;
    int lo = b.min_deg() - a.max_deg(), hi = b.max_deg() - a.min_deg();
    for (int n = lo; n <= hi; ++n) out.set_dim(n, hom_layout(a, b, n).total);
    for (int n = lo; n <= hi; ++n) {
        BlockLayout src = hom_layout(a, b, n), tgt = hom_layout(a, b, n - 1);
        if (src.total == 0 || tgt.total == 0) continue;
        Matrix d(tgt.total, src.total);
        for (const auto& blk : src.blocks) {
            int m = blk.index;
            // post-compose with d_b
            int o1 = tgt.offset_of(m);
            if (o1 >= 0 && b.dim(m + n - 1) > 0)
                paste(d, kron(Matrix::identity(a.dim(m)), b.d(m + n)), o1, blk.offset);
            // -(-1)^n pre-compose with d_a
            int o2 = tgt.offset_of(m + 1);
            if (o2 >= 0 && a.dim(m + 1) > 0) {
                Rational sign = (n % 2 == 0) ? -1 : 1;
                paste(d, sign * kron(a.d(m + 1).transposed(), Matrix::identity(b.dim(m + n))),
                      o2, blk.offset);
            }
        }
        out.set_d(n, d);
    }
    return out;
}

Dg hom_post(const ChainComplex& a, const ChainComplex& b, const ChainComplex& b2,
            int dv, const std::map<int, Matrix>& v) {
    Dg out;
    out.deg = dv;
    if (a.is_zero() || b.is_zero()) return out;
    int lo = b.min_deg() - a.max_deg(), hi = b.max_deg() - a.min_deg();
    for (int n = lo; n <= hi; ++n) {
        BlockLayout src = hom_layout(a, b, n), tgt = hom_layout(a, b2, n + dv);
        if (src.total == 0 || tgt.total == 0) continue;
        Matrix mtx(tgt.total, src.total);
        for (const auto& blk : src.blocks) {
            int m = blk.index;
            int o = tgt.offset_of(m);
            if (o < 0 || b2.dim(m + n + dv) == 0) continue;
            Matrix vm = mat_at(v, m + n, b2.dim(m + n + dv), b.dim(m + n));
            paste(mtx, kron(Matrix::identity(a.dim(m)), vm), o, blk.offset);
        }
        out.set(n, mtx);
    }
    return out;
}

Dg hom_pre(const ChainComplex& a, const ChainComplex& a2, const ChainComplex& b,
           int du, const std::map<int, Matrix>& u, bool sign_by_hom_degree) {
    Dg out;
    out.deg = du;
    if (a.is_zero() || b.is_zero()) return out;
    int lo = b.min_deg() - a.max_deg(), hi = b.max_deg() - a.min_deg();
    for (int n = lo; n <= hi; ++n) {
        BlockLayout src = hom_layout(a, b, n), tgt = hom_layout(a2, b, n + du);
        if (src.total == 0 || tgt.total == 0) continue;
        Matrix mtx(tgt.total, src.total);
        for (const auto& blk : src.blocks) {
            int m = blk.index;
            int o = tgt.offset_of(m - du);
            if (o < 0 || a2.dim(m - du) == 0) continue;
            Matrix um = mat_at(u, m - du, a.dim(m), a2.dim(m - du));
            Rational sign = 1;
            if (sign_by_hom_degree && n % 2 != 0) sign = -1;
            paste(mtx, sign * kron(um.transposed(), Matrix::identity(b.dim(m + n))),
                  o, blk.offset);
        }
        out.set(n, mtx);
    }
    return out;
}

// --- Truncation -------------------------------------------------------------------

Truncation truncate_ge(const ChainComplex& c, int n) {
    if (active_fault() == Fault::TruncationBound) n += 1;
    Truncation t;
    for (int m : c.degrees())
        if (m > n) t.complex.set_dim(m, c.dim(m));
    for (const auto& [m, mat] : c.diff)
        if (m > n + 1 && t.complex.dim(m) > 0 && t.complex.dim(m - 1) > 0)
            t.complex.set_d(m, mat);
    Matrix k = reduce(c.d(n)).kernel;
    t.complex.set_dim(n, k.cols);
    if (k.cols > 0 && c.dim(n + 1) > 0) {
        auto x = solve(k, c.d(n + 1));
        if (!x) throw InvariantViolation("boundaries at degree " + deg_str(n) + " escape ker d");
        t.complex.set_d(n + 1, *x);
    } else if (c.dim(n + 1) > 0 && !c.d(n + 1).is_zero()) {
        throw InvariantViolation("boundaries at degree " + deg_str(n) + " escape ker d");
    }
    t.map = ChainMap{t.complex, c, {}};
    for (int m : t.complex.degrees())
        t.map.set(m, m == n ? k : Matrix::identity(c.dim(m)));
    return t;
}

Truncation truncate_le(const ChainComplex& c, int n) {
    Truncation t;
    for (int m : c.degrees())
        if (m < n) t.complex.set_dim(m, c.dim(m));
    for (const auto& [m, mat] : c.diff)
        if (m <= n - 1 && t.complex.dim(m) > 0 && t.complex.dim(m - 1) > 0)
            t.complex.set_d(m, mat);
    Matrix proj_n;
    int cn = c.dim(n);
    if (cn > 0) {
        Matrix bnd = reduce(c.d(n + 1)).image;
        // Extend the boundary basis by standard basis vectors to a basis of C_n.
        Matrix w = bnd;
        std::vector<int> comp_cols;
        for (int j = 0; j < cn && w.cols < cn; ++j) {
            Matrix ej(cn, 1);
            ej.at(j, 0) = 1;
            Matrix cand = hstack(w, ej);
            if (rank(cand) > w.cols) {
                comp_cols.push_back(j);
                w = cand;
            }
        }
        Matrix comp(cn, static_cast<int>(comp_cols.size()));
        for (size_t j = 0; j < comp_cols.size(); ++j) comp.at(comp_cols[j], static_cast<int>(j)) = 1;
        Matrix basis = hstack(bnd, comp);
        auto inv = solve(basis, Matrix::identity(cn));
        if (!inv) throw InvariantViolation("failed to invert cokernel basis at degree " + deg_str(n));
        Matrix proj(comp.cols, cn);
        for (int i = 0; i < comp.cols; ++i)
            for (int j = 0; j < cn; ++j) proj.at(i, j) = inv->at(bnd.cols + i, j);
        t.complex.set_dim(n, comp.cols);
        if (t.complex.dim(n - 1) > 0 && comp.cols > 0) t.complex.set_d(n, c.d(n) * comp);
        proj_n = proj;
    }
    t.map = ChainMap{c, t.complex, {}};
    if (cn > 0) t.map.set(n, proj_n);
    for (int m : c.degrees())
        if (m < n) t.map.set(m, Matrix::identity(c.dim(m)));
    return t;
}

ChainComplex naive_ge(const ChainComplex& c, int n) {
    ChainComplex out;
    for (int m : c.degrees())
        if (m >= n) out.set_dim(m, c.dim(m));
    for (const auto& [m, mat] : c.diff)
        if (m >= n + 1 && out.dim(m) > 0 && out.dim(m - 1) > 0) out.set_d(m, mat);
    return out;
}

ChainComplex naive_le(const ChainComplex& c, int n) {
    ChainComplex out;
    for (int m : c.degrees())
        if (m <= n) out.set_dim(m, c.dim(m));
    for (const auto& [m, mat] : c.diff)
        if (m <= n && out.dim(m) > 0 && out.dim(m - 1) > 0) out.set_d(m, mat);
    return out;
}

// --- Homotopy ------------------------------------------------------------------

std::optional<Dg> chain_homotopy(const ChainMap& f, const ChainMap& g) {
    const ChainComplex& a = f.src;
    const ChainComplex& b = f.tgt;
    VarSpace vars;
    for (int n : a.degrees())
        if (b.dim(n + 1) > 0) vars.add("H" + deg_str(n), b.dim(n + 1), a.dim(n));
    std::vector<MatEq> eqs;
    if (!a.is_zero()) {
        for (int n = a.min_deg(); n <= a.max_deg(); ++n) {
            if (a.dim(n) == 0 || b.dim(n) == 0) continue;
            MatEq eq;
            if (vars.has("H" + deg_str(n)))
                eq.terms.push_back({b.d(n + 1), "H" + deg_str(n), Matrix::identity(a.dim(n))});
            if (vars.has("H" + deg_str(n - 1)))
                eq.terms.push_back({Matrix::identity(b.dim(n)), "H" + deg_str(n - 1), a.d(n)});
            eq.c = f.at(n) - g.at(n);
            eqs.push_back(std::move(eq));
        }
    }
    auto sol = solve_blocks(vars, eqs);
    if (!sol) return std::nullopt;
    Dg h;
    h.deg = 1;
    for (auto& [name, m] : *sol) h.set(std::stoi(name.substr(1)), std::move(m));
    return h;
}

bool is_null_homotopic(const ChainMap& f) {
    return chain_homotopy(f, zero_map(f.src, f.tgt)).has_value();
}

ChainComplex k_chain(int n) {
    ChainComplex c;
    c.set_dim(n, 1);
    return c;
}

} // namespace mgc
