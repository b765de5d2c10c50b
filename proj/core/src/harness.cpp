#include "mgc/harness.hpp"

#include "mgc/bridge.hpp"
#include "mgc/document.hpp"
#include "mgc/errors.hpp"

#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace mgc {

namespace {

int rnd(std::mt19937_64& rng, int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Matrix rand_matrix(std::mt19937_64& rng, int rows, int cols, int span = 2) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rnd(rng, -span, span);
    return m;
}

Matrix rand_invertible(std::mt19937_64& rng, int n) {
    if (n == 0) return Matrix(0, 0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix m = rand_matrix(rng, n, n);
        if (rank(m) == n) return m;
    }
    throw GenerationFailure("could not sample an invertible matrix");
}

// Invertible chain self-maps of the form id + d h + h d, with their inverses.
struct Automorphism {
    std::map<int, Matrix> fwd, inv;
    Matrix at(int n, int d) const {
        auto it = fwd.find(n);
        return it == fwd.end() ? Matrix::identity(d) : it->second;
    }
    Matrix at_inv(int n, int d) const {
        auto it = inv.find(n);
        return it == inv.end() ? Matrix::identity(d) : it->second;
    }
};

Automorphism rand_automorphism(std::mt19937_64& rng, const ChainComplex& c) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::map<int, Matrix> h; // degree n -> matrix c_n -> c_{n+1}
        for (int n : c.degrees())
            if (c.dim(n + 1) > 0) h[n] = rand_matrix(rng, c.dim(n + 1), c.dim(n), 1);
        auto h_at = [&](int n, int rows, int cols) {
            auto it = h.find(n);
            return it == h.end() ? Matrix(rows, cols) : it->second;
        };
        Automorphism a;
        bool ok = true;
        for (int n : c.degrees()) {
            Matrix u = Matrix::identity(c.dim(n)) +
                       c.d(n + 1) * h_at(n, c.dim(n + 1), c.dim(n)) +
                       h_at(n - 1, c.dim(n), c.dim(n - 1)) * c.d(n);
            auto ui = solve(u, Matrix::identity(c.dim(n)));
            if (!ui) {
                ok = false;
                break;
            }
            a.fwd[n] = u;
            a.inv[n] = *ui;
        }
        if (ok) return a;
    }
    return Automorphism{}; // identity fallback
}

std::map<int, int> betti(const ChainComplex& c) { return homology(c).betti_table(); }

} // namespace

ChainComplex gen_chain(std::mt19937_64& rng, const GenConfig& cfg) {
    int width = rnd(rng, 1, 4);
    int a = rnd(rng, cfg.degree_lo, std::max(cfg.degree_lo, cfg.degree_hi - width + 1));
    int free_cap = std::max(0, cfg.max_dim - 2);
    std::map<int, int> frees, pairs; // pairs[n]: two-term summands n -> n-1
    for (int n = a; n < a + width; ++n) {
        frees[n] = rnd(rng, 0, std::min(2, free_cap));
        if (n > a) pairs[n] = rnd(rng, 0, 1);
    }
    ChainComplex c;
    auto pair_at = [&](int n) { return pairs.count(n) ? pairs[n] : 0; };
    for (int n = a; n < a + width; ++n) c.set_dim(n, pair_at(n + 1) + frees[n] + pair_at(n));
    for (int n = a + 1; n < a + width; ++n) {
        int e = pair_at(n);
        if (e == 0 || c.dim(n - 1) == 0) continue;
        Matrix d(c.dim(n - 1), c.dim(n));
        paste(d, Matrix::identity(e), 0, c.dim(n) - e);
        c.set_d(n, d);
    }
    // random change of basis in every degree
    std::map<int, Matrix> p, pinv;
    for (int n : c.degrees()) {
        p[n] = rand_invertible(rng, c.dim(n));
        pinv[n] = *solve(p[n], Matrix::identity(c.dim(n)));
    }
    ChainComplex out;
    for (int n : c.degrees()) out.set_dim(n, c.dim(n));
    for (int n : c.degrees())
        if (c.dim(n - 1) > 0) out.set_d(n, p.at(n - 1) * c.d(n) * pinv.at(n));
    out.validate();
    return out;
}

GradedComplex gen_graded(std::mt19937_64& rng, const GenConfig& cfg) {
    GradedComplex g;
    int nw = rnd(rng, 1, 3);
    int b = rnd(rng, cfg.weight_lo, std::max(cfg.weight_lo, cfg.weight_hi - nw + 1));
    for (int p = b; p < b + nw; ++p) g.set_part(p, gen_chain(rng, cfg));
    return g;
}

MixedComplex gen_mixed(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex out;
    int pieces = rnd(rng, 1, 3);
    int wlo = cfg.weight_lo + 1, whi = std::max(cfg.weight_lo + 1, cfg.weight_hi - 1);
    for (int i = 0; i < pieces; ++i) {
        int w = rnd(rng, wlo, whi);
        MixedComplex piece;
        switch (rnd(rng, 0, 3)) {
        case 0: piece = triv(insert_at_weight(gen_chain(rng, cfg), w)); break;
        case 1: piece = free_mixed(gen_chain(rng, cfg), w); break;
        case 2: piece = l_eps(insert_at_weight(gen_chain(rng, cfg), w)); break;
        default: piece = r_eps(insert_at_weight(gen_chain(rng, cfg), w)); break;
        }
        out = direct_sum(out, piece);
    }
    // conjugate eps by random chain automorphisms of the weight parts
    std::map<int, Automorphism> autos;
    for (int p : out.weights()) autos[p] = rand_automorphism(rng, out.part(p));
    auto auto_of = [&](int p) -> Automorphism& { return autos[p]; };
    MixedComplex twisted;
    twisted.underlying = out.underlying;
    for (const auto& [p, comps] : out.eps)
        for (const auto& [n, mat] : comps) {
            Matrix left = auto_of(p - 1).at(n + 1, out.part(p - 1).dim(n + 1));
            Matrix right = auto_of(p).at_inv(n, out.part(p).dim(n));
            twisted.set_eps(p, n, left * mat * right);
        }
    require_valid(twisted, "gen_mixed");
    return twisted;
}

FilteredComplex gen_filtered(std::mt19937_64& rng, const GenConfig& cfg, bool constant_tail) {
    FilteredComplex out;
    int width = rnd(rng, 1, 3);
    out.lo = rnd(rng, cfg.weight_lo, std::max(cfg.weight_lo, cfg.weight_hi - width + 1));
    out.hi = out.lo + width - 1;
    out.above = constant_tail ? FilteredComplex::Tail::ConstantAbove
                              : FilteredComplex::Tail::ZeroAbove;
    ChainComplex cur = gen_chain(rng, cfg);
    out.terms[out.hi] = cur;
    for (int p = out.hi - 1; p >= out.lo; --p) {
        SumDecomposition sd = direct_sum(cur, gen_chain(rng, cfg));
        out.trans[p] = sd.in_a.f;
        cur = sd.total;
        out.terms[p] = cur;
    }
    // conjugate terms' coordinates via chain automorphisms
    std::map<int, Automorphism> autos;
    for (int p = out.lo; p <= out.hi; ++p) autos[p] = rand_automorphism(rng, out.terms[p]);
    for (int p = out.lo; p < out.hi; ++p) {
        std::map<int, Matrix> t;
        ChainMap raw{out.terms[p + 1], out.terms[p], out.trans[p]};
        for (int n : raw.src.degrees()) {
            Matrix m = autos[p].at(n, out.terms[p].dim(n)) * raw.at(n) *
                       autos[p + 1].at_inv(n, out.terms[p + 1].dim(n));
            if (!m.is_zero()) t[n] = m;
        }
        out.trans[p] = std::move(t);
    }
    out.validate();
    return out;
}

// --- Suites ------------------------------------------------------------------

namespace {

using Check = std::function<std::optional<std::string>(std::mt19937_64&, const GenConfig&)>;

struct Property {
    std::string name;
    Check run;
};

std::string show(const std::map<int, int>& t) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [k, v] : t) {
        if (!first) os << ", ";
        os << k << ": " << v;
        first = false;
    }
    os << "}";
    return os.str();
}

// Shrinks a failing mixed object by trimming extreme weights, then embeds it.
std::string mixed_counterexample(const MixedComplex& m,
                                 const std::function<bool(const MixedComplex&)>& fails) {
    MixedComplex cur = m;
    bool progress = true;
    while (progress) {
        progress = false;
        auto ws = cur.weights();
        if (ws.size() <= 1) break;
        MixedComplex cut = naive_truncate(cur, Dir::Ge, ws.front() + 1);
        if (fails(cut)) {
            cur = cut;
            progress = true;
            continue;
        }
        cut = naive_truncate(cur, Dir::Le, ws.back() - 1);
        if (fails(cut)) {
            cur = cut;
            progress = true;
        }
    }
    return serialize(make_document(cur));
}

std::optional<std::string> fail(const std::string& msg) { return msg; }

// core ------------------------------------------------------------------------

std::optional<std::string> prop_chain_composites(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex a = gen_chain(rng, cfg), b = gen_chain(rng, cfg);
    tensor_chain(a, b).validate();
    hom_chain(a, b).validate();
    cone(identity_map(a)).validate();
    fiber(zero_map(a, b)).validate();
    shift(a, rnd(rng, -2, 2)).validate();
    direct_sum(a, b).total.validate();
    return std::nullopt;
}

std::optional<std::string> prop_cone_identity(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex a = gen_chain(rng, cfg);
    if (!homology(cone(identity_map(a))).is_acyclic())
        return fail("cone of the identity is not acyclic");
    return std::nullopt;
}

std::optional<std::string> prop_kunneth(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex a = gen_chain(rng, cfg), b = gen_chain(rng, cfg);
    auto ba = betti(a), bb = betti(b), bt = betti(tensor_chain(a, b));
    std::map<int, int> expect;
    for (auto [m, x] : ba)
        for (auto [k, y] : bb)
            if (x * y > 0) expect[m + k] += x * y;
    if (bt != expect)
        return fail("tensor homology " + show(bt) + " != Kunneth " + show(expect));
    return std::nullopt;
}

std::optional<std::string> prop_hom_dims(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex a = gen_chain(rng, cfg), b = gen_chain(rng, cfg);
    auto ba = betti(a), bb = betti(b), bh = betti(hom_chain(a, b));
    std::map<int, int> expect;
    for (auto [m, x] : ba)
        for (auto [k, y] : bb)
            if (x * y > 0) expect[k - m] += x * y;
    if (bh != expect)
        return fail("hom homology " + show(bh) + " != expected " + show(expect));
    return std::nullopt;
}

std::optional<std::string> prop_truncation(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex c = gen_chain(rng, cfg);
    int n = rnd(rng, cfg.degree_lo - 1, cfg.degree_hi + 1);
    auto bc = betti(c);
    Truncation ge = truncate_ge(c, n), le = truncate_le(c, n);
    ge.complex.validate();
    le.complex.validate();
    ge.map.validate();
    le.map.validate();
    // both models keep the homology at the cut degree itself
    std::map<int, int> ege, ele;
    for (auto [k, v] : bc) {
        if (k >= n) ege[k] = v;
        if (k <= n) ele[k] = v;
    }
    if (betti(ge.complex) != ege)
        return fail("truncate_ge homology " + show(betti(ge.complex)) + " != " + show(ege));
    if (betti(le.complex) != ele)
        return fail("truncate_le homology " + show(betti(le.complex)) + " != " + show(ele));
    return std::nullopt;
}

std::optional<std::string> prop_contractibility(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex c = gen_chain(rng, cfg);
    bool nh = is_null_homotopic(identity_map(c));
    if (nh != homology(c).is_acyclic())
        return fail("identity null-homotopic disagrees with acyclicity");
    return std::nullopt;
}

// mixed-laws --------------------------------------------------------------------

std::optional<std::string> prop_mixed_validate(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex a = gen_mixed(rng, cfg), b = gen_mixed(rng, cfg);
    if (auto v = validate_mixed(a))
        return fail("generated object violates " + v->rule);
    tensor_mixed(a, b);   // validates internally
    hom_mixed(a, b);      // validates internally
    require_valid(direct_sum(a, b), "direct_sum");
    require_valid(weight_shift(a, rnd(rng, -1, 1)), "weight_shift");
    require_valid(shift(a, rnd(rng, -1, 1)), "shift");
    return std::nullopt;
}

std::optional<std::string> prop_mixed_tensor_unit(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    auto fails = [](const MixedComplex& x) {
        return !(tensor_mixed(k_mixed(0), x) == x);
    };
    if (fails(m))
        return fail("k(0) (x) m != m; counterexample:\n" + mixed_counterexample(m, fails));
    return std::nullopt;
}

std::optional<std::string> prop_realization_mapping(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    auto lhs = betti(realization(m));
    auto rhs = betti(mapping_complex(k_mixed(0), m));
    if (lhs != rhs)
        return fail("|m| homology " + show(lhs) + " != Map(k(0), m) homology " + show(rhs));
    return std::nullopt;
}

std::optional<std::string> prop_tate_truncation(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    if (m.is_zero()) return std::nullopt;
    auto ws = m.weights();
    int p = rnd(rng, ws.front(), ws.back());
    auto base = betti(tate_realization(m));
    for (Dir dir : {Dir::Le, Dir::Ge}) {
        MixedComplex t = clever_truncate(m, dir, p);
        auto got = betti(tate_realization(t));
        if (got != base)
            return fail("Tate homology not preserved by window truncation at " +
                        std::to_string(p) + ": " + show(got) + " != " + show(base));
    }
    return std::nullopt;
}

std::optional<std::string> prop_convention(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    MixedComplex c = convert_convention(m, SignConvention::Anticommuting,
                                        SignConvention::Commuting);
    MixedComplex back = convert_convention(c, SignConvention::Commuting,
                                           SignConvention::Anticommuting);
    if (!(back == m)) return fail("sign-convention conversion does not round-trip");
    return std::nullopt;
}

// filtered-laws --------------------------------------------------------------------

std::optional<std::string> prop_filtered_validate(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex a = gen_filtered(rng, cfg, false);
    FilteredComplex b = gen_filtered(rng, cfg, true);
    a.validate();
    b.validate();
    for (const FilteredComplex* m : {&a, &b})
        for (int p = m->lo - 1; p <= m->hi; ++p) {
            ChainMap c1 = connecting(*m, p);
            c1.validate();
            ChainMap c2 = shift(connecting(*m, p + 1), 1);
            ChainMap sq = compose(c2, c1);
            for (int n : sq.src.degrees())
                if (!sq.at(n).is_zero()) return fail("connecting squared is nonzero");
        }
    return std::nullopt;
}

std::optional<std::string> prop_completion(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex m = gen_filtered(rng, cfg, rnd(rng, 0, 1) == 1);
    FilteredComplex c = complete(m);
    c.validate();
    if (!is_complete(c)) return fail("complete(m) is not complete");
    for (int p = m.lo - 1; p <= m.hi; ++p)
        if (betti(gr(m, p)) != betti(gr(c, p)))
            return fail("completion changed gr at " + std::to_string(p));
    return std::nullopt;
}

std::optional<std::string> prop_fil_tensor_unit(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex m = gen_filtered(rng, cfg, false);
    FilteredComplex t = tensor_fil(unit_fil(), m);
    t.validate();
    if (!(t == m)) return fail("unit (x)^fil m != m");
    return std::nullopt;
}

std::optional<std::string> prop_gr_additivity(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex a = gen_filtered(rng, cfg, false);
    FilteredComplex b = gen_filtered(rng, cfg, false);
    FilteredComplex t = tensor_fil(a, b);
    t.validate();
    std::map<int, std::map<int, int>> ga, gb;
    for (int i = a.lo - 1; i <= a.hi; ++i) ga[i] = betti(gr(a, i));
    for (int j = b.lo - 1; j <= b.hi; ++j) gb[j] = betti(gr(b, j));
    for (int p = t.lo - 1; p <= t.hi; ++p) {
        std::map<int, int> expect;
        for (auto& [i, bi] : ga) {
            auto itj = gb.end();
            for (auto it = gb.begin(); it != gb.end(); ++it)
                if (it->first == p - i) itj = it;
            if (itj == gb.end()) continue;
            for (auto [m, x] : bi)
                for (auto [k, y] : itj->second)
                    if (x * y > 0) expect[m + k] += x * y;
        }
        auto got = betti(gr(t, p));
        if (got != expect)
            return fail("gr additivity fails at weight " + std::to_string(p) + ": " +
                        show(got) + " != " + show(expect));
    }
    return std::nullopt;
}

std::optional<std::string> prop_fil_hom_unit(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex m = gen_filtered(rng, cfg, rnd(rng, 0, 1) == 1);
    FilteredComplex h = hom_fil(unit_fil(), m);
    h.validate();
    int lo = std::min(m.lo, h.lo) - 1, hi = std::max(m.hi, h.hi) + 1;
    for (int p = lo; p <= hi; ++p)
        if (betti(h.term(p)) != betti(m.term(p)))
            return fail("hom(unit, m) differs from m at index " + std::to_string(p));
    return std::nullopt;
}

std::optional<std::string> prop_beilinson_terms(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex m = gen_filtered(rng, cfg, rnd(rng, 0, 1) == 1);
    int n = rnd(rng, -2, 2);
    FilteredComplex le = beilinson_le(m, n);
    le.validate();
    for (int p = le.lo - 1; p <= le.hi + 1; ++p) {
        auto got = betti(le.term(p));
        std::map<int, int> expect;
        for (auto [k, v] : betti(m.term(p)))
            if (k <= n - p) expect[k] = v;
        if (got != expect)
            return fail("coconnective truncation term at " + std::to_string(p) + ": " +
                        show(got) + " != " + show(expect));
    }
    FilteredComplex ge = beilinson_ge(m, n);
    ge.validate();
    for (int p = ge.lo - 1; p <= ge.hi + 1; ++p) {
        auto got = betti(gr(ge, p));
        std::map<int, int> expect;
        for (auto [k, v] : betti(gr(m, p)))
            if (k >= n - p) expect[k] = v;
        if (got != expect)
            return fail("connective cover gr at " + std::to_string(p) + ": " + show(got) +
                        " != " + show(expect));
    }
    return std::nullopt;
}

// adjunction --------------------------------------------------------------------

std::optional<std::string> prop_gr_of_embedding(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    FilteredComplex f = to_filtered(m);
    for (int p = f.lo - 1; p <= f.hi + 1; ++p) {
        auto lhs = betti(gr(f, p));
        auto rhs = betti(shift(m.part(-p), -2 * p));
        if (lhs != rhs)
            return fail("gr(to_filtered(m), " + std::to_string(p) + ") homology " +
                        show(lhs) + " != " + show(rhs));
    }
    return std::nullopt;
}

std::optional<std::string> prop_counit(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    auto fails = [](const MixedComplex& x) {
        try {
            return !counit_check(x).verdict;
        } catch (const std::exception&) {
            return true;
        }
    };
    if (fails(m))
        return fail("counit comparison is not a weight-wise quasi-iso; counterexample:\n" +
                    mixed_counterexample(m, fails));
    return std::nullopt;
}

std::optional<std::string> prop_unit_dichotomy(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex a = gen_filtered(rng, cfg, false);
    if (!unit_check(a).verdict) return fail("unit fails on a zero-tail tower");
    FilteredComplex b = gen_filtered(rng, cfg, true);
    if (unit_check(b).verdict != is_complete(b))
        return fail("unit verdict disagrees with completeness on a constant-tail tower");
    return std::nullopt;
}

std::optional<std::string> prop_unit_fiber(std::mt19937_64& rng, const GenConfig& cfg) {
    FilteredComplex n = gen_filtered(rng, cfg, rnd(rng, 0, 1) == 1);
    auto lim = betti(limit_infty(n));
    for (int p = n.lo; p <= n.hi + 1; ++p)
        if (betti(unit_fiber(n, p)) != lim)
            return fail("unit fiber at " + std::to_string(p) + " is not the limit");
    return std::nullopt;
}

std::optional<std::string> prop_tate_colimit(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    if (!tate_via_colimit_check(m)) return fail("Tate realization != colimit of the tower");
    return std::nullopt;
}

// tstructure --------------------------------------------------------------------

std::optional<std::string> prop_postnikov_formula(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    int n = rnd(rng, -2, 2);
    MixedComplex ge = postnikov_truncate(m, Dir::Ge, n);
    MixedComplex le = postnikov_truncate(m, Dir::Le, n);
    std::set<int> ws;
    for (int q : m.weights()) ws.insert(q);
    for (int q : ge.weights()) ws.insert(q);
    for (int q : le.weights()) ws.insert(q);
    for (int q : ws) {
        // independent oracle: split the homology table of the weight part at n - q
        // (both truncations keep the class at the cut degree itself)
        std::map<int, int> ege, ele;
        for (auto [k, v] : betti(m.part(q))) {
            if (k >= n - q) ege[k] = v;
            if (k <= n - q) ele[k] = v;
        }
        auto got = betti(ge.part(q));
        if (got != ege)
            return fail("connective truncation at weight " + std::to_string(q) + ": " +
                        show(got) + " != " + show(ege));
        got = betti(le.part(q));
        if (got != ele)
            return fail("coconnective truncation at weight " + std::to_string(q) + ": " +
                        show(got) + " != " + show(ele));
    }
    return std::nullopt;
}

std::optional<std::string> prop_heart_round_trip(std::mt19937_64& rng, const GenConfig& cfg) {
    ChainComplex c = gen_chain(rng, cfg);
    MixedComplex h = chain_to_postnikov_heart(c);
    if (!(postnikov_heart_to_chain(h) == c))
        return fail("mixed heart does not round-trip");
    // the filtered-side extractor recovers the complex up to quasi-isomorphism;
    // over Q the iso class is pinned by dimensions and homology
    ChainComplex r = beilinson_heart_to_chain(chain_to_beilinson_heart(c));
    if (!(r.dims == c.dims && betti(r) == betti(c)))
        return fail("filtered heart does not round-trip");
    ChainComplex r2 = beilinson_heart_to_chain(to_filtered(h));
    if (!(r2.dims == c.dims && betti(r2) == betti(c)))
        return fail("the two heart extractors disagree through the bridge");
    return std::nullopt;
}

std::optional<std::string> prop_left_completeness(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    int top = 0;
    bool any = false;
    for (int q : m.weights())
        for (auto [k, v] : betti(m.part(q))) {
            top = any ? std::max(top, k + q) : k + q;
            any = true;
        }
    if (!any) return std::nullopt; // acyclic objects survive every truncation
    MixedComplex ge = postnikov_truncate(m, Dir::Ge, top + 1);
    for (int q : ge.weights())
        if (!betti(ge.part(q)).empty())
            return fail("truncation above the support bound is not weight-wise acyclic");
    MixedComplex le = postnikov_truncate(m, Dir::Le, top);
    for (int q : m.weights())
        if (betti(le.part(q)) != betti(m.part(q)))
            return fail("truncation at the support bound changed homology");
    return std::nullopt;
}

std::optional<std::string> prop_beilinson_incomplete(std::mt19937_64& rng, const GenConfig&) {
    FilteredComplex konst;
    konst.lo = 0;
    konst.hi = 0;
    konst.above = FilteredComplex::Tail::ConstantAbove;
    konst.terms[0] = k_chain(0);
    int n = rnd(rng, -2, 2);
    FilteredComplex t = beilinson_ge(konst, n);
    if (t.is_zero()) return fail("connective cover of the constant tower is zero");
    for (int p = t.lo - 1; p <= t.hi + 1; ++p)
        if (!betti(gr(t, p)).empty())
            return fail("constant tower cover has nonzero gr homology");
    FilteredComplex c = complete(t);
    for (int p = c.lo; p <= c.hi; ++p)
        if (!homology(c.term(p)).is_acyclic())
            return fail("completion of the constant tower cover is not acyclic");
    return std::nullopt;
}

// monoidal --------------------------------------------------------------------

// Tensor-of-towers instances grow multiplicatively, so the monoidal suite
// draws its towers one dimension size smaller to stay fast.
GenConfig trim(const GenConfig& cfg) {
    GenConfig t = cfg;
    t.max_dim = std::min(t.max_dim, 3);
    return t;
}

std::optional<std::string> prop_monoidality(std::mt19937_64& rng, const GenConfig& cfg0) {
    GenConfig cfg = trim(cfg0);
    FilteredComplex a = gen_filtered(rng, cfg, false);
    FilteredComplex b = gen_filtered(rng, cfg, false);
    if (!monoidal_comparison(a, b).verdict)
        return fail("to_mixed is not monoidal on this pair");
    return std::nullopt;
}

std::optional<std::string> prop_dualizability(std::mt19937_64& rng, const GenConfig& cfg) {
    MixedComplex m = gen_mixed(rng, cfg);
    MixedComplex n = gen_mixed(rng, cfg);
    if (!dualizability_check(m, n))
        return fail("dual(m) (x) n -> hom(m, n) is not a weight-wise quasi-iso");
    return std::nullopt;
}

std::optional<std::string> prop_completed_tensor(std::mt19937_64& rng, const GenConfig& cfg0) {
    GenConfig cfg = trim(cfg0);
    FilteredComplex a = gen_filtered(rng, cfg, false);
    FilteredComplex b = gen_filtered(rng, cfg, false);
    FilteredComplex lhs = complete(tensor_fil(a, b));
    FilteredComplex rhs = to_filtered(tensor_mixed(to_mixed(a), to_mixed(b)));
    int lo = std::min(lhs.lo, rhs.lo) - 1, hi = std::max(lhs.hi, rhs.hi) + 1;
    for (int p = lo; p <= hi; ++p)
        if (betti(lhs.term(p)) != betti(rhs.term(p)))
            return fail("completed tensor differs at index " + std::to_string(p));
    return std::nullopt;
}

std::map<std::string, std::vector<Property>> suite_table() {
    std::map<std::string, std::vector<Property>> t;
    t["core"] = {
        {"chain-composites-validate", prop_chain_composites},
        {"cone-of-identity-acyclic", prop_cone_identity},
        {"kunneth", prop_kunneth},
        {"hom-homology-dimensions", prop_hom_dims},
        {"truncation-homology", prop_truncation},
        {"contractibility-vs-acyclicity", prop_contractibility},
    };
    t["mixed-laws"] = {
        {"mixed-composites-validate", prop_mixed_validate},
        {"tensor-unit-strict", prop_mixed_tensor_unit},
        {"realization-vs-mapping-complex", prop_realization_mapping},
        {"tate-invariant-under-window-truncation", prop_tate_truncation},
        {"sign-convention-round-trip", prop_convention},
    };
    t["filtered-laws"] = {
        {"filtered-composites-validate", prop_filtered_validate},
        {"completion", prop_completion},
        {"tensor-unit-strict", prop_fil_tensor_unit},
        {"gr-additivity", prop_gr_additivity},
        {"hom-unit", prop_fil_hom_unit},
        {"beilinson-truncation-homology", prop_beilinson_terms},
    };
    t["adjunction"] = {
        {"gr-of-embedding", prop_gr_of_embedding},
        {"counit-equivalence", prop_counit},
        {"unit-dichotomy", prop_unit_dichotomy},
        {"unit-fiber-is-limit", prop_unit_fiber},
        {"tate-as-colimit", prop_tate_colimit},
    };
    t["tstructure"] = {
        {"postnikov-truncation-formula", prop_postnikov_formula},
        {"heart-round-trip", prop_heart_round_trip},
        {"left-completeness", prop_left_completeness},
        {"beilinson-non-left-complete", prop_beilinson_incomplete},
    };
    t["monoidal"] = {
        {"tensor-monoidality", prop_monoidality},
        {"dualizability", prop_dualizability},
        {"completed-tensor", prop_completed_tensor},
    };
    return t;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"core", "mixed-laws", "filtered-laws", "adjunction", "tstructure", "monoidal", "all"};
}

VerificationReport run_suite(const std::string& name, const GenConfig& cfg) {
    auto table = suite_table();
    std::vector<std::pair<std::string, Property>> plan; // (suite, property)
    if (name == "all") {
        for (auto& [s, props] : table)
            for (auto& p : props) plan.push_back({s, p});
    } else {
        auto it = table.find(name);
        if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
        for (auto& p : it->second) plan.push_back({name, p});
    }
    VerificationReport rep;
    rep.suite = name;
    rep.seed = cfg.seed;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const Property& prop = plan[i].second;
        PropertyResult res;
        res.name = plan[i].first + "/" + prop.name;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * (i + 1) +
                                7919ULL * static_cast<std::uint64_t>(trial));
            std::optional<std::string> failure;
            try {
                failure = prop.run(rng, cfg);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            if (failure) {
                res.failed += 1;
                if (rep.ok) {
                    rep.ok = false;
                    rep.failing_property = res.name;
                    rep.failing_trial = trial;
                    rep.counterexample = *failure;
                }
            } else {
                res.passed += 1;
            }
        }
        rep.properties.push_back(std::move(res));
    }
    return rep;
}

} // namespace mgc
