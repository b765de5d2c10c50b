// Bounded chain complexes of finite-dimensional rational vector spaces,
// chain maps, homology, and the standard constructions (shift, cone, fiber,
// direct sum, tensor, hom, truncation, homotopy search).
#pragma once

#include "mgc/errors.hpp"
#include "mgc/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgc {

// Homological grading: d_n : C_n -> C_{n-1}.
struct ChainComplex {
    std::map<int, int> dims;     // degree -> dimension (only nonzero degrees need entries)
    std::map<int, Matrix> diff;  // n -> d_n, shape dim(n-1) x dim(n)

    int dim(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    // Materializes a zero matrix of the right shape when absent.
    Matrix d(int n) const;

    void set_dim(int n, int v) {
        if (v != 0) dims[n] = v;
        else dims.erase(n);
    }
    void set_d(int n, Matrix m);

    std::vector<int> degrees() const; // sorted degrees with dim > 0
    int min_deg() const;              // 0 when empty
    int max_deg() const;
    bool is_zero() const;

    // Drops zero dims and zero/empty differentials.
    ChainComplex normalized() const;
    bool operator==(const ChainComplex& o) const;

    // Throws InvariantViolation on shape mismatch or d*d != 0.
    void validate() const;
};

// Degree-0 chain map src -> tgt.
struct ChainMap {
    ChainComplex src, tgt;
    std::map<int, Matrix> f; // n -> f_n, shape tgt.dim(n) x src.dim(n)

    Matrix at(int n) const;
    void set(int n, Matrix m);

    // Throws InvariantViolation on shape mismatch or failure to commute with d.
    void validate() const;
};

ChainMap identity_map(const ChainComplex& c);
ChainMap zero_map(const ChainComplex& src, const ChainComplex& tgt);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap map_sum(const ChainMap& a, const ChainMap& b);        // same src/tgt
ChainMap map_scale(const Rational& s, const ChainMap& a);

// Degree-homogeneous collection of matrices between two complexes known from
// context: component at n maps src_n -> tgt_{n+deg}.
struct Dg {
    int deg = 0;
    std::map<int, Matrix> comp;

    Matrix at(int n, int rows, int cols) const;
    void set(int n, Matrix m);
};

// --- Homology -------------------------------------------------------------

struct HomologyTable {
    struct Degree {
        int betti = 0;
        Matrix reps;       // chain-level cycle representatives (dim(n) x betti)
        Matrix boundaries; // basis of im d_{n+1} (dim(n) x rank)
    };
    std::map<int, Degree> at; // degrees where the chain group is nonzero

    int betti(int n) const {
        auto it = at.find(n);
        return it == at.end() ? 0 : it->second.betti;
    }
    std::map<int, int> betti_table() const;
    bool is_acyclic() const;
};

HomologyTable homology(const ChainComplex& c);

// Matrix of H_n(f) in the representative bases of homology(src), homology(tgt).
std::map<int, Matrix> induced_homology_map(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

// --- Constructions ---------------------------------------------------------

// (c[k])_n = c_{n-k}, differential (-1)^k d.
ChainComplex shift(const ChainComplex& c, int k);
ChainMap shift(const ChainMap& f, int k);

struct SumDecomposition {
    ChainComplex total;
    ChainMap in_a, in_b, pr_a, pr_b;
};
SumDecomposition direct_sum(const ChainComplex& a, const ChainComplex& b);

// cone(f)_n = tgt_n (+) src_{n-1}, d(b,a) = (db + fa, -da).
ChainComplex cone(const ChainMap& f);
ChainMap cone_inclusion(const ChainMap& f); // tgt -> cone(f)

// fiber(f) = cone(f)[-1]: fiber_n = tgt_{n+1} (+) src_n, d(b,a) = (-db - fa, da).
ChainComplex fiber(const ChainMap& f);
ChainMap fiber_projection(const ChainMap& f); // fiber(f) -> src, (b,a) |-> a

// --- Tensor ----------------------------------------------------------------

struct BlockLayout {
    struct Block {
        int index;  // the free parameter (tensor: a-degree i; hom: source degree m)
        int offset; // start within the flattened degree
        int size;
    };
    std::vector<Block> blocks;
    int total = 0;
    int offset_of(int index) const; // -1 when absent
};

// Summands a_i (x) b_{n-i}, i ascending; block size dim(a_i)*dim(b_{n-i}),
// a-factor index outer in the Kronecker ordering.
BlockLayout tensor_layout(const ChainComplex& a, const ChainComplex& b, int n);

Matrix kron(const Matrix& a, const Matrix& b);

// d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy.
ChainComplex tensor_chain(const ChainComplex& a, const ChainComplex& b);

// u (x) v for homogeneous maps u: a -> a2 (degree du), v: b -> b2 (degree dv);
// block (i, n-i) carries sign (-1)^{dv*i}. Result degree du+dv between the
// tensor complexes.
Dg tensor_map_dg(const ChainComplex& a, const ChainComplex& b,
                 const ChainComplex& a2, const ChainComplex& b2,
                 int du, const std::map<int, Matrix>& u,
                 int dv, const std::map<int, Matrix>& v);
ChainMap tensor_map(const ChainMap& u, const ChainMap& v);

// --- Hom -------------------------------------------------------------------

// hom(a,b)_n = (+)_m Hom(a_m, b_{m+n}); m ascending, source basis index outer
// in the flattening of each Hom block. d(phi) = d_b phi - (-1)^{|phi|} phi d_a.
BlockLayout hom_layout(const ChainComplex& a, const ChainComplex& b, int n);
ChainComplex hom_chain(const ChainComplex& a, const ChainComplex& b);

// Post-composition by v: b -> b2 (degree dv): hom(a,b)_n -> hom(a,b2)_{n+dv},
// block m -> m given by kron(I, v_{m+n}).
Dg hom_post(const ChainComplex& a, const ChainComplex& b, const ChainComplex& b2,
            int dv, const std::map<int, Matrix>& v);

// Pre-composition by u: a2 -> a (degree du): hom(a,b)_n -> hom(a2,b)_{n+?}.
// Component at hom degree n lands in degree n+du and, when sign_by_hom_degree
// is set, carries the extra factor (-1)^n used by differentials of hom type.
Dg hom_pre(const ChainComplex& a, const ChainComplex& a2, const ChainComplex& b,
           int du, const std::map<int, Matrix>& u, bool sign_by_hom_degree = false);

// --- Truncation ------------------------------------------------------------

struct Truncation {
    ChainComplex complex;
    ChainMap map; // truncate_ge: inclusion into c; truncate_le: projection from c
};

// Kernel model of tau_{>=n}: degree n becomes ker(d_n).
Truncation truncate_ge(const ChainComplex& c, int n);
// Cokernel model of tau_{<=n}: degree n becomes coker(d_{n+1}), realized on a
// complement of im(d_{n+1}) spanned by standard basis vectors.
Truncation truncate_le(const ChainComplex& c, int n);

// Brutal truncations: keep degrees on one side, drop the rest.
ChainComplex naive_ge(const ChainComplex& c, int n);
ChainComplex naive_le(const ChainComplex& c, int n);

// --- Homotopy --------------------------------------------------------------

// H with f - g = d_tgt H + H d_src, when one exists.
std::optional<Dg> chain_homotopy(const ChainMap& f, const ChainMap& g);
bool is_null_homotopic(const ChainMap& f);

// The complex with Q in degree n.
ChainComplex k_chain(int n);

} // namespace mgc
