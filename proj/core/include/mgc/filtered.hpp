// Filtered complexes as eventually-constant towers ... -> M_{p+1} -> M_p -> ...
// (transition maps decrease the filtration index). Graded pieces, completion,
// Day-convolution tensor, internal hom, and the Beilinson t-structure.
#pragma once

#include "mgc/chain.hpp"
#include "mgc/graded.hpp"

#include <map>
#include <vector>

namespace mgc {

struct FilteredComplex {
    enum class Tail { ZeroAbove, ConstantAbove };

    int lo = 0, hi = 0;                       // materialized window
    Tail above = Tail::ZeroAbove;             // semantics for p > hi
    std::map<int, ChainComplex> terms;        // p in [lo, hi]
    std::map<int, std::map<int, Matrix>> trans; // p in [lo, hi): term(p+1) -> term(p)

    // Total accessors: below lo the tower is constant (identity transitions);
    // above hi it is zero or constant according to `above`.
    ChainComplex term(int p) const;
    ChainMap transition(int p) const;
    // Composite transition term(from) -> term(to), from >= to.
    ChainMap transition_composite(int from, int to) const;

    bool is_zero() const;
    void validate() const;
    bool operator==(const FilteredComplex& o) const;
};

struct FilteredMap {
    FilteredComplex src, tgt;
    std::map<int, std::map<int, Matrix>> f; // p -> components

    ChainMap at(int p) const; // clamps outside the stored window
    void set(int p, int n, Matrix m);
    void validate() const; // throws InvariantViolation
};

FilteredMap filtered_identity(const FilteredComplex& m);
bool filtered_is_quasi_iso(const FilteredMap& f);

ChainComplex limit_infty(const FilteredComplex& m);
ChainComplex colimit_neg_infty(const FilteredComplex& m);

// Graded piece gr(m, p) = cone(term(p+1) -> term(p)).
ChainComplex gr(const FilteredComplex& m, int p);
// Boundary map gr(m,p) -> gr(m,p+1)[1], (y, x) |-> (x, 0); a strict chain map
// with connecting o connecting = 0.
ChainMap connecting(const FilteredComplex& m, int p);
GradedComplex gr_all(const FilteredComplex& m); // weight p -> gr(m, p)

bool is_complete(const FilteredComplex& m);
// Replaces each term by cone(limit -> term(p)); marks ZeroAbove.
FilteredComplex complete(const FilteredComplex& m);

// Day convolution: weight p is the cokernel of the staircase map
// (+)_{i+j=p+1} a_i (x) b_j -> (+)_{i+j=p} a_i (x) b_j. Requires both inputs
// to have degree-wise injective transitions and a zero tail (UnsupportedInput
// otherwise); summands ordered by descending a-index so that
// unit_fil (x) m = m strictly.
FilteredComplex tensor_fil(const FilteredComplex& a, const FilteredComplex& b);

// Internal hom: weight p = fiber of the end comparison
// (+)_q hom(a_q, b_{p+q}) -> (+)_q hom(a_{q+1}, b_{p+q}) over a window where
// both tails have stabilized.
FilteredComplex hom_fil(const FilteredComplex& a, const FilteredComplex& b);

// The tensor unit: Q in degree 0 for p <= 0, zero above.
FilteredComplex unit_fil();

// Right adjoint to gr_all: term(p) = g_{-p}[-2p], zero transitions.
FilteredComplex r_fil(const GradedComplex& g);

// Beilinson coconnective truncation tau^B_{<=n}: weight p is the image-model
// truncation of term(p) below homological degree n-p (degrees <= n-p kept,
// im d placed one degree up); transitions are strictly functorial. Output is
// always eventually zero above.
FilteredComplex beilinson_le(const FilteredComplex& m, int n);

// Beilinson connective cover tau^B_{>=n} via decalage on towers with
// degree-wise injective transitions: degree k of weight p is
// { x in im(term(r) -> term(p)) : dx in im(term(r') -> term(p)) } with
// r = max(p, n-k), r' = max(p, n-k+1). UnsupportedInput when transitions are
// not injective.
FilteredComplex beilinson_ge(const FilteredComplex& m, int n);

// Heart of the Beilinson t-structure: degree -p component H_{-p}(gr(m,p)),
// differential induced by the connecting maps. NotInHeart when m fails the
// heart conditions (term(p) (-p)-coconnective, gr(m,p) (-p)-connective).
ChainComplex beilinson_heart_to_chain(const FilteredComplex& m);

} // namespace mgc
