// The two functors between mixed and filtered complexes, the unit/counit
// comparison checks of the adjunction, the Postnikov truncations computed
// through the filtered side, heart extraction, and the monoidality and
// Tate-as-colimit comparisons.
#pragma once

#include "mgc/filtered.hpp"
#include "mgc/mixed.hpp"

#include <map>

namespace mgc {

// Per-index comparison maps, homotopies witnessing square commutation, and
// quasi-iso verdicts produced by the adjunction checks.
struct AdjunctionWitness {
    std::map<int, ChainMap> comparison;
    std::map<int, Dg> homotopies; // dh + hd = difference of the two composites
    std::map<int, bool> weightwise;
    bool verdict = false;
};

// term(p) = total complex of the weight <= -p part of m (differential d + eps);
// transitions are the summand inclusions; zero above -min_weight(m).
FilteredComplex to_filtered(const MixedComplex& m);

// weight p = gr(n, -p)[-2p]; eps = minus the connecting map, reindexed.
MixedComplex to_mixed(const FilteredComplex& n);

// Strict section m -> to_mixed(to_filtered(m)) of the counit,
// z |-> ((z, 0), -eps z); verdict: weight-wise quasi-iso (true for all valid m).
AdjunctionWitness counit_check(const MixedComplex& m);

// Per-index map n_p -> term p of to_filtered(to_mixed(n)) landing in the gr_p
// summand; transition squares commute up to the stored homotopies; verdict is
// a weight-wise quasi-iso test, true exactly when n is complete.
AdjunctionWitness unit_check(const FilteredComplex& n);
// Fiber of the index-p unit comparison; quasi-isomorphic to limit_infty(n).
ChainComplex unit_fiber(const FilteredComplex& n, int p);

// Postnikov truncation computed through the filtered side:
// tau_{<=n} = to_mixed(beilinson_le(to_filtered(m), n)) and dually with the
// connective cover. Weight-q homology matches the chain-level truncation of
// m_q at level n-q.
MixedComplex postnikov_truncate(const MixedComplex& m, Dir dir, int n);

// Heart of the Postnikov t-structure: index q component H_{-q}(m_q),
// differential induced by eps. NotInHeart unless every weight-q homology is
// concentrated in degree -q.
ChainComplex postnikov_heart_to_chain(const MixedComplex& m);
// Inverse constructor: c_q placed in degree -q of weight q, eps = d.
MixedComplex chain_to_postnikov_heart(const ChainComplex& c);
// Beilinson-heart model of a chain complex, through the bridge.
FilteredComplex chain_to_beilinson_heart(const ChainComplex& c);

// Weight-wise homology comparison of to_mixed(a (x)^fil b) against
// to_mixed(a) (x) to_mixed(b). Propagates UnsupportedInput from tensor_fil.
AdjunctionWitness monoidal_comparison(const FilteredComplex& a, const FilteredComplex& b);

// Homology of the Tate realization equals homology of the colimit of the
// associated filtered object.
bool tate_via_colimit_check(const MixedComplex& m);

} // namespace mgc
