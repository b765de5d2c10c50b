// Mixed complexes: weight-graded complexes with a square-zero weight-lowering,
// degree-raising operator eps (anticommuting with d). Monoidal structure,
// enrichment, realizations, weight truncations, and dualizability.
#pragma once

#include "mgc/graded.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mgc {

// Convention: eps_p at degree n maps (M_p)_n -> (M_{p-1})_{n+1}, with
// eps*eps = 0 and d*eps + eps*d = 0 (anticommuting).
struct MixedComplex {
    GradedComplex underlying;
    std::map<int, std::map<int, Matrix>> eps; // weight p -> (degree n -> matrix)

    ChainComplex part(int p) const { return underlying.part(p); }
    Matrix eps_at(int p, int n) const;
    void set_eps(int p, int n, Matrix m);

    std::vector<int> weights() const { return underlying.weights(); }
    bool is_zero() const { return underlying.is_zero(); }
    MixedComplex normalized() const;
    bool operator==(const MixedComplex& o) const;
};

struct MixedViolation {
    std::string rule; // "d", "eps shape", "eps^2", "d eps + eps d"
    int weight = 0;
    int degree = 0;
    std::string detail;
};

// Checks d^2 = 0, eps shapes, eps^2 = 0, d eps + eps d = 0; reports the first
// failing (weight, degree) instead of throwing.
std::optional<MixedViolation> validate_mixed(const MixedComplex& m);
// Throwing wrapper used internally by constructors.
void require_valid(const MixedComplex& m, const std::string& where);

enum class SignConvention { Commuting, Anticommuting };

// Multiplies eps by (-1)^n on degree-n inputs; converts between the convention
// where d and eps commute and the internal anticommuting one.
MixedComplex convert_convention(const MixedComplex& m, SignConvention from, SignConvention to);

// Weight-wise chain maps strictly commuting with eps.
struct MixedMap {
    MixedComplex src, tgt;
    std::map<int, std::map<int, Matrix>> f; // weight -> (degree -> matrix)

    ChainMap at_weight(int p) const;
    void set(int p, int n, Matrix m);
    void validate() const; // throws InvariantViolation
};

MixedMap mixed_identity(const MixedComplex& m);
MixedMap mixed_compose(const MixedMap& g, const MixedMap& f);
bool mixed_is_quasi_iso(const MixedMap& f);

GradedComplex oblv(const MixedComplex& m);
MixedComplex triv(const GradedComplex& g);

// (L_eps g)_p = g_p (+) g_{p+1}[1], eps the identity on the shifted summand;
// (R_eps g)_p = g_p (+) g_{p-1}[-1] dually.
MixedComplex l_eps(const GradedComplex& g);
MixedComplex r_eps(const GradedComplex& g);

// c in weight q and c[1] in weight q-1, eps the canonical isomorphism.
MixedComplex free_mixed(const ChainComplex& c, int q);

MixedComplex k_mixed(int q);
MixedComplex weight_shift(const MixedComplex& m, int q); // m((q))
MixedComplex shift(const MixedComplex& m, int k);        // chain-degree shift
MixedComplex direct_sum(const MixedComplex& a, const MixedComplex& b);

MixedComplex tensor_mixed(const MixedComplex& a, const MixedComplex& b);
MixedComplex hom_mixed(const MixedComplex& a, const MixedComplex& b);

// --- Totalization -----------------------------------------------------------

// Total complex over the given weights: the weight-w part in degree n
// contributes (M_w)_{n-2w}, differential d + eps. offset[(w, n)] locates that
// summand inside degree n of the total complex (weights ascending).
struct Totalization {
    ChainComplex total;
    std::map<std::pair<int, int>, int> offset;
};
Totalization totalize(const MixedComplex& m, const std::vector<int>& weights);

// |m|: totalization over the non-positive part of the support.
ChainComplex realization(const MixedComplex& m);
// |m|^t: totalization over the full (finite) support.
ChainComplex tate_realization(const MixedComplex& m);

// Enriched mapping complex Map(a,b) = |hom_mixed(a,b)|.
ChainComplex mapping_complex(const MixedComplex& a, const MixedComplex& b);
// Graded enrichment: weight-0 part of hom_graded.
ChainComplex mapping_complex_graded(const GradedComplex& a, const GradedComplex& b);

// NC^w(m)_p = |m((-p))| for p in [pmin, pmax].
GradedComplex ncw(const MixedComplex& m, int pmin = -4, int pmax = 4);

// --- Weight truncations -------------------------------------------------------

enum class Dir { Le, Ge };

// Window cut sigma_{<=p} / sigma_{>=p}; eps restricted to the window.
MixedComplex naive_truncate(const MixedComplex& m, Dir dir, int p);

// theta_{<=p}: weights < p unchanged, weight p replaced by the totalization of
// the weights >= p (shifted back by [-2p]), eps out of it given by eps_p on the
// lowest summand. theta_{>=p}: weights > p unchanged, weight p replaced by the
// totalization of the weights <= p, eps into it landing in that summand.
MixedComplex clever_truncate(const MixedComplex& m, Dir dir, int p);

// --- Duality --------------------------------------------------------------------

MixedComplex dual(const MixedComplex& m); // hom_mixed(m, k(0))

// Builds the strict comparison dual(m) (x) n -> hom_mixed(m, n) and tests it
// for weight-wise quasi-isomorphism.
bool dualizability_check(const MixedComplex& m, const MixedComplex& n);

} // namespace mgc
