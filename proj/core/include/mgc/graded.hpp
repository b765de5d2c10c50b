// Weight-graded complexes: finite families of chain complexes indexed by an
// integer weight, with weight shifts and the graded tensor/hom structure.
#pragma once

#include "mgc/chain.hpp"

#include <map>
#include <vector>

namespace mgc {

struct GradedComplex {
    std::map<int, ChainComplex> parts; // weight -> chain complex

    ChainComplex part(int p) const {
        auto it = parts.find(p);
        return it == parts.end() ? ChainComplex{} : it->second;
    }
    void set_part(int p, ChainComplex c) {
        if (c.is_zero() && c.diff.empty()) parts.erase(p);
        else parts[p] = std::move(c);
    }

    std::vector<int> weights() const; // sorted weights with nonzero part
    int min_weight() const;           // 0 when empty
    int max_weight() const;
    bool is_zero() const;

    GradedComplex normalized() const;
    bool operator==(const GradedComplex& o) const;
    void validate() const;
};

// Weight-wise chain map src -> tgt.
struct GradedMap {
    GradedComplex src, tgt;
    std::map<int, std::map<int, Matrix>> f; // weight -> (degree -> matrix)

    ChainMap at_weight(int p) const;
    void set(int p, int n, Matrix m);
    void validate() const;
};

GradedMap graded_identity(const GradedComplex& c);
GradedMap graded_compose(const GradedMap& g, const GradedMap& f);
bool graded_is_quasi_iso(const GradedMap& f);

GradedComplex insert_at_weight(const ChainComplex& c, int q);
// M((q))_p = M_{p-q}.
GradedComplex weight_shift(const GradedComplex& m, int q);
GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b);

// (a (x) b)_p = (+)_{i+j=p} a_i (x) b_j, i ascending.
GradedComplex tensor_graded(const GradedComplex& a, const GradedComplex& b);
// hom(a,b)_p = prod_q hom_chain(a_q, b_{q+p}), q ascending.
GradedComplex hom_graded(const GradedComplex& a, const GradedComplex& b);

// Summand offsets inside degree n of weight p of the graded tensor/hom.
// tensor: block index = a-weight i (summand a_i (x) b_{p-i});
// hom: block index = source weight q (summand hom(a_q, b_{q+p})).
BlockLayout tensor_weight_layout(const GradedComplex& a, const GradedComplex& b, int p, int n);
BlockLayout hom_weight_layout(const GradedComplex& a, const GradedComplex& b, int p, int n);

// Q in weight q, chain degree 0.
GradedComplex k_graded(int q);

// Weight -> (degree -> betti) for the nonzero entries.
std::map<int, std::map<int, int>> graded_betti(const GradedComplex& m);

} // namespace mgc
