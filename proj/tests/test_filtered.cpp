#include "mgc/filtered.hpp"
#include "mgc/errors.hpp"

#include <doctest.h>

using namespace mgc;

namespace {

std::map<int, int> betti(const ChainComplex& c) { return homology(c).betti_table(); }

// The constant tower over Q[0] (every term Q[0], identity transitions).
FilteredComplex constant_tower() {
    FilteredComplex f;
    f.lo = 0;
    f.hi = 0;
    f.above = FilteredComplex::Tail::ConstantAbove;
    f.terms[0] = k_chain(0);
    return f;
}

} // namespace

TEST_CASE("tail accessors extend the materialized window") {
    FilteredComplex u = unit_fil();
    u.validate();
    CHECK(u.term(u.lo - 3) == u.term(u.lo)); // constant below
    CHECK(u.term(u.hi + 2).is_zero());       // zero above
    FilteredComplex c = constant_tower();
    c.validate();
    CHECK(c.term(5) == k_chain(0));
    CHECK(rank(c.transition_composite(4, -2).at(0)) == 1);
}

TEST_CASE("associated graded of the unit tower") {
    FilteredComplex u = unit_fil();
    CHECK(betti(gr(u, 0)) == std::map<int, int>{{0, 1}});
    CHECK(betti(gr(u, 1)).empty());
    CHECK(betti(gr(u, -1)).empty());
    GradedComplex all = gr_all(u);
    CHECK(all.weights() == std::vector<int>{0});
    // connecting maps compose to zero
    ChainMap c1 = connecting(u, -1);
    ChainMap c2 = shift(connecting(u, 0), 1);
    ChainMap sq = compose(c2, c1);
    for (int n : sq.src.degrees()) CHECK(sq.at(n).is_zero());
}

TEST_CASE("limits, colimits, completeness") {
    FilteredComplex u = unit_fil();
    CHECK(limit_infty(u).is_zero());
    CHECK(betti(colimit_neg_infty(u)) == std::map<int, int>{{0, 1}});
    CHECK(is_complete(u));

    FilteredComplex c = constant_tower();
    CHECK(betti(limit_infty(c)) == std::map<int, int>{{0, 1}});
    CHECK_FALSE(is_complete(c));
    FilteredComplex cc = complete(c);
    cc.validate();
    CHECK(is_complete(cc));
    for (int p = cc.lo; p <= cc.hi; ++p) CHECK(betti(cc.term(p)).empty());
    for (int p = c.lo - 1; p <= c.hi + 1; ++p)
        CHECK(betti(gr(cc, p)) == betti(gr(c, p)));
}

TEST_CASE("Day tensor: unit law and graded additivity") {
    FilteredComplex u = unit_fil();
    CHECK(tensor_fil(u, u) == u);

    // two-step tower Q[0] <- Q[0] (identity), zero above weight 1
    FilteredComplex a;
    a.lo = 0;
    a.hi = 1;
    a.above = FilteredComplex::Tail::ZeroAbove;
    a.terms[0] = k_chain(0);
    a.terms[1] = k_chain(0);
    a.trans[0][0] = Matrix::identity(1);
    a.validate();
    CHECK(tensor_fil(u, a) == a);

    FilteredComplex t = tensor_fil(a, a);
    t.validate();
    CHECK(betti(gr(t, 2)) == std::map<int, int>{{0, 1}});
    CHECK(betti(gr(t, 1)).empty());
    CHECK(betti(gr(t, 0)).empty());
    CHECK(betti(t.term(0)) == std::map<int, int>{{0, 1}});

    // constant tails are rejected
    CHECK_THROWS_AS(tensor_fil(u, constant_tower()), UnsupportedInput);
}

TEST_CASE("internal hom against the unit") {
    FilteredComplex a;
    a.lo = -1;
    a.hi = 1;
    a.above = FilteredComplex::Tail::ZeroAbove;
    a.terms[-1] = k_chain(0);
    a.terms[0] = k_chain(0);
    a.terms[1] = k_chain(1);
    a.trans[-1][0] = Matrix::identity(1);
    a.validate();
    FilteredComplex h = hom_fil(unit_fil(), a);
    h.validate();
    for (int p = std::min(a.lo, h.lo) - 1; p <= std::max(a.hi, h.hi) + 1; ++p)
        CHECK(betti(h.term(p)) == betti(a.term(p)));
}

TEST_CASE("filtration-aware truncations") {
    FilteredComplex u = unit_fil();
    CHECK(beilinson_le(u, 0) == u);
    CHECK(betti(beilinson_le(u, -1).term(0)).empty());
    FilteredComplex g = beilinson_ge(u, 0);
    g.validate();
    for (int p = g.lo - 1; p <= g.hi + 1; ++p) CHECK(betti(gr(g, p)) == betti(gr(u, p)));

    // connective cover of the constant tower: nonzero, all gr acyclic
    FilteredComplex c = constant_tower();
    for (int n = -2; n <= 2; ++n) {
        FilteredComplex t = beilinson_ge(c, n);
        t.validate();
        CHECK_FALSE(t.is_zero());
        for (int p = t.lo - 1; p <= t.hi + 1; ++p) CHECK(betti(gr(t, p)).empty());
        FilteredComplex tc = complete(t);
        for (int p = tc.lo; p <= tc.hi; ++p) CHECK(betti(tc.term(p)).empty());
    }
}

TEST_CASE("heart extraction rejects objects outside the heart") {
    FilteredComplex u = unit_fil();
    ChainComplex h = beilinson_heart_to_chain(u);
    CHECK(h == k_chain(0));
    FilteredComplex shifted = u;
    shifted.terms[0] = k_chain(1); // homology in degree 1 > -0
    CHECK_THROWS_AS(beilinson_heart_to_chain(shifted), NotInHeart);
}
