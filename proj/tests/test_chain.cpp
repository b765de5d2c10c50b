#include "mgc/chain.hpp"
#include "mgc/errors.hpp"

#include <doctest.h>

using namespace mgc;

namespace {

// 0 -> Q -> Q -> 0 with d = multiplication by s, in degrees [1, 0].
ChainComplex two_term(const Rational& s) {
    ChainComplex c;
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    Matrix d(1, 1);
    d.at(0, 0) = s;
    c.set_d(1, d);
    return c;
}

std::map<int, int> betti(const ChainComplex& c) { return homology(c).betti_table(); }

} // namespace

TEST_CASE("d squared is enforced") {
    ChainComplex c;
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_dim(2, 1);
    Matrix id1(1, 1);
    id1.at(0, 0) = 1;
    c.set_d(1, id1);
    c.set_d(2, id1);
    CHECK_THROWS_AS(c.validate(), InvariantViolation);
}

TEST_CASE("homology of small complexes") {
    CHECK(betti(k_chain(0)) == std::map<int, int>{{0, 1}});
    CHECK(betti(two_term(1)).empty());
    CHECK(betti(two_term(0)) == std::map<int, int>{{0, 1}, {1, 1}});

    // 0 -> Q -> Q^2 -> Q -> 0, d2 = (1,0)^T, d1 = (0,1): exact in the middle.
    ChainComplex c;
    c.set_dim(0, 1);
    c.set_dim(1, 2);
    c.set_dim(2, 1);
    Matrix d2(2, 1), d1(1, 2);
    d2.at(0, 0) = 1;
    d1.at(0, 1) = 1;
    c.set_d(2, d2);
    c.set_d(1, d1);
    c.validate();
    CHECK(betti(c).empty());
}

TEST_CASE("shift negates the differential and moves homology") {
    ChainComplex c = two_term(0);
    ChainComplex s = shift(c, 3);
    s.validate();
    CHECK(betti(s) == std::map<int, int>{{3, 1}, {4, 1}});
    CHECK(shift(shift(c, 3), -3) == c);
}

TEST_CASE("cone and fiber") {
    ChainComplex c = two_term(0);
    CHECK(homology(cone(identity_map(c))).is_acyclic());
    CHECK(is_null_homotopic(identity_map(cone(identity_map(c)))));
    // cone of the zero map is the direct sum with a shift
    ChainComplex z = cone(zero_map(c, c));
    CHECK(betti(z) == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
    // fiber = shifted-down cone
    ChainComplex f = fiber(identity_map(c));
    CHECK(homology(f).is_acyclic());
}

TEST_CASE("hom complex of spheres") {
    // Hom(Q[1], Q[0]) = Q concentrated in degree -1.
    ChainComplex h = hom_chain(k_chain(1), k_chain(0));
    h.validate();
    CHECK(betti(h) == std::map<int, int>{{-1, 1}});
    CHECK(betti(hom_chain(k_chain(0), k_chain(2))) == std::map<int, int>{{2, 1}});
}

TEST_CASE("tensor satisfies the Kunneth formula on a concrete pair") {
    ChainComplex a = two_term(0);           // H = Q[0] + Q[1]
    ChainComplex b = shift(two_term(0), 1); // H = Q[1] + Q[2]
    ChainComplex t = tensor_chain(a, b);
    t.validate();
    CHECK(betti(t) == std::map<int, int>{{1, 1}, {2, 2}, {3, 1}});
}

TEST_CASE("smart truncations keep one side of homology") {
    ChainComplex c = two_term(0); // H = Q[0] + Q[1]
    Truncation ge = truncate_ge(c, 1);
    ge.complex.validate();
    ge.map.validate();
    CHECK(betti(ge.complex) == std::map<int, int>{{1, 1}});
    Truncation le = truncate_le(c, 0);
    le.complex.validate();
    le.map.validate();
    CHECK(betti(le.complex) == std::map<int, int>{{0, 1}});
    CHECK(betti(truncate_ge(c, 2).complex).empty());
    CHECK(betti(truncate_le(c, -1).complex).empty());
}

TEST_CASE("chain homotopy solver") {
    ChainComplex c = two_term(1); // acyclic
    CHECK(is_null_homotopic(identity_map(c)));
    ChainComplex s = k_chain(0);
    CHECK_FALSE(is_null_homotopic(identity_map(s)));
    CHECK(chain_homotopy(identity_map(c), zero_map(c, c)).has_value());
}

TEST_CASE("induced map on homology") {
    ChainComplex c = two_term(0);
    auto ind = induced_homology_map(identity_map(c));
    CHECK(ind.at(0) == Matrix::identity(1));
    CHECK(ind.at(1) == Matrix::identity(1));
    CHECK(is_quasi_iso(identity_map(c)));
    CHECK_FALSE(is_quasi_iso(zero_map(c, c)));
}
