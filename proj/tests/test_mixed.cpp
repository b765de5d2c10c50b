#include "mgc/mixed.hpp"
#include "mgc/errors.hpp"

#include <doctest.h>

using namespace mgc;

namespace {

std::map<int, int> betti(const ChainComplex& c) { return homology(c).betti_table(); }

} // namespace

TEST_CASE("validation catches broken eps laws") {
    MixedComplex m = free_mixed(k_chain(0), 0);
    CHECK_FALSE(validate_mixed(m).has_value());
    // break eps^2 = 0 by extending the chain of isomorphisms
    MixedComplex bad = m;
    ChainComplex extra;
    extra.set_dim(2, 1);
    bad.underlying.set_part(-2, extra);
    bad.set_eps(-1, 1, Matrix::identity(1));
    auto v = validate_mixed(bad);
    REQUIRE(v.has_value());
    CHECK(v->rule == "eps^2");
}

TEST_CASE("trivial mixed structure is a section of the forgetful map") {
    GradedComplex g = direct_sum(k_graded(0), insert_at_weight(k_chain(1), -2));
    MixedComplex t = triv(g);
    CHECK(oblv(t) == g);
    CHECK(t.eps.empty());
}

TEST_CASE("one-sided Koszul resolutions of the graded unit") {
    MixedComplex l = l_eps(k_graded(0));
    CHECK(l.weights() == std::vector<int>{-1, 0});
    CHECK(betti(l.part(0)) == std::map<int, int>{{0, 1}});
    CHECK(betti(l.part(-1)) == std::map<int, int>{{1, 1}});
    CHECK(l.eps_at(0, 0) == Matrix::identity(1));

    MixedComplex r = r_eps(k_graded(0));
    CHECK(r.weights() == std::vector<int>{0, 1});
    CHECK(betti(r.part(1)) == std::map<int, int>{{-1, 1}});
    CHECK(r.eps_at(1, -1) == Matrix::identity(1));
}

TEST_CASE("free mixed objects") {
    MixedComplex f = free_mixed(k_chain(0), 1);
    CHECK(f.weights() == std::vector<int>{0, 1});
    CHECK(betti(f.part(1)) == std::map<int, int>{{0, 1}});
    CHECK(betti(f.part(0)) == std::map<int, int>{{1, 1}});
    CHECK(rank(f.eps_at(1, 0)) == 1);
}

TEST_CASE("mixed tensor: unit laws and a free-times-free product") {
    MixedComplex f = free_mixed(k_chain(0), 1);
    CHECK(tensor_mixed(k_mixed(0), f) == f);
    CHECK(tensor_mixed(f, k_mixed(0)) == f);
    MixedComplex t = tensor_mixed(f, f);
    CHECK(t.weights() == std::vector<int>{0, 1, 2});
    CHECK(t.part(2).dim(0) == 1);
    CHECK(t.part(1).dim(1) == 2);
    CHECK(t.part(0).dim(2) == 1);
    // Koszul complex of two exterior generators: the totalization is exact
    CHECK(betti(tate_realization(t)).empty());
}

TEST_CASE("realizations of weight twists of the unit") {
    CHECK(betti(realization(k_mixed(0))) == std::map<int, int>{{0, 1}});
    CHECK(betti(realization(k_mixed(-1))) == std::map<int, int>{{-2, 1}});
    CHECK(betti(realization(k_mixed(1))).empty());
    CHECK(betti(tate_realization(k_mixed(1))) == std::map<int, int>{{2, 1}});
}

TEST_CASE("mapping complexes against the unit") {
    MixedComplex m = l_eps(k_graded(0));
    CHECK(betti(mapping_complex(k_mixed(0), m)) == betti(realization(m)));
    CHECK(betti(mapping_complex(k_mixed(0), k_mixed(0))) == std::map<int, int>{{0, 1}});
}

TEST_CASE("weight-twist tower of the trivial unit") {
    GradedComplex n = ncw(k_mixed(0), -3, 4);
    for (int p = 0; p <= 4; ++p)
        CHECK(betti(n.part(p)) == std::map<int, int>{{-2 * p, 1}});
    for (int p = -3; p < 0; ++p) CHECK(n.part(p).is_zero());
}

TEST_CASE("window truncations") {
    MixedComplex f = free_mixed(k_chain(0), 1); // weights 1, 0
    MixedComplex lo = naive_truncate(f, Dir::Le, 0);
    CHECK(lo.weights() == std::vector<int>{0});
    CHECK(lo.eps.empty());
    CHECK(naive_truncate(f, Dir::Ge, 2).is_zero());
    // the smart window truncations of a free object at the cut are acyclic
    MixedComplex th = clever_truncate(f, Dir::Le, 0);
    for (int q : th.weights()) CHECK(betti(th.part(q)).empty());
    MixedComplex tg = clever_truncate(f, Dir::Ge, 1);
    for (int q : tg.weights()) CHECK(betti(tg.part(q)).empty());
}

TEST_CASE("sign convention conversion is an involution") {
    MixedComplex m = direct_sum(l_eps(k_graded(0)), free_mixed(k_chain(1), -1));
    MixedComplex c = convert_convention(m, SignConvention::Anticommuting, SignConvention::Commuting);
    CHECK(convert_convention(c, SignConvention::Commuting, SignConvention::Anticommuting) == m);
}

TEST_CASE("duality") {
    MixedComplex d = dual(k_mixed(2));
    CHECK(d == k_mixed(-2));
    CHECK(dualizability_check(free_mixed(k_chain(0), 0), l_eps(k_graded(0))));
    CHECK(dualizability_check(k_mixed(1), free_mixed(k_chain(-1), 2)));
}
