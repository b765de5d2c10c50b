#include "mgc/graded.hpp"
#include "mgc/errors.hpp"

#include <doctest.h>

using namespace mgc;

namespace {

std::map<int, int> betti(const ChainComplex& c) { return homology(c).betti_table(); }

} // namespace

TEST_CASE("graded unit and weight shifts") {
    GradedComplex u = k_graded(0);
    CHECK(u.weights() == std::vector<int>{0});
    CHECK(betti(u.part(0)) == std::map<int, int>{{0, 1}});
    GradedComplex w = weight_shift(u, 3);
    CHECK(w.weights() == std::vector<int>{3});
    CHECK(weight_shift(w, -3) == u);
}

TEST_CASE("graded tensor is weight-additive") {
    GradedComplex a = direct_sum(k_graded(0), k_graded(1));
    GradedComplex b = direct_sum(k_graded(2), insert_at_weight(k_chain(1), 0));
    GradedComplex t = tensor_graded(a, b);
    t.validate();
    CHECK(t.weights() == std::vector<int>{0, 1, 2, 3});
    CHECK(betti(t.part(0)) == std::map<int, int>{{1, 1}});
    CHECK(betti(t.part(1)) == std::map<int, int>{{1, 1}});
    CHECK(betti(t.part(2)) == std::map<int, int>{{0, 1}});
    CHECK(betti(t.part(3)) == std::map<int, int>{{0, 1}});
    // unit laws are strict
    CHECK(tensor_graded(k_graded(0), a) == a);
    CHECK(tensor_graded(a, k_graded(0)) == a);
}

TEST_CASE("graded hom lands in weight differences") {
    GradedComplex a = k_graded(1);
    GradedComplex b = insert_at_weight(k_chain(2), 3);
    GradedComplex h = hom_graded(a, b);
    h.validate();
    CHECK(h.weights() == std::vector<int>{2});
    CHECK(betti(h.part(2)) == std::map<int, int>{{2, 1}});
}

TEST_CASE("graded betti tables") {
    GradedComplex a = direct_sum(k_graded(0), insert_at_weight(k_chain(-1), 2));
    auto t = graded_betti(a);
    CHECK(t.size() == 2);
    CHECK(t.at(0) == std::map<int, int>{{0, 1}});
    CHECK(t.at(2) == std::map<int, int>{{-1, 1}});
}
