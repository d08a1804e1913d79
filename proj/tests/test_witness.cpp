#include <doctest.h>

#include "qhent/builders.hpp"
#include "qhent/witness.hpp"

using namespace qhent;

TEST_CASE("component torsion witness maps both ways") {
  auto g = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  auto w = SubgroupWitness::component_torsion(g, 2);
  CHECK(w.normal());

  auto x = g->encode(support_value({{1, scalar_value(3)}})); // order 2
  REQUIRE(w.contains(x));
  CHECK(w.embed(w.restrict_to_sub(x)) == x);

  auto y = g->encode(support_value({{0, scalar_value(1)}})); // order 6
  CHECK(!w.contains(y));
  auto py = w.project(y);
  // projection is multiplicative and sections back consistently
  CHECK(w.quotient_group()->multiply(py, py) == w.project(g->multiply(y, y)));
  CHECK(w.project(w.section(py)) == py);
}

TEST_CASE("tail witness with finite quotient") {
  auto g = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  auto t = SubgroupWitness::tail(g, 2);
  auto y = g->encode(support_value({{0, scalar_value(1)}}));
  CHECK(!t.contains(y));
  CHECK(t.contains(g->encode(support_value({{5, scalar_value(2)}}))));
  REQUIRE(t.quotient_group()->order() == 36);
  auto q = t.project(y);
  CHECK(t.project(t.section(q)) == q);
}

TEST_CASE("product factor witness") {
  auto p = build_group(product({quaternion8(), cyclic(3)}));
  auto f0 = SubgroupWitness::product_factor(p, 0);
  CHECK(f0.sub_group()->order() == 8);
  CHECK(f0.quotient_group()->order() == 3);
  auto fs = f0.as_finite_subgroup();
  REQUIRE(fs);
  CHECK(fs->size() == 8);
  CHECK(fs->verify_closed());
}

TEST_CASE("finite witness with coset quotient") {
  auto p = build_group(product({quaternion8(), cyclic(3)}));
  auto q8 = build_group(quaternion8());
  auto f0 = SubgroupWitness::product_factor(p, 0);
  auto minus1 = f0.embed(q8->encode(scalar_value(1)));
  auto wf = SubgroupWitness::finite(FiniteSubgroup::closure(p, {minus1}));
  CHECK(wf.normal());
  REQUIRE(wf.quotient_group()->order() == 12);
  auto any = p->encode(tuple_value({scalar_value(2), scalar_value(1)}));
  auto pr = wf.project(any);
  CHECK(wf.quotient_group()->multiply(pr, pr) == wf.project(p->multiply(any, any)));
}

TEST_CASE("full witness has trivial quotient") {
  auto g = build_group(cyclic(6));
  auto w = SubgroupWitness::full(g);
  CHECK(w.normal());
  CHECK(w.quotient_group()->order() == 1);
  CHECK(w.contains(g->encode(scalar_value(4))));
}
