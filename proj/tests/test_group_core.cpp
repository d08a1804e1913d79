#include <doctest.h>

#include "qhent/builders.hpp"
#include "qhent/subgroup.hpp"

using namespace qhent;

TEST_CASE("quaternion arithmetic and subgroups") {
  auto q8 = build_group(quaternion8());
  REQUIRE(q8->order() == 8);
  CHECK(q8->elements().size() == 8);

  auto enc = [&](std::uint64_t x) { return q8->encode(scalar_value(x)); };
  // codes: 1=0, -1=1, i=2, -i=3, j=4, -j=5, k=6, -k=7
  CHECK(q8->multiply(enc(2), enc(4)) == enc(6));  // i*j = k
  CHECK(q8->multiply(enc(4), enc(2)) == enc(7));  // j*i = -k
  CHECK(q8->multiply(enc(2), enc(2)) == enc(1));  // i^2 = -1
  CHECK(q8->order_of(enc(2)) == 4);
  CHECK(q8->order_of(enc(1)) == 2);

  auto z = FiniteSubgroup::closure(q8, {enc(1)});
  CHECK(z.size() == 2);
  auto q = quotient(FiniteSubgroup::whole_group(q8), z);
  CHECK(q.order() == 4);

  auto comm = commutator_subgroup(FiniteSubgroup::whole_group(q8));
  CHECK(comm.size() == 2);
  CHECK(comm.contains(enc(1)));
}

TEST_CASE("restricted sum arithmetic") {
  auto g = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  REQUIRE(!g->order());
  auto x = g->encode(support_value({{3, scalar_value(5)}}));
  CHECK(g->order_of(x) == 6);
  CHECK(g->pow(x, 6) == g->identity());
  CHECK(g->pow(x, -1) == g->pow(x, 5));
}

TEST_CASE("element code round trip and ordering") {
  auto g = build_group(cyclic(12));
  for (std::uint64_t v = 0; v < 12; ++v) {
    auto c = g->encode(scalar_value(v));
    CHECK(g->contains(c));
    CHECK(ElementCode::from_hex(c.hex()) == c);
  }
  auto els = g->elements();
  CHECK(els.size() == 12);
  CHECK(std::is_sorted(els.begin(), els.end()));
}

TEST_CASE("generalized index validates coset partitions") {
  auto z6 = build_group(cyclic(6));
  auto two = FiniteSubgroup::closure(z6, {z6->encode(scalar_value(3))});
  CHECK(generalized_index(FiniteSubgroup::whole_group(z6), two) == 3);
}

TEST_CASE("product sets and permutability") {
  auto q8 = build_group(quaternion8());
  auto enc = [&](std::uint64_t x) { return q8->encode(scalar_value(x)); };
  auto hi = FiniteSubgroup::closure(q8, {enc(2)});
  auto hj = FiniteSubgroup::closure(q8, {enc(4)});
  auto v = product_set(hi, hj);
  CHECK(v.size() == 8);
  CHECK(is_subgroup(v));
}

TEST_CASE("coset quotient canonicalization is consistent") {
  auto g = build_group(restricted_sum(cyclic(4), IndexSet::naturals));
  // kernel: order-2 elements supported at index 0
  auto k = FiniteSubgroup::closure(g, {g->encode(support_value({{0, scalar_value(2)}}))});
  CosetQuotientGroup q(g, k);
  auto a = g->encode(support_value({{0, scalar_value(1)}}));
  auto b = g->encode(support_value({{0, scalar_value(3)}}));
  CHECK(q.canonicalize(a) == q.canonicalize(b));
  CHECK(q.multiply(q.canonicalize(a), q.canonicalize(a)) == q.identity());
}
