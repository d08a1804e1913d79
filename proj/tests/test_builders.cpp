#include <doctest.h>

#include "qhent/builders.hpp"
#include "qhent/subgroup.hpp"

using namespace qhent;

TEST_CASE("twisted builder enforces its parameter constraints") {
  auto iw = build_iwasawa(3, 2, 1, 1, cyclic(9));
  REQUIRE(iw->order() == 27);
  CHECK(!iw->abelian_hint());

  auto params = iwasawa_params(*iw->descriptor());
  REQUIRE(params);
  CHECK(params->p == 3);
  CHECK(params->n == 2);
  CHECK(params->m == 1);
  CHECK(params->s == 1);

  auto comm = commutator_subgroup(FiniteSubgroup::whole_group(iw));
  CHECK(comm.size() == 3);

  CHECK_THROWS_AS(build_iwasawa(2, 3, 2, 1, cyclic(8)), DomainError);  // p=2 needs s>=2
  CHECK_THROWS_AS(build_iwasawa(3, 2, 1, 2, cyclic(9)), DomainError);  // s < n
  CHECK_THROWS_AS(build_iwasawa(3, 3, 1, 1, cyclic(27)), DomainError); // n <= s+m
  CHECK_THROWS_AS(build_iwasawa(3, 2, 1, 1, cyclic(3)), DomainError);  // wrong exponent
  CHECK_THROWS_AS(build_iwasawa(4, 2, 1, 1, cyclic(16)), DomainError); // p prime
}

TEST_CASE("hamiltonian builder shape") {
  auto h = build_hamiltonian(cyclic(2), cyclic(3));
  CHECK(h->order() == 48);
  CHECK_THROWS_AS(build_hamiltonian(cyclic(4), cyclic(3)), DomainError); // exp > 2
  CHECK_THROWS_AS(build_hamiltonian(cyclic(2), cyclic(6)), DomainError); // even part
}

TEST_CASE("structural quotient divides component moduli") {
  auto sq = structural_quotient(restricted_sum(cyclic(9), IndexSet::naturals), 9);
  CHECK(abelian_exponent(*sq) == 1);
  auto sq2 = structural_quotient(cyclic(12), 2);
  CHECK(std::get<CyclicDesc>(sq2->node).modulus == 6);
}

TEST_CASE("truncation turns sums into finite powers") {
  auto t = truncate_descriptor(restricted_sum(cyclic(3), IndexSet::naturals), 4);
  auto g = build_group(t);
  CHECK(g->order() == 81);
}

TEST_CASE("sampling is deterministic and in-domain") {
  auto g = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  auto a = sample_elements(g, 32, 7);
  auto b = sample_elements(g, 32, 7);
  CHECK(a == b);
  for (const auto& x : a) CHECK(g->contains(x));
  auto c = sample_elements(g, 32, 8);
  CHECK(a != c);
}
