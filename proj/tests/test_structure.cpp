#include <doctest.h>

#include "qhent/structure.hpp"

using namespace qhent;

TEST_CASE("classification of the small fixtures") {
  auto z6 = build_group(cyclic(6));
  auto r1 = classify(z6);
  CHECK(r1.abelian == true);
  CHECK(r1.quasihamiltonian == true);
  CHECK(r1.hamiltonian == false);

  auto q8 = build_group(quaternion8());
  auto r2 = classify(q8);
  CHECK(r2.abelian == false);
  CHECK(r2.dedekind == true);
  CHECK(r2.hamiltonian == true);
  CHECK(r2.quasihamiltonian == true);

  // nonabelian group of order 27 with all subgroups permutable but a
  // non-normal subgroup
  auto iw = build_iwasawa(3, 2, 1, 1, cyclic(9));
  auto r3 = classify(iw);
  CHECK(r3.abelian == false);
  CHECK(r3.quasihamiltonian == true);
  CHECK(r3.hamiltonian == false);

  auto h48 = build_hamiltonian(cyclic(2), cyclic(3));
  CHECK(classify(h48).hamiltonian == true);

  auto qq = build_group(product({quaternion8(), quaternion8()}));
  CHECK(classify(qq).dedekind == false);

  // symmetric group on three letters: not quasihamiltonian
  auto s3 = build_group(semidirect(cyclic(3), 2, PowerActionDesc{2}));
  auto r6 = classify(s3);
  CHECK(r6.abelian == false);
  CHECK(r6.quasihamiltonian == false);
  CHECK(r6.dedekind == false);
}

TEST_CASE("direct decomposition of a hamiltonian group") {
  auto h48 = build_hamiltonian(cyclic(2), cyclic(3));
  auto dec = dedekind_baer_decompose(FiniteSubgroup::whole_group(h48));
  REQUIRE(dec);
  CHECK(dec->q8.size() == 8);
  CHECK(dec->b.size() == 2);
  CHECK(dec->d.size() == 3);

  // no decomposition for non-hamiltonian groups
  auto qz4 = build_group(product({quaternion8(), cyclic(4)}));
  CHECK(!dedekind_baer_decompose(FiniteSubgroup::whole_group(qz4)));
  auto s3 = build_group(semidirect(cyclic(3), 2, PowerActionDesc{2}));
  CHECK(!dedekind_baer_decompose(FiniteSubgroup::whole_group(s3)));
}

TEST_CASE("derived subgroup of the twisted build matches its prediction") {
  auto iw = build_iwasawa(3, 2, 1, 1, cyclic(9));
  auto rep = iwasawa_derived(iw);
  CHECK(rep.match);
  CHECK(rep.derived.size() == 3);
}

TEST_CASE("finite-conjugacy decision from the descriptor") {
  CHECK(fc_by_commutator(
            build_group(restricted_sum(quaternion8(), IndexSet::naturals)))
            .fc == true);
  CHECK(fc_by_commutator(
            build_group(semidirect(restricted_sum(cyclic(9), IndexSet::naturals),
                                   3, PowerActionDesc{4})))
            .fc == false);
}

TEST_CASE("primary decomposition of elements") {
  auto z30 = build_group(cyclic(30));
  auto pd = p_decompose_element(z30, z30->encode(scalar_value(1)));
  CHECK(pd.verified);
  REQUIRE(pd.parts.size() == 3);
  CHECK(pd.parts[0].prime == 2);
  CHECK(pd.parts[1].prime == 3);
  CHECK(pd.parts[2].prime == 5);
}

TEST_CASE("p-components of a finite group") {
  auto h48 = build_hamiltonian(cyclic(2), cyclic(3));
  auto whole = FiniteSubgroup::whole_group(h48);
  CHECK(p_component(whole, 2).size() == 16);
  CHECK(p_component(whole, 3).size() == 3);
}

TEST_CASE("prime factorization helper") {
  auto f = factorize_u64(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  CHECK(f[1] == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  CHECK(f[2] == std::pair<std::uint64_t, std::uint64_t>{5, 1});
}
