#include <doctest.h>

#include "qhent/builders.hpp"
#include "qhent/morphism.hpp"

using namespace qhent;

namespace {
std::shared_ptr<const DescriptorGroup> sum_n(std::uint64_t m) {
  return build_group(restricted_sum(cyclic(m), IndexSet::naturals));
}
} // namespace

TEST_CASE("one-sided shift") {
  auto g = sum_n(3);
  auto sh = Endomorphism::shift(g, 1);
  auto x = g->encode(support_value({{0, scalar_value(1)}, {2, scalar_value(2)}}));
  CHECK(sh->apply(x) ==
        g->encode(support_value({{1, scalar_value(1)}, {3, scalar_value(2)}})));
  CHECK(!sh->verify_homomorphism());
  CHECK(sh->known_injective());
  CHECK(!sh->known_surjective());
  CHECK(!sh->inverse());
  CHECK(sh->iterate(3)->apply(x) ==
        g->encode(support_value({{3, scalar_value(1)}, {5, scalar_value(2)}})));
  CHECK_THROWS_AS(Endomorphism::shift(g, -1), DomainError);
}

TEST_CASE("two-sided shift is invertible") {
  auto gz = build_group(restricted_sum(cyclic(2), IndexSet::integers));
  auto shz = Endomorphism::shift(gz, 1);
  auto inv = shz->inverse();
  REQUIRE(inv);
  auto xz = gz->encode(support_value({{-1, scalar_value(1)}}));
  CHECK((*inv)->apply(shz->apply(xz)) == xz);
  auto aut = Endomorphism::declared_automorphism(shz, *inv);
  CHECK(aut->known_surjective());
}

TEST_CASE("power maps, kernels, images") {
  auto z6 = build_group(cyclic(6));
  auto p5 = Endomorphism::power_map(z6, 5);
  CHECK(!p5->verify_homomorphism());
  CHECK(p5->inverse());
  auto p2 = Endomorphism::power_map(z6, 2);
  CHECK(!p2->known_injective());
  CHECK(p2->kernel_in(FiniteSubgroup::whole_group(z6)).size() == 2);
  CHECK(p2->image_of(FiniteSubgroup::whole_group(z6)).size() == 3);
}

TEST_CASE("element tables catch non-homomorphisms") {
  auto q8 = build_group(quaternion8());
  auto enc = [&](std::uint64_t v) { return q8->encode(scalar_value(v)); };
  auto bad = Endomorphism::element_table(q8, {{enc(2), enc(4)}, {enc(4), enc(2)}});
  CHECK(bad->verify_homomorphism()); // witness pair found
  // swap i<->j, k<->-k extends to an automorphism
  auto good = Endomorphism::element_table(
      q8, {{enc(2), enc(4)}, {enc(4), enc(2)}, {enc(3), enc(5)},
           {enc(5), enc(3)}, {enc(6), enc(7)}, {enc(7), enc(6)}});
  CHECK(!good->verify_homomorphism());
  CHECK(good->known_injective());
}

TEST_CASE("restriction and induced quotient map through a factor witness") {
  auto prod = build_group(
      product({quaternion8(), restricted_sum(cyclic(3), IndexSet::naturals)}));
  auto diag = Endomorphism::diagonal(
      prod, {Endomorphism::identity(build_group(quaternion8())),
             Endomorphism::shift(sum_n(3), 1)});
  CHECK(!diag->verify_homomorphism());
  auto w0 = SubgroupWitness::product_factor(prod, 0);
  auto rep = diag->invariance(w0);
  CHECK(rep.invariant == true);
  CHECK(rep.stable == true);
  CHECK(rep.kernel_contained == true);

  auto r = restrict_endomorphism(diag, w0);
  CHECK(r->domain()->order() == 8);

  auto q = induced_quotient_map(diag, w0);
  REQUIRE(!q->domain()->order());
  auto qd = std::static_pointer_cast<const DescriptorGroup>(q->domain());
  CHECK(q->apply(qd->encode(support_value({{0, scalar_value(1)}}))) ==
        qd->encode(support_value({{1, scalar_value(1)}})));
}

TEST_CASE("invariance over a torsion witness") {
  auto g6 = sum_n(6);
  auto sh6 = Endomorphism::shift(g6, 1);
  auto wt = SubgroupWitness::component_torsion(g6, 2);
  auto rep = sh6->invariance(wt);
  CHECK(rep.invariant == true);
  CHECK(rep.stable == false);
  CHECK(rep.kernel_contained == true);

  auto r = restrict_endomorphism(sh6, wt);
  auto rd = std::static_pointer_cast<const DescriptorGroup>(r->domain());
  CHECK(r->apply(rd->encode(support_value({{0, scalar_value(1)}}))) ==
        rd->encode(support_value({{1, scalar_value(1)}})));
  CHECK(!induced_quotient_map(sh6, wt)->verify_homomorphism());
}

TEST_CASE("coordinate permutations compose and invert") {
  auto g = build_group(product({cyclic(2), cyclic(2), cyclic(2)}));
  auto rot = Endomorphism::coordinate_permutation(g, {1, 2, 0});
  auto inv = rot->inverse();
  REQUIRE(inv);
  auto x = g->encode(tuple_value({scalar_value(1), scalar_value(0), scalar_value(1)}));
  CHECK((*inv)->apply(rot->apply(x)) == x);
  CHECK(rot->iterate(3)->apply(x) == x);
}
