#include <doctest.h>

#include "qhent/laws.hpp"

using namespace qhent;

namespace {

FiniteSubgroup block(const std::shared_ptr<const DescriptorGroup>& g,
                     std::size_t k) {
  std::vector<ElementCode> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(g->encode(
        support_value({{static_cast<std::int64_t>(i), scalar_value(1)}})));
  return FiniteSubgroup::closure(g, gens);
}

} // namespace

TEST_CASE("addition splits 6 = 2 * 3 across the 2-torsion part") {
  auto g6 = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  auto sh6 = Endomorphism::shift(g6, 1);
  ATInstance inst{sh6, SubgroupWitness::component_torsion(g6, 2),
                  {block(g6, 1), block(g6, 2)}};

  auto prof = addition_profile(inst);
  CHECK(prof.invariant == true);
  CHECK(prof.expects_equality);

  auto rep = check_addition(inst);
  CHECK(rep.verdict == Verdict::holds_exactly);
  CHECK(rep.lhs == 6);
  CHECK(rep.rhs == 6);

  CHECK(check_monotonicity(inst).verdict == Verdict::inequality_observed);
}

TEST_CASE("addition across a finite direct factor") {
  auto gp = build_group(
      product({quaternion8(), restricted_sum(cyclic(3), IndexSet::naturals)}));
  auto sum3 = build_group(restricted_sum(cyclic(3), IndexSet::naturals));
  auto diag = Endomorphism::diagonal(
      gp, {Endomorphism::identity(build_group(quaternion8())),
           Endomorphism::shift(sum3, 1)});
  std::vector<ElementCode> gens;
  for (std::uint64_t v : {2, 4})
    gens.push_back(gp->encode(tuple_value({scalar_value(v), support_value({})})));
  gens.push_back(gp->encode(
      tuple_value({scalar_value(0), support_value({{0, scalar_value(1)}})})));
  auto base = FiniteSubgroup::closure(gp, gens);
  REQUIRE(base.size() == 24);

  ATInstance inst{diag, SubgroupWitness::product_factor(gp, 0), {base}};
  auto rep = check_addition(inst);
  CHECK(rep.verdict == Verdict::holds_exactly);
  CHECK(rep.lhs == 3);
  CHECK(rep.rhs == 3);
}

TEST_CASE("degenerate split against the whole group") {
  auto gz = build_group(restricted_sum(cyclic(2), IndexSet::integers));
  auto shz = Endomorphism::shift(gz, 1);
  auto Fz = FiniteSubgroup::closure(
      gz, {gz->encode(support_value({{0, scalar_value(1)}}))});
  ATInstance inst{shz, SubgroupWitness::full(gz), {Fz}};
  auto rep = check_addition(inst);
  CHECK(rep.verdict == Verdict::holds_exactly);
  CHECK(rep.lhs == 2);
  CHECK(rep.rhs == 2);
}

TEST_CASE("identity has entropy zero along every base") {
  auto g6 = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  CHECK(check_identity_zero(g6, {block(g6, 2)}).verdict ==
        Verdict::holds_exactly);
}

TEST_CASE("conjugation invariance") {
  auto gz = build_group(restricted_sum(cyclic(2), IndexSet::integers));
  auto shz = Endomorphism::shift(gz, 1);
  auto Fz = FiniteSubgroup::closure(
      gz, {gz->encode(support_value({{0, scalar_value(1)}}))});
  CHECK(check_conjugation(shz, shz, {Fz}).verdict == Verdict::holds_exactly);
}

TEST_CASE("iterates multiply the exponent") {
  auto g3 = build_group(restricted_sum(cyclic(3), IndexSet::naturals));
  auto sh3 = Endomorphism::shift(g3, 1);
  for (std::uint64_t m : {1, 2, 3}) {
    auto rep = check_log_law(sh3, m, {block(g3, 1)});
    CHECK(rep.verdict == Verdict::holds_exactly);
    CHECK(rep.lhs == ipow_u64(3, m));
  }
}

TEST_CASE("value splits over primes") {
  auto g6 = build_group(restricted_sum(cyclic(6), IndexSet::naturals));
  auto sh6 = Endomorphism::shift(g6, 1);
  auto rep = check_prime_sum(sh6, {block(g6, 1), block(g6, 2)});
  CHECK(rep.verdict == Verdict::holds_exactly);
  CHECK(rep.lhs == 6);
  CHECK(rep.rhs == 6);
}

TEST_CASE("inverse against the modulus") {
  auto gz = build_group(restricted_sum(cyclic(3), IndexSet::integers));
  auto shz = Endomorphism::shift(gz, 1);
  auto Fz = FiniteSubgroup::closure(
      gz, {gz->encode(support_value({{0, scalar_value(1)}}))});
  auto rep = check_inverse_modulus(shz, Fz);
  CHECK(rep.verdict == Verdict::holds_exactly);
  CHECK(rep.lhs == 3);
  CHECK(rep.rhs == 3);
}
