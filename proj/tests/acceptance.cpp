// Acceptance gate: one pass/fail line per criterion. Usage:
//   acceptance <qhent-binary> <fixtures-dir>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhent/json_io.hpp"
#include "qhent/laws.hpp"

using namespace qhent;
using io::Json;

namespace {

std::string g_qhent;
std::string g_fixtures;
int g_failures = 0;

#define EXPECT(cond, msg)                                   \
  do {                                                      \
    if (!(cond)) throw std::runtime_error(std::string(msg)); \
  } while (0)

void criterion(int n, const std::string& title,
               const std::function<void()>& body) {
  try {
    body();
    std::printf("PASS %2d  %s\n", n, title.c_str());
  } catch (const std::exception& e) {
    std::printf("FAIL %2d  %s :: %s\n", n, title.c_str(), e.what());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::shared_ptr<const DescriptorGroup> fixture_group(const std::string& name) {
  return io::parse_group(
      io::load_json_file(g_fixtures + "/groups/" + name + ".json"));
}

EndoPtr fixture_endo(const std::string& name,
                     const std::shared_ptr<const DescriptorGroup>& g) {
  return io::parse_endo(
      io::load_json_file(g_fixtures + "/endos/" + name + ".json"), g);
}

std::vector<FiniteSubgroup> default_bases(
    const std::shared_ptr<const DescriptorGroup>& g) {
  return io::parse_bases_string(g->order() ? "cyclic" : "blocks:2", g);
}

bool certified(EntropyStatus s) {
  return s == EntropyStatus::certified_zero ||
         s == EntropyStatus::stabilized_window;
}

bool power_of(std::uint64_t b, std::uint64_t p) {
  while (b % p == 0) b /= p;
  return b == 1;
}

const std::vector<std::string> kGroupFixtures = {
    "q8",        "z4",           "z6",        "s3",        "z2cube",
    "sum_z2_N",  "sum_z3_N",     "sum_z5_N",  "sum_z6_N",  "sum_z2_Z",
    "sum_z3_Z",  "q8_x_sum_z3",  "hamiltonian48", "q8_x_z4", "iwasawa27",
    "qh_infinite"};

void c1_identity() {
  for (const auto& name : kGroupFixtures) {
    auto g = fixture_group(name);
    auto id = Endomorphism::identity(g);
    for (const auto& F : default_bases(g)) {
      auto e = entropy_along(id, F);
      EXPECT(e.beta == 1 && e.status == EntropyStatus::certified_zero,
             "identity not certified zero on " + name);
    }
  }
}

void c2_shift_indices() {
  for (std::uint64_t p : {2, 3, 5}) {
    auto g = fixture_group("sum_z" + std::to_string(p) + "_N");
    auto sh = fixture_endo("shift1", g);
    for (const auto& F : io::parse_bases_string("blocks:2", g)) {
      auto e = entropy_along(sh, F);
      EXPECT(e.beta == p, "wrong index for p=" + std::to_string(p));
      EXPECT(e.status == EntropyStatus::stabilized_window &&
                 e.reached_at <= 4,
             "shift not window-stable by level 4");
      for (auto b : e.betas)
        EXPECT(b >= 1 && power_of(b, p), "index not a power of p");
    }
  }
}

void c3_weak_decrease() {
  struct Combo {
    std::string group, endo;
    std::uint64_t iterate;
  };
  std::vector<Combo> combos = {
      {"sum_z2_N", "shift1", 1},  {"sum_z3_N", "shift1", 2},
      {"sum_z6_N", "shift1", 1},  {"sum_z6_N", "power2", 1},
      {"sum_z2_Z", "shift1", 1},  {"sum_z3_Z", "shift_auto", 2},
      {"q8_x_sum_z3", "id_x_shift1", 1},
  };
  for (const auto& c : combos) {
    auto g = fixture_group(c.group);
    auto phi = fixture_endo(c.endo, g)->iterate(c.iterate);
    for (const auto& F : io::parse_bases_string("blocks:2", g)) {
      auto t = trajectory(phi, F);
      EXPECT(t.subgroups, "trajectory left subgroup mode on " + c.group);
      for (std::size_t i = 1; i < t.betas.size(); ++i)
        EXPECT(t.betas[i] <= t.betas[i - 1],
               "index sequence increased on " + c.group);
    }
  }
}

void c4_oracle_equivalence() {
  struct Case {
    std::string group, endo;
  };
  std::vector<Case> cases = {
      {"sum_z2_Z", "shift1"}, {"sum_z3_Z", "shift1"},
      {"sum_z2_Z", "identity"}, {"sum_z3_Z", "identity"},
      {"z2cube", "rotate3"},
  };
  for (const auto& c : cases) {
    auto g = fixture_group(c.group);
    auto phi = fixture_endo(c.endo, g);
    auto maps = std::vector<EndoPtr>{phi};
    if (auto inv = phi->inverse()) maps.push_back(*inv);
    for (const auto& m : maps) {
      for (const auto& F : default_bases(g)) {
        auto et = entropy_along(m, F);
        auto el = limit_free_entropy(m, F);
        EXPECT(certified(et.status) && certified(el.status),
               "uncertified estimate on " + c.group);
        EXPECT(et.beta == el.beta,
               "oracle disagreement on " + c.group + " with " + c.endo);
      }
    }
  }
}

void c5_inverse_modulus() {
  for (const auto& name : {"sum_z2_Z", "sum_z3_Z"}) {
    auto g = fixture_group(name);
    auto phi = fixture_endo("shift1", g);
    for (const auto& F : io::parse_bases_string("blocks:2", g)) {
      auto rep = inverse_entropy_check(phi, F);
      EXPECT((rep.delta == Rational{1, 1}),
             "nontrivial modulus on a discrete group");
      EXPECT(rep.certified && rep.holds, "inverse identity failed");
      EXPECT(rep.forward.beta == rep.backward.beta,
             "forward and backward values differ");
    }
  }
}

void c6_log_law() {
  struct Case {
    std::string group, endo, bases;
  };
  std::vector<Case> cases = {{"sum_z3_N", "shift1", "blocks:1"},
                             {"sum_z2_Z", "shift1", "blocks:1"}};
  for (const auto& c : cases) {
    auto g = fixture_group(c.group);
    auto phi = fixture_endo(c.endo, g);
    auto bases = io::parse_bases_string(c.bases, g);
    for (std::uint64_t m : {1, 2, 3}) {
      auto rep = check_log_law(phi, m, bases);
      EXPECT(rep.verdict == Verdict::holds_exactly,
             "iterate law not exact for m=" + std::to_string(m));
    }
  }
}

void c7_prime_sum() {
  {
    auto g = fixture_group("sum_z6_N");
    auto rep = check_prime_sum(fixture_endo("shift1", g),
                               io::parse_bases_string("blocks:2", g));
    EXPECT(rep.verdict == Verdict::holds_exactly && rep.lhs == 6,
           "6 != 2 * 3");
  }
  {
    auto g = fixture_group("sum_z30_N");
    auto rep = check_prime_sum(fixture_endo("shift1", g),
                               io::parse_bases_string("blocks:1", g));
    EXPECT(rep.verdict == Verdict::holds_exactly && rep.lhs == 30,
           "30 != 2 * 3 * 5");
  }
}

void c8_addition_suite() {
  struct Case {
    std::string group, endo, witness;
    std::uint64_t expect;
  };
  std::vector<Case> equalities = {
      {"q8_x_sum_z3", "id_x_shift1", "factor0", 3},
      {"sum_z6_N", "shift1", "torsion2", 6},
      {"sum_z2_Z", "shift_auto", "full", 2},
  };
  for (const auto& c : equalities) {
    auto g = fixture_group(c.group);
    ATInstance inst{
        fixture_endo(c.endo, g),
        io::parse_witness(
            io::load_json_file(g_fixtures + "/witnesses/" + c.witness + ".json"),
            g),
        io::parse_bases_string("blocks:2", g)};
    auto prof = addition_profile(inst);
    EXPECT(prof.expects_equality, "no equality rule fired on " + c.group);
    auto rep = check_addition(inst);
    EXPECT(rep.verdict == Verdict::holds_exactly,
           "equality not exact on " + c.group);
    EXPECT(rep.lhs == c.expect && rep.rhs == c.expect,
           "wrong split on " + c.group);
  }
  // an instance whose hypotheses grant only the one-sided bound
  auto g3 = fixture_group("sum_z3_N");
  ATInstance weak{fixture_endo("shift1", g3),
                  io::parse_witness(
                      io::load_json_file(g_fixtures + "/witnesses/tail1.json"),
                      g3),
                  io::parse_bases_string("blocks:2", g3)};
  auto rep = check_monotonicity(weak);
  EXPECT(rep.verdict == Verdict::inequality_observed,
         "per-base bound not established");
}

void c9_structure_oracles() {
  struct Case {
    std::string name;
    bool hamiltonian;
  };
  std::vector<Case> cases = {
      {"q8", true},       {"z6", false},      {"z4", false},
      {"s3", false},      {"z2cube", false},  {"hamiltonian48", true},
      {"q8_x_z4", false}, {"iwasawa27", false}};
  for (const auto& c : cases) {
    auto g = fixture_group(c.name);
    EXPECT(g->order() && *g->order() <= 128, "fixture too large: " + c.name);
    auto cls = classify(g);
    EXPECT(cls.hamiltonian.has_value(), "classification undecided: " + c.name);
    EXPECT(*cls.hamiltonian == c.hamiltonian,
           "classification wrong on " + c.name);
    auto dec = dedekind_baer_decompose(FiniteSubgroup::whole_group(g));
    EXPECT(dec.has_value() == c.hamiltonian,
           "decomposition oracle disagrees with classification on " + c.name);
    if (dec)
      EXPECT(dec->q8.size() * dec->b.size() * dec->d.size() == *g->order(),
             "decomposition orders wrong on " + c.name);
  }
}

void c10_twisted_family() {
  std::size_t checked = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t n = 2; ipow_u64(p, n) <= 243; ++n) {
      for (std::uint64_t s = (p == 2 ? 2 : 1); s < n; ++s) {
        for (std::uint64_t m = (n > s ? n - s : 1);
             ipow_u64(p, n + m) <= 243; ++m) {
          auto g = build_iwasawa(p, n, m, s, cyclic(ipow_u64(p, n)));
          auto rep = iwasawa_derived(g);
          EXPECT(rep.match, "derived subgroup prediction failed at p=" +
                                std::to_string(p) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m) +
                                " s=" + std::to_string(s));
          ++checked;
        }
      }
    }
  }
  EXPECT(checked >= 8, "parameter sweep unexpectedly small");

  // infinite variant: truncations are quasihamiltonian, the full group is
  // not an FC-group
  auto desc = io::parse_descriptor(
      io::load_json_file(g_fixtures + "/groups/qh_infinite.json"));
  for (std::size_t k : {1, 2}) {
    auto t = build_group(truncate_descriptor(desc, k));
    auto cls = classify(t);
    EXPECT(cls.quasihamiltonian == true,
           "truncation not quasihamiltonian at k=" + std::to_string(k));
  }
  auto fc = fc_by_commutator(build_group(desc));
  EXPECT(fc.fc == false, "infinite fixture misreported as FC");
}

void c11_primary_roundtrip() {
  std::vector<GroupPtr> groups = {
      build_group(cyclic(360)), build_hamiltonian(cyclic(2), cyclic(15)),
      fixture_group("iwasawa27"), fixture_group("sum_z30_N")};
  std::size_t total = 0;
  for (const auto& g : groups) {
    for (const auto& x : sample_elements(g, 250, 5)) {
      auto dec = p_decompose_element(g, x);
      EXPECT(dec.verified, "decomposition certificate failed");
      ElementCode prod = g->identity();
      std::uint64_t last_prime = 0;
      for (const auto& part : dec.parts) {
        EXPECT(part.prime > last_prime, "parts not in prime order");
        last_prime = part.prime;
        EXPECT(power_of(part.order, part.prime), "part order not a prime power");
        prod = g->multiply(prod, part.part);
      }
      EXPECT(prod == x, "parts do not reassemble the element");
      ++total;
    }
  }
  EXPECT(total == 1000, "expected 1000 samples");
}

void c12_determinism() {
  auto run = [&](const std::string& out) {
    std::string cmd = g_qhent + " verify --suite " + g_fixtures +
                      "/verify_suite.json --format json --out " + out;
    int rc = std::system(cmd.c_str());
    EXPECT(rc == 0, "verify run failed: " + cmd);
  };
  run("acceptance_rep1.json");
  run("acceptance_rep2.json");
  auto a = io::load_json_file("acceptance_rep1.json");
  auto b = io::load_json_file("acceptance_rep2.json");
  EXPECT(a.contains("timing") && b.contains("timing"), "timing section missing");
  a.erase("timing");
  b.erase("timing");
  EXPECT(a.dump(2) == b.dump(2), "reports differ outside the timing section");
  EXPECT(a["results"]["violations"].get<std::uint64_t>() == 0,
         "bundled suite reported violations");
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <qhent-binary> <fixtures-dir>\n";
    return 2;
  }
  g_qhent = argv[1];
  g_fixtures = argv[2];

  criterion(1, "identity map is certified zero on every fixture base",
            c1_identity);
  criterion(2, "shifts on p-component sums stabilize at index p", c2_shift_indices);
  criterion(3, "index sequences decrease weakly", c3_weak_decrease);
  criterion(4, "trajectory and limit-free values agree on automorphisms",
            c4_oracle_equivalence);
  criterion(5, "inverse automorphisms match through a trivial modulus",
            c5_inverse_modulus);
  criterion(6, "iterates exponentiate the value for m in {1,2,3}", c6_log_law);
  criterion(7, "values split over primes: 6 = 2*3 and 30 = 2*3*5", c7_prime_sum);
  criterion(8, "addition identity holds when granted, bound otherwise",
            c8_addition_suite);
  criterion(9, "decomposition and normality oracles agree on small groups",
            c9_structure_oracles);
  criterion(10, "derived subgroups match the twisted-family prediction",
            c10_twisted_family);
  criterion(11, "primary decomposition round trips on 1000 seeded elements",
            c11_primary_roundtrip);
  criterion(12, "structured reports are byte-identical across runs",
            c12_determinism);

  return g_failures == 0 ? 0 : 1;
}
