#include "eqslice/obstructions.hpp"

#include "eqslice/embeddings.hpp"
#include "eqslice/knot_table.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>

using namespace eqslice;

TEST_CASE("sum of two squares: spot values") {
  CHECK(sum_of_two_squares(0));
  CHECK(sum_of_two_squares(1));
  CHECK(sum_of_two_squares(2));
  CHECK_FALSE(sum_of_two_squares(3));
  CHECK(sum_of_two_squares(5));
  CHECK_FALSE(sum_of_two_squares(11));
  CHECK(sum_of_two_squares(17));
  CHECK(sum_of_two_squares(121));  // 11^2 + 0^2
  CHECK_FALSE(sum_of_two_squares(15));
  CHECK(two_squares_decomposition(17) == std::pair<Int, Int>{1, 4});
  CHECK_FALSE(two_squares_decomposition(11).has_value());
}

TEST_CASE("sum of two squares matches a sieve-based oracle up to 10^6") {
  // Mark every a^2 + b^2 and compare against the factorization route on the
  // smallest-prime-factor sieve; both oracles are independent of cpp_int.
  constexpr std::uint32_t kLimit = 1000000;
  std::vector<bool> reachable(kLimit + 1, false);
  for (std::uint64_t a = 0; a * a <= kLimit; ++a)
    for (std::uint64_t b = a; a * a + b * b <= kLimit; ++b) reachable[a * a + b * b] = true;

  std::vector<std::uint32_t> spf(kLimit + 1, 0);
  for (std::uint32_t i = 2; i <= kLimit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= kLimit; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  for (std::uint32_t m = 0; m <= kLimit; ++m) {
    bool expected = m <= 1;
    if (m > 1) {
      expected = true;
      std::uint32_t rest = m;
      while (rest > 1) {
        std::uint32_t p = spf[rest];
        int e = 0;
        while (rest % p == 0) {
          rest /= p;
          ++e;
        }
        if (p % 4 == 3 && e % 2 == 1) {
          expected = false;
          break;
        }
      }
    }
    if (expected != reachable[m]) FAIL("oracles disagree at ", m);
    if (m % 7919 == 0 || m < 100) CHECK(sum_of_two_squares(Int(m)) == expected);
  }
  // Dense comparison of the library path on a smaller prefix.
  for (std::uint32_t m = 0; m <= 20000; ++m)
    if (sum_of_two_squares(Int(m)) != reachable[m]) FAIL("library disagrees at ", m);
}

TEST_CASE("determinant obstruction levels") {
  CHECK(det_obstruction(121).level == VerdictLevel::DetObstructed);
  CHECK(det_obstruction(289).level == VerdictLevel::Inconclusive);
  CHECK(det_obstruction(225).level == VerdictLevel::DetObstructed);
  CHECK(det_obstruction(5).level == VerdictLevel::NotSlice);
  CHECK(det_obstruction(3).level == VerdictLevel::NotAmphichiralCandidate);
  CHECK(det_obstruction(1).level == VerdictLevel::Inconclusive);
  CHECK(det_obstruction(49).level == VerdictLevel::DetObstructed);
  CHECK_THROWS_AS(det_obstruction(4), std::invalid_argument);
  CHECK_THROWS_AS(det_obstruction(-3), std::invalid_argument);

  Verdict v = det_obstruction(289);
  CHECK(v.det_stage.root == 17);
  REQUIRE(v.det_stage.root_decomposition.has_value());
  CHECK(v.det_stage.root_decomposition->first * v.det_stage.root_decomposition->first +
            v.det_stage.root_decomposition->second * v.det_stage.root_decomposition->second ==
        17);
  Verdict blocked = det_obstruction(121);
  CHECK(blocked.det_stage.root_blocking_prime == 11);
}

namespace {

SigmaAction bundled_action() {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  return SigmaAction::from_presentation(p);
}

}  // namespace

TEST_CASE("sigma action on the printed witness class") {
  SigmaAction act = bundled_action();
  const SpincLattice& lattice = act.lattice();

  // Matrix-level checks of the printed odd vector first.
  CHECK(act.jplus() * fixtures::kOddWitness == fixtures::kWitnessClass);
  CHECK(act.jminus() * fixtures::kOddWitness == fixtures::kWitnessImage);

  auto image = act.apply(fixtures::kWitnessClass);
  CHECK(image == lattice.canonicalize(fixtures::kWitnessImage));

  // The computed lift reproduces the class exactly.
  auto lift = act.odd_lift(fixtures::kWitnessClass);
  for (const Int& x : lift) CHECK(x % 2 != 0);
  CHECK(act.jplus() * lift == lattice.canonicalize(fixtures::kWitnessClass));
}

TEST_CASE("sigma action is independent of the lift") {
  SigmaAction act = bundled_action();
  std::mt19937 rng(11111);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto& kernel = act.plus_solver().kernel_basis();
  REQUIRE(kernel.size() == 6);  // 12 edges - rank 6
  auto lift = act.odd_lift(fixtures::kWitnessClass);
  auto expected = act.apply_to_lift(lift);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Int> v = lift;
    for (const auto& k : kernel) {
      Int c = 2 * Int(coeff(rng));
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * k[i];
    }
    CHECK(act.apply_to_lift(v) == expected);
  }
}

TEST_CASE("sigma action squares to negation and fixes exactly one class") {
  SigmaAction act = bundled_action();
  OrbitStructure orbits = sigma_orbit_structure(act);
  CHECK(orbits.bijection);
  CHECK(orbits.square_is_negation);
  CHECK(orbits.fixed_classes == 1);
  REQUIRE(orbits.orbit_size_counts.count(4));
  CHECK(orbits.orbit_size_counts.at(4) == 72);
  CHECK(orbits.orbit_size_counts.size() == 2);  // sizes 1 and 4 only
  // The unique fixed class is the unique negation-fixed class.
  CHECK(act.lattice().negate_class(orbits.fixed_class_rep) == orbits.fixed_class_rep);
  CHECK(act.apply(orbits.fixed_class_rep) == orbits.fixed_class_rep);
}

TEST_CASE("metabolizer classes of the printed embeddings") {
  SigmaAction act = bundled_action();
  const SpincLattice& lattice = act.lattice();

  IntMatrix a1 = fixtures::kA1Transpose.transpose();
  ClassSet s1 = metabolizer_spinc(a1, lattice);
  CHECK(s1.size() == 17);
  ClassSet printed;
  for (const auto& u : fixtures::kMetabolizerA1) printed.insert(lattice.canonicalize(u));
  CHECK(printed == s1);

  // Closed under negation.
  for (const auto& rep : s1) CHECK(s1.count(lattice.negate_class(rep)) == 1);

  IntMatrix a2 = fixtures::kA2Transpose.transpose();
  CHECK(metabolizer_spinc(a2, lattice).size() == 17);
}

TEST_CASE("identity form metabolizer is the single all-ones class") {
  SpincLattice lattice(IntMatrix::identity(3));
  ClassSet s = metabolizer_spinc(IntMatrix::identity(3), lattice);
  REQUIRE(s.size() == 1);
  CHECK(*s.begin() == lattice.canonicalize(std::vector<Int>(3, 1)));
}

TEST_CASE("invariance fails for both embeddings of 12a1105, with the printed witness") {
  SigmaAction act = bundled_action();
  const SpincLattice& lattice = act.lattice();
  for (const IntMatrix& at : {fixtures::kA1Transpose, fixtures::kA2Transpose}) {
    ClassSet s = metabolizer_spinc(at.transpose(), lattice);
    InvarianceResult inv = check_invariance(s, act);
    CHECK_FALSE(inv.invariant);
    CHECK_FALSE(inv.violations.empty());
  }
  ClassSet s1 = metabolizer_spinc(fixtures::kA1Transpose.transpose(), lattice);
  InvarianceResult inv = check_invariance(s1, act);
  auto witness = lattice.canonicalize(fixtures::kWitnessClass);
  bool witness_violates = false;
  for (const auto& w : inv.violations) witness_violates = witness_violates || w == witness;
  CHECK(witness_violates);
}

TEST_CASE("invariance holds for the identity form") {
  // One-crossing toy: both reduced incidences are 1x2 with A+ = [[2]].
  SigmaAction act(IntMatrix{{1, -1}}, IntMatrix{{1, 1}});
  ClassSet s = metabolizer_spinc(IntMatrix::identity(1), SpincLattice(IntMatrix::identity(1)));
  CHECK(s.size() == 1);
  // Identity-form stages compose to no obstruction.
  CHECK(det_obstruction(1).level == VerdictLevel::Inconclusive);
  auto embeddings = enumerate_embeddings(IntMatrix::identity(1));
  REQUIRE(embeddings.size() == 1);
  SpincLattice lattice(IntMatrix::identity(1));
  ClassSet s_id = metabolizer_spinc(embeddings[0], lattice);
  // The class set of the identity form is a single self-negative class, so
  // any action squaring to negation fixes it.
  CHECK(s_id.size() == 1);
  CHECK(lattice.negate_class(*s_id.begin()) == *s_id.begin());
}

TEST_CASE("full pipeline on the bundled presentations") {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  Verdict v = full_pipeline(p);
  CHECK(v.level == VerdictLevel::NotEquivariantlySlice);
  REQUIRE(v.embeddings.size() == 2);
  for (const auto& e : v.embeddings) {
    CHECK(e.metabolizer_size == 17);
    CHECK_FALSE(e.invariant);
    CHECK_FALSE(e.violations.empty());
  }

  auto fig8 = load_presentation(fixtures::data_file("figure8.json"));
  Verdict v8 = full_pipeline(fig8);
  CHECK(v8.level == VerdictLevel::NotSlice);
  CHECK(v8.det_stage.det == 5);
  CHECK_FALSE(v8.det_stage.det_is_square);
}

TEST_CASE("full pipeline propagates validation failures") {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  std::swap(p.edges_minus[0].first, p.edges_minus[0].second);
  CHECK_THROWS_AS(full_pipeline(p), ValidationError);
}

TEST_CASE("knot census determinant verdicts") {
  auto rows = run_knot_table(builtin_knot_table());
  REQUIRE(rows.size() == 16);
  std::size_t obstructed = 0;
  for (const auto& r : rows) {
    CHECK(r.matches_category);
    if (r.det_stage == VerdictLevel::DetObstructed) ++obstructed;
    if (r.record.name == "12a_1105") CHECK(r.det_stage == VerdictLevel::Inconclusive);
    if (r.record.name == "8_9") CHECK(r.det_stage == VerdictLevel::Inconclusive);
    if (r.record.name == "10_123") CHECK(r.det_stage == VerdictLevel::DetObstructed);
  }
  CHECK(obstructed == 6);
}

TEST_CASE("knot table loads from the bundled json") {
  auto records = load_knot_table(fixtures::data_file("table16.json"));
  REQUIRE(records.size() == 16);
  auto builtin = builtin_knot_table();
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].name == builtin[i].name);
    CHECK(records[i].determinant == builtin[i].determinant);
    CHECK(records[i].category == builtin[i].category);
  }
}
