// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "trishape/measure.hpp"

using namespace trishape;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSphere = 4.0 * kPi;

// Frozen closed-form values, cross-checked against an independent script.
constexpr double kTau = 0.42547965609182187;
constexpr double kTallRight = 0.21634689593878548;
constexpr double kAcuteRegular = 0.3918265520306074;
constexpr double kSegmentArea = 0.07803752165497246;

}  // namespace

TEST_CASE("area quadrature basics") {
  const AreaEstimate whole = area_quadrature(predicate_whole_sphere(), {});
  CHECK(whole.area == doctest::Approx(kSphere).epsilon(1e-12));
  CHECK(whole.err <= 1e-12);

  QuadratureOptions opts;
  opts.tol = 1e-6;
  const AreaEstimate tall = area_quadrature(predicate_tall(ClusterId::one), opts);
  CHECK(std::fabs(tall.area - 2.0 * kPi) <= 1e-6 * kSphere);
  CHECK(tall.err <= 1e-6 * kSphere);

  opts.tol = 7e-8;
  opts.axis = ClusterId::two;
  const AreaEstimate cap = area_quadrature(predicate_obtuse_at(ClusterId::two), opts);
  CHECK(std::fabs(cap.area - kPi) <= 1e-6);
}

TEST_CASE("area quadrature rejects bad arguments") {
  QuadratureOptions opts;
  opts.tol = 1e-9;
  CHECK_THROWS_AS(area_quadrature(predicate_obtuse(), opts), InvalidInput);
  CHECK_THROWS_AS(area_quadrature(predicate_collinear(), {}), InvalidInput);
}

TEST_CASE("budget exhaustion carries the partial estimate") {
  QuadratureOptions opts;
  opts.tol = 1e-6;
  opts.max_patches = 500;
  try {
    area_quadrature(predicate_obtuse(), opts);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial_area() > 0.0);
    CHECK(e.partial_area() < kSphere);
    CHECK(e.achieved_err() > 1e-6 * kSphere);
    CHECK(e.patches_used() >= 500);
  }
}

TEST_CASE("arc fractions reproduce the restricted conditionals") {
  CHECK(arc_fraction(right_cap_boundary(ClusterId::one), predicate_tall_canonical()) ==
        doctest::Approx(kTallRight).epsilon(1e-9));
  CHECK(arc_fraction(right_cap_boundary(ClusterId::one), predicate_flat_canonical()) ==
        doctest::Approx(1.0 - kTallRight).epsilon(1e-9));
  CHECK(arc_fraction(meridian(ClusterId::one, MeridianKind::Isosceles),
                     predicate_obtuse()) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(arc_fraction(meridian(ClusterId::one, MeridianKind::Regular),
                     predicate_acute()) == doctest::Approx(kAcuteRegular).epsilon(1e-9));
  CHECK(arc_fraction(collinearity_equator(), predicate_tall_canonical()) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(arc_fraction(collinearity_equator(), predicate_whole_sphere()) ==
        doctest::Approx(1.0));
  // Same by symmetry on every cap circle.
  CHECK(arc_fraction(right_cap_boundary(ClusterId::three),
                     predicate_tall_canonical()) ==
        doctest::Approx(kTallRight).epsilon(1e-9));
}

TEST_CASE("region conditionals") {
  QuadratureOptions opts;
  opts.tol = 1e-5;
  opts.max_patches = std::size_t{1} << 26;
  const ProbabilityResult r =
      conditional(predicate_obtuse(), predicate_whole_sphere(), opts);
  CHECK(r.quad == doctest::Approx(0.75).epsilon(1e-4));

  const EventPredicate empty =
      predicate_and(predicate_tall(ClusterId::one), predicate_flat(ClusterId::one));
  CHECK_THROWS_AS(conditional(predicate_obtuse(), empty, opts), DivisionByZeroMeasure);
}

TEST_CASE("departure from independence") {
  QuadratureOptions opts;
  opts.tol = 1e-4;
  const EventPredicate tall = predicate_tall(ClusterId::one);
  CHECK(delta_independence(tall, tall, opts) == doctest::Approx(-0.25).epsilon(1e-3));
  CHECK(std::fabs(delta_independence(tall, predicate_orientation_positive(), opts)) <
        1e-3);
  CHECK(delta_independence(predicate_acute(), predicate_tall_canonical(), opts) ==
        doctest::Approx(kTau - 0.375).epsilon(2e-3));
}

TEST_CASE("closed forms") {
  CHECK(tau_closed_form() == doctest::Approx(kTau).epsilon(1e-14));
  CHECK(tau_printed_arcsin_form() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(segment_area_closed_form() == doctest::Approx(kSegmentArea).epsilon(1e-14));

  const double a13 = std::asin(1.0 / 3.0);
  CHECK(2.0 / kPi * a13 == doctest::Approx(kTallRight).epsilon(1e-14));
}

TEST_CASE("segment area by direct 2-d quadrature") {
  const SegmentArea s = tall_acute_segment_area(1e-10);
  CHECK(std::fabs(s.quadrature - s.closed_form) < 1e-8);
  CHECK(s.prob == doctest::Approx(0.5 - kTau).epsilon(1e-9));
}

TEST_CASE("joint table under the canonical convention") {
  const JointTable t = joint_table(ClusterConvention::canonical(), 2e-4);
  CHECK(std::fabs(t.tall_acute - (0.5 - kTau)) < 5e-4);
  CHECK(std::fabs(t.tall_obtuse - kTau) < 5e-4);
  CHECK(std::fabs(t.flat_acute - (kTau - 0.25)) < 5e-4);
  CHECK(std::fabs(t.flat_obtuse - (0.75 - kTau)) < 5e-4);
  const double slack = t.err_sum() + 1e-9;
  CHECK(std::fabs(t.sum() - 1.0) <= slack);
  CHECK(std::fabs(t.prob_tall() - 0.5) <= slack);
  CHECK(std::fabs(t.prob_flat() - 0.5) <= slack);
  CHECK(std::fabs(t.prob_acute() - 0.25) <= slack);
  CHECK(std::fabs(t.prob_obtuse() - 0.75) <= slack);
}

TEST_CASE("exact catalog identities") {
  const auto catalog = closed_form_catalog();
  const auto value = [&](const std::string& name) {
    for (const auto& r : catalog) {
      if (r.event == name) return *r.exact;
    }
    FAIL("missing catalog entry ", name);
    return 0.0;
  };

  CHECK(value("obtuse") == 0.75);
  CHECK(value("acute") == 0.25);
  CHECK(value("tall") == 0.5);
  CHECK(value("tall_and_acute") == doctest::Approx(0.5 - kTau).epsilon(1e-14));
  CHECK(value("flat_and_acute") == doctest::Approx(kTau - 0.25).epsilon(1e-14));
  CHECK(value("tall_and_obtuse") == doctest::Approx(kTau).epsilon(1e-14));
  CHECK(value("flat_and_obtuse") == doctest::Approx(0.75 - kTau).epsilon(1e-14));
  CHECK(value("delta_acute_tall") == doctest::Approx(kTau - 0.375).epsilon(1e-12));

  // Consistency identities on the exact values.
  CHECK(value("flat_and_acute") + value("tall_and_acute") ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(value("flat_and_obtuse") + value("tall_and_obtuse") ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(value("tall_and_acute") + value("tall_and_obtuse") ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(value("acute_given_tall") + value("obtuse_given_tall") ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(value("acute_given_flat") + value("obtuse_given_flat") ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(value("tall_given_right") + value("flat_given_right") ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(value("acute_given_regular") == doctest::Approx(kAcuteRegular).epsilon(1e-12));
  CHECK(value("obtuse_given_isosceles") == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(value("flat_given_collinear") == 0.5);

  // Complementarity through the conditionals.
  CHECK(value("acute_given_tall") == doctest::Approx(1.0 - 2.0 * kTau).epsilon(1e-12));
  CHECK(value("tall_given_obtuse") ==
        doctest::Approx(4.0 * kTau / 3.0).epsilon(1e-12));
}

TEST_CASE("every exact catalog entry is reproduced by its quadrature") {
  EvalOptions opts;
  opts.tol = 3e-4;
  for (const ProbabilityResult& r :
       evaluate_catalog(ClusterConvention::canonical(), opts)) {
    CHECK(r.quad >= -1e-12);
    if (r.event.rfind("delta", 0) != 0) CHECK(r.quad <= 1.0 + 1e-12);
    if (r.exact) {
      INFO("entry ", r.event);
      CHECK(std::fabs(r.quad - *r.exact) <= std::max(r.quad_err, 1e-6));
    }
  }
}

TEST_CASE("fixed and symmetrized conventions do not reproduce the published set") {
  const JointTable f = joint_table(ClusterConvention::fixed_cluster(ClusterId::one), 5e-4);
  // The fixed-cluster quadruple has its own closed form: tall&obtuse is
  // (2/pi) asin(1/sqrt 3).
  CHECK(f.tall_obtuse == doctest::Approx(kAcuteRegular).epsilon(5e-3));
  CHECK(std::fabs(f.tall_acute - 0.0745) > 5e-4);

  const JointTable s = joint_table(ClusterConvention::symmetrized(), 5e-4);
  CHECK(s.tall_obtuse == doctest::Approx(kAcuteRegular).epsilon(5e-3));
  const double slack = s.err_sum() + 1e-9;
  CHECK(std::fabs(s.sum() - 1.0) <= slack);
}

TEST_CASE("label-independent answers agree across conventions") {
  // Marginals and the unambiguous restricted conditionals must not depend on
  // the tall/flat labelling convention.
  for (ClusterId k : kAllClusters) {
    CHECK(arc_fraction(collinearity_equator(), predicate_tall(k)) ==
          doctest::Approx(0.5).epsilon(1e-9));
  }
  CHECK(arc_fraction(collinearity_equator(), predicate_tall_canonical()) ==
        doctest::Approx(0.5).epsilon(1e-9));
  // Obtuse given isosceles and acute given regular involve no tall/flat
  // labelling at all and hold on every meridian.
  for (ClusterId k : kAllClusters) {
    CHECK(arc_fraction(meridian(k, MeridianKind::Isosceles), predicate_obtuse()) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(arc_fraction(meridian(k, MeridianKind::Regular), predicate_acute()) ==
          doctest::Approx(kAcuteRegular).epsilon(1e-9));
  }
}

TEST_CASE("reconciliation report") {
  const ReconciliationReport r = build_reconciliation(5e-4);
  CHECK(r.matched_convention == "canonical");
  CHECK(r.arccos_form_matches);
  CHECK_FALSE(r.arcsin_form_matches);
  CHECK(r.tau_arcsin_form == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.delta_oracle == doctest::Approx(kTau - 0.375).epsilon(1e-12));
  CHECK(r.delta_paper_expr == doctest::Approx(0.375 - kTau).epsilon(1e-12));

  REQUIRE(r.quadruples.size() == 3);
  CHECK_FALSE(r.quadruples[0].matches_published_set);  // fixed1
  CHECK(r.quadruples[1].matches_published_set);        // canonical
  CHECK(r.quadruples[1].label_assignment.rfind("identity", 0) == 0);
  CHECK_FALSE(r.quadruples[2].matches_published_set);  // symmetrized

  for (const LabelAuditRow& row : r.section8) {
    // The published approximations carry the tall/flat swap throughout.
    CHECK(std::fabs(row.computed - row.paper_printed) > 5e-2);
  }
  CHECK(reconciliation_to_text(r).find("matched convention: canonical") !=
        std::string::npos);
}
