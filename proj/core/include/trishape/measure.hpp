// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// Probability engine for the uniform measure on the shape sphere: adaptive
// spherical quadrature of region areas, arc-length integration for
// conditionals restricted to curves, the closed-form catalog of every event
// probability, and the reconciliation report that documents where the
// published expressions and value tables disagree with the quadrature and
// Monte Carlo oracles.
//
// All probabilities of joint tall/flat statements depend on which cluster
// "tall" refers to.  Three conventions are supported:
//   fixed k      - tall/flat always judged in the frame of cluster k;
//   canonical    - judged in the frame of the median-side cluster (the
//                  cell-canonical labelling of the 12-segment tessellation);
//   symmetrized  - the average of the three fixed-cluster assignments.
// The canonical convention is the one that reproduces the published joint
// quadruple; the reconciliation report states this with the evidence.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trishape/montecarlo.hpp"
#include "trishape/regions.hpp"

namespace trishape {

struct QuadratureOptions {
  double tol = 1e-6;  // target error bound as a fraction of the sphere area
  std::size_t max_patches = std::size_t{1} << 22;
  ClusterId axis = ClusterId::one;  // frame whose poles the grid uses
  int init_cols = 18;
  int init_rows = 9;
};

struct AreaEstimate {
  double area = 0.0;
  double err = 0.0;  // bound: half the total area of unresolved patches
  std::size_t patches = 0;
};

// Area of the region where pred holds, by recursive subdivision of
// longitude-latitude patches in the (phi, z) chart (where patch area is
// exactly dphi * dz).  A 3x3 stencil per patch decides membership; patches
// whose samples disagree are split along the more informative dimension
// until the unresolved band is below tolerance.  Throws BudgetExceeded with
// the partial estimate when max_patches is hit first.
AreaEstimate area_quadrature(const EventPredicate& pred,
                             const QuadratureOptions& opts = {});

// Fraction of the curve's arc length on which pred holds.  Membership
// changes located by scanning 4096 intervals and bisecting each flip to
// param_tol.  The curve must be constant-speed (all curves in regions.hpp
// are).
double arc_fraction(const SphereCurve& curve, const EventPredicate& pred,
                    double param_tol = 1e-12);

struct ClusterConvention {
  enum class Kind { Fixed, Canonical, Symmetrized };
  Kind kind = Kind::Canonical;
  ClusterId fixed = ClusterId::one;

  static ClusterConvention fixed_cluster(ClusterId k) {
    return {Kind::Fixed, k};
  }
  static ClusterConvention canonical() { return {Kind::Canonical, ClusterId::one}; }
  static ClusterConvention symmetrized() {
    return {Kind::Symmetrized, ClusterId::one};
  }
  std::string name() const;
  static ClusterConvention parse(const std::string& name);  // throws InvalidInput
};

struct ProbabilityResult {
  std::string event;
  std::optional<double> exact;
  std::string exact_expr;
  double quad = 0.0;
  double quad_err = 0.0;
  std::optional<double> mc;
  std::optional<double> mc_stderr;
  std::optional<double> paper_value;
  std::string convention;
};

struct JointTable {
  double tall_acute = 0.0;
  double tall_obtuse = 0.0;
  double flat_acute = 0.0;
  double flat_obtuse = 0.0;
  double err_tall_acute = 0.0;
  double err_tall_obtuse = 0.0;
  double err_flat_acute = 0.0;
  double err_flat_obtuse = 0.0;
  std::string convention;

  double sum() const { return tall_acute + tall_obtuse + flat_acute + flat_obtuse; }
  double err_sum() const {
    return err_tall_acute + err_tall_obtuse + err_flat_acute + err_flat_obtuse;
  }
  double prob_tall() const { return tall_acute + tall_obtuse; }
  double prob_flat() const { return flat_acute + flat_obtuse; }
  double prob_acute() const { return tall_acute + flat_acute; }
  double prob_obtuse() const { return tall_obtuse + flat_obtuse; }
};

// The four {tall,flat} x {acute,obtuse} probabilities under the given
// convention, each by area quadrature at the given per-cell tolerance.
JointTable joint_table(const ClusterConvention& conv, double tol = 1e-4,
                       std::size_t max_patches = std::size_t{1} << 26);

// Prob(a | b) for two regions (ratio of quadrature areas; throws
// DivisionByZeroMeasure when Prob(b) < 1e-12) or for a region conditioned on
// a curve (arc-length fraction).
ProbabilityResult conditional(const EventPredicate& a, const EventPredicate& b,
                              const QuadratureOptions& opts = {});
ProbabilityResult conditional(const EventPredicate& a, const SphereCurve& b,
                              double param_tol = 1e-12);

// Departure from independence delta(a, b) = Prob(a) Prob(b) - Prob(a and b).
double delta_independence(const EventPredicate& a, const EventPredicate& b,
                          const QuadratureOptions& opts = {});

// Closed forms shared by the catalog, the acceptance suite and the
// reconciliation report.
double tau_closed_form();                // (3/2pi)(2 acos sqrt(2/3) - asin 1/3)
double tau_printed_arcsin_form();        // the published arcsin reading: 3/4
double segment_area_closed_form();       // pi/6 + asin(1/3)/2 - acos(sqrt(2/3))

struct SegmentArea {
  double closed_form = 0.0;
  double quadrature = 0.0;   // direct 2-d quadrature of the bounded region
  double prob = 0.0;         // 12 * area / 4pi
};

// Area of the tall-and-acute portion of one tessellation segment, bounded by
// the cap circle theta = pi/3, the curve theta = arctan((1/sqrt 3) cosec phi)
// and phi in [0, arcsin 1/3], integrated numerically in both variables.
SegmentArea tall_acute_segment_area(double tol = 1e-9);

struct CatalogEntry {
  enum class Kind { Region, RegionConditional, CurveConditional, Delta };

  std::string event;
  Kind kind = Kind::Region;
  std::optional<double> exact;
  std::string exact_expr;
  std::optional<double> paper_value;  // as printed, under the published label
  std::string convention;
  EventPredicate a;
  std::optional<EventPredicate> b;
  std::optional<SphereCurve> curve;
  ClusterId axis = ClusterId::one;
  bool mc_supported = true;
  std::vector<CatalogEntry> average_of;  // symmetrized entries average these
  // Quadrature evaluates these disjoint pieces (each in its own aligned
  // frame) and sums; MC still samples the event itself.
  std::vector<CatalogEntry> sum_of;
};

// Every probability in the catalog under the given convention.  Exact values
// and expressions are attached for the canonical convention (and for the
// label-independent entries under any convention).
std::vector<CatalogEntry> catalog_entries(
    const ClusterConvention& conv = ClusterConvention::canonical());

// The exact-form skeleton of the catalog (no numerics run).
std::vector<ProbabilityResult> closed_form_catalog();

struct EvalOptions {
  double tol = 1e-5;
  std::size_t max_patches = std::size_t{1} << 26;
  std::optional<McConfig> mc;
};

ProbabilityResult evaluate_entry(const CatalogEntry& entry, const EvalOptions& opts);
std::vector<ProbabilityResult> evaluate_catalog(const ClusterConvention& conv,
                                                const EvalOptions& opts);

// ---------------------------------------------------------------------------
// Reconciliation: the published expressions vs the quadrature/MC oracles.

struct QuadrupleReport {
  std::string convention;
  JointTable table;
  bool matches_published_set = false;  // per cell within 5e-4, matched as a set
  double max_abs_diff = 0.0;
  std::string label_assignment;
};

struct LabelAuditRow {
  std::string event;          // our (oracle-labelled) event name
  double computed = 0.0;      // our value
  std::string paper_label;    // the label the publication prints it under
  double paper_printed = 0.0; // the published numeric value for our event name
};

struct ReconciliationReport {
  double tau_arccos_form = 0.0;
  double tau_arcsin_form = 0.0;
  double tau_quadrature = 0.0;  // tall-and-obtuse, canonical convention
  bool arccos_form_matches = false;
  bool arcsin_form_matches = false;
  double delta_oracle = 0.0;      // Prob(A)Prob(T) - Prob(A and T) = +0.0505
  double delta_paper_expr = 0.0;  // 3/8 - tau = -0.0505
  std::vector<QuadrupleReport> quadruples;
  std::string matched_convention;  // empty when no convention matches
  std::vector<LabelAuditRow> section8;
  std::vector<LabelAuditRow> section9;
  SegmentArea segment;
  std::vector<std::string> notes;
};

ReconciliationReport build_reconciliation(double tol = 1e-4,
                                          std::size_t max_patches = std::size_t{1} << 26);
std::string reconciliation_to_text(const ReconciliationReport& r);

}  // namespace trishape
