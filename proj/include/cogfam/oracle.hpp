#pragma once

#include "cogfam/core_types.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cogfam {

// Geometric validation of the closed-form COG formulas. Each model's
// membership graph is rebuilt as five explicit shapes and its centroid is
// computed two ways: as a system of particles, and by numeric integration.
// Overlapping parts of adjacent shapes count once per shape.

enum class ShapeKind : std::uint8_t { Rectangle, IsoscelesTriangle, IsoscelesTrapezoid };

std::string_view shape_name(ShapeKind kind);

/// Top side of a trapezoid as a fraction of its base. 2/5 is the ratio at
/// which the trapezoid centroid height is 3/7 of the shape height.
inline const Rational kTrapezoidTopRatio{2, 5};

/// A shape symmetric about the midpoint of its base, standing on the x axis.
struct GeometryShape {
  ShapeKind kind;
  Rational base_lo;
  Rational base_hi;
  Rational top_width;
  Rational height;

  Rational base_width() const { return base_hi - base_lo; }
  Rational area() const;
  /// Centroid (x_ci, y_ci) of this shape alone.
  CogPoint centroid() const;
  /// Height of the upper boundary at abscissa x (0 outside the base).
  double profile(double x) const;
};

struct GeometryFigure {
  Model model;
  std::array<GeometryShape, 5> shapes;

  Rational total_area() const;
};

/// Heights are the frequencies. RFAM: unit rectangles on [i-1, i].
/// Variations: unit bases on [0.7i - 0.7, 0.7i + 0.3]. Throws ModelError for GPA.
GeometryFigure build_figure(const FrequencyVector& freq, Model model);

/// X = Σ S_i·x_ci / Σ S_i, Y = Σ S_i·y_ci / Σ S_i. Throws InputError when
/// the total area is zero.
CogPoint composite_centroid(const GeometryFigure& figure);

struct ApproxPoint {
  double x;
  double y;
};

/// Midpoint-rule double integration of ∬x, ∬y and ∬1 over each shape, summed
/// over shapes. Each shape uses a resolution × resolution grid: uniform in x
/// across the base and uniform in y between the axis and the shape profile.
/// Throws InputError for resolution < 100 or zero area.
ApproxPoint integration_centroid(const GeometryFigure& figure, int resolution);

struct Deviation {
  std::string coordinate;  // "x" or "y"
  Rational closed_form;
  Rational geometric;
  bool expected;
  std::string note;
};

struct VerificationReport {
  Model model;
  FrequencyVector frequencies;
  CogPoint closed_form;
  CogPoint geometric;
  bool x_equal;
  bool y_equal;
  /// geometric.y / closed_form.y.
  Rational y_ratio;
  /// Ratio the construction is known to produce (5/3 for TFAM, else 1).
  Rational expected_y_ratio;
  std::vector<Deviation> deviations;

  bool has_unexpected() const;
};

/// Known geometric-over-closed-form ratio of the y coefficient.
Rational expected_y_ratio(Model model);

/// Diffs the closed-form COG against composite_centroid. Throws ModelError
/// for GPA; deviations are reported, never thrown.
VerificationReport verify_closed_form(const FrequencyVector& freq, Model model);

}  // namespace cogfam
