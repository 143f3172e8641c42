#include "cogfam/oracle.hpp"

#include "cogfam/rfam.hpp"
#include "cogfam/variations.hpp"

#include <cmath>
#include <string>

namespace cogfam {

std::string_view shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Rectangle: return "rectangle";
    case ShapeKind::IsoscelesTriangle: return "triangle";
    case ShapeKind::IsoscelesTrapezoid: return "trapezoid";
  }
  return "?";
}

Rational GeometryShape::area() const {
  switch (kind) {
    case ShapeKind::Rectangle: return base_width() * height;
    case ShapeKind::IsoscelesTriangle: return base_width() * height / 2;
    case ShapeKind::IsoscelesTrapezoid: return (top_width + base_width()) / 2 * height;
  }
  return 0;
}

CogPoint GeometryShape::centroid() const {
  const Rational mid = (base_lo + base_hi) / 2;
  switch (kind) {
    case ShapeKind::Rectangle: return {mid, height / 2};
    case ShapeKind::IsoscelesTriangle: return {mid, height / 3};
    case ShapeKind::IsoscelesTrapezoid: {
      // Distance from the longer (base) side: h(2a + b) / (3(a + b)).
      const Rational& a = top_width;
      const Rational b = base_width();
      return {mid, height * (2 * a + b) / (3 * (a + b))};
    }
  }
  return {mid, 0};
}

double GeometryShape::profile(double x) const {
  const double lo = to_double(base_lo);
  const double hi = to_double(base_hi);
  if (x < lo || x > hi) return 0.0;
  const double h = to_double(height);
  const double half_base = (hi - lo) / 2;
  const double half_top = to_double(top_width) / 2;
  const double d = std::abs(x - (lo + hi) / 2);
  if (d <= half_top) return h;
  return h * (half_base - d) / (half_base - half_top);
}

Rational GeometryFigure::total_area() const {
  Rational s = 0;
  for (const auto& shape : shapes) s += shape.area();
  return s;
}

GeometryFigure build_figure(const FrequencyVector& freq, Model model) {
  if (model == Model::GPA) throw ModelError("GPA has no membership geometry");

  GeometryFigure fig{model, {}};
  for (int i = 1; i <= 5; ++i) {
    GeometryShape& s = fig.shapes[i - 1];
    s.height = freq.y(i);
    if (model == Model::RFAM) {
      s.kind = ShapeKind::Rectangle;
      s.base_lo = i - 1;
      s.base_hi = i;
    } else {
      const Rational center = Rational(7, 10) * i - Rational(1, 5);
      s.base_lo = center - Rational(1, 2);
      s.base_hi = center + Rational(1, 2);
      s.kind = model == Model::GRFAM  ? ShapeKind::Rectangle
               : model == Model::TFAM ? ShapeKind::IsoscelesTriangle
                                      : ShapeKind::IsoscelesTrapezoid;
    }
    switch (s.kind) {
      case ShapeKind::Rectangle: s.top_width = s.base_width(); break;
      case ShapeKind::IsoscelesTriangle: s.top_width = 0; break;
      case ShapeKind::IsoscelesTrapezoid: s.top_width = kTrapezoidTopRatio * s.base_width(); break;
    }
  }
  return fig;
}

CogPoint composite_centroid(const GeometryFigure& figure) {
  Rational total = 0, moment_x = 0, moment_y = 0;
  for (const auto& shape : figure.shapes) {
    const Rational area = shape.area();
    const CogPoint c = shape.centroid();
    total += area;
    moment_x += area * c.x;
    moment_y += area * c.y;
  }
  if (total == 0) throw InputError("figure has zero total area");
  return {moment_x / total, moment_y / total};
}

ApproxPoint integration_centroid(const GeometryFigure& figure, int resolution) {
  if (resolution < 100) throw InputError("integration resolution must be at least 100");

  long double total = 0, moment_x = 0, moment_y = 0;
  for (const auto& shape : figure.shapes) {
    if (shape.height <= 0) continue;
    const double lo = to_double(shape.base_lo);
    const double dx = to_double(shape.base_width()) / resolution;
    for (int i = 0; i < resolution; ++i) {
      const double x = lo + (i + 0.5) * dx;
      const double top = shape.profile(x);
      if (top <= 0) continue;
      const double dy = top / resolution;
      long double col_area = 0, col_y = 0;
      for (int j = 0; j < resolution; ++j) {
        const double y = (j + 0.5) * dy;
        col_area += 1.0L;
        col_y += y;
      }
      const long double cell = static_cast<long double>(dx) * dy;
      total += col_area * cell;
      moment_x += col_area * cell * x;
      moment_y += col_y * cell;
    }
  }
  if (total <= 0) throw InputError("figure has zero total area");
  return {static_cast<double>(moment_x / total), static_cast<double>(moment_y / total)};
}

bool VerificationReport::has_unexpected() const {
  for (const auto& d : deviations) {
    if (!d.expected) return true;
  }
  return false;
}

Rational expected_y_ratio(Model model) {
  // Triangles put the centroid at h/3 where the closed form uses 1/5.
  if (model == Model::TFAM) return Rational(5, 3);
  return 1;
}

VerificationReport verify_closed_form(const FrequencyVector& freq, Model model) {
  if (model == Model::GPA) throw ModelError("GPA has no closed-form center of gravity");

  const CogPoint closed = model == Model::RFAM ? rfam_cog(freq) : variation_cog(freq, model).cog;
  const CogPoint geometric = composite_centroid(build_figure(freq, model));

  VerificationReport report{model,
                            freq,
                            closed,
                            geometric,
                            closed.x == geometric.x,
                            closed.y == geometric.y,
                            geometric.y / closed.y,
                            expected_y_ratio(model),
                            {}};
  if (!report.x_equal) {
    report.deviations.push_back({"x", closed.x, geometric.x, false, "abscissa differs from the shape centroids"});
  }
  if (report.y_ratio != report.expected_y_ratio) {
    report.deviations.push_back({"y", closed.y, geometric.y, false,
                                 "y ratio " + to_string(report.y_ratio) + " differs from the known ratio " +
                                     to_string(report.expected_y_ratio)});
  } else if (!report.y_equal) {
    report.deviations.push_back({"y", closed.y, geometric.y, true,
                                 "closed-form coefficient " + to_string(*variation_coefficient(model)) +
                                     " vs geometric coefficient " +
                                     to_string(*variation_coefficient(model) * report.y_ratio)});
  }
  return report;
}

}  // namespace cogfam
