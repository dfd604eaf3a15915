#ifndef FUNKDISC_TESTS_SVG_CURVES_H_
#define FUNKDISC_TESTS_SVG_CURVES_H_

#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <cmath>
#include <vector>

#include "funkdisc/geodesics.h"
#include "funkdisc/isometries.h"

// Reads the polylines of a band figure back from the SVG text.
namespace testing_svg {

using funkdisc::Vec2;

struct SvgCurve {
  std::optional<double> m, c, k;
  std::vector<Vec2> vertices;
};

inline std::vector<SvgCurve> parse_polylines(const std::string& svg) {
  std::vector<SvgCurve> curves;
  const std::regex poly("<polyline[^>]*>");
  const std::regex attr("(data-m|data-c|data-k|points)=\"([^\"]*)\"");
  for (std::sregex_iterator it(svg.begin(), svg.end(), poly), end; it != end; ++it) {
    const std::string tag = it->str();
    SvgCurve curve;
    for (std::sregex_iterator a(tag.begin(), tag.end(), attr); a != end; ++a) {
      const std::string name = (*a)[1], value = (*a)[2];
      if (name == "data-m") curve.m = std::stod(value);
      if (name == "data-c") curve.c = std::stod(value);
      if (name == "data-k") curve.k = std::stod(value);
      if (name == "points") {
        std::istringstream in(value);
        std::string pair;
        while (in >> pair) {
          const auto comma = pair.find(',');
          curve.vertices.push_back(
              {std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
        }
      }
    }
    curves.push_back(curve);
  }
  return curves;
}

// Implicit-equation residual of a band vertex for the chord the curve
// is tagged with. Verticals are checked on the chord after mapping back.
inline double vertex_residual(const SvgCurve& curve, const Vec2& X) {
  using namespace funkdisc;
  const ModelPoint p = ModelPoint::make(ModelId::FB, X);
  if (curve.k) {
    const ModelPoint x = apply_inverse(IsometryId::XI, p);
    return std::abs(chord_residual(VerticalChord{*curve.k}, x.planar()));
  }
  return std::abs(band_implicit_residual(*curve.m, *curve.c, p).value);
}

}  // namespace testing_svg

#endif  // FUNKDISC_TESTS_SVG_CURVES_H_
