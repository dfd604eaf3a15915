#include "funkdisc/figure.h"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "funkdisc/errors.h"
#include "funkdisc/isometries.h"

namespace funkdisc {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
// Vertices with 1 - |x|^2 below this are dropped; they sit at the ends of
// the chord, far outside the window.
constexpr double kMinDefect = 1e-8;

double window_center() { return std::numbers::ln2; }

// Chord endpoints as a parameter range, and the point at parameter s.
struct ChordParam {
  double lo;
  double hi;
};

ChordParam chord_range(const Chord& chord) {
  if (const auto* s = std::get_if<SlopeChord>(&chord)) {
    // (1 + m^2) x1^2 + 2 m c x1 + c^2 - 1 = 0
    const double a = 1.0 + s->m * s->m;
    const double disc = a - s->c * s->c;
    if (!(disc > 0.0)) throw NoIntersectionError("chord misses the disc");
    const double root = std::sqrt(disc);
    return {(-s->m * s->c - root) / a, (-s->m * s->c + root) / a};
  }
  const double k = std::get<VerticalChord>(chord).k;
  const double h = std::sqrt((1.0 - k) * (1.0 + k));
  return {-h, h};
}

Vec2 chord_at(const Chord& chord, double s) {
  if (const auto* sc = std::get_if<SlopeChord>(&chord)) {
    return {s, sc->m * s + sc->c};
  }
  return {std::get<VerticalChord>(chord).k, s};
}

std::string num(double v) { return fmt::format("{}", v); }

}  // namespace

std::vector<Chord> band_figure_catalog() {
  return {SlopeChord{0.0, 0.0},  SlopeChord{0.0, 0.4},  SlopeChord{0.0, -0.4},
          SlopeChord{1.0, 0.2},  SlopeChord{-1.0, 0.2}, SlopeChord{0.5, -0.5},
          VerticalChord{-0.5},   VerticalChord{0.0},    VerticalChord{0.5}};
}

std::vector<BandCurve> band_figure_curves(int samples) {
  if (samples < 2) throw DomainError("band figure needs samples >= 2");
  const double x_lo = window_center() - kBandWindowHalfWidth;
  const double x_hi = window_center() + kBandWindowHalfWidth;
  std::vector<BandCurve> out;
  for (const Chord& chord : band_figure_catalog()) {
    const ChordParam range = chord_range(chord);
    BandCurve current{chord, {}};
    for (int i = 1; i < samples; ++i) {
      // Cosine spacing crowds samples towards the ends, where the band
      // image stretches out.
      const double w =
          0.5 * (1.0 - std::cos(std::numbers::pi * i / samples));
      const Vec2 x = chord_at(chord, range.lo + (range.hi - range.lo) * w);
      bool keep = one_minus_norm_sq(x) > kMinDefect;
      Vec2 X;
      if (keep) {
        X = apply(IsometryId::XI, ModelPoint::make(ModelId::FF, x)).planar();
        keep = X.x1 >= x_lo && X.x1 <= x_hi;
      }
      if (keep) {
        current.vertices.push_back(X);
      } else if (!current.vertices.empty()) {
        out.push_back(std::move(current));
        current = BandCurve{chord, {}};
      }
    }
    if (current.vertices.size() >= 2) out.push_back(std::move(current));
  }
  std::erase_if(out, [](const BandCurve& c) { return c.vertices.size() < 2; });
  return out;
}

std::string band_figure_svg(const std::vector<BandCurve>& curves) {
  const double x_lo = window_center() - kBandWindowHalfWidth;
  const double width = 2.0 * kBandWindowHalfWidth;
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"800\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      static_cast<int>(std::lround(800.0 * std::numbers::pi / width)),
      num(x_lo), num(-kHalfPi), num(width), num(std::numbers::pi));
  svg += "<title>Funk geodesics in the band model</title>\n";
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" "
         "stroke-width=\"1.5\">\n";
  for (double edge : {-kHalfPi, kHalfPi}) {
    svg += fmt::format(
        "<line class=\"boundary\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
        "stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n",
        num(x_lo), num(edge), num(x_lo + width), num(edge));
  }
  for (const BandCurve& curve : curves) {
    std::string attrs;
    if (const auto* s = std::get_if<SlopeChord>(&curve.chord)) {
      attrs = fmt::format("data-m=\"{}\" data-c=\"{}\"", num(s->m), num(s->c));
    } else {
      attrs = fmt::format("data-k=\"{}\"",
                          num(std::get<VerticalChord>(curve.chord).k));
    }
    svg += fmt::format(
        "<polyline class=\"geodesic\" {} stroke=\"steelblue\" "
        "vector-effect=\"non-scaling-stroke\" points=\"",
        attrs);
    for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
      if (i > 0) svg += ' ';
      svg += num(curve.vertices[i].x1) + "," + num(curve.vertices[i].x2);
    }
    svg += "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace funkdisc
