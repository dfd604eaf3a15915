#ifndef FUNKDISC_FIGURE_H_
#define FUNKDISC_FIGURE_H_

#include <string>
#include <vector>

#include "funkdisc/geodesics.h"
#include "funkdisc/vec.h"

namespace funkdisc {

// Funk chords drawn in the band figure.
std::vector<Chord> band_figure_catalog();

// Visible window in X1; X2 spans the whole band.
inline constexpr double kBandWindowHalfWidth = 4.0;

// One connected piece of the band image of a chord, clipped to the window.
struct BandCurve {
  Chord chord;
  std::vector<Vec2> vertices;
};

// samples points per chord before clipping.
std::vector<BandCurve> band_figure_curves(int samples = 512);

// SVG 1.1 in band coordinates (X2 up). Coordinates are printed in shortest
// round-trip form and each polyline carries its chord as data-m/data-c or
// data-k, so the file can be checked against the implicit equations.
std::string band_figure_svg(const std::vector<BandCurve>& curves);

}  // namespace funkdisc

#endif  // FUNKDISC_FIGURE_H_
