#include "funkdisc/cli.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "funkdisc/busemann.h"
#include "funkdisc/core_metrics.h"
#include "funkdisc/errors.h"
#include "funkdisc/figure.h"
#include "funkdisc/geodesics.h"
#include "funkdisc/isometries.h"
#include "funkdisc/laplace.h"
#include "funkdisc/verify.h"

namespace funkdisc {
namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt15(double v) { return fmt::format("{:.15g}", v); }

// JSON numbers carry the same 15 digits as the text output.
double round15(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(fmt15(v));
}

std::vector<double> parse_reals(const std::string& text,
                                const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    const std::string piece =
        text.substr(start, end == std::string::npos ? end : end - start);
    double v = 0.0;
    const char* first = piece.data();
    const char* last = piece.data() + piece.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (piece.empty() || ec != std::errc() || ptr != last) {
      throw InputError(what + ": cannot parse '" + text + "' as reals");
    }
    out.push_back(v);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

Vec2 parse_vec2(const std::string& text, const std::string& what) {
  const auto v = parse_reals(text, what);
  if (v.size() != 2) throw InputError(what + ": expected two components");
  return {v[0], v[1]};
}

Coords parse_coords(const std::string& text, int dim,
                    const std::string& what) {
  const auto v = parse_reals(text, what);
  if (static_cast<int>(v.size()) != dim) {
    throw InputError(what + ": expected " + std::to_string(dim) +
                     " components");
  }
  Coords c{};
  for (int i = 0; i < dim; ++i) c[i] = v[i];
  return c;
}

ModelId parse_model(const std::string& name) {
  const auto id = parse_model_id(name);
  if (!id) throw InputError("unknown model '" + name + "'");
  return *id;
}

MetricKind parse_metric(const std::string& name) {
  if (name == "funk") return MetricKind::FUNK;
  if (name == "hilbert") return MetricKind::HILBERT;
  throw InputError("unknown metric type '" + name + "' (funk or hilbert)");
}

Json coords_json(const Coords& c, int dim) {
  Json a = Json::array();
  for (int i = 0; i < dim; ++i) a.push_back(round15(c[i]));
  return a;
}

std::string coords_text(const Coords& c, int dim) {
  std::string s;
  for (int i = 0; i < dim; ++i) {
    if (i > 0) s += ",";
    s += fmt15(c[i]);
  }
  return s;
}

// Prints a flat record: "key: value" lines, or one JSON object.
class Record {
 public:
  void add(const std::string& key, double v) {
    json_[key] = round15(v);
    text_.emplace_back(key, fmt15(v));
  }
  void add(const std::string& key, const std::string& v) {
    json_[key] = v;
    text_.emplace_back(key, v);
  }
  void add(const std::string& key, const Coords& c, int dim) {
    json_[key] = coords_json(c, dim);
    text_.emplace_back(key, coords_text(c, dim));
  }
  void print(std::ostream& out, bool json) const {
    if (json) {
      out << json_.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : text_) out << k << ": " << v << "\n";
  }

 private:
  Json json_ = Json::object();
  std::vector<std::pair<std::string, std::string>> text_;
};

// A point of the disc pushed into `model` along the Funk isometries, with a
// tangent vector.
struct Pushed {
  ModelPoint point;
  Coords velocity;
};

Pushed push(IsometryId id, const Pushed& in) {
  const Differential d = differential(id, in.point);
  return {apply(id, in.point), d.apply({in.velocity[0], in.velocity[1]})};
}

Pushed push_from_disc(ModelId model, const DiscPoint& x, const Vec2& v) {
  Pushed p{ModelPoint::from_disc(ModelId::FF, x), Coords{v.x1, v.x2, 0.0}};
  switch (model) {
    case ModelId::FF:
      return p;
    case ModelId::FP:
      return push(IsometryId::F_MAP, p);
    case ModelId::FU:
      return push(IsometryId::G_MAP, p);
    case ModelId::FB:
      return push(IsometryId::XI, p);
    case ModelId::FUH1:
      return push(IsometryId::ETA, p);
    case ModelId::FUS1:
      return push(IsometryId::PSI, p);
    case ModelId::FUH2:
      return push(IsometryId::PI, push(IsometryId::F_MAP, p));
    case ModelId::FUS2:
      return push(IsometryId::SIGMA, push(IsometryId::F_MAP, p));
    default:
      throw UnsupportedModel("Funk geodesics cannot be mapped to model " +
                             std::string(to_string(model)));
  }
}

struct Options {
  bool json = false;
  // eval / map
  std::string model, x, v, iso;
  bool inverse = false;
  // geodesic
  std::string type = "funk", p, y, out = "-";
  double t0 = 0.0, t1 = 1.0;
  int n = kDefaultSamples;
  // verify
  std::string suite = "all";
  int samples = 1000;
  std::uint64_t seed = 7;
  // figure-band
  int figure_samples = 512;
  // busemann / horocycle / laplacian / distance
  std::optional<double> t;
  double a = 0.0;
  int points = 16;
  std::string measure, from, to;
  bool fd = false;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const ModelId model = parse_model(o.model);
  const int dim = dimension(model);
  const ModelPoint x = ModelPoint::make(model, parse_coords(o.x, dim, "--x"));
  const Coords v = parse_coords(o.v, dim, "--v");
  const RandersValue r = eval_model(x, v);
  Record rec;
  rec.add("model", std::string(to_string(model)));
  rec.add("alpha", r.alpha);
  rec.add("beta", r.beta);
  rec.add("total", r.total);
  rec.print(out, o.json);
  return kExitOk;
}

int cmd_geodesic(const Options& o, std::ostream& out) {
  const MetricKind metric = parse_metric(o.type);
  const ModelId model =
      o.model.empty()
          ? (metric == MetricKind::FUNK ? ModelId::FF : ModelId::HD)
          : parse_model(o.model);
  const DiscPoint p(parse_vec2(o.p, "--p"));
  if (o.y.empty() == o.v.empty()) {
    throw InputError("geodesic: give exactly one of --y and --v");
  }
  const BoundaryPoint y =
      o.y.empty() ? forward_hit(p, TangentVector::from(parse_vec2(o.v, "--v")))
                  : BoundaryPoint(parse_vec2(o.y, "--y"));
  if (metric == MetricKind::HILBERT && model != ModelId::FF &&
      model != ModelId::HD) {
    throw UnsupportedModel("Hilbert lines are sampled in the disc only");
  }
  if (metric == MetricKind::FUNK && model == ModelId::HD) {
    throw UnsupportedModel("Funk rays are not geodesics of the Hilbert disc");
  }
  const std::vector<double> ts = sample_times(o.t0, o.t1, o.n);
  const int dim = dimension(model);
  const bool planar = dim == 2;
  const Chord chord = chord_through(p, y);
  std::optional<GeodesicClass> cls;
  if (model == ModelId::FU || model == ModelId::FP || model == ModelId::FB) {
    cls = classify_image(model, chord);
  }

  std::ostringstream csv;
  csv << "t,x1,x2" << (dim == 3 ? ",x3" : "") << ",speed_residual"
      << (planar ? ",curve_residual" : "");
  // Sign of the +- in the band equation that the point satisfies.
  const bool branch = cls && cls->kind == GeodesicKind::BAND_IMPLICIT;
  csv << (branch ? ",branch" : "") << "\n";
  const FunkRay ray(p, y);
  const HilbertLine line(p, y);
  for (double t : ts) {
    Pushed pt;
    if (metric == MetricKind::FUNK) {
      pt = push_from_disc(model, funk_geodesic(ray, t),
                          funk_velocity(ray, t).vec());
    } else {
      const DiscPoint x = hilbert_geodesic(line, t);
      const Vec2 v = hilbert_velocity(line, t).vec();
      pt = {ModelPoint::from_disc(ModelId::HD, x), Coords{v.x1, v.x2, 0.0}};
    }
    const double speed = eval_model(pt.point, pt.velocity).total - 1.0;
    csv << fmt15(t) << "," << coords_text(pt.point.coords, dim) << ","
        << fmt15(speed);
    if (planar) {
      const Vec2 X = pt.point.planar();
      csv << "," << fmt15(cls ? cls->residual(X) : chord_residual(chord, X));
    }
    if (branch) {
      const auto& [m, c] = std::get<SlopeChord>(chord);
      csv << "," << band_implicit_residual(m, c, pt.point).branch;
    }
    csv << "\n";
  }
  if (o.out == "-") {
    out << csv.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << csv.str();
    if (!f) throw IoError("cannot write " + o.out);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto reports = run_verification(o.suite, o.samples, o.seed);
  const bool ok = all_passed(reports);
  if (o.json) {
    Json j = Json::object();
    j["suite"] = o.suite;
    j["samples"] = o.samples;
    j["seed"] = o.seed;
    j["passed"] = ok;
    Json list = Json::array();
    for (const auto& r : reports) {
      Json e = Json::object();
      e["suite"] = r.suite;
      e["samples"] = r.samples;
      e["max_residual"] = round15(r.max_residual);
      e["tolerance"] = r.tolerance;
      e["passed"] = r.passed;
      e["seed"] = r.seed;
      list.push_back(e);
    }
    j["reports"] = list;
    out << j.dump(2) << "\n";
  } else {
    out << fmt::format("{:<40} {:>8} {:>22} {:>10} {}\n", "check", "samples",
                       "max_residual", "tolerance", "result");
    for (const auto& r : reports) {
      out << fmt::format("{:<40} {:>8} {:>22} {:>10} {}\n", r.suite,
                         r.samples, fmt15(r.max_residual),
                         fmt::format("{:g}", r.tolerance),
                         r.passed ? "PASS" : "FAIL");
    }
    out << "seed " << o.seed << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_figure_band(const Options& o, std::ostream& out) {
  const auto curves = band_figure_curves(o.figure_samples);
  const std::string svg = band_figure_svg(curves);
  std::ofstream f(o.out, std::ios::binary);
  f << svg;
  f.close();
  if (!f) throw IoError("cannot write " + o.out);
  Record rec;
  rec.add("path", o.out);
  rec.add("curves", static_cast<double>(curves.size()));
  rec.print(out, o.json);
  return kExitOk;
}

BusemannField parse_field(const Options& o) {
  return {parse_metric(o.type), DiscPoint(parse_vec2(o.p, "--p")),
          BoundaryPoint(parse_vec2(o.y, "--y"))};
}

int cmd_busemann(const Options& o, std::ostream& out) {
  const BusemannField field = parse_field(o);
  const DiscPoint x(parse_vec2(o.x, "--x"));
  Record rec;
  rec.add("type", std::string(to_string(field.metric)));
  rec.add("value", busemann_value(field, x));
  if (o.t) rec.add("truncated", busemann_truncated(field, x, *o.t));
  rec.print(out, o.json);
  return kExitOk;
}

int cmd_horocycle(const Options& o, std::ostream& out) {
  const BusemannField field = parse_field(o);
  const HorocycleLevel level(field, o.a);
  const auto pts = horocycle_points(level, o.points);
  if (o.json) {
    Json j = Json::object();
    j["type"] = std::string(to_string(field.metric));
    j["level"] = round15(o.a);
    Json list = Json::array();
    for (const DiscPoint& x : pts) {
      list.push_back(Json::array({round15(x.x1()), round15(x.x2())}));
    }
    j["points"] = list;
    out << j.dump(2) << "\n";
  } else {
    out << "x1,x2,busemann\n";
    for (const DiscPoint& x : pts) {
      out << fmt15(x.x1()) << "," << fmt15(x.x2()) << ","
          << fmt15(busemann_value(field, x)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_laplacian(const Options& o, std::ostream& out) {
  const auto kind = parse_measure_kind(o.measure);
  if (!kind) throw InputError("unknown measure '" + o.measure + "'");
  Options funk = o;
  funk.type = "funk";
  const BusemannField field = parse_field(funk);
  const DiscPoint x(parse_vec2(o.x, "--x"));
  Record rec;
  rec.add("measure", std::string(to_string(*kind)));
  rec.add("value", laplacian_busemann(*kind, field, x));
  if (o.fd) rec.add("fd_oracle", laplacian_fd_oracle(*kind, field, x));
  rec.print(out, o.json);
  return kExitOk;
}

int cmd_map(const Options& o, std::ostream& out) {
  const auto id = parse_isometry_id(o.iso);
  if (!id) throw InputError("unknown isometry '" + o.iso + "'");
  const IsometrySignature sig = signature(*id);
  const ModelId from = o.inverse ? sig.target : sig.source;
  const int dim = dimension(from);
  const ModelPoint x = ModelPoint::make(from, parse_coords(o.x, dim, "--x"));
  const ModelPoint y = o.inverse ? apply_inverse(*id, x) : apply(*id, x);
  Record rec;
  rec.add("model", std::string(to_string(y.model)));
  rec.add("point", y.coords, dimension(y.model));
  if (!o.v.empty()) {
    const Coords v = parse_coords(o.v, dim, "--v");
    if (o.inverse && dim != 2) {
      throw UnsupportedModel("tangent vectors map back from planar models only");
    }
    const Differential d =
        o.inverse ? inverse_differential(*id, x) : differential(*id, x);
    rec.add("vector", d.apply({v[0], v[1]}), dimension(y.model));
  }
  rec.print(out, o.json);
  return kExitOk;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const MetricKind metric = parse_metric(o.type);
  const DiscPoint a(parse_vec2(o.from, "--from"));
  const DiscPoint b(parse_vec2(o.to, "--to"));
  Record rec;
  rec.add("type", std::string(to_string(metric)));
  rec.add("distance", metric == MetricKind::FUNK ? funk_distance(a, b)
                                                 : hilbert_distance(a, b));
  rec.print(out, o.json);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Funk and Hilbert geometry of the unit disc", "funkdisc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto* eval = app.add_subcommand("eval", "Evaluate a Randers metric");
  eval->add_option("--model", o.model, "ff fp fu fb fuh1 fuh2 fus1 fus2 ambient hd")
      ->required();
  eval->add_option("--x", o.x, "Point, comma separated")->required();
  eval->add_option("--v", o.v, "Tangent vector, comma separated")->required();

  auto* geo = app.add_subcommand("geodesic", "Sample a Funk ray or Hilbert line as CSV");
  geo->add_option("--type", o.type, "funk or hilbert");
  geo->add_option("--model", o.model, "Model to report coordinates in");
  geo->add_option("--p", o.p, "Start point")->required();
  geo->add_option("--y", o.y, "Boundary endpoint");
  geo->add_option("--v", o.v, "Initial velocity");
  geo->add_option("--t0", o.t0);
  geo->add_option("--t1", o.t1);
  geo->add_option("--n", o.n, "Number of samples (>= 2)");
  geo->add_option("--out", o.out, "Output CSV path, - for stdout");

  auto* ver = app.add_subcommand("verify", "Run seeded property checks");
  ver->add_option("--suite", o.suite, "isometries geodesics busemann laplacian all");
  ver->add_option("--samples", o.samples);
  ver->add_option("--seed", o.seed);

  auto* fig = app.add_subcommand("figure-band", "Write the band-model geodesic figure (SVG)");
  fig->add_option("--out", o.out, "Output SVG path")->required();
  fig->add_option("--samples", o.figure_samples, "Samples per chord");

  auto* bus = app.add_subcommand("busemann", "Busemann function value");
  auto* hor = app.add_subcommand("horocycle", "Sample a horocycle");
  auto* lap = app.add_subcommand("laplacian", "Laplacian of a Funk Busemann function");
  for (CLI::App* c : {bus, hor, lap}) {
    c->add_option("--p", o.p, "Start point")->required();
    c->add_option("--y", o.y, "Boundary endpoint")->required();
  }
  for (CLI::App* c : {bus, hor}) c->add_option("--type", o.type, "funk or hilbert");
  bus->add_option("--x", o.x, "Point")->required();
  bus->add_option("--t", o.t, "Also evaluate the truncation at t");
  hor->add_option("--a", o.a, "Level")->required();
  hor->add_option("--n", o.points, "Number of points (>= 2)");
  lap->add_option("--measure", o.measure, "bh ht max min")->required();
  lap->add_option("--x", o.x, "Point")->required();
  lap->add_flag("--fd", o.fd, "Also run the finite-difference oracle");

  auto* map = app.add_subcommand("map", "Apply an isometry");
  map->add_option("--iso", o.iso, "eta pi psi sigma xi phi f g")->required();
  map->add_option("--x", o.x, "Point")->required();
  map->add_option("--v", o.v, "Tangent vector to push forward");
  map->add_flag("--inverse", o.inverse, "Apply the inverse map");

  auto* dist = app.add_subcommand("distance", "Funk or Hilbert distance");
  dist->add_option("--type", o.type, "funk or hilbert");
  dist->add_option("--from", o.from)->required();
  dist->add_option("--to", o.to)->required();

  for (CLI::App* c : {eval, geo, ver, fig, bus, hor, lap, map, dist}) {
    c->add_flag("--json", o.json, "Structured output");
  }

  std::vector<std::string> argv_store{"funkdisc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*geo) return cmd_geodesic(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*fig) return cmd_figure_band(o, out);
    if (*bus) return cmd_busemann(o, out);
    if (*hor) return cmd_horocycle(o, out);
    if (*lap) return cmd_laplacian(o, out);
    if (*map) return cmd_map(o, out);
    if (*dist) return cmd_distance(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace funkdisc
