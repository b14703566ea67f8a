#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>

#include "thetawalls/enumerate.hpp"
#include "thetawalls/error.hpp"
#include "thetawalls/io.hpp"
#include "thetawalls/lattice.hpp"
#include "thetawalls/render.hpp"
#include "thetawalls/surface.hpp"
#include "thetawalls/walls.hpp"

namespace thetawalls::cli {

namespace {

using io::Json;

struct SurfaceFlags {
  std::string c2;
  std::string k2;
  std::string h2;
  std::string kh;

  void attach(CLI::App *cmd, bool with_polarization) {
    cmd->add_option("--c2", c2, "topological Euler number c2")->required();
    cmd->add_option("--k2", k2, "canonical self-intersection K^2")->required();
    if (with_polarization) {
      cmd->add_option("--h2", h2, "H.H (default: H = K)");
      cmd->add_option("--kh", kh, "K.H (default: H = K)");
    }
  }

  SurfaceNumerics surface() const { return derive_surface(parse_integer(c2), parse_integer(k2)); }

  PolarizationSlice polarization(const SurfaceNumerics &s) const {
    if (h2.empty() && kh.empty()) return canonical_polarization(s);
    if (h2.empty() || kh.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--h2 and --kh must be given together");
    }
    return make_polarization(s, parse_integer(h2), parse_integer(kh));
  }
};

std::uint64_t cell_cap_from_env() {
  const char *raw = std::getenv("WALLS_CELL_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultCellCap;
  const Integer cap = parse_integer(raw);
  if (cap < 1) throw Error(ErrorKind::InvalidArgument, "WALLS_CELL_CAP must be positive");
  return static_cast<std::uint64_t>(to_int64(cap));
}

void emit(std::ostream &out, const Json &j) { out << j.dump() << '\n'; }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
      return kExitUsage;
    case ErrorKind::PrecisionBudgetExceeded:
    case ErrorKind::BoundTooLarge:
      return kExitBudget;
    default:
      return kExitNegative;
  }
}

int cmd_surface(const SurfaceFlags &f, std::ostream &out) {
  const Integer c2 = parse_integer(f.c2);
  const Integer k2 = parse_integer(f.k2);
  const GeographyReport report = check_geography(c2, k2);
  Json j;
  if (report.admissible) {
    j["surface"] = io::to_json(derive_surface(c2, k2));
  } else {
    j["surface"] = {{"c2", io::integer_json(c2)}, {"K2", io::integer_json(k2)}};
    j["status"] = "not admissible";
  }
  j["geography"] = io::to_json(report);
  emit(out, j);
  return report.admissible ? kExitOk : kExitNegative;
}

int cmd_scan(long long c2_max, std::ostream &out) {
  long long admissible = 0;
  long long total = 0;
  for (const GeographyEntry &e : scan_geography(c2_max)) {
    Json j;
    j["c2"] = io::integer_json(e.c2);
    j["K2"] = io::integer_json(e.K2);
    j["geography"] = io::to_json(e.report);
    emit(out, j);
    ++total;
    if (e.report.admissible) ++admissible;
  }
  emit(out, {{"summary", {{"pairs", total}, {"admissible", admissible}}}});
  return kExitOk;
}

struct EnumerateFlags {
  std::string beta0;
  std::string cmax;
  long rmax = 1;
  bool bounds = false;
};

EnumerationRequest make_request(const EnumerateFlags &f) {
  EnumerationRequest req;
  req.beta0 = parse_rational(f.beta0);
  req.cmax = parse_rational(f.cmax);
  req.rmax = f.rmax;
  req.cell_cap = cell_cap_from_env();
  return req;
}

int cmd_enumerate(const SurfaceFlags &sf, const EnumerateFlags &ef, std::ostream &out) {
  const SurfaceNumerics s = sf.surface();
  const PolarizationSlice P = sf.polarization(s);
  const WallEnumeration result = enumerate_wall_candidates(s, P, make_request(ef));
  if (ef.bounds) {
    for (const SliceBounds &b : result.bounds) emit(out, {{"bounds", io::to_json(b)}});
  }
  for (const WallCandidate &c : result.candidates) emit(out, io::to_json(c));
  emit(out, {{"summary",
              {{"c2", io::integer_json(s.c2)},
               {"K2", io::integer_json(s.K2)},
               {"H2", io::integer_json(P.H2)},
               {"KH", io::integer_json(P.KH)},
               {"beta0", io::rational_json(parse_rational(ef.beta0))},
               {"cmax", io::rational_json(parse_rational(ef.cmax))},
               {"rmax", ef.rmax},
               {"cells", io::integer_json(result.cells)},
               {"candidates", result.candidates.size()}}}});
  return kExitOk;
}

struct FilterFlags {
  std::string hcase;
  std::string r;
  std::string c1sq;
  std::string c1k;
  std::string s2;
};

int cmd_filter(const SurfaceFlags &sf, const FilterFlags &ff, std::ostream &out) {
  const SurfaceNumerics s = sf.surface();
  CaseFlag flag;
  if (ff.hcase == "zero") {
    flag = CaseFlag::Zero;
  } else if (ff.hcase == "nonzero") {
    flag = CaseFlag::Nonzero;
  } else {
    throw Error(ErrorKind::Parse, "--case must be 'zero' or 'nonzero'");
  }
  const FullChern F{parse_integer(ff.r), parse_integer(ff.c1sq), parse_integer(ff.c1k),
                    parse_integer(ff.s2)};
  const CandidateVerdict v = filter_quotient_candidate(s, F, flag);
  Json j = io::to_json(v);
  j["candidate"] = io::to_json(F);
  j["case"] = ff.hcase;
  emit(out, j);
  return v.accepted ? kExitOk : kExitNegative;
}

int cmd_fibration(const SurfaceFlags &sf, std::ostream &out) {
  const SurfaceNumerics s = sf.surface();
  const auto options = fibration_options(s);
  if (!options) {
    emit(out, {{"applicable", false}, {"reason", "qbound fails: needs q > 0 and 4 q^2 < K^2"}});
    return kExitNegative;
  }
  for (const FibrationOption &o : *options) emit(out, io::to_json(o));
  return kExitOk;
}

struct PlotFlags {
  std::string b_min;
  std::string b_max;
  std::string c_max;
  int width = 800;
  int height = 400;
  std::string layers = "vertical,hyperbola,c_h,candidates,region";
  std::string beta0;
  std::string cmax;
  long rmax = 1;
  std::string dimv = "1";
  std::string output;
};

RenderLayers parse_layers(const std::string &spec) {
  RenderLayers layers{false, false, false, false, false};
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string name = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (name == "vertical") {
      layers.vertical = true;
    } else if (name == "hyperbola") {
      layers.hyperbola = true;
    } else if (name == "c_h") {
      layers.c_h = true;
    } else if (name == "candidates") {
      layers.candidates = true;
    } else if (name == "region") {
      layers.region = true;
    } else if (!name.empty()) {
      throw Error(ErrorKind::Parse, "unknown layer '" + name + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return layers;
}

int cmd_walls_plot(const SurfaceFlags &sf, const PlotFlags &pf, std::ostream &out) {
  const SurfaceNumerics s = sf.surface();
  const PolarizationSlice P = sf.polarization(s);
  if (pf.width < 64 || pf.height < 64) {
    throw Error(ErrorKind::InvalidArgument, "pixel sizes must be at least 64");
  }
  RenderSpec spec = default_render_spec(P, pf.width, pf.height);
  if (!pf.b_min.empty()) spec.b_min = parse_rational(pf.b_min);
  if (!pf.b_max.empty()) spec.b_max = parse_rational(pf.b_max);
  if (!pf.c_max.empty()) spec.c_max = parse_rational(pf.c_max);
  spec.layers = parse_layers(pf.layers);
  validate(spec);

  RegionParams rp;
  rp.dimV = parse_integer(pf.dimv);

  std::vector<WallCandidate> candidates;
  if (spec.layers.candidates && s.positive_index()) {
    EnumerationRequest req;
    const Semicircle c_h = closed_form_c_h(s, P);
    req.beta0 = pf.beta0.empty() ? c_h.center : parse_rational(pf.beta0);
    req.cmax = pf.cmax.empty() ? spec.c_max : parse_rational(pf.cmax);
    req.rmax = pf.rmax;
    req.cell_cap = cell_cap_from_env();
    candidates = enumerate_wall_candidates(s, P, req).candidates;
  }
  const std::string svg = render_walls_svg(s, P, spec, candidates, rp);
  if (pf.output.empty()) {
    out << svg;
  } else {
    std::ofstream file(pf.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + pf.output + "'");
    file << svg;
  }
  return kExitOk;
}

struct BallFlags {
  std::string gram;
  std::string x0;
  std::string a;
};

int cmd_ball(const BallFlags &bf, std::ostream &out) {
  Json gram_json;
  Json x0_json;
  try {
    gram_json = Json::parse(bf.gram);
    x0_json = Json::parse(bf.x0);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  const NSLattice L = io::lattice_from_json(gram_json);
  const DivisorClass x0 = io::class_from_json(x0_json);
  const Rational a = parse_rational(bf.a);
  const auto classes = enumerate_ball(L, x0, a, cell_cap_from_env());
  for (const DivisorClass &m : classes) emit(out, {{"class", io::to_json(m)}});
  emit(out, {{"summary", {{"signature_ok", verify_signature(L)}, {"classes", classes.size()}}}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Wall-and-chamber numerics for the shifted tangent object of a surface"};
  app.name("thetawalls");
  app.require_subcommand(1);

  SurfaceFlags surface_flags;
  auto *surface = app.add_subcommand("surface", "Chern numbers and geography checks");
  surface_flags.attach(surface, false);

  long long c2_max = 0;
  auto *scan = app.add_subcommand("scan", "geography scan over 1 <= c2 <= c2-max");
  scan->add_option("--c2-max", c2_max, "largest c2")->required();

  SurfaceFlags walls_flags;
  PlotFlags plot_flags;
  auto *walls = app.add_subcommand("walls", "wall diagrams");
  walls->require_subcommand(1);
  auto *plot = walls->add_subcommand("plot", "render an SVG wall diagram");
  walls_flags.attach(plot, true);
  plot->add_option("--b-min", plot_flags.b_min, "left edge, num/den");
  plot->add_option("--b-max", plot_flags.b_max, "right edge, num/den");
  plot->add_option("--c-max", plot_flags.c_max, "top edge, num/den");
  plot->add_option("--width", plot_flags.width, "width in pixels (>= 64)");
  plot->add_option("--height", plot_flags.height, "height in pixels (>= 64)");
  plot->add_option("--layers", plot_flags.layers,
                   "comma list of vertical,hyperbola,c_h,candidates,region");
  plot->add_option("--beta0", plot_flags.beta0, "candidate line b = beta0 (default: center of C_H)");
  plot->add_option("--cmax", plot_flags.cmax, "candidate crossing height cap (default: c-max)");
  plot->add_option("--rmax", plot_flags.rmax, "candidate rank cap");
  plot->add_option("--dimv", plot_flags.dimv, "dim V for the instability region");
  plot->add_option("-o,--output", plot_flags.output, "write to a file instead of stdout");

  SurfaceFlags enum_surface;
  EnumerateFlags enum_flags;
  auto *enumerate = app.add_subcommand("enumerate", "numerical wall candidates crossing b = beta0");
  enum_surface.attach(enumerate, true);
  enumerate->add_option("--beta0", enum_flags.beta0, "num/den, right of the vertical wall")->required();
  enumerate->add_option("--cmax", enum_flags.cmax, "num/den, crossing height cap")->required();
  enumerate->add_option("--rmax", enum_flags.rmax, "rank cap")->required();
  enumerate->add_flag("--bounds", enum_flags.bounds, "also emit the per-(r,d) s2 bounds");

  SurfaceFlags filter_surface;
  FilterFlags filter_flags;
  auto *filter = app.add_subcommand("filter", "necessary conditions on an HN quotient F_i at H = K");
  filter_surface.attach(filter, false);
  filter->add_option("--case", filter_flags.hcase, "zero | nonzero (H^-1(E_i))")->required();
  filter->add_option("--r", filter_flags.r, "rank of F")->required();
  filter->add_option("--c1sq", filter_flags.c1sq, "c1(F)^2")->required();
  filter->add_option("--c1k", filter_flags.c1k, "c1(F).K")->required();
  filter->add_option("--s2", filter_flags.s2, "2 ch2(F)")->required();

  SurfaceFlags fib_surface;
  auto *fibration = app.add_subcommand("fibration", "fibration genus options under the small-q gate");
  fib_surface.attach(fibration, false);

  BallFlags ball_flags;
  auto *ball = app.add_subcommand("ball", "classes M with 0 < M.x0 <= a and M^2 > 0");
  ball->add_option("--gram", ball_flags.gram, "JSON array of integer arrays")->required();
  ball->add_option("--x0", ball_flags.x0, "JSON integer array")->required();
  ball->add_option("--a", ball_flags.a, "height bound, num/den")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*surface) return cmd_surface(surface_flags, out);
    if (*scan) return cmd_scan(c2_max, out);
    if (*plot) return cmd_walls_plot(walls_flags, plot_flags, out);
    if (*enumerate) return cmd_enumerate(enum_surface, enum_flags, out);
    if (*filter) return cmd_filter(filter_surface, filter_flags, out);
    if (*fibration) return cmd_fibration(fib_surface, out);
    if (*ball) return cmd_ball(ball_flags, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace thetawalls::cli
