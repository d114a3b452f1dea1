#include "logstrain/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "logstrain/constitutive.hpp"
#include "logstrain/dataset.hpp"
#include "logstrain/decomposition.hpp"
#include "logstrain/error.hpp"
#include "logstrain/kinematics.hpp"
#include "logstrain/shear_statics.hpp"
#include "logstrain/verify.hpp"

namespace logstrain::cli {

namespace {

using verify::format_number;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(ErrorKind::InvalidArgument, "cannot parse " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------- printing

void print_row(std::ostream& out, const std::string& key, std::initializer_list<double> values) {
  out << key;
  for (double v : values) out << ' ' << format_number(v);
  out << '\n';
}

void print_vec(std::ostream& out, const std::string& key, const Vec3& v) {
  print_row(out, key, {v[0], v[1], v[2]});
}

void print_matrix(std::ostream& out, const std::string& key, const Mat3& a) {
  out << key << '\n';
  for (int i = 0; i < 3; ++i) print_row(out, " ", {a(i, 0), a(i, 1), a(i, 2)});
}

void print_matrix(std::ostream& out, const std::string& key, const SymMat3& a) {
  print_matrix(out, key, a.full());
}

void write_csv_row(std::ostream& out, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
  out << '\n';
}

void write_csv_header(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
}

// ---------------------------------------------------------------- moduli flags

struct ModuliFlags {
  double G = 0.0, lambda = 0.0, K = 0.0, E = 0.0, nu = 0.0;
  std::string config;
  CLI::Option* oG = nullptr;
  CLI::Option* oL = nullptr;
  CLI::Option* oK = nullptr;
  CLI::Option* oE = nullptr;
  CLI::Option* oNu = nullptr;
  CLI::Option* oConfig = nullptr;

  void attach(CLI::App* app) {
    oG = app->add_option("--G", G, "shear modulus");
    oL = app->add_option("--lam,--lambda", lambda, "second Lame constant");
    oK = app->add_option("--K", K, "bulk modulus");
    oE = app->add_option("--E", E, "Young's modulus");
    oNu = app->add_option("--nu", nu, "Poisson's ratio");
    oConfig = app->add_option("--config", config, "key=value moduli file (default ./logstrain.cfg)");
  }

  ModuliInput flags() const {
    ModuliInput in;
    if (oG->count()) in.G = G;
    if (oL->count()) in.lambda = lambda;
    if (oK->count()) in.K = K;
    if (oE->count()) in.E = E;
    if (oNu->count()) in.nu = nu;
    return in;
  }

  ModuliInput input() const {
    ModuliInput file;
    if (oConfig->count()) {
      file = read_config_file(config);
    } else if (std::filesystem::exists("logstrain.cfg")) {
      file = read_config_file("logstrain.cfg");
    }
    return merge_moduli(file, flags());
  }

  Moduli resolve(Admissibility a = Admissibility::Mathematical) const { return resolve_moduli(input(), a); }
};

struct OgdenFlags {
  std::vector<double> mu, alpha;

  void attach(CLI::App* app) {
    app->add_option("--ogden-mu", mu, "Ogden coefficients mu_p")->delimiter(',');
    app->add_option("--ogden-alpha", alpha, "Ogden exponents alpha_p")->delimiter(',');
  }
  bool given() const { return !mu.empty() || !alpha.empty(); }
};

LawId law_from_name(const std::string& name, const OgdenFlags& og) {
  if (name == "ogden") {
    if (!og.given()) fail(ErrorKind::InvalidArgument, "ogden needs --ogden-mu and --ogden-alpha");
    return LawId::ogden(og.mu, og.alpha);
  }
  return parse_law(name);
}

// ---------------------------------------------------------------- stress

struct StressCmd {
  std::vector<double> F, diag;
  double shear = 1.0, glide = 0.0;
  std::string measure = "biot", law = "becker";
  CLI::Option *oF = nullptr, *oDiag = nullptr, *oShear = nullptr, *oGlide = nullptr;
  ModuliFlags moduli;

  void attach(CLI::App* app) {
    oF = app->add_option("--F", F, "deformation gradient, 9 numbers row by row")->expected(9)->delimiter(',');
    oDiag = app->add_option("--diag", diag, "diagonal deformation, 3 numbers")->expected(3)->delimiter(',');
    oShear = app->add_option("--shear", shear, "pure shear diag(a, 1/a, 1)");
    oGlide = app->add_option("--glide", glide, "simple glide of amount gamma");
    app->add_option("--measure", measure, "biot|cauchy|kirchhoff|pk1|pk2")->capture_default_str();
    app->add_option("--law", law, "becker|hencky-kirchhoff|hencky-cauchy|hooke-biot|hooke-cauchy")
        ->capture_default_str();
    moduli.attach(app);
  }

  Mat3 deformation() const {
    const int given = int(oF->count() > 0) + int(oDiag->count() > 0) + int(oShear->count() > 0) +
                      int(oGlide->count() > 0);
    if (given != 1) fail(ErrorKind::InvalidArgument, "give exactly one of --F, --diag, --shear, --glide");
    if (oF->count()) {
      Mat3 f;
      for (int k = 0; k < 9; ++k) f.a[k] = F[k];
      return f;
    }
    if (oDiag->count()) return Mat3::diag(diag[0], diag[1], diag[2]);
    if (oShear->count()) return pure_shear_F(shear);
    return simple_glide_F(glide);
  }

  int run(std::ostream& out) const {
    const Mat3 f = deformation();
    if (!f.is_finite()) fail(ErrorKind::NonFinite, "deformation gradient");
    if (det(f) <= 0.0) fail(ErrorKind::NonInvertible, "det F must be positive");
    const Moduli m = moduli.resolve();
    const LawId id = parse_law(law);
    const Measure target = parse_measure(measure);

    const StressState biot{biot_response(id, f, m), Measure::Biot, f};
    const Mat3 t = stress_convert(biot, target).tensor;

    out << "law " << id.name() << '\n';
    out << "measure " << to_string(target) << '\n';
    out << "moduli " << describe(m) << '\n';
    print_matrix(out, "F", f);
    print_matrix(out, "stress", t);
    if (target == Measure::PK1) {
      out << "principal n/a (pk1 is not symmetric)\n";
    } else {
      print_vec(out, "principal", eig_sym(sym(t)).values);
    }
    print_row(out, "mean", {tr(t) / 3.0});
    print_matrix(out, "deviatoric", dev(t));
    return kOk;
  }
};

// ---------------------------------------------------------------- invert

struct InvertCmd {
  std::vector<double> T;
  ModuliFlags moduli;

  void attach(CLI::App* app) {
    app->add_option("--T", T, "Biot stress in Voigt order xx,yy,zz,yz,xz,xy")
        ->expected(6)
        ->delimiter(',')
        ->required();
    moduli.attach(app);
  }

  int run(std::ostream& out) const {
    std::array<double, 6> v{};
    std::copy(T.begin(), T.end(), v.begin());
    const SymMat3 t = SymMat3::from_voigt(v);
    if (!t.is_finite()) fail(ErrorKind::NonFinite, "stress");
    const Moduli m = moduli.resolve();
    const SymMat3 u = becker_inverse(t, m);
    const SymMat3 back = becker_biot(u, m);

    out << "moduli " << describe(m) << '\n';
    print_matrix(out, "T", t);
    print_matrix(out, "U", u);
    print_vec(out, "principal_stretches", eig_sym(u).values);
    print_row(out, "det", {det(u)});
    print_row(out, "round_trip", {fro_norm(back - t) / std::max(fro_norm(t), std::abs(m.G()))});
    return kOk;
  }
};

// ---------------------------------------------------------------- shear statics

struct ShearStaticsCmd {
  double Q = 1.0, alpha = 2.0, scale = 1.0;
  int sweep = 0;

  void attach(CLI::App* app) {
    app->add_option("--Q", Q, "load")->required();
    app->add_option("--alpha", alpha, "shear ratio, > 1")->required();
    app->add_option("--scale", scale, "load multiplier")->capture_default_str();
    app->add_option("--sweep", sweep, "also tabulate loads on N line orientations")->check(CLI::NonNegativeNumber);
  }

  int run(std::ostream& out) const {
    const MohrState mohr = mohr_circle(Q, alpha, scale);
    const PondStress pond = pond_stress_components(Q, alpha, scale);
    const auto normals = pond_normals(alpha);
    const FailureTriple fc = failure_criteria(Q * scale, alpha);
    const TractionDecomposition tp = traction_on_line(Q, alpha, normals[0], scale);
    const double deg = 180.0 / std::numbers::pi;

    out << "convention e1 contracted, e2 stretched\n";
    print_row(out, "sigma1", {mohr.sigma1});
    print_row(out, "sigma2", {mohr.sigma2});
    print_row(out, "sigma_m", {mohr.sigma_m});
    print_row(out, "radius", {mohr.radius});
    print_row(out, "amount_of_shear", {mohr.s});
    print_row(out, "psi_rad", {mohr.psi});
    print_row(out, "psi_deg", {mohr.psi * deg});
    print_row(out, "theta_deg", {mohr.theta * deg});
    print_row(out, "pond_stress", {pond.sigma_xi, pond.sigma_eta, pond.sigma_xi_eta});
    print_vec(out, "pond_normal+", normals[0]);
    print_vec(out, "pond_normal-", normals[1]);
    print_row(out, "pond_load_R2_N2_T2", {tp.R2, tp.N2, tp.T2});
    print_row(out, "failure_tresca", {fc.tresca});
    print_row(out, "failure_mises", {fc.mises});
    print_row(out, "failure_becker", {fc.becker});
    if (sweep > 0) {
      out << '\n';
      write_csv_header(out, {"angle_deg", "R2", "N2", "T2"});
      for (int k = 0; k < sweep; ++k) {
        const double phi = std::numbers::pi * k / sweep;
        const Vec3 n{std::cos(phi), std::sin(phi), 0.0};
        const TractionDecomposition td = traction_on_line(Q, alpha, n, scale);
        write_csv_row(out, {phi * deg, td.R2, td.N2, td.T2});
      }
    }
    return kOk;
  }
};

// ---------------------------------------------------------------- check

struct CheckCmd {
  std::string law = "becker";
  std::uint64_t seed = 1;
  int samples = 1000;
  ModuliFlags moduli;
  OgdenFlags ogden;

  void attach(CLI::App* app) {
    app->add_option("--law", law, "law under test")->capture_default_str();
    app->add_option("--seed", seed, "random seed")->capture_default_str();
    app->add_option("--samples", samples, "randomized cases per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    moduli.attach(app);
    ogden.attach(app);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const Moduli m = moduli.resolve();
    const auto reports = verify::run_suite(law_from_name(law, ogden), m, {samples, seed});
    int failed = 0;
    for (const auto& r : reports) {
      out << verify::to_json_line(r) << '\n';
      if (r.fails_run()) ++failed;
    }
    err << reports.size() << " checks, " << failed << " unexpected failures\n";
    return failed ? kCheckFailed : kOk;
  }
};

// ---------------------------------------------------------------- decompose

struct DecomposeCmd {
  std::vector<double> load, stretch;
  CLI::Option *oLoad = nullptr, *oStretch = nullptr;
  ModuliFlags moduli;

  void attach(CLI::App* app) {
    oLoad = app->add_option("--load", load, "principal loads P,Q,R")->expected(3)->delimiter(',');
    oStretch = app->add_option("--stretch", stretch, "principal stretches p,q,r")->expected(3)->delimiter(',');
    oLoad->excludes(oStretch);
    moduli.attach(app);
  }

  int run(std::ostream& out) const {
    if (oStretch->count()) {
      const StretchDecomposition d = decompose_stretch_multiplicative(stretch[0], stretch[1], stretch[2]);
      print_row(out, "dilation", {d.dilation_ratio});
      print_vec(out, "shear_xy", d.shear1.diagonal());
      print_vec(out, "shear_yz", d.shear2.diagonal());
      print_vec(out, "recomposed", d.recompose());
      return kOk;
    }
    if (!oLoad->count()) fail(ErrorKind::InvalidArgument, "give --load or --stretch");

    const StressTriple t{load[0], load[1], load[2]};
    const Moduli m = moduli.resolve(Admissibility::Physical);
    const AdditiveDecomposition a = decompose_stress_additive(t);
    const BeckerTables tab = becker_tables(t, m);
    const SymMat3 direct = becker_inverse(SymMat3::diag(t.P, t.Q, t.R), m);

    print_row(out, "additive_A_B_C", {a.A, a.B, a.C});
    print_vec(out, "additive_recomposed", a.recompose());
    out << '\n';
    write_csv_header(out, {"force", "load", "dilation", "shear_ratio", "shear1_x", "shear1_y", "shear1_z",
                           "shear2_x", "shear2_y", "shear2_z", "stretch_x", "stretch_y", "stretch_z"});
    const char* names[] = {"P", "Q", "R"};
    for (int i = 0; i < 3; ++i) {
      const ForceRow& r = tab.rows[i];
      const Vec3 s = r.stretch();
      out << names[i] << ',';
      write_csv_row(out, {r.load, r.dilation_ratio, r.shear_ratio, r.shears[0][0], r.shears[0][1],
                          r.shears[0][2], r.shears[1][0], r.shears[1][1], r.shears[1][2], s[0], s[1], s[2]});
    }
    out << '\n';
    print_vec(out, "table_product", tab.product);
    print_vec(out, "direct_inverse", {direct(0, 0), direct(1, 1), direct(2, 2)});
    return kOk;
  }
};

// ---------------------------------------------------------------- fit

double comparison_value(const std::string& name, const OgdenFlags& og, LoadMode mode, double x,
                        const Moduli& m) {
  if (name == "becker-hyper") {
    if (mode != LoadMode::UniaxialIncompressible)
      fail(ErrorKind::InvalidArgument, "becker-hyper is an incompressible uniaxial curve");
    return incompressible_uniaxial_hyper(x, m);
  }
  return comparison_law(law_from_name(name, og), mode, x, m);
}

struct FitCmd {
  std::string data, mode = "uniaxial-incompressible", curve, compare;
  int points = 200;
  OgdenFlags ogden;

  void attach(CLI::App* app) {
    app->add_option("data", data, "CSV with header lambda,t or gamma,sigma12")->required();
    app->add_option("--mode", mode, "uniaxial-incompressible|uniaxial-hyper|simple-shear")
        ->capture_default_str();
    app->add_option("--curve", curve, "write the model curve CSV here ('-' for stdout)");
    app->add_option("--points", points, "curve samples")->check(CLI::Range(2, 1000000))->capture_default_str();
    app->add_option("--compare", compare, "comma separated laws to add to the curve");
    ogden.attach(app);
  }

  int run(std::ostream& out) const {
    const DataSet d = read_dataset_file(data);
    if (d.size() < 2) fail(ErrorKind::DegenerateData, "need at least 2 data rows, got " + std::to_string(d.size()));
    const FitMode fm = parse_fit_mode(mode);
    const FitResult r = fit(d, fm);

    out << "model " << to_string(r.model) << '\n';
    out << "points " << d.size() << '\n';
    print_row(out, "G", {r.G});
    print_row(out, "rms", {r.rms});
    out << '\n';
    write_csv_header(out, {d.kind == DataSet::Kind::Shear ? "gamma" : "lambda", "data", "model", "residual"});
    for (std::size_t i = 0; i < d.size(); ++i)
      write_csv_row(out, {d.x[i], d.y[i], r.G * unit_model(fm, d.x[i]), r.residuals[i]});

    if (curve.empty()) return kOk;
    std::ofstream file;
    std::ostream* cs = &out;
    if (curve != "-") {
      file.open(curve);
      if (!file) fail(ErrorKind::InvalidArgument, "cannot write " + curve);
      cs = &file;
    } else {
      out << '\n';
    }
    const auto laws = split_list(compare);
    const LoadMode lm = fm == FitMode::SimpleShear ? LoadMode::SimpleShear : LoadMode::UniaxialIncompressible;
    // comparison laws use the fitted shear modulus with lambda = 0
    const Moduli m = Moduli::from_lame(r.G, 0.0);
    std::vector<std::string> header{d.kind == DataSet::Kind::Shear ? "gamma" : "lambda", "fit"};
    header.insert(header.end(), laws.begin(), laws.end());
    write_csv_header(*cs, header);
    const double lo = d.x.front(), hi = d.x.back();
    for (int k = 0; k < points; ++k) {
      const double x = lo + (hi - lo) * k / (points - 1);
      std::vector<double> row{x, r.G * unit_model(fm, x)};
      for (const auto& name : laws) row.push_back(comparison_value(name, ogden, lm, x, m));
      write_csv_row(*cs, row);
    }
    return kOk;
  }
};

// ---------------------------------------------------------------- plot data

struct PlotCmd {
  std::string figure, laws;
  double from = 0.0, to = 0.0;
  int points = 101;
  CLI::Option *oFrom = nullptr, *oTo = nullptr;
  ModuliFlags moduli;
  OgdenFlags ogden;

  void attach(CLI::App* app) {
    app->add_option("--figure", figure, "incompressible|simple-shear|tension")->required();
    app->add_option("--laws", laws, "comma separated laws (default depends on the figure)");
    oFrom = app->add_option("--from", from, "first abscissa");
    oTo = app->add_option("--to", to, "last abscissa");
    app->add_option("--points", points, "rows")->check(CLI::Range(2, 1000000))->capture_default_str();
    moduli.attach(app);
    ogden.attach(app);
  }

  int run(std::ostream& out, std::ostream& err) const {
    LoadMode mode;
    std::string abscissa, defaults;
    double lo, hi;
    if (figure == "incompressible") {
      mode = LoadMode::UniaxialIncompressible;
      abscissa = "lambda";
      defaults = "becker,becker-hyper,neo-hooke";
      lo = 0.5, hi = 5.0;
    } else if (figure == "simple-shear") {
      mode = LoadMode::SimpleShear;
      abscissa = "gamma";
      defaults = "becker,hencky-kirchhoff,hooke-biot,neo-hooke";
      lo = 0.0, hi = 3.0;
    } else if (figure == "tension") {
      mode = LoadMode::UniaxialCompressible;
      abscissa = "lambda";
      defaults = "becker,hencky-kirchhoff,hooke-biot,hooke-cauchy";
      lo = 0.5, hi = 2.0;
    } else {
      fail(ErrorKind::InvalidArgument, "unknown figure '" + figure + "'");
    }
    if (oFrom->count()) lo = from;
    if (oTo->count()) hi = to;
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
      fail(ErrorKind::InvalidArgument, "need --from < --to");

    std::vector<std::string> names = split_list(laws.empty() ? defaults : laws);
    if (laws.empty() && ogden.given()) names.push_back("ogden");

    // the incompressible and glide curves only need G
    ModuliInput in = moduli.input();
    if (mode != LoadMode::UniaxialCompressible && in.count() == 1 && in.G) {
      in.lambda = 0.0;
      err << "note: only G given, lambda = 0 assumed\n";
    }
    const Moduli m = resolve_moduli(in);

    std::vector<std::string> header{abscissa};
    header.insert(header.end(), names.begin(), names.end());
    write_csv_header(out, header);
    for (int k = 0; k < points; ++k) {
      const double x = lo + (hi - lo) * k / (points - 1);
      std::vector<double> row{x};
      for (const auto& name : names) row.push_back(comparison_value(name, ogden, mode, x, m));
      write_csv_row(out, row);
    }
    return kOk;
  }
};

}  // namespace

// ---------------------------------------------------------------- config

ModuliInput parse_config(std::istream& in) {
  ModuliInput out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const double v = parse_double(trim(line.substr(eq + 1)), "config value for " + key);
    if (key == "G") out.G = v;
    else if (key == "lambda") out.lambda = v;
    else if (key == "K") out.K = v;
    else if (key == "E") out.E = v;
    else if (key == "nu") out.nu = v;
    else fail(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return out;
}

ModuliInput read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open config file " + path);
  return parse_config(in);
}

ModuliInput merge_moduli(const ModuliInput& file, const ModuliInput& flags) {
  if (flags.count() >= 2) return flags;
  ModuliInput out = file;
  if (flags.G) out.G = flags.G;
  if (flags.lambda) out.lambda = flags.lambda;
  if (flags.K) out.K = flags.K;
  if (flags.E) out.E = flags.E;
  if (flags.nu) out.nu = flags.nu;
  return out;
}

// ---------------------------------------------------------------- entry point

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic Biot stress laws: stress analysis, checks and fitting", "logstrain"};
  app.require_subcommand(1);

  StressCmd stress;
  InvertCmd invert;
  ShearStaticsCmd statics;
  CheckCmd check;
  DecomposeCmd decompose;
  FitCmd fitcmd;
  PlotCmd plot;

  auto* s_stress = app.add_subcommand("stress", "stress of a law at a deformation gradient");
  stress.attach(s_stress);
  auto* s_invert = app.add_subcommand("invert", "stretch producing a given Biot stress");
  invert.attach(s_invert);
  auto* s_statics = app.add_subcommand("shear-statics", "Mohr circle, pond loads and failure stresses");
  statics.attach(s_statics);
  auto* s_check = app.add_subcommand("check", "run the verification suite, one JSON line per check");
  check.attach(s_check);
  auto* s_decomp = app.add_subcommand("decompose", "additive load and multiplicative stretch decompositions");
  decompose.attach(s_decomp);
  auto* s_fit = app.add_subcommand("fit", "fit the shear modulus to a data set");
  fitcmd.attach(s_fit);
  auto* s_plot = app.add_subcommand("plot-data", "comparison curves as CSV");
  plot.attach(s_plot);

  std::vector<const char*> argv{"logstrain"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (s_stress->parsed()) return stress.run(out);
    if (s_invert->parsed()) return invert.run(out);
    if (s_statics->parsed()) return statics.run(out);
    if (s_check->parsed()) return check.run(out, err);
    if (s_decomp->parsed()) return decompose.run(out);
    if (s_fit->parsed()) return fitcmd.run(out);
    if (s_plot->parsed()) return plot.run(out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace logstrain::cli
