#include "logstrain/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "logstrain/error.hpp"
#include "logstrain/kinematics.hpp"

namespace logstrain {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, int line) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (!s.empty() && *b == '+') ++b;
  const auto res = std::from_chars(b, e, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != e) {
    std::ostringstream os;
    os << "line " << line << ": '" << s << "' is not a number";
    fail(ErrorKind::InvalidArgument, os.str());
  }
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "line " << line << ": non-finite value";
    fail(ErrorKind::NonFinite, os.str());
  }
  return v;
}

}  // namespace

DataSet read_dataset(std::istream& in, const std::string& label) {
  DataSet ds;
  ds.label = label;
  bool have_header = false;
  std::map<double, std::pair<double, int>> rows;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto cells = split(s);
    if (!have_header) {
      if (cells.size() == 2 && cells[0] == "lambda" && cells[1] == "t") {
        ds.kind = DataSet::Kind::Uniaxial;
      } else if (cells.size() == 2 && cells[0] == "gamma" && cells[1] == "sigma12") {
        ds.kind = DataSet::Kind::Shear;
      } else {
        fail(ErrorKind::InvalidArgument, "header must be 'lambda,t' or 'gamma,sigma12'");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != 2) {
      std::ostringstream os;
      os << "line " << line << ": expected 2 columns, got " << cells.size();
      fail(ErrorKind::InvalidArgument, os.str());
    }
    const double x = parse_number(cells[0], line);
    const double y = parse_number(cells[1], line);
    if (ds.kind == DataSet::Kind::Uniaxial && !(x > 0.0)) {
      std::ostringstream os;
      os << "line " << line << ": stretch must be positive";
      fail(ErrorKind::InvalidArgument, os.str());
    }
    auto& acc = rows[x];
    acc.first += y;
    acc.second += 1;
  }
  if (!have_header) fail(ErrorKind::DegenerateData, "empty data file");
  for (const auto& [x, acc] : rows) {
    ds.x.push_back(x);
    ds.y.push_back(acc.first / acc.second);
  }
  return ds;
}

DataSet read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  return read_dataset(in, path);
}

const char* to_string(FitMode mode) {
  switch (mode) {
    case FitMode::UniaxialIncompressible: return "uniaxial-incompressible";
    case FitMode::UniaxialHyper: return "uniaxial-hyper";
    case FitMode::SimpleShear: return "simple-shear";
  }
  return "?";
}

FitMode parse_fit_mode(const std::string& name) {
  for (FitMode m : {FitMode::UniaxialIncompressible, FitMode::UniaxialHyper, FitMode::SimpleShear})
    if (name == to_string(m)) return m;
  fail(ErrorKind::InvalidArgument, "unknown fit mode '" + name + "'");
}

double unit_model(FitMode mode, double x) {
  switch (mode) {
    case FitMode::UniaxialIncompressible: return 3.0 * std::log(x);
    case FitMode::UniaxialHyper: return std::log(x) * (2.0 + std::pow(x, -1.5));
    case FitMode::SimpleShear: {
      const double l1 = glide_principal_stretches(x)[0];
      return (x < 0.0 ? -2.0 : 2.0) * std::log(l1);
    }
  }
  return 0.0;
}

double golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                               double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int k = 0; k < 500 && std::abs(b - a) > tol; ++k) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

FitResult fit(const DataSet& data, FitMode mode) {
  if (data.size() == 0) fail(ErrorKind::DegenerateData, "no data rows");
  const bool shear_mode = mode == FitMode::SimpleShear;
  if (shear_mode != (data.kind == DataSet::Kind::Shear))
    fail(ErrorKind::InvalidArgument,
         std::string("fit mode ") + to_string(mode) + " does not match the data columns");

  std::vector<double> basis(data.size());
  double sbb = 0.0, sbt = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    basis[i] = unit_model(mode, data.x[i]);
    sbb += basis[i] * basis[i];
    sbt += basis[i] * data.y[i];
  }
  if (!(sbb > 0.0))
    fail(ErrorKind::DegenerateData, "all rows sit at the reference state; G is undetermined");

  FitResult r;
  r.model = mode;
  if (mode == FitMode::UniaxialHyper) {
    // the optimum is a weighted mean of the per-row ratios t_i / b_i
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (basis[i] == 0.0) continue;
      lo = std::min(lo, data.y[i] / basis[i]);
      hi = std::max(hi, data.y[i] / basis[i]);
    }
    const auto sse = [&](double g) {
      double s = 0.0;
      for (std::size_t i = 0; i < data.size(); ++i) {
        const double e = data.y[i] - g * basis[i];
        s += e * e;
      }
      return s;
    };
    const double pad = 1e-9 * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
    r.G = hi - lo <= pad ? lo
                         : golden_section_minimize(sse, lo - pad, hi + pad,
                                                   1e-15 * std::max(std::abs(lo), std::abs(hi)));
  } else {
    r.G = sbt / sbb;
  }

  double ss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double e = data.y[i] - r.G * basis[i];
    r.residuals.push_back(e);
    ss += e * e;
  }
  r.rms = std::sqrt(ss / double(data.size()));
  return r;
}

}  // namespace logstrain
