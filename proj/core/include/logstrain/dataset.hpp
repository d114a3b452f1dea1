#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace logstrain {

// Experimental curve: stretch vs nominal (Biot) stress for uniaxial data,
// amount of glide vs shear stress for shear data.
struct DataSet {
  enum class Kind { Uniaxial, Shear };

  Kind kind = Kind::Uniaxial;
  std::vector<double> x;
  std::vector<double> y;
  std::string label;

  std::size_t size() const { return x.size(); }
};

// CSV with header "lambda,t" or "gamma,sigma12"; lines starting with '#'
// and blank lines are ignored. Rows come back sorted by abscissa with
// duplicate abscissae averaged.
DataSet read_dataset(std::istream& in, const std::string& label = {});
DataSet read_dataset_file(const std::string& path);

enum class FitMode { UniaxialIncompressible, UniaxialHyper, SimpleShear };

const char* to_string(FitMode mode);
FitMode parse_fit_mode(const std::string& name);

struct FitResult {
  double G = 0.0;
  double rms = 0.0;
  std::vector<double> residuals;  // data - model
  FitMode model = FitMode::UniaxialIncompressible;
};

// Model response for a unit shear modulus; the fitted curve is G times it.
double unit_model(FitMode mode, double x);

FitResult fit(const DataSet& data, FitMode mode);

// Minimizer of a unimodal function on [a, b].
double golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                               double tol);

}  // namespace logstrain
