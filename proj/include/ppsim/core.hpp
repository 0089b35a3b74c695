#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace ppsim {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

// Selects the OpenMP kernel or the serial reference path. Both produce
// bit-identical results; the serial path exists for testing and benchmarks.
enum class Exec { serial, parallel };

enum class ErrorKind {
  config,
  invalid_lattice,
  domain,
  dimension,
  degeneracy,
  numerical_state,
  precision,
  no_tpp,
  no_minimum,
  ambiguous,
  size,
  feature,
  geometry,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind k);

// Digit budget used when a kernel is called without an explicit precision.
// Reads PPSIM_PRECISION_DIGITS; 16 (double) when unset. Throws a config
// error for values that are not integers in [8, 2000].
int default_precision_digits();

}  // namespace ppsim
