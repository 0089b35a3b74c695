#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <vector>

#include "ppsim/core.hpp"

namespace ppsim {

using mpreal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;
using MpDense = Eigen::Matrix<mpreal, Eigen::Dynamic, Eigen::Dynamic>;

// Sets the MPFR working precision for the current thread and restores it on exit.
class DigitsGuard {
 public:
  explicit DigitsGuard(int digits);
  ~DigitsGuard();
  DigitsGuard(const DigitsGuard&) = delete;
  DigitsGuard& operator=(const DigitsGuard&) = delete;

 private:
  unsigned saved_;
};

// Dense complex matrix with mpfr entries, column-major.
struct MpMatrix {
  int n = 0;
  std::vector<mpreal> re, im;
  MpMatrix() = default;
  explicit MpMatrix(int n_);
  mpreal& r(int i, int j) { return re[i + n * j]; }
  mpreal& i(int i_, int j) { return im[i_ + n * j]; }
  const mpreal& r(int i_, int j) const { return re[i_ + n * j]; }
  const mpreal& i(int i_, int j) const { return im[i_ + n * j]; }
  static MpMatrix from(const CMat& m);
  static MpMatrix identity(int n);
  CMat to_double() const;
};

MpMatrix mp_multiply(const MpMatrix& a, const MpMatrix& b);
MpMatrix mp_adjoint(const MpMatrix& a);

struct MpSpectral {
  std::vector<mpreal> values;  // ascending
  MpMatrix vectors;            // columns
  int digits = 0;
  int sweeps = 0;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix at the current MPFR
// precision. Stops once the off-diagonal norm is below 10^-digits relative
// to the Frobenius norm.
MpSpectral jacobi_hermitian(MpMatrix a, int digits);

// Real 2n x 2n embedding [[Re, -Im], [Im, Re]] of a complex matrix; it is an
// algebra homomorphism, so products and inverses can be formed in it directly.
MpDense mp_embed(const CMat& m);

// V diag(f(values)) V^dagger.
MpMatrix mp_function_of(const MpSpectral& s, const std::vector<mpreal>& fvalues);

struct Spectral {
  Vec values;     // ascending
  CMat vectors;   // columns
  int digits = 16;
  MpSpectral mp;  // populated only when digits > 16
};

// Full spectral decomposition; double precision through Eigen when
// precision <= 16, otherwise the MPFR Jacobi path.
Spectral spectral_decompose(const CMat& M, int precision = 16);

}  // namespace ppsim
