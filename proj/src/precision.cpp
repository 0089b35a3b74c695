#include "ppsim/precision.hpp"

#include <algorithm>
#include <numeric>

namespace ppsim {

DigitsGuard::DigitsGuard(int digits) : saved_(mpreal::default_precision()) {
  mpreal::default_precision(static_cast<unsigned>(digits));
}

DigitsGuard::~DigitsGuard() { mpreal::default_precision(saved_); }

MpMatrix::MpMatrix(int n_) : n(n_), re(std::size_t(n_) * n_, mpreal(0)), im(std::size_t(n_) * n_, mpreal(0)) {}

MpMatrix MpMatrix::from(const CMat& m) {
  MpMatrix out(static_cast<int>(m.rows()));
  for (int j = 0; j < out.n; ++j)
    for (int i = 0; i < out.n; ++i) {
      out.r(i, j) = m(i, j).real();
      out.i(i, j) = m(i, j).imag();
    }
  return out;
}

MpMatrix MpMatrix::identity(int n) {
  MpMatrix out(n);
  for (int k = 0; k < n; ++k) out.r(k, k) = 1;
  return out;
}

CMat MpMatrix::to_double() const {
  CMat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = cd(r(i, j).convert_to<double>(), this->i(i, j).convert_to<double>());
  return m;
}

MpDense mp_embed(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  MpDense out(2 * n, 2 * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const mpreal re = m(i, j).real(), im = m(i, j).imag();
      out(i, j) = re;
      out(i + n, j + n) = re;
      out(i, j + n) = -im;
      out(i + n, j) = im;
    }
  return out;
}

MpMatrix mp_multiply(const MpMatrix& a, const MpMatrix& b) {
  const int n = a.n;
  MpMatrix c(n);
  mpreal sr, si;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      sr = 0;
      si = 0;
      for (int k = 0; k < n; ++k) {
        sr += a.r(i, k) * b.r(k, j) - a.i(i, k) * b.i(k, j);
        si += a.r(i, k) * b.i(k, j) + a.i(i, k) * b.r(k, j);
      }
      c.r(i, j) = sr;
      c.i(i, j) = si;
    }
  return c;
}

MpMatrix mp_adjoint(const MpMatrix& a) {
  MpMatrix c(a.n);
  for (int j = 0; j < a.n; ++j)
    for (int i = 0; i < a.n; ++i) {
      c.r(i, j) = a.r(j, i);
      c.i(i, j) = -a.i(j, i);
    }
  return c;
}

MpSpectral jacobi_hermitian(MpMatrix a, int digits) {
  const int n = a.n;
  MpSpectral out;
  out.digits = digits;
  MpMatrix v = MpMatrix::identity(n);

  mpreal fro = 0;
  for (std::size_t k = 0; k < a.re.size(); ++k) fro += a.re[k] * a.re[k] + a.im[k] * a.im[k];
  fro = sqrt(fro);
  const mpreal tol = fro * pow(mpreal(10), -digits);

  mpreal absa, c, s, er, ei, theta, xr, xi, yr, yi;
  for (int sweep = 0; sweep < 100; ++sweep) {
    mpreal off = 0;
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < q; ++p) off += a.r(p, q) * a.r(p, q) + a.i(p, q) * a.i(p, q);
    off = sqrt(2 * off);
    out.sweeps = sweep;
    if (off <= tol || fro == 0) break;

    for (int q = 1; q < n; ++q)
      for (int p = 0; p < q; ++p) {
        absa = sqrt(a.r(p, q) * a.r(p, q) + a.i(p, q) * a.i(p, q));
        if (absa == 0) continue;
        // e^{-i phi} = conj(a_pq)/|a_pq|
        er = a.r(p, q) / absa;
        ei = -a.i(p, q) / absa;
        theta = atan2(2 * absa, a.r(q, q) - a.r(p, p)) / 2;
        c = cos(theta);
        s = sin(theta);
        // columns: A J, V J with J = [[c, s], [-s e, c e]], e = e^{-i phi}
        for (int k = 0; k < n; ++k) {
          for (MpMatrix* m : {&a, &v}) {
            const mpreal pr = m->r(k, p), pi = m->i(k, p), qr = m->r(k, q), qi = m->i(k, q);
            // q * e
            xr = qr * er - qi * ei;
            xi = qr * ei + qi * er;
            m->r(k, p) = c * pr - s * xr;
            m->i(k, p) = c * pi - s * xi;
            m->r(k, q) = s * pr + c * xr;
            m->i(k, q) = s * pi + c * xi;
          }
        }
        // rows: J^dagger A; conj(e) = e^{+i phi}
        for (int k = 0; k < n; ++k) {
          const mpreal pr = a.r(p, k), pi = a.i(p, k), qr = a.r(q, k), qi = a.i(q, k);
          yr = qr * er + qi * ei;
          yi = qi * er - qr * ei;
          a.r(p, k) = c * pr - s * yr;
          a.i(p, k) = c * pi - s * yi;
          a.r(q, k) = s * pr + c * yr;
          a.i(q, k) = s * pi + c * yi;
        }
        a.r(p, q) = 0;
        a.i(p, q) = 0;
        a.r(q, p) = 0;
        a.i(q, p) = 0;
        a.i(p, p) = 0;
        a.i(q, q) = 0;
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.r(x, x) < a.r(y, y); });
  out.values.resize(n);
  out.vectors = MpMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a.r(order[k], order[k]);
    for (int i = 0; i < n; ++i) {
      out.vectors.r(i, k) = v.r(i, order[k]);
      out.vectors.i(i, k) = v.i(i, order[k]);
    }
  }
  return out;
}

MpMatrix mp_function_of(const MpSpectral& s, const std::vector<mpreal>& f) {
  const int n = s.vectors.n;
  MpMatrix out(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      mpreal sr = 0, si = 0;
      for (int k = 0; k < n; ++k) {
        // v_ik f_k conj(v_jk)
        const mpreal& ar = s.vectors.r(i, k);
        const mpreal& ai = s.vectors.i(i, k);
        const mpreal& br = s.vectors.r(j, k);
        const mpreal& bi = s.vectors.i(j, k);
        sr += f[k] * (ar * br + ai * bi);
        si += f[k] * (ai * br - ar * bi);
      }
      out.r(i, j) = sr;
      out.i(i, j) = si;
    }
  return out;
}

Spectral spectral_decompose(const CMat& M, int precision) {
  if (M.rows() != M.cols()) throw Error(ErrorKind::dimension, "spectral_decompose: matrix not square");
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double herm = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10 * scale)
    throw Error(ErrorKind::numerical_state, "spectral_decompose: matrix not Hermitian (deviation " +
                                                std::to_string(herm) + ")");
  Spectral out;
  out.digits = std::max(16, precision);
  if (precision <= 16) {
    Eigen::SelfAdjointEigenSolver<CMat> es(M);
    out.values = es.eigenvalues();
    out.vectors = es.eigenvectors();
    return out;
  }
  DigitsGuard guard(precision + 10);
  MpMatrix a = MpMatrix::from(M);
  // symmetrize exactly
  for (int j = 0; j < a.n; ++j) {
    a.i(j, j) = 0;
    for (int i = 0; i < j; ++i) {
      a.r(i, j) = (a.r(i, j) + a.r(j, i)) / 2;
      a.r(j, i) = a.r(i, j);
      a.i(i, j) = (a.i(i, j) - a.i(j, i)) / 2;
      a.i(j, i) = -a.i(i, j);
    }
  }
  out.mp = jacobi_hermitian(std::move(a), precision);
  out.values.resize(out.mp.values.size());
  for (std::size_t k = 0; k < out.mp.values.size(); ++k) out.values[k] = out.mp.values[k].convert_to<double>();
  out.vectors = out.mp.vectors.to_double();
  return out;
}

}  // namespace ppsim
