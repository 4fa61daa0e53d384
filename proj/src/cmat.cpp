#include "eigenmin/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eigenmin {

namespace {

void check_same_shape(const CMat& a, const CMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

CMat::CMat(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("CMat: non-positive dimensions");
}

CMat::CMat(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("CMat: non-positive dimensions");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("CMat: entry count does not match rows*cols");
  }
  if (!all_finite()) throw std::invalid_argument("CMat: non-finite entry");
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = static_cast<int>(rows.size());
  if (rows_ == 0) throw std::invalid_argument("CMat: empty initializer");
  cols_ = static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw std::invalid_argument("CMat: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw std::invalid_argument("CMat: non-finite entry");
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::operator+(const CMat& o) const {
  check_same_shape(*this, o, "operator+");
  CMat r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  check_same_shape(*this, o, "operator-");
  CMat r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

CMat CMat::operator-() const {
  CMat r = *this;
  for (auto& v : r.data_) v = -v;
  return r;
}

CMat CMat::operator*(const CMat& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("operator*: inner dimensions " + std::to_string(cols_) +
                                " vs " + std::to_string(o.rows_));
  }
  CMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == 0.0) continue;
      const Complex* brow = &o.data_[static_cast<std::size_t>(k) * o.cols_];
      Complex* rrow = &r.data_[static_cast<std::size_t>(i) * o.cols_];
      for (int j = 0; j < o.cols_; ++j) rrow[j] += aik * brow[j];
    }
  }
  return r;
}

CMat& CMat::operator+=(const CMat& o) {
  check_same_shape(*this, o, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  check_same_shape(*this, o, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMat& CMat::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CMat CMat::transpose() const {
  CMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMat CMat::conj() const {
  CMat r = *this;
  for (auto& v : r.data_) v = std::conj(v);
  return r;
}

CMat CMat::conj_transpose() const {
  CMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMat CMat::block(int i0, int j0, int r, int c) const {
  if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_) {
    throw std::invalid_argument("block: out of range");
  }
  CMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
  return m;
}

void CMat::set_block(int i0, int j0, const CMat& m) {
  if (i0 < 0 || j0 < 0 || i0 + m.rows() > rows_ || j0 + m.cols() > cols_) {
    throw std::invalid_argument("set_block: out of range");
  }
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

CMat CMat::real_part() const {
  CMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].real();
  return r;
}

CMat CMat::imag_part() const {
  CMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].imag();
  return r;
}

Complex CMat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::norm_fro() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double CMat::norm_1() const {
  double best = 0.0;
  for (int j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double CMat::max_abs() const {
  double best = 0.0;
  for (const auto& v : data_) best = std::max(best, std::abs(v));
  return best;
}

bool CMat::all_finite() const {
  for (const auto& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

CMat operator*(Complex s, const CMat& m) {
  CMat r = m;
  r *= s;
  return r;
}
CMat operator*(double s, const CMat& m) { return Complex(s, 0.0) * m; }
CMat operator*(const CMat& m, Complex s) { return s * m; }
CMat operator*(const CMat& m, double s) { return Complex(s, 0.0) * m; }

double inner(const CMat& Z, const CMat& W) {
  check_same_shape(Z, W, "inner");
  // Re tr(Z conj(W)^t) = sum_ij Re(Z_ij) Re(W_ij) + Im(Z_ij) Im(W_ij)
  double s = 0.0;
  const auto& a = Z.data();
  const auto& b = W.data();
  for (std::size_t k = 0; k < a.size(); ++k) {
    s += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
  }
  return s;
}

// -- LU machinery ---------------------------------------------------------

namespace {

struct Lu {
  CMat f;                  // combined L\U factors
  std::vector<int> piv;    // row permutation
  int sign = 1;
  bool singular = false;
};

Lu lu_factor(const CMat& A) {
  if (!A.is_square()) throw std::invalid_argument("lu: non-square");
  const int n = A.rows();
  Lu lu{A, std::vector<int>(n), 1, false};
  for (int i = 0; i < n; ++i) lu.piv[i] = i;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(lu.f(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(lu.f(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) {
      lu.singular = true;
      continue;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(lu.f(k, j), lu.f(p, j));
      std::swap(lu.piv[k], lu.piv[p]);
      lu.sign = -lu.sign;
    }
    const Complex pivot = lu.f(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Complex m = lu.f(i, k) / pivot;
      lu.f(i, k) = m;
      if (m == 0.0) continue;
      for (int j = k + 1; j < n; ++j) lu.f(i, j) -= m * lu.f(k, j);
    }
  }
  return lu;
}

CVec lu_solve(const Lu& lu, const CVec& b) {
  const int n = lu.f.rows();
  CVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[lu.piv[i]];
  for (int i = 1; i < n; ++i) {
    Complex s = x[i];
    for (int j = 0; j < i; ++j) s -= lu.f(i, j) * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    Complex s = x[i];
    for (int j = i + 1; j < n; ++j) s -= lu.f(i, j) * x[j];
    x[i] = s / lu.f(i, i);
  }
  return x;
}

CMat lu_solve_mat(const Lu& lu, const CMat& B) {
  const int n = lu.f.rows();
  CMat X(n, B.cols());
  CVec col(n);
  for (int j = 0; j < B.cols(); ++j) {
    for (int i = 0; i < n; ++i) col[i] = B(i, j);
    CVec x = lu_solve(lu, col);
    for (int i = 0; i < n; ++i) X(i, j) = x[i];
  }
  return X;
}

/// 1-norm condition estimate via the explicit inverse; matrices here are
/// small enough that the extra n solves are immaterial.
double cond_1(const CMat& A, const Lu& lu) {
  const CMat inv = lu_solve_mat(lu, CMat::identity(A.rows()));
  return A.norm_1() * inv.norm_1();
}

}  // namespace

Complex det(const CMat& A) {
  Lu lu = lu_factor(A);
  if (lu.singular) return 0.0;
  Complex d = static_cast<double>(lu.sign);
  for (int i = 0; i < A.rows(); ++i) d *= lu.f(i, i);
  return d;
}

CVec solve(const CMat& A, const CVec& b, double cond_threshold) {
  if (!A.is_square()) throw std::invalid_argument("solve: non-square");
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve: rhs size");
  Lu lu = lu_factor(A);
  if (lu.singular) throw SingularSystemError("solve: singular matrix", INFINITY);
  const double c = cond_1(A, lu);
  if (c > cond_threshold) {
    throw SingularSystemError("solve: condition estimate " + std::to_string(c) +
                                  " exceeds threshold",
                              c);
  }
  return lu_solve(lu, b);
}

CMat solve(const CMat& A, const CMat& B, double cond_threshold) {
  if (!A.is_square()) throw std::invalid_argument("solve: non-square");
  if (B.rows() != A.rows()) throw std::invalid_argument("solve: rhs rows");
  Lu lu = lu_factor(A);
  if (lu.singular) throw SingularSystemError("solve: singular matrix", INFINITY);
  const double c = cond_1(A, lu);
  if (c > cond_threshold) {
    throw SingularSystemError("solve: condition estimate " + std::to_string(c) +
                                  " exceeds threshold",
                              c);
  }
  return lu_solve_mat(lu, B);
}

CMat inverse(const CMat& A, double cond_threshold) {
  return solve(A, CMat::identity(A.rows()), cond_threshold);
}

// -- matrix exponential ---------------------------------------------------

namespace {

// Pade numerator coefficients for exp, degrees 3..13 (Higham 2005).
const double kPade3[] = {120.0, 60.0, 12.0, 1.0};
const double kPade5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
const double kPade7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0};
const double kPade9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                         2162160.0,     110880.0,     3960.0,       90.0,        1.0};
const double kPade13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                          1187353796428800.0,  129060195264000.0,   10559470521600.0,
                          670442572800.0,      33522128640.0,       1323241920.0,
                          40840800.0,          960960.0,            16380.0,
                          182.0,               1.0};

const double kTheta3 = 1.495585217958292e-2;
const double kTheta5 = 2.539398330063230e-1;
const double kTheta7 = 9.504178996162932e-1;
const double kTheta9 = 2.097847961257068e0;
const double kTheta13 = 5.371920351148152e0;

CMat pade_eval(const CMat& A, const double* b, int degree) {
  const int n = A.rows();
  const CMat I = CMat::identity(n);
  const CMat A2 = A * A;
  CMat U(n, n), V(n, n);
  if (degree <= 9) {
    // U = A * (b1 I + b3 A2 + ...), V = b0 I + b2 A2 + ...
    CMat podd = b[degree] * I;   // will hold sum over odd coefficients / A
    CMat peven = b[degree - 1] * I;
    // Horner in A2
    for (int k = degree - 2; k >= 1; k -= 2) {
      podd = podd * A2 + b[k] * I;
      peven = peven * A2 + b[k - 1] * I;
    }
    U = A * podd;
    V = peven;
  } else {
    const CMat A4 = A2 * A2;
    const CMat A6 = A4 * A2;
    const CMat W1 = b[13] * A6 + b[11] * A4 + b[9] * A2;
    const CMat W2 = b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I;
    const CMat Z1 = b[12] * A6 + b[10] * A4 + b[8] * A2;
    const CMat Z2 = b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
    U = A * (A6 * W1 + W2);
    V = A6 * Z1 + Z2;
  }
  // exp(A) ~ (V - U)^{-1} (V + U); the system is well conditioned by scaling.
  Lu lu = lu_factor(V - U);
  if (lu.singular) throw std::runtime_error("mat_exp: Pade denominator singular");
  return lu_solve_mat(lu, V + U);
}

}  // namespace

CMat mat_exp(const CMat& Z) {
  if (!Z.is_square()) throw std::invalid_argument("mat_exp: non-square");
  if (!Z.all_finite()) throw std::invalid_argument("mat_exp: non-finite entry");
  const double a1 = Z.norm_1();
  if (a1 <= kTheta3) return pade_eval(Z, kPade3, 3);
  if (a1 <= kTheta5) return pade_eval(Z, kPade5, 5);
  if (a1 <= kTheta7) return pade_eval(Z, kPade7, 7);
  if (a1 <= kTheta9) return pade_eval(Z, kPade9, 9);
  int s = 0;
  double scaled = a1;
  while (scaled > kTheta13) {
    scaled *= 0.5;
    ++s;
  }
  CMat A = std::pow(0.5, s) * Z;
  CMat E = pade_eval(A, kPade13, 13);
  for (int k = 0; k < s; ++k) E = E * E;
  return E;
}

Complex bilinear_pair(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bilinear_pair: size mismatch");
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double hnorm(const CVec& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

double rdot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rdot: size mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double rnorm(const RVec& a) { return std::sqrt(rdot(a, a)); }

}  // namespace eigenmin
