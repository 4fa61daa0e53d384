#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenmin {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using RVec = std::vector<double>;

/// Thrown by solve()/inverse() when the coefficient matrix is singular or its
/// 1-norm condition estimate exceeds the caller's threshold.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(const std::string& what, double cond)
      : std::runtime_error(what), cond_estimate(cond) {}
  double cond_estimate;
};

/// Dense complex matrix, row-major. The universal carrier for group elements,
/// algebra elements and generators. Sizes in play stay below ~40x40, so no
/// structured storage is used anywhere.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols);  // zero-filled
  CMat(int rows, int cols, std::vector<Complex> entries);
  CMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }

  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator-() const;
  CMat operator*(const CMat& o) const;
  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(Complex s);

  CMat transpose() const;
  CMat conj() const;
  CMat conj_transpose() const;

  CMat block(int i0, int j0, int r, int c) const;
  void set_block(int i0, int j0, const CMat& m);

  CMat real_part() const;  // entrywise Re, imaginary parts zeroed
  CMat imag_part() const;  // entrywise Im

  Complex trace() const;
  double norm_fro() const;
  double norm_1() const;  // max column sum of |entry|
  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

CMat operator*(Complex s, const CMat& m);
CMat operator*(double s, const CMat& m);
CMat operator*(const CMat& m, Complex s);
CMat operator*(const CMat& m, double s);

/// Bi-invariant inner product g(Z,W) = Re tr(Z * conj(W)^t). Real bilinear,
/// symmetric. Throws on shape mismatch.
double inner(const CMat& Z, const CMat& W);

/// Matrix exponential by scaling-and-squaring with diagonal Pade approximants.
/// Relative accuracy ~1e-13 on the operating range (algebra elements with
/// norm up to ~10), which every derivative and fiber step leans on.
CMat mat_exp(const CMat& Z);

/// Complex determinant via partially pivoted LU. Returns the full complex
/// value; callers comparing against Appendix-style identities take |det|.
Complex det(const CMat& A);

/// Solve A x = b. Rejects singular or numerically singular systems
/// (1-norm condition estimate above cond_threshold).
CVec solve(const CMat& A, const CVec& b, double cond_threshold = 1e12);
CMat solve(const CMat& A, const CMat& B, double cond_threshold = 1e12);
CMat inverse(const CMat& A, double cond_threshold = 1e12);

// -- small vector helpers -----------------------------------------------

/// Complex-bilinear pairing (a,b) = sum_k a_k b_k (no conjugation).
Complex bilinear_pair(const CVec& a, const CVec& b);
/// Hermitian norm sqrt(sum |a_k|^2).
double hnorm(const CVec& a);
double rdot(const RVec& a, const RVec& b);
double rnorm(const RVec& a);

}  // namespace eigenmin
