#pragma once

#include <functional>

#include "eigenmin/groups.hpp"

namespace eigenmin {

enum class Backend { exact, fd };

Backend backend_from_string(const std::string& s);
std::string backend_name(Backend b);

/// Finite-difference step sizes: h1 for the order-4 first-derivative stencil,
/// h2 for the order-4 second-derivative stencil.
struct FdSteps {
  double h1 = 1e-4;
  double h2 = 1e-3;
};

/// Complex scalar function on a matrix group, optionally carrying exact
/// derivative evaluators along one-parameter subgroups:
///   d^k/ds^k f(p exp(sZ)) | s=0.
struct ScalarField {
  std::function<Complex(const CMat&)> evaluate;
  std::function<Complex(const CMat&, const CMat&)> exact_d1;  // may be empty
  std::function<Complex(const CMat&, const CMat&)> exact_d2;  // may be empty
};

/// Order-4 central stencils for a 1D complex-valued curve; reused by the
/// sphere checks.
Complex fd_first(const std::function<Complex(double)>& f, double h);
Complex fd_second(const std::function<Complex(double)>& f, double h);

/// k-th derivative (k = 1, 2) of f along the curve s |-> p * exp(sZ).
/// Backend::exact requires the field to provide the matching evaluator.
Complex directional_derivative(const ScalarField& f, const CMat& p, const CMat& Z, int order,
                               Backend backend = Backend::exact, const FdSteps& steps = {});

/// Sum of second derivatives over the basis. With the p-basis of a symmetric
/// space and a K-invariant lift this equals the quotient-space tension.
Complex tension(const ScalarField& f, const CMat& p, const AlgebraBasis& basis,
                Backend backend = Backend::exact, const FdSteps& steps = {});

/// kappa(f, g) = sum of products of first derivatives over the basis.
Complex conformality(const ScalarField& f, const ScalarField& g, const CMat& p,
                     const AlgebraBasis& basis, Backend backend = Backend::exact,
                     const FdSteps& steps = {});

/// Component vector of the gradient in the given orthonormal basis.
CVec gradient_coeffs(const ScalarField& f, const CMat& p, const AlgebraBasis& basis,
                     Backend backend = Backend::exact, const FdSteps& steps = {});

/// Hess f(X,X)(p) = d^2/ds^2 f(p exp(sX)); valid for any real combination X
/// of algebra elements since left-invariant fields of the bi-invariant metric
/// satisfy nabla_X X = 0.
Complex hessian_quadratic(const ScalarField& f, const CMat& p, const CMat& X,
                          Backend backend = Backend::exact, const FdSteps& steps = {});

}  // namespace eigenmin
