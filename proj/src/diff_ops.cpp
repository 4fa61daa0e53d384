#include "eigenmin/diff_ops.hpp"

namespace eigenmin {

Backend backend_from_string(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "fd") return Backend::fd;
  throw std::invalid_argument("unknown backend '" + s + "' (expected exact|fd)");
}

std::string backend_name(Backend b) { return b == Backend::exact ? "exact" : "fd"; }

Complex fd_first(const std::function<Complex(double)>& f, double h) {
  return (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h);
}

Complex fd_second(const std::function<Complex(double)>& f, double h) {
  return (-f(-2.0 * h) + 16.0 * f(-h) - 30.0 * f(0.0) + 16.0 * f(h) - f(2.0 * h)) /
         (12.0 * h * h);
}

Complex directional_derivative(const ScalarField& f, const CMat& p, const CMat& Z, int order,
                               Backend backend, const FdSteps& steps) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("directional_derivative: order must be 1 or 2");
  }
  if (backend == Backend::exact) {
    const auto& d = (order == 1) ? f.exact_d1 : f.exact_d2;
    if (!d) {
      throw std::invalid_argument(
          "directional_derivative: exact backend requested but field has no exact_d" +
          std::to_string(order));
    }
    return d(p, Z);
  }
  const auto along = [&](double s) { return f.evaluate(p * mat_exp(s * Z)); };
  return order == 1 ? fd_first(along, steps.h1) : fd_second(along, steps.h2);
}

Complex tension(const ScalarField& f, const CMat& p, const AlgebraBasis& basis, Backend backend,
                const FdSteps& steps) {
  Complex acc = 0.0;
  for (const CMat& Z : basis.elements) {
    acc += directional_derivative(f, p, Z, 2, backend, steps);
  }
  return acc;
}

Complex conformality(const ScalarField& f, const ScalarField& g, const CMat& p,
                     const AlgebraBasis& basis, Backend backend, const FdSteps& steps) {
  Complex acc = 0.0;
  for (const CMat& Z : basis.elements) {
    acc += directional_derivative(f, p, Z, 1, backend, steps) *
           directional_derivative(g, p, Z, 1, backend, steps);
  }
  return acc;
}

CVec gradient_coeffs(const ScalarField& f, const CMat& p, const AlgebraBasis& basis,
                     Backend backend, const FdSteps& steps) {
  CVec out(basis.elements.size());
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    out[i] = directional_derivative(f, p, basis.elements[i], 1, backend, steps);
  }
  return out;
}

Complex hessian_quadratic(const ScalarField& f, const CMat& p, const CMat& X, Backend backend,
                          const FdSteps& steps) {
  return directional_derivative(f, p, X, 2, backend, steps);
}

}  // namespace eigenmin
