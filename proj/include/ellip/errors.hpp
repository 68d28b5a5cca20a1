#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ellip {

// A denominator factor got too close to zero to divide through safely.
// `where` names the product and box that tripped, `factor` is its value.
struct PoleError : std::runtime_error {
  std::complex<double> factor;
  std::string where;
  PoleError(const std::string& msg, std::complex<double> f, std::string w)
      : std::runtime_error(msg + " [" + w + "]"), factor(f), where(std::move(w)) {}
};

// Parameter set does not satisfy t^{2(n-1)} t0 t1 t2 t3 u0 u1 = p q.
struct BalancingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters fail a required discrete specialization (t0 t1 = q^{-m} t^{1-n}).
struct SpecializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generic precondition violation on an evaluation request.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature density factor fell below the safe threshold on the grid.
struct PoleGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The valuation analysis hit the one case the theory leaves open.
struct UndeterminedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ellip
