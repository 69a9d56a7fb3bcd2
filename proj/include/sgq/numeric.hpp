#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sgq/free_algebra.hpp"
#include "sgq/graded_operator.hpp"
#include "sgq/laurent.hpp"

namespace sgq {

// Compression of an operator to span{e_s : s among the first N members}.
struct TruncatedMatrix {
  std::vector<std::int64_t> basis;
  Eigen::MatrixXcd entries;
};

// Entry (i, j) is the weight of the (s_i - s_j)-component at s_j.
TruncatedMatrix truncate(const ComplexOperator& a, std::size_t n);
TruncatedMatrix truncate(const OperatorElement& a, std::size_t n);

struct PowerIterationSettings {
  double tol = 1e-10;
  int max_iterations = 100000;
};

// Largest singular value by power iteration on M^H M from the normalized
// all-ones vector, stopping when the relative Rayleigh change drops below
// tol. Throws std::runtime_error when the iteration cap is reached.
double operator_norm(const TruncatedMatrix& m, PowerIterationSettings settings = {});

struct SupNorm {
  double value = 0;
  double error_bound = 0;
};

// max |f| over M equally spaced angles; the true sup exceeds the grid value by
// at most π·(max |exponent|)·(sum |f_c|)/M.
SupNorm laurent_sup_norm(const LaurentPolynomial& f, int samples = 4096);

struct NormConvergence {
  std::vector<std::size_t> dims;
  std::vector<double> norms;
  SupNorm sup;
  bool monotone = true;
  bool within_band = true;
  bool pass() const { return monotone && within_band; }
};

// ‖truncate(toeplitz_lift(f), N)‖ along increasing dims, compared with
// ‖f‖_∞ at the last one.
NormConvergence norm_convergence(const LaurentPolynomial& f, const NumericalSemigroup& s,
                                 const std::vector<std::size_t>& dims, double band = 0.05,
                                 PowerIterationSettings settings = {});

// Multiplies the index-c component by exp(i c θ).
ComplexOperator gauge_twist(const ComplexOperator& a, double theta);
ComplexOperator gauge_twist(const OperatorElement& a, double theta);

// (1/M) sum_k exp(-i a θ_k) gauge_twist(A, θ_k), θ_k = 2πk/M. Throws
// std::invalid_argument unless M > 2·(max |index| of A).
ComplexOperator fourier_project(const OperatorElement& a, std::int64_t index, int samples);

// Largest pointwise weight difference over all components.
double weight_distance(const ComplexOperator& a, const ComplexOperator& b);

struct ShiftExample {
  // Corrected factor order T_2(I - P) + T_2^* T_3.
  bool corrected_is_shift = false;
  bool corrected_is_isometry = false;
  // Printed factor order (I - P)T_2 + T_2^* T_3.
  bool printed_is_shift = false;
  std::optional<std::int64_t> printed_first_failure{};  // member whose image is wrong
  std::map<std::int64_t, GaussianRational> printed_image_at_failure{};
  FreeElement printed_free;
  FreeElement corrected_free;
  // Δ(T) against shift ⊗ shift over member pairs up to the window.
  std::optional<std::pair<std::int64_t, std::int64_t>> tensor_witness{};
  std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> delta_image{};
  std::pair<std::int64_t, std::int64_t> shift_image{};
  bool diagonal_agrees = true;
  int shift_steps = 50;
  std::int64_t window = 0;
};

// Both factor orders of the shift built from monomials over <2,3>.
ShiftExample shift_example_check(int steps = 50, std::int64_t window = 12);

}  // namespace sgq
