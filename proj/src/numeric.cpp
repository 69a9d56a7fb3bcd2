#include "sgq/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SparseCore>

#include "sgq/algebra.hpp"

namespace sgq {

TruncatedMatrix truncate(const ComplexOperator& a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncate: dimension must be positive");
  const auto& s = a.semigroup();
  TruncatedMatrix m;
  m.basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.basis.push_back(s.element_at(i));
  m.entries = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const std::int64_t top = m.basis.back();
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t d = m.basis[j];
    for (const auto& [target, v] : a.apply(d)) {
      if (target > top) continue;
      m.entries(static_cast<Eigen::Index>(s.position_of(target)), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return m;
}

TruncatedMatrix truncate(const OperatorElement& a, std::size_t n) { return truncate(to_complex(a), n); }

double operator_norm(const TruncatedMatrix& m, PowerIterationSettings settings) {
  if (settings.tol <= 0) throw std::invalid_argument("operator_norm: tol must be positive");
  using Sparse = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;
  const Sparse a = m.entries.sparseView();
  const Sparse ah = a.adjoint();
  const Eigen::Index n = m.entries.cols();

  Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n) / std::sqrt(static_cast<double>(n));
  double previous = 0;
  for (int it = 0; it < settings.max_iterations; ++it) {
    const Eigen::VectorXcd z = ah * (a * x);
    const double lambda = x.dot(z).real();
    const double norm = z.norm();
    if (norm == 0) return 0;
    if (it > 0 && std::abs(lambda - previous) < settings.tol * std::abs(lambda)) return std::sqrt(lambda);
    previous = lambda;
    x = z / norm;
  }
  throw std::runtime_error("operator_norm: power iteration did not converge within " +
                           std::to_string(settings.max_iterations) + " iterations");
}

SupNorm laurent_sup_norm(const LaurentPolynomial& f, int samples) {
  if (samples < 16) throw std::invalid_argument("laurent_sup_norm: need at least 16 samples");
  SupNorm out;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    out.value = std::max(out.value, std::abs(f.evaluate(theta)));
  }
  out.error_bound = std::numbers::pi * static_cast<double>(f.max_abs_exponent()) * f.l1_norm() / samples;
  return out;
}

NormConvergence norm_convergence(const LaurentPolynomial& f, const NumericalSemigroup& s,
                                 const std::vector<std::size_t>& dims, double band,
                                 PowerIterationSettings settings) {
  if (dims.empty()) throw std::invalid_argument("norm_convergence: no dimensions");
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] <= dims[i - 1]) throw std::invalid_argument("norm_convergence: dims must increase");
  }
  NormConvergence out;
  out.dims = dims;
  const ComplexOperator lifted = to_complex(toeplitz_lift(f, s));
  for (auto n : dims) out.norms.push_back(operator_norm(truncate(lifted, n), settings));
  for (std::size_t i = 1; i < out.norms.size(); ++i) {
    if (out.norms[i] < out.norms[i - 1] - 2 * settings.tol) out.monotone = false;
  }
  out.sup = laurent_sup_norm(f);
  out.within_band = std::abs(out.norms.back() - out.sup.value) <= band + out.sup.error_bound;
  return out;
}

ComplexOperator gauge_twist(const ComplexOperator& a, double theta) {
  const auto& s = a.semigroup();
  ComplexOperator out(s);
  for (const auto& [c, w] : a.components()) {
    const std::complex<double> phase = std::polar(1.0, static_cast<double>(c) * theta);
    out.set_component(c, ComplexOperator::Weight::tabulate(
                             s, w.threshold(), [&](std::int64_t d) { return phase * w.at(d); }, phase * w.tail()));
  }
  return out;
}

ComplexOperator gauge_twist(const OperatorElement& a, double theta) { return gauge_twist(to_complex(a), theta); }

ComplexOperator fourier_project(const OperatorElement& a, std::int64_t index, int samples) {
  std::int64_t span = 0;
  for (const auto& [c, w] : a.components()) span = std::max(span, std::abs(c));
  if (samples <= 2 * std::max(span, std::abs(index))) {
    throw std::invalid_argument("fourier_project: too few samples for the index span");
  }
  const ComplexOperator base = to_complex(a);
  ComplexOperator sum(a.semigroup());
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const std::complex<double> weight =
        std::polar(1.0, -static_cast<double>(index) * theta) / static_cast<double>(samples);
    sum += weight * gauge_twist(base, theta);
  }
  return sum;
}

double weight_distance(const ComplexOperator& a, const ComplexOperator& b) {
  double out = 0;
  auto visit = [&](std::int64_t c) {
    const auto wa = a.component(c);
    const auto wb = b.component(c);
    const std::int64_t limit = std::max(wa.threshold(), wb.threshold());
    for (std::int64_t d = 0; d < limit; ++d) out = std::max(out, std::abs(wa.at(d) - wb.at(d)));
    out = std::max(out, std::abs(wa.tail() - wb.tail()));
  };
  for (const auto& [c, w] : a.components()) visit(c);
  for (const auto& [c, w] : b.components()) visit(c);
  return out;
}

ShiftExample shift_example_check(int steps, std::int64_t window) {
  const auto s = NumericalSemigroup::build({2, 3});
  const Word p_word{{3, true}, {2, false}, {2, true}, {3, false}};
  const auto identity = FreeElement::identity(s);
  const auto p = FreeElement::monomial(evaluate_word(s, p_word));
  const auto t2 = FreeElement::monomial(elementary(s, 2, false));
  const auto back = FreeElement::monomial(evaluate_word(s, {{2, true}, {3, false}}));

  ShiftExample out{.printed_free = (identity - p) * t2 + back, .corrected_free = t2 * (identity - p) + back};
  out.shift_steps = steps;
  out.window = window;

  auto first_failure = [&](const OperatorElement& t) -> std::optional<std::int64_t> {
    for (int i = 0; i < steps; ++i) {
      const std::int64_t d = s.element_at(static_cast<std::size_t>(i));
      const std::map<std::int64_t, GaussianRational> want{{s.element_at(static_cast<std::size_t>(i) + 1), 1}};
      if (t.apply(d) != want) return d;
    }
    return std::nullopt;
  };

  const OperatorElement corrected = rep(out.corrected_free);
  const OperatorElement printed = rep(out.printed_free);
  out.corrected_is_shift = !first_failure(corrected).has_value();
  out.corrected_is_isometry = is_isometry(corrected);
  out.printed_first_failure = first_failure(printed);
  out.printed_is_shift = !out.printed_first_failure.has_value();
  if (out.printed_first_failure) out.printed_image_at_failure = printed.apply(*out.printed_first_failure);

  const FreeTensor delta = coproduct(out.corrected_free);
  auto next = [&](std::int64_t d) { return s.element_at(s.position_of(d) + 1); };
  for (std::int64_t c = 0; c <= window; ++c) {
    if (!s.contains(c)) continue;
    for (std::int64_t d = 0; d <= window; ++d) {
      if (!s.contains(d)) continue;
      auto image = tensor_apply(delta, c, d);
      const std::map<std::pair<std::int64_t, std::int64_t>, GaussianRational> want{
          {{next(c), next(d)}, 1}};
      if (image == want) continue;
      if (c == d) out.diagonal_agrees = false;
      if (!out.tensor_witness) {
        out.tensor_witness = std::make_pair(c, d);
        out.delta_image = std::move(image);
        out.shift_image = {next(c), next(d)};
      }
    }
  }
  return out;
}

}  // namespace sgq
