#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsm {

/// Real linear map R^cols -> R^rows with its transpose.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
  virtual void adjoint(std::span<const double> y, std::span<double> x) const = 0;
  /// Squared Frobenius norm, exact or estimated.
  virtual double frob_norm_sq() const = 0;

  std::vector<double> apply(std::span<const double> x) const {
    std::vector<double> y(rows());
    apply(x, y);
    return y;
  }
  std::vector<double> adjoint(std::span<const double> y) const {
    std::vector<double> x(cols());
    adjoint(y, x);
    return x;
  }
};

/// Hutchinson estimate of ||A||_F^2 = E ||A z||^2 over Rademacher probes z.
double hutchinson_frob_norm_sq(const LinearOperator& op, int probes, std::uint64_t seed);

/// Row-major dense matrix.
class DenseOperator final : public LinearOperator {
 public:
  DenseOperator(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const override { return rows_; }
  std::size_t cols() const override { return cols_; }
  void apply(std::span<const double> x, std::span<double> y) const override;
  void adjoint(std::span<const double> y, std::span<double> x) const override;
  double frob_norm_sq() const override { return frob_sq_; }

  double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  using LinearOperator::adjoint;
  using LinearOperator::apply;

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
  double frob_sq_;
};

/// A o S: applies `inner` first, then `outer`.
class ComposedOperator final : public LinearOperator {
 public:
  ComposedOperator(const LinearOperator& outer, const LinearOperator& inner, double frob_norm_sq);

  std::size_t rows() const override { return outer_.rows(); }
  std::size_t cols() const override { return inner_.cols(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  void adjoint(std::span<const double> y, std::span<double> x) const override;
  double frob_norm_sq() const override { return frob_sq_; }

  using LinearOperator::adjoint;
  using LinearOperator::apply;

 private:
  const LinearOperator& outer_;
  const LinearOperator& inner_;
  double frob_sq_;
};

/// Densify by applying to unit vectors, one column per call.
std::vector<double> densify(const LinearOperator& op);

}  // namespace qsm
