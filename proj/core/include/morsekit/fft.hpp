#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace morsekit {

using cplx = std::complex<double>;

enum class FftDirection { forward, inverse };

/// A complex-to-complex DFT plan of fixed length.
///
/// Forward: X_k = sum_j x_j exp(-2 pi i jk/n). Inverse: unnormalized,
/// x_j = sum_k X_k exp(+2 pi i jk/n). Plans are created under a global lock
/// (the planner is not reentrant) but execute() may be called concurrently
/// from any number of threads on distinct buffers. Output is bit-identical
/// regardless of which buffers or threads are used.
class FftPlan {
 public:
  FftPlan(std::size_t n, FftDirection direction);
  ~FftPlan();

  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const noexcept { return n_; }
  FftDirection direction() const noexcept { return direction_; }

  /// in and out must both have size() elements; in-place is allowed.
  void execute(std::span<const cplx> in, std::span<cplx> out) const;

 private:
  struct Impl;
  std::size_t n_;
  FftDirection direction_;
  std::unique_ptr<Impl> impl_;
};

std::vector<cplx> dft(std::span<const cplx> x);

/// Inverse DFT including the 1/n factor.
std::vector<cplx> idft(std::span<const cplx> X);

std::size_t next_power_of_two(std::size_t n) noexcept;

}  // namespace morsekit
