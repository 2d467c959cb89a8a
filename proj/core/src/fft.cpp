#include "morsekit/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <string>
#include <vector>

#include "morsekit/errors.hpp"

namespace morsekit {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct FftPlan::Impl {
  fftw_plan plan = nullptr;
};

FftPlan::FftPlan(std::size_t n, FftDirection direction)
    : n_(n), direction_(direction), impl_(std::make_unique<Impl>()) {
  if (n == 0) throw Error(ErrorKind::argument, "FftPlan: length must be positive");
  // The planner only inspects these buffers; ESTIMATE leaves them untouched.
  std::vector<cplx> scratch_in(n), scratch_out(n);
  const int sign = direction == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD;
  std::lock_guard lock(planner_mutex());
  impl_->plan = fftw_plan_dft_1d(static_cast<int>(n),
                                 reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                 reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (impl_->plan == nullptr) {
    throw Error(ErrorKind::argument, "FftPlan: planner failed for n=" + std::to_string(n));
  }
}

FftPlan::~FftPlan() {
  if (impl_ && impl_->plan) {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(impl_->plan);
  }
}

FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

void FftPlan::execute(std::span<const cplx> in, std::span<cplx> out) const {
  if (in.size() != n_ || out.size() != n_) {
    throw Error(ErrorKind::argument, "FftPlan::execute: buffer length mismatch");
  }
  // The plan is out-of-place, and new-array execution must keep the plan's
  // placement, so aliased buffers go through a copy.
  std::vector<cplx> copy;
  const cplx* source = in.data();
  if (in.data() == out.data()) {
    copy.assign(in.begin(), in.end());
    source = copy.data();
  }
  // fftw's new-array execute never writes through `in` for out-of-place plans.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(source));
  fftw_execute_dft(impl_->plan, src, reinterpret_cast<fftw_complex*>(out.data()));
}

std::vector<cplx> dft(std::span<const cplx> x) {
  FftPlan plan(x.size(), FftDirection::forward);
  std::vector<cplx> out(x.size());
  plan.execute(x, out);
  return out;
}

std::vector<cplx> idft(std::span<const cplx> X) {
  FftPlan plan(X.size(), FftDirection::inverse);
  std::vector<cplx> out(X.size());
  plan.execute(X, out);
  const double scale = 1.0 / static_cast<double>(X.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace morsekit
