#pragma once

// Thin RAII layer over FFTW's complex 1-D transforms. Plans are cached per
// thread and per length; plan creation is serialized because the FFTW
// planner is not re-entrant.

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>

namespace svv::fft {

using Complex = std::complex<double>;

namespace detail {

inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

}  // namespace detail

/// Unnormalized complex DFT of a fixed length.
///   forward:  X_k = sum_j x_j e^{-2 pi i jk/n}
///   backward: x_j = sum_k X_k e^{+2 pi i jk/n}
class Plan {
 public:
  explicit Plan(std::size_t n)
      : n_(n),
        buf_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    std::lock_guard lock(detail::planner_mutex());
    const int len = static_cast<int>(n);
    fwd_ = fftw_plan_dft_1d(len, buf_.get(), buf_.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(len, buf_.get(), buf_.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Plan() {
    std::lock_guard lock(detail::planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
  }

  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  std::size_t size() const noexcept { return n_; }

  /// In-place on a length-n span.
  void forward(std::span<Complex> data) { execute(fwd_, data); }
  void backward(std::span<Complex> data) { execute(bwd_, data); }

 private:
  void execute(fftw_plan plan, std::span<Complex> data) {
    auto* raw = reinterpret_cast<Complex*>(buf_.get());
    std::copy(data.begin(), data.end(), raw);
    fftw_execute(plan);
    std::copy(raw, raw + n_, data.begin());
  }

  std::size_t n_;
  std::unique_ptr<fftw_complex, detail::FftwFree> buf_;
  fftw_plan fwd_{};
  fftw_plan bwd_{};
};

/// Cached plan for length n, owned by the calling thread.
inline Plan& plan_for(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::unique_ptr<Plan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Plan>(n);
  return *slot;
}

/// Smallest integer >= n whose only prime factors are 2, 3 and 5.
inline std::size_t good_size(std::size_t n) {
  for (std::size_t m = std::max<std::size_t>(n, 1);; ++m) {
    std::size_t r = m;
    for (std::size_t p : {2u, 3u, 5u})
      while (r % p == 0) r /= p;
    if (r == 1) return m;
  }
}

}  // namespace svv::fft
