#ifndef CYCLIN_PAR_HPP
#define CYCLIN_PAR_HPP

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Minimal parallel runtime: every kernel has a serial reference path and an
// OpenMP path producing bit-identical results (outputs are indexed per item
// and reduced in a fixed order, so float results do not depend on the
// schedule). The serial path is kept for testing and benchmarking.

namespace cyclin::par {

enum class Mode { Serial, OpenMP };

inline Mode& mode() {
  static Mode m = [] {
#ifdef _OPENMP
    if (const char* e = std::getenv("CYCLIN_SERIAL"); e && e[0] == '1') return Mode::Serial;
    return Mode::OpenMP;
#else
    return Mode::Serial;
#endif
  }();
  return m;
}

inline void set_mode(Mode m) { mode() = m; }

inline int max_threads() {
#ifdef _OPENMP
  return mode() == Mode::OpenMP ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

// Apply fn(i) for i in [0, n). Independent items, any order.
template <class Fn>
void for_each(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  if (mode() == Mode::OpenMP && n > 1) {
    #pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

// max-reduce of fn(i) over [0, n); fn returns double. Deterministic: max is
// order-independent.
template <class Fn>
double max_over(std::size_t n, Fn&& fn) {
  double best = 0.0;
#ifdef _OPENMP
  if (mode() == Mode::OpenMP && n > 1) {
    #pragma omp parallel for schedule(static) reduction(max : best)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      double v = fn(static_cast<std::size_t>(i));
      if (v > best) best = v;
    }
    return best;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) {
    double v = fn(i);
    if (v > best) best = v;
  }
  return best;
}

// Fill out[i] = fn(i). The per-item slots make the result independent of the
// schedule; callers fold the vector serially when an ordered reduction is
// needed.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  for_each(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace cyclin::par

#endif
