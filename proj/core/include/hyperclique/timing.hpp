#pragma once

#include <chrono>

namespace hyperclique {

/// Per-phase wall-clock breakdown of a solve, in milliseconds.
///
/// Phases: INIT (initial clique), KERNEL (peeling), CNEEO (edge ordering),
/// CONST (subproblem construction), INDEP (independent set of the
/// complement), OTHER (everything else). `other` is derived as
/// `total` minus the named phases.
struct PhaseTimings {
  double init = 0;
  double kernel = 0;
  double cneeo = 0;
  double construct = 0;
  double indep = 0;
  double other = 0;
  double total = 0;

  void finalize_other() {
    other = total - (init + kernel + cneeo + construct + indep);
    if (other < 0) other = 0;
  }
};

class Stopwatch {
 public:
  using Clock = std::chrono::steady_clock;

  Stopwatch() : start_(Clock::now()) {}

  void restart() { start_ = Clock::now(); }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
};

/// Adds the lifetime of the guard to `sink` (milliseconds).
class ScopedTimer {
 public:
  explicit ScopedTimer(double& sink) : sink_(sink) {}
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;
  ~ScopedTimer() { sink_ += watch_.elapsed_ms(); }

 private:
  double& sink_;
  Stopwatch watch_;
};

}  // namespace hyperclique
