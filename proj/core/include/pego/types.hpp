#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pego {

using Complex = std::complex<double>;

/// Error category carried by every pego exception; the CLI maps all of
/// them to exit code 1 with the category in the message.
enum class ErrorCode {
  Config,        // malformed grids, mismatched inputs, bad DSL
  Scale,         // criterion scale incompatible with the grid (T >= t_max, delta < dt, ...)
  Evaluation,    // non-finite sample values
  Precondition,  // Laplace-Pego verification rejected
  Invariant,     // a checked mathematical invariant failed numerically
  Diagnosis,     // diagnosis refused (unbounded family)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

const char* error_code_name(ErrorCode code) noexcept;

/// Exponential weight rate x >= 0; order 0 is the classical Fourier setting.
struct Order {
  double x = 0.0;

  explicit Order(double value = 0.0) : x(value) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw_error(ErrorCode::Config, "order must be finite and >= 0");
  }
};

/// Uniform time grid on (0, t_max] with midpoint nodes t_j = (j + 1/2) dt.
struct TimeGrid {
  double dt = 1e-3;
  double t_max = 40.0;
  int n = 40000;

  TimeGrid() = default;
  TimeGrid(double dt_, double t_max_) : dt(dt_), t_max(t_max_) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw_error(ErrorCode::Config, "time grid: dt must be > 0");
    if (!(t_max > dt) || !std::isfinite(t_max)) throw_error(ErrorCode::Config, "time grid: t_max must exceed dt");
    n = static_cast<int>(std::ceil(t_max / dt - 1e-9));
    if (n < 2) throw_error(ErrorCode::Config, "time grid: fewer than two nodes");
  }

  double node(int j) const { return (j + 0.5) * dt; }
  bool same_as(const TimeGrid& other) const { return dt == other.dt && t_max == other.t_max && n == other.n; }
};

/// Symmetric frequency grid y_k = k dy, k = -K..K.
struct FrequencyGrid {
  double dy = 0.0;
  int half_count = 0;  // K

  FrequencyGrid() = default;
  FrequencyGrid(double dy_, double y_max) : dy(dy_) {
    if (!(dy > 0.0) || !std::isfinite(dy)) throw_error(ErrorCode::Config, "frequency grid: dy must be > 0");
    if (!(y_max >= 10.0 * dy)) throw_error(ErrorCode::Config, "frequency grid: y_max must be at least 10*dy");
    half_count = static_cast<int>(std::floor(y_max / dy + 1e-9));
  }

  int node_count() const { return 2 * half_count + 1; }
  double y(int index) const { return (index - half_count) * dy; }  // index 0..2K
  double y_max() const { return half_count * dy; }
};

/// DFT-matched grid: dy = 2*pi/(n dt), y_max = pi/dt. laplace_line reduces
/// to one FFT of the weighted samples on this grid.
FrequencyGrid default_frequency_grid(const TimeGrid& grid);

enum class Label { Compact, NonCompact, Unknown };

const char* label_name(Label label) noexcept;

}  // namespace pego
