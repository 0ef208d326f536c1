#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lorenz {

using State = std::array<double, 3>;

struct FlowParams {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;

  /// Throws InvalidParams unless all coefficients are positive and finite.
  void validate() const;
};

/// (sigma (y - x), rho x - y - x z, x y - beta z).
State vector_field(const State& s, const FlowParams& params = {});

/// The three equilibria: origin, then (+-sqrt(beta (rho-1)), same, rho - 1).
std::array<State, 3> equilibria(const FlowParams& params = {});

struct Trajectory {
  std::vector<double> time;
  std::vector<State> states;

  std::size_t size() const noexcept { return states.size(); }
  bool empty() const noexcept { return states.empty(); }
};

inline constexpr double kMaxStep = 0.01;
inline constexpr double kSymbolDeadBand = 1e-6;

State rk4_step(const State& s, double dt, const FlowParams& params = {});

/// Classical fourth-order Runge-Kutta with `steps` uniform steps; the result
/// holds steps + 1 samples starting at t = 0. Throws InvalidParams for
/// dt outside (0, 0.01] or steps < 1, NonFinite on divergence.
Trajectory integrate(const State& start, double dt, std::size_t steps, const FlowParams& params = {});

/// Symbolic itinerary: at every sampled local maximum of z occurring at
/// least `skip_transient` time units after the first sample, emit L for
/// x < 0 and R for x > 0. Throws NoEvents when nothing qualifies and
/// AmbiguousSymbol when |x| < dead_band at an event.
std::string itinerary(const Trajectory& traj, double skip_transient, double dead_band = kSymbolDeadBand);

/// CSV with header "t,x,y,z".
void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace lorenz
