#include "lorenz/flow.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "lorenz/error.hpp"

namespace lorenz {

void FlowParams::validate() const
{
  for (double v : {sigma, rho, beta}) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorKind::InvalidParams, "flow coefficients must be positive and finite");
  }
}

State vector_field(const State& s, const FlowParams& p)
{
  const auto [x, y, z] = s;
  return {p.sigma * (y - x), p.rho * x - y - x * z, x * y - p.beta * z};
}

std::array<State, 3> equilibria(const FlowParams& p)
{
  const double r = std::sqrt(p.beta * (p.rho - 1.0));
  const double z = p.rho - 1.0;
  return {State{0.0, 0.0, 0.0}, State{r, r, z}, State{-r, -r, z}};
}

namespace {

State axpy(const State& base, double h, const State& k)
{
  return {base[0] + h * k[0], base[1] + h * k[1], base[2] + h * k[2]};
}

}  // namespace

State rk4_step(const State& s, double dt, const FlowParams& p)
{
  const State k1 = vector_field(s, p);
  const State k2 = vector_field(axpy(s, dt / 2, k1), p);
  const State k3 = vector_field(axpy(s, dt / 2, k2), p);
  const State k4 = vector_field(axpy(s, dt, k3), p);
  State out;
  for (int i = 0; i < 3; ++i)
    out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

Trajectory integrate(const State& start, double dt, std::size_t steps, const FlowParams& p)
{
  p.validate();
  if (!(dt > 0.0) || dt > kMaxStep)
    throw Error(ErrorKind::InvalidParams, "step must lie in (0, 0.01]");
  if (steps < 1)
    throw Error(ErrorKind::InvalidParams, "need at least one step");

  Trajectory traj;
  traj.time.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.time.push_back(0.0);
  traj.states.push_back(start);
  State s = start;
  for (std::size_t i = 1; i <= steps; ++i) {
    s = rk4_step(s, dt, p);
    for (double v : s) {
      if (!std::isfinite(v) || std::abs(v) > 1e8)
        throw Error(ErrorKind::NonFinite, "trajectory diverged at step " + std::to_string(i));
    }
    // multiply rather than accumulate so the grid does not drift
    traj.time.push_back(static_cast<double>(i) * dt);
    traj.states.push_back(s);
  }
  return traj;
}

std::string itinerary(const Trajectory& traj, double skip_transient, double dead_band)
{
  std::string symbols;
  if (traj.size() < 3)
    throw Error(ErrorKind::NoEvents, "trajectory too short for a section event");
  const double t0 = traj.time.front();
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double z = traj.states[i][2];
    if (!(z > traj.states[i - 1][2] && z >= traj.states[i + 1][2]))
      continue;
    if (traj.time[i] - t0 < skip_transient)
      continue;
    const double x = traj.states[i][0];
    if (std::abs(x) < dead_band)
      throw Error(ErrorKind::AmbiguousSymbol, "|x| below dead band at t = " + std::to_string(traj.time[i]));
    symbols.push_back(x < 0 ? 'L' : 'R');
  }
  if (symbols.empty())
    throw Error(ErrorKind::NoEvents, "no local maximum of z after the transient");
  return symbols;
}

void write_csv(std::ostream& os, const Trajectory& traj)
{
  os << "t,x,y,z\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& s = traj.states[i];
    os << traj.time[i] << ',' << s[0] << ',' << s[1] << ',' << s[2] << '\n';
  }
}

}  // namespace lorenz
