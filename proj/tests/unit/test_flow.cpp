#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lorenz/error.hpp"
#include "lorenz/flow.hpp"

using namespace lorenz;

namespace {

double norm(const State& s) { return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]); }

State diff(const State& a, const State& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

}  // namespace

TEST(Flow, VectorFieldExamples)
{
  EXPECT_EQ(vector_field({0, 0, 0}), (State{0, 0, 0}));
  EXPECT_EQ(vector_field({1, 0, 0}), (State{-10, 28, 0}));
  const double r = std::sqrt(72.0);
  EXPECT_LT(norm(vector_field({r, r, 27})), 1e-12);
}

TEST(Flow, Equilibria)
{
  const auto eq = equilibria();
  const double r = std::sqrt(72.0);
  EXPECT_EQ(eq[0], (State{0, 0, 0}));
  EXPECT_LT(norm(diff(eq[1], {r, r, 27})), 1e-12);
  EXPECT_LT(norm(diff(eq[2], {-r, -r, 27})), 1e-12);
  for (const auto& e : eq)
    EXPECT_LT(norm(vector_field(e)), 1e-12);
}

TEST(Flow, EquilibriumIsStationary)
{
  for (const auto& e : equilibria()) {
    const auto traj = integrate(e, 0.01, 1000);
    for (const auto& s : traj.states)
      ASSERT_LT(norm(diff(s, e)), 1e-12);
  }
}

TEST(Flow, RichardsonRatio)
{
  // one step vs two half steps: local error shrinks like h^5
  const State s{1, 0, 0};
  for (double h : {0.01, 0.005, 0.0025}) {
    auto err = [&](double step) {
      const State one = rk4_step(s, step);
      const State two = rk4_step(rk4_step(s, step / 2), step / 2);
      return norm(diff(one, two));
    };
    const double ratio = err(h) / err(h / 2);
    EXPECT_GE(ratio, 12.0) << h;
    EXPECT_LE(ratio, 40.0) << h;
  }
}

TEST(Flow, IntegrateValidatesInputs)
{
  EXPECT_THROW(integrate({1, 1, 1}, 0.02, 10), Error);
  EXPECT_THROW(integrate({1, 1, 1}, 0.0, 10), Error);
  EXPECT_THROW(integrate({1, 1, 1}, 0.001, 0), Error);
  FlowParams bad;
  bad.sigma = -1;
  EXPECT_THROW(integrate({1, 1, 1}, 0.001, 10, bad), Error);
  try {
    integrate({1e7, 1e7, 1e7}, 0.01, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFinite);
  }
}

TEST(Flow, TimeGridIsStrictlyIncreasing)
{
  const auto traj = integrate({1, 1, 1}, 0.001, 5000);
  ASSERT_EQ(traj.size(), 5001U);
  for (std::size_t i = 1; i < traj.size(); ++i)
    ASSERT_LT(traj.time[i - 1], traj.time[i]);
}

TEST(Flow, BoundedFromRandomStarts)
{
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> box(-20.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const State start{box(rng), box(rng), box(rng)};
    const auto traj = integrate(start, 0.005, 4000);
    // after the transient the orbit stays inside a fixed ball around (0,0,27)
    for (std::size_t i = 2000; i < traj.size(); ++i) {
      const auto& s = traj.states[i];
      ASSERT_LT(std::hypot(s[0], s[1], s[2] - 27.0), 60.0);
    }
  }
}

TEST(Flow, LongRunStaysBounded)
{
  const auto traj = integrate({1, 1, 1}, 1e-3, 1'000'000);
  double worst = 0;
  for (std::size_t i = 100'000; i < traj.size(); ++i)
    worst = std::max(worst, std::hypot(traj.states[i][0], traj.states[i][1], traj.states[i][2] - 27.0));
  EXPECT_LT(worst, 60.0);
}

TEST(Flow, ItineraryBasics)
{
  EXPECT_THROW(itinerary(Trajectory{}, 0.0), Error);
  // seeded beside the right-hand equilibrium the first loops spiral there
  const auto right = itinerary(integrate({10, 10, 27}, 1e-3, 3000), 0.0);
  EXPECT_EQ(right.substr(0, 3), "RRR");
  const auto traj = integrate({1, 1, 1}, 1e-3, 40000);
  const auto a = itinerary(traj, 1.0);
  EXPECT_EQ(a, itinerary(traj, 1.0));
  for (char ch : a)
    EXPECT_TRUE(ch == 'L' || ch == 'R');
  Trajectory shifted = traj;
  for (auto& t : shifted.time)
    t += 250 * 1e-3;
  EXPECT_EQ(itinerary(shifted, 1.0), a);
  EXPECT_THROW(itinerary(traj, 1e9), Error);
}

TEST(Flow, ItineraryStableUnderStepHalving)
{
  const auto coarse = itinerary(integrate({1, 1, 1}, 1e-3, 30000), 1.0);
  const auto fine = itinerary(integrate({1, 1, 1}, 5e-4, 60000), 1.0);
  ASSERT_GE(coarse.size(), 10U);
  ASSERT_GE(fine.size(), 10U);
  EXPECT_EQ(coarse.substr(0, 10), fine.substr(0, 10));
}

TEST(Flow, CsvExport)
{
  std::ostringstream os;
  write_csv(os, integrate({1, 1, 1}, 0.01, 2));
  const auto text = os.str();
  EXPECT_EQ(text.substr(0, 8), "t,x,y,z\n");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}
