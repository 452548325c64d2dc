#ifndef KDV_TIMESTEP_HPP
#define KDV_TIMESTEP_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "kdv/field.hpp"
#include "kdv/mesh.hpp"

namespace kdv {

/// dt = cfl * h_min^3; h_min keeps the step conservative on perturbed meshes.
double dt_from_cfl(double cfl, const Mesh& mesh);

/// Default CFL numbers: 0.05 for k <= 3, 0.02 for k >= 4.
double default_cfl(int degree);

/// One SSP-RK3 stage triple. Works for any state with s + s and a * s
/// (DGField, StatePair, plain double in tests).
template <class State, class Rhs>
State ssp_rk3_step(const State& state, double dt, Rhs&& rhs) {
  const State s1 = state + dt * rhs(state);
  const State s2 = 0.75 * state + 0.25 * (s1 + dt * rhs(s1));
  return (1.0 / 3.0) * state + (2.0 / 3.0) * (s2 + dt * rhs(s2));
}

inline bool state_is_finite(double s) { return std::isfinite(s); }
inline bool state_is_finite(const DGField& s) { return s.is_finite(); }
inline bool state_is_finite(const StatePair& s) {
  return s.u.is_finite() && s.phi.is_finite();
}

/// Integrate to exactly t_final, shortening the last step. The observer is
/// called as observer(step_index, t, state) after every accepted step (and
/// once at t = 0 with step_index 0).
template <class State, class Rhs, class Observer>
State integrate(State state, double dt, double t_final, Rhs&& rhs, Observer&& observer) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  double t = 0.0;
  long step = 0;
  observer(step, t, state);
  while (t < t_final) {
    const double dt_step = std::min(dt, t_final - t);
    state = ssp_rk3_step(state, dt_step, rhs);
    t += dt_step;
    ++step;
    if (!state_is_finite(state))
      throw std::runtime_error("integrate: non-finite state at step " +
                               std::to_string(step) + ", t = " + std::to_string(t));
    observer(step, t, state);
  }
  return state;
}

template <class State, class Rhs>
State integrate(State state, double dt, double t_final, Rhs&& rhs) {
  return integrate(std::move(state), dt, t_final, rhs, [](long, double, const State&) {});
}

}  // namespace kdv

#endif
