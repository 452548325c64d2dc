#ifndef KDV_PROBLEMS_HPP
#define KDV_PROBLEMS_HPP

#include <string>

#include "kdv/operators.hpp"

namespace kdv {

enum class ExampleId { Ex41, Ex42, Ex43, Ex44 };

ExampleId example_from_string(const std::string& s);  // "4.1" .. "4.4"
std::string to_string(ExampleId id);

/// Benchmark problems:
///   4.1: u_t + u_xxx/(4 pi^2) = 0,           exact sin(2 pi (x+t));
///   4.2: u_t - u_x + u_xxx/(4 pi^2) = 0,     exact sin(2 pi (x+2t));
///   4.3: u_t + (u^2/2)_x + u_xxx/576 = 0,    exact cnoidal wave, m = 0.9;
///   4.4: the 4.3 problem, used for long-time runs.
ProblemSpec make_problem(ExampleId id);

/// Parameters of the cnoidal-wave solution a cn^2(4K (x - v t - x0); m).
struct CnoidalParams {
  double m;
  double K;
  double amplitude;
  double speed;
  double x0;
};

CnoidalParams cnoidal_params();

/// Max |u_t + f(u)_x + eps u_xxx| of the registered exact solution at
/// `samples` pseudo-random points, by high-order central finite differences.
/// `scale` is max(1, max |u_t|), for relative assessments.
struct ResidualReport {
  double max_residual;
  double scale;
};

ResidualReport residual_check(const ProblemSpec& spec, int samples);

}  // namespace kdv

#endif
