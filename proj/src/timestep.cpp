#include "kdv/timestep.hpp"

namespace kdv {

double dt_from_cfl(double cfl, const Mesh& mesh) {
  if (!(cfl > 0.0)) throw std::invalid_argument("dt_from_cfl: cfl must be positive");
  return cfl * mesh.h_min * mesh.h_min * mesh.h_min;
}

double default_cfl(int degree) { return degree >= 4 ? 0.02 : 0.05; }

}  // namespace kdv
