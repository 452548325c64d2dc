#include "kdv/mesh.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kdv {

namespace {

Mesh finalize(std::vector<double> nodes) {
  Mesh mesh;
  mesh.nodes = std::move(nodes);
  const int n = static_cast<int>(mesh.nodes.size()) - 1;
  mesh.cell_sizes.resize(n);
  for (int j = 0; j < n; ++j) {
    const double h = mesh.nodes[j + 1] - mesh.nodes[j];
    if (!(h > 0.0)) throw std::invalid_argument("mesh: non-positive cell size");
    mesh.cell_sizes[j] = h;
  }
  mesh.h_max = *std::max_element(mesh.cell_sizes.begin(), mesh.cell_sizes.end());
  mesh.h_min = *std::min_element(mesh.cell_sizes.begin(), mesh.cell_sizes.end());
  return mesh;
}

}  // namespace

Mesh uniform_mesh(int num_cells) {
  if (num_cells < 1) throw std::invalid_argument("uniform_mesh: N must be >= 1");
  std::vector<double> nodes(num_cells + 1);
  for (int j = 0; j <= num_cells; ++j)
    nodes[j] = static_cast<double>(j) / num_cells;
  nodes.front() = 0.0;
  nodes.back() = 1.0;
  return finalize(std::move(nodes));
}

Mesh perturbed_mesh(int num_cells, double fraction, std::uint64_t seed) {
  if (num_cells < 2) throw std::invalid_argument("perturbed_mesh: N must be >= 2");
  if (!(fraction >= 0.0 && fraction < 0.5))
    throw std::invalid_argument("perturbed_mesh: fraction must lie in [0, 0.5)");

  std::mt19937_64 gen(seed);
  std::vector<double> nodes(num_cells + 1);
  nodes.front() = 0.0;
  nodes.back() = 1.0;
  const double scale = fraction / num_cells;
  for (int j = 1; j < num_cells; ++j) {
    // 53-bit uniform in [0,1); avoids distribution objects whose output is
    // not pinned down by the standard.
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    nodes[j] = static_cast<double>(j) / num_cells + (2.0 * u - 1.0) * scale;
  }
  return finalize(std::move(nodes));
}

}  // namespace kdv
