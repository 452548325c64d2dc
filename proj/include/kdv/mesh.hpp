#ifndef KDV_MESH_HPP
#define KDV_MESH_HPP

#include <cstdint>
#include <vector>

namespace kdv {

/// Periodic tessellation of [0,1] into N cells.
///
/// nodes holds the N+1 cell boundaries x_{1/2} <= ... <= x_{N+1/2} with
/// nodes.front() == 0 and nodes.back() == 1; the two endpoints are
/// identified periodically. Immutable after construction.
struct Mesh {
  std::vector<double> nodes;       // size N+1, strictly increasing
  std::vector<double> cell_sizes;  // h_j = nodes[j+1] - nodes[j]
  double h_max = 0.0;
  double h_min = 0.0;

  int num_cells() const { return static_cast<int>(cell_sizes.size()); }
  double cell_center(int j) const { return 0.5 * (nodes[j] + nodes[j + 1]); }
};

/// Uniform mesh with N cells of size 1/N. Throws std::invalid_argument for N < 1.
Mesh uniform_mesh(int num_cells);

/// Random perturbation of the uniform mesh: each interior node j/N is moved
/// by an independent uniform draw from [-fraction/N, +fraction/N].
///
/// The generator is mt19937_64 seeded with `seed`; uniforms are derived as
/// (bits >> 11) * 2^-53 so node lists are bit-reproducible across platforms.
/// Throws std::invalid_argument for N < 2 or fraction outside [0, 0.5).
Mesh perturbed_mesh(int num_cells, double fraction, std::uint64_t seed);

}  // namespace kdv

#endif
