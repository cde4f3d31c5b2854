/// @file voronoi.hpp
/// @brief Clipped Voronoi diagram over the particle set, rebuilt every substep.
#pragma once

#include <vector>

#include "particles.hpp"
#include "vec2.hpp"

namespace cov2d {

enum class FaceKind : std::uint8_t { Interior = 0, ToSolid = 1, ToAir = 2, ToWall = 3 };

/// One cell boundary segment. Interior faces (both sides fluid) are stored
/// once with i < j and shared by both cells so operator symmetry is exact by
/// construction. Faces to solid/air generators and to the domain walls are
/// owned by the fluid cell alone.
struct Face {
  int i = -1;          // owning fluid cell (== fluid particle index)
  int j = -1;          // neighbor particle index; -1 for a domain-wall face
  double area = 0.0;   // segment length (2D "area")
  double gen_dist = 0.0;  // |x_j - x_i|; for wall faces, twice the generator-wall distance
  Vec2 midpoint;       // segment midpoint
  Vec2 normal;         // unit outward normal relative to cell i
  FaceKind kind = FaceKind::Interior;
};

struct VoronoiDiagram {
  Box domain;
  double h = 0.0;      // nominal particle spacing used for tolerances
  int n_cells = 0;     // == number of fluid particles
  std::vector<double> volume;    // cell area, > 0
  std::vector<Vec2> centroid;    // cell centroid, strictly inside the cell
  std::vector<Face> faces;
  std::vector<int> cell_face_offset;  // size n_cells + 1
  std::vector<int> cell_face_index;   // face ids grouped per cell (interior faces appear under both cells)

  /// Iterate cell c's faces: for k in [offset[c], offset[c+1]) the face is
  /// faces[cell_face_index[k]]; use outward_normal/neighbor_of to resolve side.
  Vec2 outward_normal(const Face& f, int cell) const { return f.i == cell ? f.normal : -f.normal; }
  int neighbor_of(const Face& f, int cell) const { return f.i == cell ? f.j : f.i; }
};

/// Builds the diagram for the current particle positions. Every fluid particle
/// gets one convex cell: the domain box clipped by the perpendicular bisectors
/// against every nearby particle of any kind. Coincident generators are
/// perturbed deterministically (and a warning is printed); a vanished cell is a
/// fatal geometry error. May move particle positions by <= 1e-10 * h.
VoronoiDiagram build_diagram(ParticleSet& ps, const Box& domain, double h);

/// Snaps each fluid particle to its cell centroid. Solid and air particles are
/// left in place.
void lloyd_relax(ParticleSet& ps, const VoronoiDiagram& d);

/// Fluid cells within k adjacency hops of the free surface: cells with a face
/// to an air generator are layer 1; breadth-first over interior faces grows
/// layers 2..k. Returns sorted cell ids; empty when no air generator touches
/// the fluid.
std::vector<int> adjacency_layers(const VoronoiDiagram& d, int k);

/// Replaces all air particles with a fresh lattice (spacing h) covering the
/// empty region within band_layers * h of any fluid particle, keeping a
/// clearance of exclusion_factor * h from every fluid and solid particle.
/// Deterministic: lattice sites are visited row-major.
void resample_air(ParticleSet& ps, const Box& domain, double h, int band_layers,
                  double exclusion_factor = 0.7);

}  // namespace cov2d
