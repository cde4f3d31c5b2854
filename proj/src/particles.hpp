/// @file particles.hpp
/// @brief Particle state store: positions, velocities, flow-map anchors, path integrals.
#pragma once

#include <cstdint>
#include <vector>

#include "vec2.hpp"

namespace cov2d {

/// Particle role. Fluid particles carry the simulation state; Solid particles
/// impose boundary geometry and prescribed velocity; Air particles are ghost
/// generators that clip free-surface cells and are regenerated every substep.
enum class Kind : std::uint8_t { Fluid = 0, Solid = 1, Air = 2 };

struct Particle {
  int id = 0;
  Kind kind = Kind::Fluid;
  Vec2 x;             // current position
  Vec2 u;             // current velocity (Fluid); mirrors u_b for Solid; zero for Air
  Vec2 x_s;           // anchor position at the flow-map start time
  Vec2 u_s;           // anchor velocity
  double lambda_acc = 0.0;  // accumulated Lagrangian-pressure path integral (pressure * time)
  Vec2 grav_acc;      // accumulated gravity integral (velocity units)
  bool surface_flag = false;  // sticky free-surface marker, cleared only at reinitialization
  Vec2 u_b;           // prescribed velocity for Solid particles
};

/// Particles are stored Fluid first, then Solid, then Air, so that the fluid
/// particle index doubles as the Voronoi cell index. The fluid count never
/// changes during a run; Air particles are replaced wholesale each substep.
struct ParticleSet {
  std::vector<Particle> items;
  int n_fluid = 0;
  int n_solid = 0;

  int size() const { return static_cast<int>(items.size()); }
  Particle& operator[](int i) { return items[static_cast<std::size_t>(i)]; }
  const Particle& operator[](int i) const { return items[static_cast<std::size_t>(i)]; }
};

/// Moves fluid particles by their own velocity and solid particles by their
/// prescribed velocity; air particles are left alone (they are resampled).
/// Throws NumericError if any updated position is non-finite.
void advect(ParticleSet& ps, double dt);

/// Restarts the flow map at the current state: anchors take the current
/// position/velocity, path integrals zero out, surface flags clear.
void reinitialize(ParticleSet& ps);

}  // namespace cov2d
