/// @file particles.cpp
#include "particles.hpp"

#include <string>

#include "error.hpp"

namespace cov2d {

void advect(ParticleSet& ps, double dt) {
  for (auto& p : ps.items) {
    if (p.kind == Kind::Fluid) {
      p.x += p.u * dt;
    } else if (p.kind == Kind::Solid) {
      p.x += p.u_b * dt;
      p.u = p.u_b;
    }
    if (!finite(p.x)) {
      throw NumericError("non-finite position after advection: particle " + std::to_string(p.id) +
                         " at (" + std::to_string(p.x.x) + ", " + std::to_string(p.x.y) + ")");
    }
  }
}

void reinitialize(ParticleSet& ps) {
  for (auto& p : ps.items) {
    if (p.kind != Kind::Fluid) continue;
    p.x_s = p.x;
    p.u_s = p.u;
    p.lambda_acc = 0.0;
    p.grav_acc = Vec2{0.0, 0.0};
    p.surface_flag = false;
  }
}

}  // namespace cov2d
