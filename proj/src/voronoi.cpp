/// @file voronoi.cpp
#include "voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "error.hpp"
#include "rng.hpp"

namespace cov2d {

namespace {

/// Uniform bucket grid over the domain for nearest-neighbor candidate queries.
struct UniformGrid {
  Box box;
  double cell = 0.0;
  int nx = 0, ny = 0;
  std::vector<std::vector<int>> buckets;

  void build(const ParticleSet& ps, const Box& domain, double h) {
    box = domain;
    cell = h;
    nx = std::max(1, static_cast<int>(std::ceil(domain.width() / h)));
    ny = std::max(1, static_cast<int>(std::ceil(domain.height() / h)));
    buckets.assign(static_cast<std::size_t>(nx) * ny, {});
    for (int i = 0; i < ps.size(); ++i) {
      buckets[bucket_of(ps[i].x)].push_back(i);
    }
  }

  int clamp_ix(double x) const {
    int ix = static_cast<int>(std::floor((x - box.lo.x) / cell));
    return std::min(std::max(ix, 0), nx - 1);
  }
  int clamp_iy(double y) const {
    int iy = static_cast<int>(std::floor((y - box.lo.y) / cell));
    return std::min(std::max(iy, 0), ny - 1);
  }
  std::size_t bucket_of(const Vec2& p) const {
    return static_cast<std::size_t>(clamp_iy(p.y)) * nx + clamp_ix(p.x);
  }

  /// Visits buckets at Chebyshev ring r around (cx, cy).
  template <typename F>
  void for_ring(int cx, int cy, int r, F&& f) const {
    if (r == 0) {
      f(buckets[static_cast<std::size_t>(cy) * nx + cx]);
      return;
    }
    for (int dy = -r; dy <= r; ++dy) {
      const int y = cy + dy;
      if (y < 0 || y >= ny) continue;
      const bool edge_row = (dy == -r || dy == r);
      const int step = edge_row ? 1 : 2 * r;
      for (int dx = -r; dx <= r; dx += step) {
        const int x = cx + dx;
        if (x < 0 || x >= nx) continue;
        f(buckets[static_cast<std::size_t>(y) * nx + x]);
      }
    }
  }

  int max_ring() const { return std::max(nx, ny); }
};

/// Convex polygon with one label per edge; edge k runs v[k] -> v[(k+1) % n].
/// Labels >= 0 name the neighbor particle whose bisector cut the edge;
/// labels -1..-4 name the domain wall sides bottom/right/top/left.
struct LabeledPoly {
  std::vector<Vec2> v;
  std::vector<int> lab;

  void reset_to_box(const Box& b) {
    v = {b.lo, {b.hi.x, b.lo.y}, b.hi, {b.lo.x, b.hi.y}};
    lab = {-1, -2, -3, -4};
  }

  /// Clips by the half-plane {x : (x - m0) . n <= 0}; the freshly cut edge
  /// receives new_label. Convexity guarantees at most one cut segment.
  void clip(const Vec2& m0, const Vec2& n, int new_label, std::vector<Vec2>& tmp_v,
            std::vector<int>& tmp_lab) {
    const std::size_t cnt = v.size();
    if (cnt == 0) return;
    tmp_v.clear();
    tmp_lab.clear();
    double sa = dot(v[0] - m0, n);
    for (std::size_t k = 0; k < cnt; ++k) {
      const std::size_t k1 = (k + 1 == cnt) ? 0 : k + 1;
      const Vec2& a = v[k];
      const Vec2& b = v[k1];
      const double sb = dot(b - m0, n);
      if (sa <= 0.0) {
        tmp_v.push_back(a);
        tmp_lab.push_back(lab[k]);
        if (sb > 0.0) {
          const double t = sa / (sa - sb);
          tmp_v.push_back(a + (b - a) * t);
          tmp_lab.push_back(new_label);
        }
      } else if (sb <= 0.0) {
        const double t = sa / (sa - sb);
        tmp_v.push_back(a + (b - a) * t);
        tmp_lab.push_back(lab[k]);
      }
      sa = sb;
    }
    v.swap(tmp_v);
    lab.swap(tmp_lab);
  }

  /// Removes degenerate edges shorter than tol, merging their labels away.
  void prune(double tol) {
    bool changed = true;
    while (changed && v.size() > 2) {
      changed = false;
      for (std::size_t k = 0; k < v.size(); ++k) {
        const std::size_t k1 = (k + 1 == v.size()) ? 0 : k + 1;
        if (norm2(v[k1] - v[k]) < tol * tol) {
          // Edge k collapses; drop its endpoint and its label.
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(k1));
          lab.erase(lab.begin() + static_cast<std::ptrdiff_t>(k));
          changed = true;
          break;
        }
      }
    }
  }

  double max_r2_from(const Vec2& c) const {
    double r2 = 0.0;
    for (const auto& p : v) r2 = std::max(r2, norm2(p - c));
    return r2;
  }

  double area() const {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::size_t k1 = (k + 1 == v.size()) ? 0 : k + 1;
      s += cross(v[k], v[k1]);
    }
    return 0.5 * s;
  }

  Vec2 centroid(double a) const {
    Vec2 c{0.0, 0.0};
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::size_t k1 = (k + 1 == v.size()) ? 0 : k + 1;
      const double w = cross(v[k], v[k1]);
      c += (v[k] + v[k1]) * w;
    }
    return c / (6.0 * a);
  }
};

struct PairRec {
  int a = 0, b = 0;      // a < b, both fluid cells
  bool from_lower = false;
  double len = 0.0;
  Vec2 mid;
};

constexpr Vec2 kWallNormal[4] = {{0.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}};

double wall_distance(const Vec2& p, const Box& box, int side) {
  switch (side) {
    case 0: return p.y - box.lo.y;
    case 1: return box.hi.x - p.x;
    case 2: return box.hi.y - p.y;
    default: return p.x - box.lo.x;
  }
}

/// Perturbs exactly coincident generators apart so every cell is nonempty.
void separate_coincident(ParticleSet& ps, const UniformGrid& grid, double h) {
  const double tol2 = 1e-12 * h * 1e-12 * h;
  int perturbed = 0;
  for (int i = 0; i < ps.size(); ++i) {
    const Vec2 xi = ps[i].x;
    const int cx = grid.clamp_ix(xi.x);
    const int cy = grid.clamp_iy(xi.y);
    bool clash = false;
    for (int r = 0; r <= 1 && !clash; ++r) {
      grid.for_ring(cx, cy, r, [&](const std::vector<int>& bucket) {
        if (clash) return;
        for (int q : bucket) {
          if (q < i && norm2(ps[q].x - xi) < tol2) {
            clash = true;
            return;
          }
        }
      });
    }
    if (clash) {
      const std::uint64_t hsh = fnv1a64(&ps[i].id, sizeof(ps[i].id));
      const double ang = 6.283185307179586 * (static_cast<double>(hsh >> 11) * 0x1.0p-53);
      ps[i].x += Vec2{std::cos(ang), std::sin(ang)} * (1e-10 * h);
      ++perturbed;
    }
  }
  if (perturbed > 0) {
    std::fprintf(stderr, "warning: perturbed %d coincident generator(s) by 1e-10*h\n", perturbed);
  }
}

}  // namespace

VoronoiDiagram build_diagram(ParticleSet& ps, const Box& domain, double h) {
  VoronoiDiagram d;
  d.domain = domain;
  d.h = h;
  d.n_cells = ps.n_fluid;
  d.volume.assign(static_cast<std::size_t>(d.n_cells), 0.0);
  d.centroid.assign(static_cast<std::size_t>(d.n_cells), Vec2{});

  UniformGrid grid;
  grid.build(ps, domain, h);
  separate_coincident(ps, grid, h);

  const double edge_tol = 1e-12 * h;
  const double vol_tol = 1e-12 * h * h;

  std::vector<PairRec> pairs;
  struct OwnRec {
    int cell;
    int label;  // particle index (non-fluid) or negative wall side
    double len;
    Vec2 mid;
  };
  std::vector<OwnRec> own;

  LabeledPoly poly;
  std::vector<Vec2> tmp_v;
  std::vector<int> tmp_lab;
  std::vector<std::pair<double, int>> pending;  // (squared distance, particle index)

  for (int i = 0; i < d.n_cells; ++i) {
    const Vec2 xi = ps[i].x;
    poly.reset_to_box(domain);
    double r2 = poly.max_r2_from(xi);

    pending.clear();
    std::size_t pos = 0;
    int ring = 0;  // next ring to expand
    const int rings_total = grid.max_ring() + 1;
    const int cx = grid.clamp_ix(xi.x);
    const int cy = grid.clamp_iy(xi.y);

    auto expand_ring = [&]() {
      grid.for_ring(cx, cy, ring, [&](const std::vector<int>& bucket) {
        for (int q : bucket) {
          if (q == i) continue;
          pending.emplace_back(norm2(ps[q].x - xi), q);
        }
      });
      ++ring;
      std::sort(pending.begin() + static_cast<std::ptrdiff_t>(pos), pending.end());
    };
    auto ring_lower_bound = [&](int r) {
      return r <= 0 ? 0.0 : (static_cast<double>(r) - 1.0) * grid.cell;
    };

    expand_ring();
    int clips = 0;
    while (true) {
      // A pending candidate is safe to consume once no unexplored ring could
      // hold a closer one.
      const double lb = ring_lower_bound(ring);
      if (pos >= pending.size() || (ring < rings_total && pending[pos].first > lb * lb)) {
        if (ring < rings_total) {
          if (lb * lb > 4.0 * r2) break;  // unexplored space cannot cut the cell
          expand_ring();
          continue;
        }
        if (pos >= pending.size()) break;
      }
      const double d2 = pending[pos].first;
      const int j = pending[pos].second;
      ++pos;
      if (d2 > 4.0 * r2) break;  // this and all farther bisectors miss the cell
      const double dist = std::sqrt(d2);
      const Vec2 n = (ps[j].x - xi) / dist;
      const Vec2 m0 = (ps[j].x + xi) * 0.5;
      poly.clip(m0, n, j, tmp_v, tmp_lab);
      if (poly.v.size() < 3) {
        throw NumericError("degenerate voronoi cell for particle " + std::to_string(ps[i].id));
      }
      r2 = poly.max_r2_from(xi);
      if (++clips > 4096) {
        throw NumericError("voronoi clip overflow for particle " + std::to_string(ps[i].id));
      }
    }

    poly.prune(edge_tol);
    const double a = poly.area();
    if (poly.v.size() < 3 || a <= vol_tol) {
      throw NumericError("zero-volume voronoi cell for particle " + std::to_string(ps[i].id));
    }
    d.volume[static_cast<std::size_t>(i)] = a;
    d.centroid[static_cast<std::size_t>(i)] = poly.centroid(a);

    for (std::size_t k = 0; k < poly.v.size(); ++k) {
      const std::size_t k1 = (k + 1 == poly.v.size()) ? 0 : k + 1;
      const double len = norm(poly.v[k1] - poly.v[k]);
      if (len < edge_tol) continue;
      const Vec2 mid = (poly.v[k] + poly.v[k1]) * 0.5;
      const int label = poly.lab[k];
      if (label >= 0 && label < ps.n_fluid) {
        PairRec pr;
        pr.a = std::min(i, label);
        pr.b = std::max(i, label);
        pr.from_lower = (i == pr.a);
        pr.len = len;
        pr.mid = mid;
        pairs.push_back(pr);
      } else {
        own.push_back(OwnRec{i, label, len, mid});
      }
    }
  }

  // Own faces (walls and ghost neighbors) in cell order, then interior pair
  // faces canonicalized from the lower cell's polygon.
  for (const auto& r : own) {
    Face f;
    f.i = r.cell;
    f.area = r.len;
    f.midpoint = r.mid;
    if (r.label < 0) {
      const int side = -r.label - 1;
      f.j = -1;
      f.kind = FaceKind::ToWall;
      f.normal = kWallNormal[side];
      f.gen_dist = 2.0 * wall_distance(ps[r.cell].x, domain, side);
    } else {
      f.j = r.label;
      f.kind = ps[r.label].kind == Kind::Solid ? FaceKind::ToSolid : FaceKind::ToAir;
      const Vec2 delta = ps[r.label].x - ps[r.cell].x;
      f.gen_dist = norm(delta);
      f.normal = delta / f.gen_dist;
    }
    d.faces.push_back(f);
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairRec& p, const PairRec& q) {
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    return p.from_lower && !q.from_lower;
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k > 0 && pairs[k].a == pairs[k - 1].a && pairs[k].b == pairs[k - 1].b) continue;
    const PairRec& pr = pairs[k];
    Face f;
    f.i = pr.a;
    f.j = pr.b;
    f.kind = FaceKind::Interior;
    f.area = pr.len;
    f.midpoint = pr.mid;
    const Vec2 delta = ps[pr.b].x - ps[pr.a].x;
    f.gen_dist = norm(delta);
    f.normal = delta / f.gen_dist;
    d.faces.push_back(f);
  }

  d.cell_face_offset.assign(static_cast<std::size_t>(d.n_cells) + 1, 0);
  for (const auto& f : d.faces) {
    ++d.cell_face_offset[static_cast<std::size_t>(f.i) + 1];
    if (f.kind == FaceKind::Interior) ++d.cell_face_offset[static_cast<std::size_t>(f.j) + 1];
  }
  for (int c = 0; c < d.n_cells; ++c) {
    d.cell_face_offset[static_cast<std::size_t>(c) + 1] += d.cell_face_offset[static_cast<std::size_t>(c)];
  }
  d.cell_face_index.assign(d.cell_face_offset.back(), 0);
  std::vector<int> fill(static_cast<std::size_t>(d.n_cells), 0);
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const Face& f = d.faces[fi];
    d.cell_face_index[static_cast<std::size_t>(d.cell_face_offset[static_cast<std::size_t>(f.i)] +
                                               fill[static_cast<std::size_t>(f.i)]++)] =
        static_cast<int>(fi);
    if (f.kind == FaceKind::Interior) {
      d.cell_face_index[static_cast<std::size_t>(d.cell_face_offset[static_cast<std::size_t>(f.j)] +
                                                 fill[static_cast<std::size_t>(f.j)]++)] =
          static_cast<int>(fi);
    }
  }
  return d;
}

void lloyd_relax(ParticleSet& ps, const VoronoiDiagram& d) {
  for (int i = 0; i < d.n_cells; ++i) {
    ps[i].x = d.centroid[static_cast<std::size_t>(i)];
  }
}

std::vector<int> adjacency_layers(const VoronoiDiagram& d, int k) {
  std::vector<int> layer(static_cast<std::size_t>(d.n_cells), std::numeric_limits<int>::max());
  std::vector<int> queue;
  for (int c = 0; c < d.n_cells; ++c) {
    for (int fk = d.cell_face_offset[static_cast<std::size_t>(c)];
         fk < d.cell_face_offset[static_cast<std::size_t>(c) + 1]; ++fk) {
      if (d.faces[static_cast<std::size_t>(d.cell_face_index[static_cast<std::size_t>(fk)])].kind ==
          FaceKind::ToAir) {
        layer[static_cast<std::size_t>(c)] = 1;
        queue.push_back(c);
        break;
      }
    }
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    const int c = queue[head++];
    const int lc = layer[static_cast<std::size_t>(c)];
    if (lc >= k) continue;
    for (int fk = d.cell_face_offset[static_cast<std::size_t>(c)];
         fk < d.cell_face_offset[static_cast<std::size_t>(c) + 1]; ++fk) {
      const Face& f = d.faces[static_cast<std::size_t>(d.cell_face_index[static_cast<std::size_t>(fk)])];
      if (f.kind != FaceKind::Interior) continue;
      const int nbr = d.neighbor_of(f, c);
      if (layer[static_cast<std::size_t>(nbr)] > lc + 1) {
        layer[static_cast<std::size_t>(nbr)] = lc + 1;
        queue.push_back(nbr);
      }
    }
  }
  std::vector<int> out;
  for (int c = 0; c < d.n_cells; ++c) {
    if (layer[static_cast<std::size_t>(c)] <= k) out.push_back(c);
  }
  return out;
}

void resample_air(ParticleSet& ps, const Box& domain, double h, int band_layers,
                  double exclusion_factor) {
  ps.items.resize(static_cast<std::size_t>(ps.n_fluid + ps.n_solid));

  UniformGrid grid;
  grid.build(ps, domain, h);

  const double band = band_layers * h;
  const double excl = exclusion_factor * h;
  const int nx = static_cast<int>(std::floor(domain.width() / h + 1e-9));
  const int ny = static_cast<int>(std::floor(domain.height() / h + 1e-9));
  const int search_rings = band_layers + 2;

  int next_id = ps.n_fluid + ps.n_solid;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const Vec2 site{domain.lo.x + (ix + 0.5) * h, domain.lo.y + (iy + 0.5) * h};
      double best_fluid2 = std::numeric_limits<double>::infinity();
      double best_solid2 = std::numeric_limits<double>::infinity();
      const int cx = grid.clamp_ix(site.x);
      const int cy = grid.clamp_iy(site.y);
      for (int r = 0; r <= search_rings; ++r) {
        const double lb = r <= 0 ? 0.0 : (static_cast<double>(r) - 1.0) * grid.cell;
        if (lb * lb > best_fluid2 && lb > band) break;
        grid.for_ring(cx, cy, r, [&](const std::vector<int>& bucket) {
          for (int q : bucket) {
            const double d2 = norm2(ps[q].x - site);
            if (ps[q].kind == Kind::Fluid) {
              best_fluid2 = std::min(best_fluid2, d2);
            } else {
              best_solid2 = std::min(best_solid2, d2);
            }
          }
        });
      }
      if (best_fluid2 <= band * band && best_fluid2 >= excl * excl && best_solid2 >= excl * excl) {
        Particle p;
        p.id = next_id++;
        p.kind = Kind::Air;
        p.x = site;
        ps.items.push_back(p);
      }
    }
  }
}

}  // namespace cov2d
