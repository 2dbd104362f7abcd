#include "ktorbit/webs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace ktorbit {

namespace {

using Vec = std::array<double, 2>;

struct Field {
  Signature sig;
  std::array<double, 6> params;
  double tol;

  // Direction of the chosen foliation at p, sign-aligned with `prev`.
  [[nodiscard]] std::optional<Vec> at(const Point2<double>& p, int which, const Vec& prev) const {
    const EigenReport r = eigenstructure_at(sig, params, p);
    if (r.kind != EigenKind::RealSimple || r.discriminant <= tol) return std::nullopt;
    Vec d = which == 0 ? *r.vector_plus : *r.vector_minus;
    if (d[0] * prev[0] + d[1] * prev[1] < 0.0) d = {-d[0], -d[1]};
    return d;
  }
};

// Occupancy grid used to keep streamlines apart.
class Occupancy {
 public:
  Occupancy(const Box& box, double cell) : box_(box), cell_(cell) {}
  [[nodiscard]] bool occupied(const Point2<double>& p) const { return cells_.count(key(p)) != 0; }
  void mark(const Polyline& line) {
    for (const auto& p : line) cells_.insert(key(p));
  }

 private:
  [[nodiscard]] std::pair<long, long> key(const Point2<double>& p) const {
    return {static_cast<long>(std::floor((p.u - box_.u0) / cell_)),
            static_cast<long>(std::floor((p.v - box_.v0) / cell_))};
  }
  Box box_;
  double cell_;
  std::set<std::pair<long, long>> cells_;
};

// Point where the segment a -> b leaves the box (a inside, b outside).
Point2<double> exit_point(const Box& box, const Point2<double>& a, const Point2<double>& b) {
  double t = 1.0;
  const double du = b.u - a.u;
  const double dv = b.v - a.v;
  if (du > 0) t = std::min(t, (box.u1 - a.u) / du);
  if (du < 0) t = std::min(t, (box.u0 - a.u) / du);
  if (dv > 0) t = std::min(t, (box.v1 - a.v) / dv);
  if (dv < 0) t = std::min(t, (box.v0 - a.v) / dv);
  t = std::clamp(t, 0.0, 1.0);
  return {a.u + t * du, a.v + t * dv};
}

struct HalfTrace {
  Polyline points;
  bool closed = false;
};

HalfTrace trace_half(const Field& field, const WebRenderConfig& cfg, const Point2<double>& seed, int which,
                     const Vec& initial) {
  HalfTrace out;
  out.points.push_back(seed);
  Point2<double> pos = seed;
  Vec prev = initial;
  const double h = cfg.step;
  double arc = 0.0;
  while (out.points.size() < cfg.samples_per_curve && arc < cfg.max_arc) {
    const auto k1 = field.at(pos, which, prev);
    if (!k1) break;
    const auto k2 = field.at({pos.u + 0.5 * h * (*k1)[0], pos.v + 0.5 * h * (*k1)[1]}, which, *k1);
    if (!k2) break;
    const auto k3 = field.at({pos.u + 0.5 * h * (*k2)[0], pos.v + 0.5 * h * (*k2)[1]}, which, *k1);
    if (!k3) break;
    const auto k4 = field.at({pos.u + h * (*k3)[0], pos.v + h * (*k3)[1]}, which, *k1);
    if (!k4) break;
    const Point2<double> next{pos.u + h / 6.0 * ((*k1)[0] + 2.0 * (*k2)[0] + 2.0 * (*k3)[0] + (*k4)[0]),
                              pos.v + h / 6.0 * ((*k1)[1] + 2.0 * (*k2)[1] + 2.0 * (*k3)[1] + (*k4)[1])};
    if (!cfg.box.contains(next)) {
      out.points.push_back(exit_point(cfg.box, pos, next));
      break;
    }
    arc += std::hypot(next.u - pos.u, next.v - pos.v);
    // A closed leaf (e.g. a circle) returns to its seed.
    if (arc > 10.0 * h && std::hypot(next.u - seed.u, next.v - seed.v) < h) {
      out.points.push_back(seed);
      out.closed = true;
      break;
    }
    out.points.push_back(next);
    prev = *k1;
    pos = next;
  }
  return out;
}

Polyline trace_leaf(const Field& field, const WebRenderConfig& cfg, const Point2<double>& seed, int which,
                    const Vec& dir) {
  HalfTrace forward = trace_half(field, cfg, seed, which, dir);
  if (forward.closed) return forward.points;
  HalfTrace backward = trace_half(field, cfg, seed, which, {-dir[0], -dir[1]});
  Polyline line(backward.points.rbegin(), backward.points.rend());
  line.insert(line.end(), forward.points.begin() + 1, forward.points.end());
  return line;
}

// a u + b v <= c
struct HalfPlane {
  double a;
  double b;
  double c;
  [[nodiscard]] double eval(const Point2<double>& p) const { return a * p.u + b * p.v - c; }
};

// Sutherland-Hodgman against one half-plane.
Polyline clip(const Polyline& poly, const HalfPlane& hp) {
  Polyline out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2<double>& cur = poly[i];
    const Point2<double>& nxt = poly[(i + 1) % n];
    const double fc = hp.eval(cur);
    const double fn = hp.eval(nxt);
    if (fc <= 0) out.push_back(cur);
    if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
      const double t = fc / (fc - fn);
      out.push_back({cur.u + t * (nxt.u - cur.u), cur.v + t * (nxt.v - cur.v)});
    }
  }
  return out;
}

double polygon_area(const Polyline& poly) {
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    area += p.u * q.v - q.u * p.v;
  }
  return 0.5 * area;
}

Point2<double> vertex_mean(const Polyline& poly) {
  Point2<double> c{0.0, 0.0};
  for (const auto& p : poly) {
    c.u += p.u;
    c.v += p.v;
  }
  c.u /= static_cast<double>(poly.size());
  c.v /= static_cast<double>(poly.size());
  return c;
}

double eval_double(const UnivariatePoly& p, double x) {
  const std::array<double, 1> at{x};
  return p.evaluate(std::span<const double, 1>(at));
}

void add_minkowski_singular_set(WebDocument& doc, const SingularSetDescription& d, const Box& box) {
  // Null lines: x + t = r is u + v = r; x - t = r is v - u = r.
  std::vector<HalfPlane> lines;
  for (double r : d.plus_roots) lines.push_back({1.0, 1.0, r});
  for (double r : d.minus_roots) lines.push_back({-1.0, 1.0, r});

  const Polyline box_poly{{box.u0, box.v0}, {box.u1, box.v0}, {box.u1, box.v1}, {box.u0, box.v1}};
  for (const HalfPlane& line : lines) {
    // The segment of the line inside the box is the part of the box boundary
    // clipped to the line itself.
    const Polyline below = clip(box_poly, line);
    Polyline on_line;
    for (const auto& p : below) {
      if (std::abs(line.eval(p)) < 1e-9 * (1.0 + std::abs(line.c))) on_line.push_back(p);
    }
    if (on_line.size() >= 2) {
      std::sort(on_line.begin(), on_line.end(),
                [](const auto& a, const auto& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
      doc.singular_boundaries.push_back({on_line.front(), on_line.back()});
    }
  }

  std::vector<Polyline> cells{box_poly};
  for (const HalfPlane& line : lines) {
    std::vector<Polyline> next;
    for (const Polyline& cell : cells) {
      for (const HalfPlane& side : {line, HalfPlane{-line.a, -line.b, -line.c}}) {
        Polyline piece = clip(cell, side);
        if (piece.size() >= 3 && std::abs(polygon_area(piece)) > 1e-12) next.push_back(std::move(piece));
      }
    }
    cells = std::move(next);
  }
  for (Polyline& cell : cells) {
    const Point2<double> c = vertex_mean(cell);
    const double value = eval_double(d.factor_plus, c.v + c.u) * eval_double(d.factor_minus, c.v - c.u);
    if (value < 0.0) doc.singular_regions.push_back(std::move(cell));
  }
}

}  // namespace

void WebRenderConfig::validate() const {
  if (!(box.u0 < box.u1) || !(box.v0 < box.v1)) throw std::invalid_argument("box must be nonempty");
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(seed_spacing > 0.0)) throw std::invalid_argument("seed spacing must be positive");
  if (!(singular_tol > 0.0)) throw std::invalid_argument("singular tolerance must be positive");
  if (!(max_arc > 0.0)) throw std::invalid_argument("max arc length must be positive");
  if (samples_per_curve < 2) throw std::invalid_argument("samples per curve must be at least 2");
}

std::optional<EigenDirections> eigen_directions(const KTParams& k, const Point2<double>& p, double singular_tol) {
  const EigenReport r = eigenstructure_at(k, p);
  if (r.kind != EigenKind::RealSimple || r.discriminant <= singular_tol) return std::nullopt;
  return EigenDirections{*r.vector_plus, *r.vector_minus};
}

WebDocument trace_web(const KTParams& k, const WebRenderConfig& cfg) {
  cfg.validate();
  const OrbitLabel label = classify_label(k);
  if (!orbit_class(label).characteristic) {
    throw NonCharacteristicError(label, "tensor in orbit " + std::string(to_string(label)) +
                                            " is not characteristic; it defines no web");
  }

  WebDocument doc;
  doc.signature = k.signature;
  const Field field{k.signature, k.to_doubles(), cfg.singular_tol};
  const Box& box = cfg.box;

  std::vector<Point2<double>> seeds;
  for (double u = box.u0 + cfg.seed_spacing / 2; u < box.u1; u += cfg.seed_spacing) {
    for (double v = box.v0 + cfg.seed_spacing / 2; v < box.v1; v += cfg.seed_spacing) seeds.push_back({u, v});
  }

  for (int which = 0; which < 2; ++which) {
    Occupancy occupancy(box, cfg.seed_spacing / 2);
    auto& target = which == 0 ? doc.foliation_solid : doc.foliation_dashed;
    for (const auto& seed : seeds) {
      if (occupancy.occupied(seed)) continue;
      const auto dirs = eigen_directions(k, seed, cfg.singular_tol);
      if (!dirs) continue;
      Polyline leaf = trace_leaf(field, cfg, seed, which, which == 0 ? dirs->first : dirs->second);
      if (leaf.size() < 2) continue;
      occupancy.mark(leaf);
      target.push_back(std::move(leaf));
    }
  }

  const SingularSetDescription singular = singular_set(k);
  if (k.signature == Signature::Minkowski) {
    add_minkowski_singular_set(doc, singular, box);
  } else {
    for (const auto& p : singular.approx_points) {
      if (box.contains(p)) doc.singular_points.push_back(p);
    }
  }
  return doc;
}

}  // namespace ktorbit
