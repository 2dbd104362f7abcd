#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktorbit/classifier.hpp"
#include "ktorbit/killing_tensor.hpp"

namespace ktorbit {

struct Box {
  double u0 = -3.0;
  double u1 = 3.0;
  double v0 = -3.0;
  double v1 = 3.0;

  [[nodiscard]] bool contains(const Point2<double>& p) const {
    return p.u >= u0 && p.u <= u1 && p.v >= v0 && p.v <= v1;
  }
};

struct WebRenderConfig {
  Box box;
  double seed_spacing = 0.5;
  double step = 0.01;
  double max_arc = 20.0;
  double singular_tol = 1e-6;  // discriminant at or below this counts as singular
  std::size_t samples_per_curve = 4000;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

using Polyline = std::vector<Point2<double>>;

struct WebDocument {
  Signature signature = Signature::Euclidean;
  std::vector<Polyline> foliation_solid;   // integral curves of the lambda_plus eigen-direction
  std::vector<Polyline> foliation_dashed;  // integral curves of the lambda_minus eigen-direction
  std::vector<Polyline> singular_boundaries;
  std::vector<Polyline> singular_regions;  // closed polygons (last vertex not repeated)
  std::vector<Point2<double>> singular_points;
};

/// Raised by trace_web for tensors whose orbit is not characteristic.
class NonCharacteristicError : public std::invalid_argument {
 public:
  NonCharacteristicError(OrbitLabel label, const std::string& message)
      : std::invalid_argument(message), label_(label) {}
  [[nodiscard]] OrbitLabel label() const { return label_; }

 private:
  OrbitLabel label_;
};

/// Unit (Euclidean norm) eigen-directions for lambda_plus and lambda_minus.
struct EigenDirections {
  std::array<double, 2> first;
  std::array<double, 2> second;
};

/// Eigen-directions of K^i_j at p; nullopt where the discriminant is
/// <= singular_tol or the eigenvalues are not real.
std::optional<EigenDirections> eigen_directions(const KTParams& k, const Point2<double>& p,
                                                double singular_tol = 1e-6);

/// Integrates both eigen-direction fields (RK4, fixed step) from a seed grid
/// and adds the singular set. Throws NonCharacteristicError for
/// non-characteristic tensors and std::invalid_argument for a bad config.
WebDocument trace_web(const KTParams& k, const WebRenderConfig& cfg);

/// Deterministic SVG 1.1 rendering; the viewBox is cfg.box with v pointing up.
std::string render_svg(const WebDocument& doc, const WebRenderConfig& cfg);

}  // namespace ktorbit
