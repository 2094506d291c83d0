#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "swisscheese/document.hpp"
#include "swisscheese/geometry.hpp"

namespace swisscheese {

namespace detail {

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

/// Uniform point in the closed disc (rejection from the bounding square).
inline Point point_in_disc(std::mt19937_64& rng, const Point& center,
                           double radius) {
  for (;;) {
    const double x = uniform_in(rng, -radius, radius);
    const double y = uniform_in(rng, -radius, radius);
    if (x * x + y * y <= radius * radius) {
      return {center.x + x, center.y + y};
    }
  }
}

}  // namespace detail

/// Seeded random cheese with a guaranteed slack of at least delta_min.
/// Centers are sampled in the outer disc; the radius budget is drawn in
/// [0.6, 0.95] of (outer_r - delta_min), so δ > delta_min always. Each disc
/// past the first draws a configuration role:
///   8%  exact duplicate of an earlier disc,
///   12% externally tangent to an earlier disc,
///   15% forced overlap with an earlier disc,
///   15% placed in the boundary band of the outer disc (likely to cross),
///   50% uniform.
/// Deterministic for fixed (seed, n_discs, delta_min, outer_r).
inline CheeseDocument gen_cheese(std::uint64_t seed, std::size_t n_discs,
                                 double delta_min, double outer_r) {
  if (!(outer_r > 0.0) || !std::isfinite(outer_r)) {
    throw std::invalid_argument("gen: outer radius must be positive");
  }
  if (!(delta_min > 0.0) || !std::isfinite(delta_min)) {
    throw std::invalid_argument("gen: delta_min must be positive");
  }
  if (delta_min >= outer_r) {
    throw std::invalid_argument("gen: delta_min must be below the outer radius");
  }

  std::mt19937_64 rng(seed);
  std::vector<double> radii(n_discs);
  std::vector<std::size_t> duplicate_of(n_discs, 0);
  std::vector<int> role(n_discs, 0);  // 0 uniform, 1 dup, 2 tangent, 3 overlap, 4 boundary

  if (n_discs > 0) {
    std::vector<double> weights(n_discs);
    for (std::size_t i = 0; i < n_discs; ++i) {
      weights[i] = detail::uniform_in(rng, 0.2, 1.0);
    }
    for (std::size_t i = 1; i < n_discs; ++i) {
      const double u = detail::uniform_in(rng, 0.0, 1.0);
      if (u < 0.08) {
        role[i] = 1;
        duplicate_of[i] =
            static_cast<std::size_t>(detail::uniform_in(rng, 0.0, 1.0) * i);
        weights[i] = weights[duplicate_of[i]];
      } else if (u < 0.20) {
        role[i] = 2;
      } else if (u < 0.35) {
        role[i] = 3;
      } else if (u < 0.50) {
        role[i] = 4;
      }
    }
    double weight_sum = 0.0;
    for (const double w : weights) {
      weight_sum += w;
    }
    const double budget = (outer_r - delta_min) *
                          detail::uniform_in(rng, 0.6, 0.95);
    const double scale = budget / weight_sum;
    for (std::size_t i = 0; i < n_discs; ++i) {
      radii[i] = weights[i] * scale;
    }
    // Duplicates must be bitwise equal after scaling.
    for (std::size_t i = 1; i < n_discs; ++i) {
      if (role[i] == 1) {
        radii[i] = radii[duplicate_of[i]];
      }
    }
  }

  std::vector<Point> centers(n_discs);
  for (std::size_t i = 0; i < n_discs; ++i) {
    switch (role[i]) {
      case 1:
        centers[i] = centers[duplicate_of[i]];
        break;
      case 2: {
        // Externally tangent to a random earlier disc; fall back to a
        // uniform draw if no direction keeps the center inside the outer
        // disc.
        const auto j =
            static_cast<std::size_t>(detail::uniform_in(rng, 0.0, 1.0) * i);
        const double gap = radii[i] + radii[j];
        Point c = detail::point_in_disc(rng, {0.0, 0.0}, outer_r);
        for (int attempt = 0; attempt < 16; ++attempt) {
          const double theta =
              detail::uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
          const Point cand{centers[j].x + gap * std::cos(theta),
                           centers[j].y + gap * std::sin(theta)};
          if (std::hypot(cand.x, cand.y) <= outer_r) {
            c = cand;
            break;
          }
        }
        centers[i] = c;
        break;
      }
      case 3: {
        const auto j =
            static_cast<std::size_t>(detail::uniform_in(rng, 0.0, 1.0) * i);
        const double gap =
            (radii[i] + radii[j]) * detail::uniform_in(rng, 0.3, 0.999);
        Point c = detail::point_in_disc(rng, {0.0, 0.0}, outer_r);
        for (int attempt = 0; attempt < 16; ++attempt) {
          const double theta =
              detail::uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
          const Point cand{centers[j].x + gap * std::cos(theta),
                           centers[j].y + gap * std::sin(theta)};
          if (std::hypot(cand.x, cand.y) <= outer_r) {
            c = cand;
            break;
          }
        }
        centers[i] = c;
        break;
      }
      case 4: {
        const double rho = detail::uniform_in(
            rng, std::max(0.0, outer_r - 2.0 * radii[i]), outer_r);
        const double theta =
            detail::uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
        centers[i] = {rho * std::cos(theta), rho * std::sin(theta)};
        break;
      }
      default:
        centers[i] = detail::point_in_disc(rng, {0.0, 0.0}, outer_r);
        break;
    }
  }

  CheeseDocument doc;
  doc.outer = {0.0, 0.0, outer_r};
  doc.discs.reserve(n_discs);
  for (std::size_t i = 0; i < n_discs; ++i) {
    doc.discs.push_back({centers[i].x, centers[i].y, radii[i]});
  }
  doc.metadata = GenMetadata{seed, n_discs, delta_min, outer_r};
  return doc;
}

}  // namespace swisscheese
