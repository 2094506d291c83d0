#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace swisscheese {

/// Tolerance used by verification-style checks (oracles, chain validation,
/// axiom reports). Core predicates never use it: the engine's collision,
/// containment and classicality tests are exact inclusive/strict
/// comparisons so that iteration and fixpoint detection agree.
inline constexpr double kVerifyEps = 1e-9;

struct Point {
  double x{};
  double y{};

  friend bool operator==(const Point&, const Point&) = default;
};

struct OpenDisc {
  Point center{};
  double radius{};  // > 0, finite

  friend bool operator==(const OpenDisc&, const OpenDisc&) = default;
};

struct ClosedDisc {
  Point center{};
  double radius{};  // > 0, finite

  friend bool operator==(const ClosedDisc&, const ClosedDisc&) = default;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

enum class DiscKind : std::uint8_t {
  open_disc,
  complement_of_closed_disc,
};

/// An open disc or the complement of a closed disc, stored as the kind tag
/// plus the underlying disc's center and radius.
struct GeneralizedDisc {
  DiscKind kind{DiscKind::open_disc};
  Point center{};
  double radius{};

  static GeneralizedDisc open(const OpenDisc& d) {
    return {DiscKind::open_disc, d.center, d.radius};
  }
  static GeneralizedDisc complement(const ClosedDisc& d) {
    return {DiscKind::complement_of_closed_disc, d.center, d.radius};
  }

  bool is_open() const { return kind == DiscKind::open_disc; }
  bool is_complement() const {
    return kind == DiscKind::complement_of_closed_disc;
  }

  OpenDisc as_open() const {
    if (!is_open()) {
      throw std::invalid_argument("generalized disc is not an open disc");
    }
    return {center, radius};
  }
  ClosedDisc as_closed() const {
    if (!is_complement()) {
      throw std::invalid_argument(
          "generalized disc is not the complement of a closed disc");
    }
    return {center, radius};
  }

  friend bool operator==(const GeneralizedDisc&, const GeneralizedDisc&) =
      default;
};

/// Strict membership of a point in a generalized disc (both kinds are open
/// sets; boundaries are excluded).
inline bool point_in(const GeneralizedDisc& g, const Point& z) {
  const double d = distance(z, g.center);
  return g.is_open() ? d < g.radius : d > g.radius;
}

/// Whether the closures of two generalized discs meet. Comparisons are
/// inclusive: externally tangent closures intersect. A pair of two
/// complements is rejected; a disc assignment holds at most one complement.
inline bool closures_intersect(const GeneralizedDisc& a,
                               const GeneralizedDisc& b) {
  if (a.is_complement() && b.is_complement()) {
    throw std::invalid_argument(
        "closures_intersect: both operands are complements");
  }
  const double d = distance(a.center, b.center);
  if (a.is_open() && b.is_open()) {
    return d <= a.radius + b.radius;
  }
  // Open disc (c, r) versus {z : |z - C| > R}: the closures meet exactly
  // when the closed disc (c, r) is not strictly inside the open ball of
  // radius R.
  const GeneralizedDisc& open = a.is_open() ? a : b;
  const GeneralizedDisc& comp = a.is_open() ? b : a;
  return d + open.radius >= comp.radius;
}

/// Exact containment outer ⊇ inner for generalized discs of the same kind.
/// Mixed kinds are rejected; use contains_within for the general check.
inline bool disc_contains(const GeneralizedDisc& outer,
                          const GeneralizedDisc& inner) {
  if (outer.kind != inner.kind) {
    throw std::invalid_argument("disc_contains: mixed kinds");
  }
  const double d = distance(outer.center, inner.center);
  if (outer.is_open()) {
    return d + inner.radius <= outer.radius;
  }
  // Complement containment reverses: C\A ⊇ C\B iff A ⊆ B.
  return d + outer.radius <= inner.radius;
}

/// Containment outer ⊇ inner across all kind combinations, with slack tol
/// (tol = 0 gives the exact predicate). A complement is never contained in
/// an open disc.
inline bool contains_within(const GeneralizedDisc& outer,
                            const GeneralizedDisc& inner, double tol) {
  const double d = distance(outer.center, inner.center);
  if (outer.is_open() && inner.is_open()) {
    return d + inner.radius <= outer.radius + tol;
  }
  if (outer.is_complement() && inner.is_complement()) {
    return d + outer.radius <= inner.radius + tol;
  }
  if (outer.is_complement() && inner.is_open()) {
    // Open disc avoids the closed disc entirely.
    return d >= inner.radius + outer.radius - tol;
  }
  return false;
}

/// Smallest open disc containing the union of two open discs with
/// intersecting closures. If one disc contains the other it is returned
/// unchanged; otherwise the result has radius (r1 + r2 + d)/2 and its
/// center sits on the line through both centers. The radius never exceeds
/// r1 + r2.
inline OpenDisc merge_open_discs(const OpenDisc& d1, const OpenDisc& d2) {
  const double d = distance(d1.center, d2.center);
  if (d > d1.radius + d2.radius) {
    throw std::invalid_argument("merge_open_discs: not colliding");
  }
  if (d + d2.radius <= d1.radius) {
    return d1;
  }
  if (d + d1.radius <= d2.radius) {
    return d2;
  }
  // Here d > |r1 - r2| >= 0, so the direction is well defined.
  const double rho = (d1.radius + d2.radius + d) / 2.0;
  const double shift = (d + d2.radius - d1.radius) / 2.0;
  const double ux = (d2.center.x - d1.center.x) / d;
  const double uy = (d2.center.y - d1.center.y) / d;
  return {{d1.center.x + shift * ux, d1.center.y + shift * uy}, rho};
}

/// Closed disc Δ' ⊆ Δ disjoint from the open disc d, with r(Δ') ≥ r(Δ) -
/// r(d) whenever the closure of d reaches the boundary of Δ. If d is
/// already disjoint from Δ, Δ is returned unchanged. Otherwise Δ' is
/// internally tangent to Δ and externally tangent to d, on the far side of
/// d; requires r(d) < r(Δ).
inline ClosedDisc avoid_disc(const ClosedDisc& outer, const OpenDisc& d) {
  if (d.radius >= outer.radius) {
    throw std::invalid_argument(
        "avoid_disc: Feinstein-Heath condition violated");
  }
  const double dist = distance(outer.center, d.center);
  if (dist >= outer.radius + d.radius) {
    return outer;
  }
  const double r_new = (outer.radius + dist - d.radius) / 2.0;
  double ux = 1.0;
  double uy = 0.0;
  if (dist > 0.0) {
    ux = (outer.center.x - d.center.x) / dist;
    uy = (outer.center.y - d.center.y) / dist;
  }
  const double shift = d.radius + r_new;
  return {{d.center.x + shift * ux, d.center.y + shift * uy}, r_new};
}

namespace detail {

/// Estimate of the limit of a convergent sequence from samples at indices
/// k/4, k/2 and k, assuming the remaining gap shrinks by a fixed factor
/// under index doubling (exact for any power-law tail c/k^p, harmless for
/// already-converged sequences). Falls back to the last sample when the
/// ratio is degenerate.
inline double extrapolate_tail(double v_quarter, double v_half, double v_last) {
  const double d1 = v_last - v_half;
  const double d0 = v_half - v_quarter;
  if (d0 == 0.0 || d1 == 0.0) {
    return v_last;
  }
  double ratio = d1 / d0;
  if (!(ratio > 0.0)) {
    return v_last;
  }
  if (ratio > 0.9) {
    ratio = 0.9;
  }
  return v_last + d1 * (ratio / (1.0 - ratio));
}

}  // namespace detail

/// Union of a finite nested increasing chain of open discs: the last
/// element. Nestedness is validated pairwise (with kVerifyEps slack).
inline OpenDisc limit_of_nested_open_chain(std::span<const OpenDisc> chain) {
  if (chain.empty()) {
    throw std::invalid_argument("limit_of_nested_open_chain: empty chain");
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!contains_within(GeneralizedDisc::open(chain[k + 1]),
                         GeneralizedDisc::open(chain[k]), kVerifyEps)) {
      throw std::invalid_argument("limit_of_nested_open_chain: chain not nested");
    }
  }
  return chain.back();
}

/// Union of a generator-backed nested increasing chain of open discs.
/// chain(k) for k = 1, 2, ... must be a pure function of k. Terms are
/// evaluated until the radius increment falls below tolerance or max_terms
/// is reached, then the limit is estimated by tail extrapolation of the
/// radius and center coordinates. Throws if nesting fails or the radii
/// show no sign of being bounded above within max_terms.
inline OpenDisc limit_of_nested_open_chain(
    const std::function<OpenDisc(std::size_t)>& chain, double tolerance = 1e-6,
    std::size_t max_terms = 1'000'000) {
  if (max_terms == 0) {
    throw std::invalid_argument("limit_of_nested_open_chain: max_terms == 0");
  }
  OpenDisc prev = chain(1);
  std::size_t last = 1;
  for (std::size_t k = 2; k <= max_terms; ++k) {
    const OpenDisc cur = chain(k);
    if (!contains_within(GeneralizedDisc::open(cur),
                         GeneralizedDisc::open(prev), kVerifyEps)) {
      throw std::invalid_argument("limit_of_nested_open_chain: chain not nested");
    }
    last = k;
    const double increment = cur.radius - prev.radius;
    prev = cur;
    if (increment < tolerance) {
      break;
    }
  }
  if (last < 8) {
    return prev;
  }
  const OpenDisc quarter = chain(last / 4);
  const OpenDisc half = chain(last / 2);
  if (last == max_terms) {
    const double d1 = prev.radius - half.radius;
    const double d0 = half.radius - quarter.radius;
    if (d1 >= d0 && d1 > tolerance && d1 > 0.0) {
      throw std::domain_error(
          "limit_of_nested_open_chain: radii unbounded within max_terms");
    }
  }
  return {{detail::extrapolate_tail(quarter.center.x, half.center.x,
                                    prev.center.x),
           detail::extrapolate_tail(quarter.center.y, half.center.y,
                                    prev.center.y)},
          detail::extrapolate_tail(quarter.radius, half.radius, prev.radius)};
}

/// Intersection of a finite nested decreasing chain of closed discs: the
/// last element. Nestedness is validated pairwise (with kVerifyEps slack).
inline ClosedDisc limit_of_nested_closed_chain(
    std::span<const ClosedDisc> chain) {
  if (chain.empty()) {
    throw std::invalid_argument("limit_of_nested_closed_chain: empty chain");
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    // Closed-disc containment chain[k] ⊇ chain[k+1]: dist + r_next <= r.
    if (!(distance(chain[k].center, chain[k + 1].center) +
              chain[k + 1].radius <=
          chain[k].radius + kVerifyEps)) {
      throw std::invalid_argument(
          "limit_of_nested_closed_chain: chain not nested");
    }
  }
  return chain.back();
}

/// Intersection of a generator-backed nested decreasing chain of closed
/// discs, evaluated like the open-chain case with inf in place of sup.
/// Throws "inf not positive" when the extrapolated radius is not bounded
/// away from zero (below max(tolerance, 1e-12 · r(first term))).
inline ClosedDisc limit_of_nested_closed_chain(
    const std::function<ClosedDisc(std::size_t)>& chain,
    double tolerance = 1e-6, std::size_t max_terms = 1'000'000) {
  if (max_terms == 0) {
    throw std::invalid_argument("limit_of_nested_closed_chain: max_terms == 0");
  }
  ClosedDisc prev = chain(1);
  const double first_radius = prev.radius;
  std::size_t last = 1;
  for (std::size_t k = 2; k <= max_terms; ++k) {
    const ClosedDisc cur = chain(k);
    // Closed-disc containment prev ⊇ cur: dist + r_cur <= r_prev.
    if (!(distance(prev.center, cur.center) + cur.radius <=
          prev.radius + kVerifyEps)) {
      throw std::invalid_argument(
          "limit_of_nested_closed_chain: chain not nested");
    }
    last = k;
    const double decrement = prev.radius - cur.radius;
    prev = cur;
    if (decrement < tolerance) {
      break;
    }
  }
  ClosedDisc result = prev;
  if (last >= 8) {
    const ClosedDisc quarter = chain(last / 4);
    const ClosedDisc half = chain(last / 2);
    result = {{detail::extrapolate_tail(quarter.center.x, half.center.x,
                                        prev.center.x),
               detail::extrapolate_tail(quarter.center.y, half.center.y,
                                        prev.center.y)},
              detail::extrapolate_tail(quarter.radius, half.radius,
                                       prev.radius)};
  }
  const double floor = std::max(tolerance, 1e-12 * first_radius);
  if (result.radius <= floor) {
    throw std::domain_error("limit_of_nested_closed_chain: inf not positive");
  }
  return result;
}

}  // namespace swisscheese
