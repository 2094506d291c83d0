#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swisscheese/cheese.hpp"
#include "swisscheese/engine.hpp"
#include "swisscheese/geometry.hpp"

namespace swisscheese {

/// An index-level map between two disc assignments. The mapping is total
/// on the source indices and lands in the target indices. Set-level
/// semantics coincide when the source assignment is injective.
struct AllocationMap {
  DiscAssignment source;
  DiscAssignment target;
  std::map<std::size_t, std::size_t> mapping;
};

/// Axiom report for an allocation map:
///  A1 — every source entry is contained in its image;
///  A2 — the discs sent to the complement carry at least the radius lost
///       by the outer disc;
///  A3 — each target disc's preimage carries at least its radius.
/// Slacks are the amounts by which A2/A3 hold (negative = violated).
struct AllocationReport {
  bool a1{};
  std::vector<std::size_t> a1_violations;
  bool a2{};
  double a2_slack{};
  bool a3{};
  std::vector<std::pair<std::size_t, double>> a3_slacks;

  bool all_hold() const { return a1 && a2 && a3; }
};

namespace detail {

inline void check_allocation_shape(const AllocationMap& a) {
  for (const auto& [i, g] : a.source.entries()) {
    const auto it = a.mapping.find(i);
    if (it == a.mapping.end()) {
      throw std::invalid_argument("allocation map: mapping not total on source");
    }
    if (!a.target.has_index(it->second)) {
      throw std::invalid_argument("allocation map: image is not a target index");
    }
  }
}

}  // namespace detail

/// Checks axioms A1-A3 with slack tol. Violations are report entries, not
/// errors; only a structurally malformed map (non-total mapping or a
/// dangling target index) throws.
inline AllocationReport verify_allocation(const AllocationMap& a,
                                          double tol = kVerifyEps) {
  detail::check_allocation_shape(a);
  AllocationReport report;

  report.a1 = true;
  for (const auto& [i, g] : a.source.entries()) {
    const std::size_t j = a.mapping.at(i);
    if (!contains_within(a.target.at(j), g, tol)) {
      report.a1 = false;
      report.a1_violations.push_back(i);
    }
  }

  // G(f): source disc indices sent to the target complement slot.
  double g_radius_sum = 0.0;
  for (const auto& [i, g] : a.source.entries()) {
    if (i != 0 && a.mapping.at(i) == 0) {
      g_radius_sum += g.radius;
    }
  }
  report.a2_slack =
      g_radius_sum - (a.source.outer().radius - a.target.outer().radius);
  report.a2 = report.a2_slack >= -tol;

  report.a3 = true;
  for (const auto& [j, gj] : a.target.entries()) {
    if (j == 0) {
      continue;
    }
    double preimage_sum = 0.0;
    for (const auto& [i, gi] : a.source.entries()) {
      if (a.mapping.at(i) == j) {
        preimage_sum += gi.radius;
      }
    }
    const double slack = preimage_sum - gj.radius;
    report.a3_slacks.emplace_back(j, slack);
    if (slack < -tol) {
      report.a3 = false;
    }
  }
  return report;
}

/// The identity allocation map on an assignment.
inline AllocationMap identity_allocation(const DiscAssignment& d) {
  AllocationMap a{d, d, {}};
  for (const auto& [i, g] : d.entries()) {
    a.mapping.emplace(i, i);
  }
  return a;
}

/// The allocation map of one recorded step: the removed index m goes to n,
/// every other index to itself. The record must match `before` exactly.
inline AllocationMap step_allocation(const DiscAssignment& before,
                                     const StepRecord& rec) {
  AllocationMap a{before, apply_step_record(before, rec), {}};
  for (const auto& [i, g] : before.entries()) {
    a.mapping.emplace(i, i == rec.removed_index ? rec.pair.n : i);
  }
  return a;
}

/// Composition outer ∘ inner. The middle assignments must agree exactly.
inline AllocationMap compose_allocations(const AllocationMap& outer,
                                         const AllocationMap& inner) {
  if (!(inner.target == outer.source)) {
    throw std::invalid_argument(
        "compose_allocations: middle assignments do not match");
  }
  AllocationMap a{inner.source, outer.target, {}};
  for (const auto& [i, j] : inner.mapping) {
    a.mapping.emplace(i, outer.mapping.at(j));
  }
  return a;
}

/// End-to-end allocation map of a whole trace, composed step by step from
/// the identity on the initial assignment.
inline AllocationMap trace_allocation(const DiscAssignment& initial,
                                      const std::vector<StepRecord>& trace) {
  AllocationMap acc = identity_allocation(initial);
  for (const StepRecord& rec : trace) {
    acc = compose_allocations(step_allocation(acc.target, rec), acc);
  }
  return acc;
}

}  // namespace swisscheese
