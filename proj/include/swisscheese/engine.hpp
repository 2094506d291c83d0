#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swisscheese/cheese.hpp"
#include "swisscheese/geometry.hpp"

namespace swisscheese {

/// A colliding pair of indices, n < m, whose generalized discs have
/// intersecting closures.
struct CollisionPair {
  std::size_t n{};
  std::size_t m{};

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

enum class StepCase : std::uint8_t {
  merge,   // n != 0: two open discs replaced by their enclosing disc
  shrink,  // n == 0: outer disc shrunk away from the colliding disc
};

/// One application of the classicalisation operator: the pair it acted on,
/// the entries before, and the produced entry. Index m is removed; index n
/// is replaced by after_n, which contains both before_n and before_m.
struct StepRecord {
  CollisionPair pair{};
  StepCase case_tag{StepCase::merge};
  std::size_t removed_index{};
  GeneralizedDisc before_n{};
  GeneralizedDisc before_m{};
  GeneralizedDisc after_n{};
  double delta_before{};
  double delta_after{};

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// Outcome of iterating the operator: the final assignment, the full step
/// trace, and whether a fixpoint (equivalently, a classical assignment)
/// was reached within budget.
struct ClassicalisationResult {
  DiscAssignment final;
  std::vector<StepRecord> trace{};
  std::size_t steps{};
  bool stabilised{};
};

/// Lexicographically least colliding pair, or nothing when the assignment
/// is classical. Scans sorted indices with the exact collision predicate;
/// the least pair always has n < m.
inline std::optional<CollisionPair> min_collision(const DiscAssignment& d) {
  const auto& entries = d.entries();
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    for (auto jt = std::next(it); jt != entries.end(); ++jt) {
      if (closures_intersect(it->second, jt->second)) {
        return CollisionPair{it->first, jt->first};
      }
    }
  }
  return std::nullopt;
}

/// One application of the classicalisation operator. A classical input is
/// returned unchanged with no record. Otherwise, with (n, m) the least
/// collision: index m is dropped and entry n is replaced — by the merged
/// open disc when n != 0, or by the complement of the shrunken outer disc
/// when n == 0. δ never decreases. Requires the Feinstein-Heath condition.
inline std::pair<DiscAssignment, std::optional<StepRecord>> step_f(
    const DiscAssignment& d) {
  if (!has_fh_condition(d)) {
    throw std::invalid_argument("step_f: Feinstein-Heath condition violated");
  }
  const auto collision = min_collision(d);
  if (!collision) {
    return {d, std::nullopt};
  }
  const auto [n, m] = *collision;

  StepRecord rec;
  rec.pair = *collision;
  rec.removed_index = m;
  rec.before_n = d.at(n);
  rec.before_m = d.at(m);
  rec.delta_before = delta_of_assignment(d).delta;

  DiscAssignment next = d;
  if (n != 0) {
    rec.case_tag = StepCase::merge;
    const OpenDisc merged =
        merge_open_discs(rec.before_n.as_open(), rec.before_m.as_open());
    next.set_disc(n, merged);
    rec.after_n = GeneralizedDisc::open(merged);
  } else {
    rec.case_tag = StepCase::shrink;
    const ClosedDisc shrunk =
        avoid_disc(rec.before_n.as_closed(), rec.before_m.as_open());
    next.replace_outer(shrunk);
    rec.after_n = GeneralizedDisc::complement(shrunk);
  }
  next.erase_disc(m);
  rec.delta_after = delta_of_assignment(next).delta;
  return {std::move(next), rec};
}

/// Replays a recorded step against a stage without recomputing any
/// geometry: validates that the record matches the stage exactly, then
/// erases index m and installs after_n at index n.
inline DiscAssignment apply_step_record(const DiscAssignment& stage,
                                        const StepRecord& rec) {
  const auto [n, m] = rec.pair;
  if (!stage.has_index(n) || !stage.has_index(m) || n >= m ||
      m != rec.removed_index || stage.at(n) != rec.before_n ||
      stage.at(m) != rec.before_m) {
    throw std::invalid_argument("apply_step_record: record does not match stage");
  }
  DiscAssignment next = stage;
  if (n == 0) {
    next.replace_outer(rec.after_n.as_closed());
  } else {
    next.set_disc(n, rec.after_n.as_open());
  }
  next.erase_disc(m);
  return next;
}

/// Iterates step_f until no collision remains or the budget runs out. The
/// default budget |S| always suffices: every non-trivial step removes one
/// index. An explicit smaller budget yields a truncated, non-stabilised
/// result; running out of the default budget is an internal error.
inline ClassicalisationResult classicalise(
    const DiscAssignment& d, std::optional<std::size_t> budget = std::nullopt) {
  if (!has_fh_condition(d)) {
    throw std::invalid_argument(
        "classicalise: Feinstein-Heath condition violated");
  }
  const std::size_t limit = budget.value_or(d.size());
  ClassicalisationResult result{d};
  while (result.trace.size() < limit) {
    auto [next, rec] = step_f(result.final);
    if (!rec) {
      break;
    }
    result.final = std::move(next);
    result.trace.push_back(*rec);
  }
  result.steps = result.trace.size();
  result.stabilised = !min_collision(result.final).has_value();
  if (!result.stabilised && !budget.has_value()) {
    throw std::logic_error(
        "classicalise: default budget exhausted before stabilisation");
  }
  return result;
}

/// Self-check that the stabilised flag and classicality of the final
/// assignment agree (they must for any result produced by classicalise,
/// truncated or not).
inline bool stabilised_iff_classical(const ClassicalisationResult& r) {
  return r.stabilised == is_classical(r.final);
}

}  // namespace swisscheese
