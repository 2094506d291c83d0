#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "swisscheese/cheese.hpp"
#include "swisscheese/engine.hpp"
#include "swisscheese/geometry.hpp"

namespace swisscheese {

struct VerificationFailure {
  std::string check;
  std::string witness;
};

struct VerificationReport {
  std::size_t checks_run{};
  std::vector<VerificationFailure> failures;

  bool passed() const { return failures.empty(); }

  void fail(std::string check, std::string witness) {
    failures.push_back({std::move(check), std::move(witness)});
  }

  void merge(const VerificationReport& other) {
    checks_run += other.checks_run;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

namespace detail {

inline std::string format_point(const Point& z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "(%.17g, %.17g)", z.x, z.y);
  return buf;
}

inline std::string format_disc(const GeneralizedDisc& g) {
  char buf[120];
  std::snprintf(buf, sizeof(buf), "%s((%.17g, %.17g), %.17g)",
                g.is_open() ? "open" : "complement", g.center.x, g.center.y,
                g.radius);
  return buf;
}

/// Uniform double in [0, 1), identical on every platform for a given
/// engine state (std::uniform_real_distribution is not portable).
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Collision of two closure regions with slack tol (tolerant counterpart
/// of the exact closures_intersect, for replay checking).
inline bool closures_intersect_within(const GeneralizedDisc& a,
                                      const GeneralizedDisc& b, double tol) {
  const double d = distance(a.center, b.center);
  if (a.is_open() && b.is_open()) {
    return d <= a.radius + b.radius + tol;
  }
  const GeneralizedDisc& open = a.is_open() ? a : b;
  const GeneralizedDisc& comp = a.is_open() ? b : a;
  return d + open.radius >= comp.radius - tol;
}

}  // namespace detail

/// Sampling refutation of X_inner ⊆ X_outer: draws n_points uniformly from
/// the bounding box of the inner assignment's outer disc and reports every
/// point that lies in the inner cheese set but not in the outer one.
/// Deterministic for a given seed.
inline VerificationReport sample_containment(const DiscAssignment& inner,
                                             const DiscAssignment& outer,
                                             std::size_t n_points,
                                             std::uint64_t seed) {
  VerificationReport report;
  const ClosedDisc box = inner.outer();
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double x =
        box.center.x + (2.0 * detail::uniform_unit(rng) - 1.0) * box.radius;
    const double y =
        box.center.y + (2.0 * detail::uniform_unit(rng) - 1.0) * box.radius;
    const Point z{x, y};
    ++report.checks_run;
    if (in_cheese_set(inner, z) && !in_cheese_set(outer, z)) {
      report.fail("containment-sample",
                  "z=" + detail::format_point(z) +
                      " lies in the refined set but not in the original");
    }
  }
  return report;
}

/// Certificate check of one step against its record, recomputing every
/// quantity from raw data (never calling the engine): the pair collided,
/// the record matches before/after, exactly index m was removed, δ did not
/// decrease and the Feinstein-Heath condition survived, every surviving
/// entry grew, entry m was absorbed into entry n, and entry 0 stayed a
/// complement.
inline VerificationReport verify_step(const DiscAssignment& before,
                                      const DiscAssignment& after,
                                      const StepRecord& rec,
                                      double tol = kVerifyEps) {
  VerificationReport report;
  const auto [n, m] = rec.pair;

  ++report.checks_run;
  if (!(n < m) || m != rec.removed_index || m == 0 || !before.has_index(n) ||
      !before.has_index(m)) {
    report.fail("record-pair-valid",
                "pair=(" + std::to_string(n) + "," + std::to_string(m) +
                    ") removed_index=" + std::to_string(rec.removed_index));
    return report;
  }

  ++report.checks_run;
  if (before.at(n) != rec.before_n || before.at(m) != rec.before_m ||
      !after.has_index(n) || after.at(n) != rec.after_n) {
    report.fail("record-consistent",
                "recorded entries do not match the stage assignments");
  }

  ++report.checks_run;
  if (!detail::closures_intersect_within(rec.before_n, rec.before_m, tol)) {
    report.fail("pair-collides", detail::format_disc(rec.before_n) + " vs " +
                                     detail::format_disc(rec.before_m));
  }

  // S' = S \ {m}.
  ++report.checks_run;
  {
    bool removed_exactly_m = !after.has_index(m);
    for (const auto& [i, g] : before.entries()) {
      if (i != m && !after.has_index(i)) {
        removed_exactly_m = false;
      }
    }
    if (after.size() + 1 != before.size()) {
      removed_exactly_m = false;
    }
    if (!removed_exactly_m) {
      report.fail("index-removed",
                  "surviving index set is not S \\ {" + std::to_string(m) + "}");
    }
  }

  const double delta_before = delta_of_assignment(before).delta;
  const double delta_after = delta_of_assignment(after).delta;

  ++report.checks_run;
  if (!(delta_after > 0.0)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "delta_after=%.17g", delta_after);
    report.fail("fh-preserved", buf);
  }

  ++report.checks_run;
  if (delta_after < delta_before - tol ||
      std::abs(rec.delta_before - delta_before) > tol ||
      std::abs(rec.delta_after - delta_after) > tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "delta %.17g -> %.17g (recorded %.17g -> %.17g)",
                  delta_before, delta_after, rec.delta_before,
                  rec.delta_after);
    report.fail("delta-monotone", buf);
  }

  for (const auto& [i, g] : after.entries()) {
    if (!before.has_index(i)) {
      continue;
    }
    ++report.checks_run;
    if (!contains_within(g, before.at(i), tol)) {
      report.fail("containment", "index " + std::to_string(i) + ": " +
                                     detail::format_disc(before.at(i)) +
                                     " not inside " + detail::format_disc(g));
    }
  }

  ++report.checks_run;
  if (after.has_index(n) && !contains_within(after.at(n), rec.before_m, tol)) {
    report.fail("absorption", detail::format_disc(rec.before_m) +
                                  " not inside " +
                                  detail::format_disc(after.at(n)));
  }

  ++report.checks_run;
  {
    bool kinds_ok = after.has_index(0) && after.at(0).is_complement();
    for (const auto& [i, g] : after.entries()) {
      if (i != 0 && !g.is_open()) {
        kinds_ok = false;
      }
    }
    if (!kinds_ok) {
      report.fail("kind-stable", "entry kinds changed shape after the step");
    }
  }

  return report;
}

/// Replays a whole run from its trace, applying verify_step at every
/// stage, then checks the final assignment, classicality under
/// stabilisation, end-to-end δ monotonicity, and sampled set containment.
inline VerificationReport verify_run(const ClassicalisationResult& r,
                                     const DiscAssignment& initial,
                                     std::size_t n_points, std::uint64_t seed,
                                     double tol = kVerifyEps) {
  VerificationReport report;

  DiscAssignment stage = initial;
  bool replay_ok = true;
  for (const StepRecord& rec : r.trace) {
    ++report.checks_run;
    DiscAssignment after = stage;
    try {
      after = apply_step_record(stage, rec);
    } catch (const std::invalid_argument&) {
      report.fail("trace-replay-mismatch",
                  "record for pair (" + std::to_string(rec.pair.n) + "," +
                      std::to_string(rec.pair.m) +
                      ") does not match the replayed stage");
      replay_ok = false;
      break;
    }
    report.merge(verify_step(stage, after, rec, tol));
    stage = std::move(after);
  }

  ++report.checks_run;
  if (!replay_ok || !(stage == r.final)) {
    report.fail("trace-replay-mismatch",
                "final assignment does not equal the replayed trace result");
  }

  ++report.checks_run;
  if (r.stabilised && !is_classical(r.final)) {
    report.fail("final-classical", "stabilised result is not classical");
  }

  ++report.checks_run;
  if (!stabilised_iff_classical(r)) {
    report.fail("stabilised-iff-classical",
                "stabilised flag disagrees with classicality of the final");
  }

  ++report.checks_run;
  {
    const double d0 = delta_of_assignment(initial).delta;
    const double d1 = delta_of_assignment(r.final).delta;
    if (d1 < d0 - tol) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "delta %.17g -> %.17g", d0, d1);
      report.fail("delta-end-to-end", buf);
    }
  }

  report.merge(sample_containment(r.final, initial, n_points, seed));
  return report;
}

}  // namespace swisscheese
