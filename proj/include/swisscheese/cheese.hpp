#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "swisscheese/geometry.hpp"

namespace swisscheese {

/// A Swiss cheese: an outer closed disc and a finite ordered list of open
/// discs to delete from it. The list may be empty and may contain
/// duplicates; its set is the outer disc minus the union of the open discs.
struct SwissCheese {
  ClosedDisc outer{};
  std::vector<OpenDisc> discs{};

  friend bool operator==(const SwissCheese&, const SwissCheese&) = default;
};

/// A finite map from indices to generalized discs. Index 0 is always
/// present and holds the complement of the outer closed disc; every other
/// index holds an open disc. Indices are never renumbered: erasing leaves
/// the remaining indices unchanged, so the domain shrinks as a set.
class DiscAssignment {
 public:
  using EntryMap = std::map<std::size_t, GeneralizedDisc>;

  explicit DiscAssignment(const ClosedDisc& outer) {
    entries_.emplace(0, GeneralizedDisc::complement(outer));
  }

  DiscAssignment(const ClosedDisc& outer, const std::vector<OpenDisc>& discs)
      : DiscAssignment(outer) {
    for (std::size_t k = 0; k < discs.size(); ++k) {
      entries_.emplace(k + 1, GeneralizedDisc::open(discs[k]));
    }
  }

  const GeneralizedDisc& at(std::size_t i) const {
    const auto it = entries_.find(i);
    if (it == entries_.end()) {
      throw std::out_of_range("DiscAssignment: no such index");
    }
    return it->second;
  }

  bool has_index(std::size_t i) const { return entries_.count(i) != 0; }

  /// |S|, counting index 0.
  std::size_t size() const { return entries_.size(); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(entries_.size());
    for (const auto& [i, g] : entries_) {
      out.push_back(i);
    }
    return out;
  }

  const EntryMap& entries() const { return entries_; }

  /// Underlying closed disc of entry 0.
  ClosedDisc outer() const { return entries_.at(0).as_closed(); }

  void replace_outer(const ClosedDisc& outer) {
    entries_.at(0) = GeneralizedDisc::complement(outer);
  }

  void set_disc(std::size_t i, const OpenDisc& d) {
    if (i == 0) {
      throw std::invalid_argument("DiscAssignment: index 0 holds the complement");
    }
    entries_[i] = GeneralizedDisc::open(d);
  }

  void erase_disc(std::size_t i) {
    if (i == 0) {
      throw std::invalid_argument("DiscAssignment: cannot erase index 0");
    }
    if (entries_.erase(i) == 0) {
      throw std::out_of_range("DiscAssignment: no such index");
    }
  }

  friend bool operator==(const DiscAssignment&, const DiscAssignment&) =
      default;

 private:
  EntryMap entries_;
};

/// Outer radius, sum of deleted-disc radii, and their difference δ.
struct DeltaReport {
  double outer_radius{};
  double disc_radius_sum{};
  double delta{};
};

/// δ of a cheese. The disc collection is a set, so exact duplicates in the
/// stored list are counted once.
inline DeltaReport delta_of_cheese(const SwissCheese& c) {
  std::vector<OpenDisc> distinct;
  distinct.reserve(c.discs.size());
  double sum = 0.0;
  for (const OpenDisc& d : c.discs) {
    if (std::find(distinct.begin(), distinct.end(), d) == distinct.end()) {
      distinct.push_back(d);
      sum += d.radius;
    }
  }
  return {c.outer.radius, sum, c.outer.radius - sum};
}

/// δ_h of a disc assignment: duplicates occupy distinct indices and are
/// counted with multiplicity, so δ of the induced cheese can exceed this.
inline DeltaReport delta_of_assignment(const DiscAssignment& d) {
  const double outer_radius = d.outer().radius;
  double sum = 0.0;
  for (const auto& [i, g] : d.entries()) {
    if (i != 0) {
      sum += g.radius;
    }
  }
  return {outer_radius, sum, outer_radius - sum};
}

/// Feinstein-Heath condition: δ_h > 0, strictly.
inline bool has_fh_condition(const DiscAssignment& d) {
  return delta_of_assignment(d).delta > 0.0;
}

/// Whether no two distinct indices have intersecting closures. Pairwise
/// exact check; tangency counts as an intersection.
inline bool is_classical(const DiscAssignment& d) {
  const auto& entries = d.entries();
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    for (auto jt = std::next(it); jt != entries.end(); ++jt) {
      if (closures_intersect(it->second, jt->second)) {
        return false;
      }
    }
  }
  return true;
}

/// Positional indexing: the disc at list position k gets index k + 1.
/// Duplicate list entries get distinct indices.
inline DiscAssignment assignment_from_cheese(const SwissCheese& c) {
  return DiscAssignment(c.outer, c.discs);
}

/// Inverse construction; discs appear in increasing index order. Duplicate
/// entries are retained in the list (compare cheeses with
/// cheese_approx_equal, which matches multisets).
inline SwissCheese cheese_from_assignment(const DiscAssignment& d) {
  SwissCheese c{d.outer(), {}};
  for (const auto& [i, g] : d.entries()) {
    if (i != 0) {
      c.discs.push_back(g.as_open());
    }
  }
  return c;
}

/// Membership of z in the associated cheese set: z lies in none of the
/// assignment's generalized discs.
inline bool in_cheese_set(const DiscAssignment& d, const Point& z) {
  for (const auto& [i, g] : d.entries()) {
    if (point_in(g, z)) {
      return false;
    }
  }
  return true;
}

/// Cheese equality up to tol: outer discs within tol and disc multisets
/// matching within tol.
inline bool cheese_approx_equal(const SwissCheese& a, const SwissCheese& b,
                                double tol) {
  const auto close = [tol](const Point& p, const Point& q, double ra,
                           double rb) {
    return distance(p, q) <= tol && std::abs(ra - rb) <= tol;
  };
  if (!close(a.outer.center, b.outer.center, a.outer.radius, b.outer.radius)) {
    return false;
  }
  if (a.discs.size() != b.discs.size()) {
    return false;
  }
  std::vector<bool> used(b.discs.size(), false);
  for (const OpenDisc& d : a.discs) {
    bool matched = false;
    for (std::size_t j = 0; j < b.discs.size(); ++j) {
      if (!used[j] && close(d.center, b.discs[j].center, d.radius,
                            b.discs[j].radius)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) {
      return false;
    }
  }
  return true;
}

}  // namespace swisscheese
