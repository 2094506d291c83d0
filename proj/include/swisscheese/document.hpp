#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "swisscheese/cheese.hpp"
#include "swisscheese/engine.hpp"

namespace swisscheese {

/// Raised when a document file is missing, is not JSON, or violates the
/// schema (non-positive radii, wrong kinds, missing fields).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiscEntryDoc {
  double cx{};
  double cy{};
  double r{};

  friend bool operator==(const DiscEntryDoc&, const DiscEntryDoc&) = default;
};

struct GenMetadata {
  std::uint64_t seed{};
  std::size_t n_discs{};
  double delta_min{};
  double outer_r{};

  friend bool operator==(const GenMetadata&, const GenMetadata&) = default;
};

/// On-disk form of a Swiss cheese: the outer disc, the deleted discs in
/// index order 1..n (index 0 is implicit as "outer"), and optional
/// generator metadata.
struct CheeseDocument {
  DiscEntryDoc outer{};
  std::vector<DiscEntryDoc> discs;
  std::optional<GenMetadata> metadata;

  friend bool operator==(const CheeseDocument&, const CheeseDocument&) =
      default;
};

/// On-disk form of a classicalisation run: initial cheese, the step
/// records, the final cheese, both δ values, and the stabilised flag
/// needed to replay the run through the verifier.
struct TraceDocument {
  CheeseDocument initial;
  std::vector<StepRecord> steps;
  CheeseDocument final;
  double delta_initial{};
  double delta_final{};
  bool stabilised{};
};

namespace detail {

inline double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ParseError(std::string(what) + " is not finite");
  }
  return v;
}

inline DiscEntryDoc disc_entry_from_json(const nlohmann::json& j,
                                         const char* what) {
  if (!j.is_object() || !j.contains("cx") || !j.contains("cy") ||
      !j.contains("r")) {
    throw ParseError(std::string(what) + ": expected {cx, cy, r}");
  }
  DiscEntryDoc e{require_finite(j.at("cx").get<double>(), what),
                 require_finite(j.at("cy").get<double>(), what),
                 require_finite(j.at("r").get<double>(), what)};
  if (!(e.r > 0.0)) {
    throw ParseError(std::string(what) + ": radius must be positive");
  }
  return e;
}

inline nlohmann::json disc_entry_to_json(const DiscEntryDoc& e) {
  return {{"cx", e.cx}, {"cy", e.cy}, {"r", e.r}};
}

inline GeneralizedDisc gdisc_from_json(const nlohmann::json& j,
                                       const char* what) {
  const DiscEntryDoc e = disc_entry_from_json(j, what);
  const std::string kind = j.value("kind", "open");
  if (kind == "open") {
    return GeneralizedDisc::open({{e.cx, e.cy}, e.r});
  }
  if (kind == "complement") {
    return GeneralizedDisc::complement({{e.cx, e.cy}, e.r});
  }
  throw ParseError(std::string(what) + ": unknown kind '" + kind + "'");
}

inline nlohmann::json gdisc_to_json(const GeneralizedDisc& g) {
  nlohmann::json j = {{"kind", g.is_open() ? "open" : "complement"},
                      {"cx", g.center.x},
                      {"cy", g.center.y},
                      {"r", g.radius}};
  return j;
}

}  // namespace detail

inline nlohmann::json to_json(const CheeseDocument& doc) {
  nlohmann::json j;
  j["outer"] = detail::disc_entry_to_json(doc.outer);
  j["discs"] = nlohmann::json::array();
  for (const DiscEntryDoc& d : doc.discs) {
    j["discs"].push_back(detail::disc_entry_to_json(d));
  }
  if (doc.metadata) {
    j["metadata"] = {{"seed", doc.metadata->seed},
                     {"discs", doc.metadata->n_discs},
                     {"delta_min", doc.metadata->delta_min},
                     {"outer_r", doc.metadata->outer_r}};
  }
  return j;
}

inline CheeseDocument cheese_document_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("outer") || !j.contains("discs") ||
      !j.at("discs").is_array()) {
    throw ParseError("cheese document: expected {outer, discs}");
  }
  CheeseDocument doc;
  doc.outer = detail::disc_entry_from_json(j.at("outer"), "outer");
  for (const nlohmann::json& d : j.at("discs")) {
    doc.discs.push_back(detail::disc_entry_from_json(d, "disc"));
  }
  if (j.contains("metadata")) {
    const nlohmann::json& m = j.at("metadata");
    GenMetadata meta;
    meta.seed = m.value("seed", std::uint64_t{0});
    meta.n_discs = m.value("discs", std::size_t{0});
    meta.delta_min = m.value("delta_min", 0.0);
    meta.outer_r = m.value("outer_r", 0.0);
    doc.metadata = meta;
  }
  return doc;
}

inline nlohmann::json to_json(const StepRecord& rec) {
  return {{"pair", {{"n", rec.pair.n}, {"m", rec.pair.m}}},
          {"case", rec.case_tag == StepCase::merge ? "merge" : "shrink"},
          {"removed_index", rec.removed_index},
          {"before_n", detail::gdisc_to_json(rec.before_n)},
          {"before_m", detail::gdisc_to_json(rec.before_m)},
          {"after_n", detail::gdisc_to_json(rec.after_n)},
          {"delta_before", rec.delta_before},
          {"delta_after", rec.delta_after}};
}

inline StepRecord step_record_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pair") || !j.contains("case")) {
    throw ParseError("step record: expected {pair, case, ...}");
  }
  StepRecord rec;
  rec.pair.n = j.at("pair").at("n").get<std::size_t>();
  rec.pair.m = j.at("pair").at("m").get<std::size_t>();
  const std::string tag = j.at("case").get<std::string>();
  if (tag == "merge") {
    rec.case_tag = StepCase::merge;
  } else if (tag == "shrink") {
    rec.case_tag = StepCase::shrink;
  } else {
    throw ParseError("step record: unknown case '" + tag + "'");
  }
  rec.removed_index = j.at("removed_index").get<std::size_t>();
  rec.before_n = detail::gdisc_from_json(j.at("before_n"), "before_n");
  rec.before_m = detail::gdisc_from_json(j.at("before_m"), "before_m");
  rec.after_n = detail::gdisc_from_json(j.at("after_n"), "after_n");
  rec.delta_before =
      detail::require_finite(j.at("delta_before").get<double>(), "delta_before");
  rec.delta_after =
      detail::require_finite(j.at("delta_after").get<double>(), "delta_after");
  return rec;
}

inline nlohmann::json to_json(const TraceDocument& doc) {
  nlohmann::json j;
  j["initial"] = to_json(doc.initial);
  j["steps"] = nlohmann::json::array();
  for (const StepRecord& rec : doc.steps) {
    j["steps"].push_back(to_json(rec));
  }
  j["final"] = to_json(doc.final);
  j["deltas"] = {{"initial", doc.delta_initial}, {"final", doc.delta_final}};
  j["stabilised"] = doc.stabilised;
  return j;
}

inline TraceDocument trace_document_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("initial") || !j.contains("steps") ||
      !j.contains("final") || !j.contains("deltas")) {
    throw ParseError("trace document: expected {initial, steps, final, deltas}");
  }
  TraceDocument doc;
  doc.initial = cheese_document_from_json(j.at("initial"));
  for (const nlohmann::json& s : j.at("steps")) {
    doc.steps.push_back(step_record_from_json(s));
  }
  doc.final = cheese_document_from_json(j.at("final"));
  doc.delta_initial = j.at("deltas").at("initial").get<double>();
  doc.delta_final = j.at("deltas").at("final").get<double>();
  doc.stabilised = j.value("stabilised", false);
  return doc;
}

inline SwissCheese cheese_from_document(const CheeseDocument& doc) {
  SwissCheese c{{{doc.outer.cx, doc.outer.cy}, doc.outer.r}, {}};
  c.discs.reserve(doc.discs.size());
  for (const DiscEntryDoc& d : doc.discs) {
    c.discs.push_back({{d.cx, d.cy}, d.r});
  }
  return c;
}

inline CheeseDocument document_from_cheese(const SwissCheese& c) {
  CheeseDocument doc;
  doc.outer = {c.outer.center.x, c.outer.center.y, c.outer.radius};
  doc.discs.reserve(c.discs.size());
  for (const OpenDisc& d : c.discs) {
    doc.discs.push_back({d.center.x, d.center.y, d.radius});
  }
  return doc;
}

/// Serialisation used for all files this tool writes: 2-space indent,
/// sorted keys, and doubles emitted with the shortest digit string that
/// parses back to the identical binary64 value.
inline std::string serialize(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

inline nlohmann::json parse_json_text(const std::string& text,
                                      const std::string& what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(what + ": invalid JSON");
  }
  return j;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

inline void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  out << text;
  if (!out) {
    throw ParseError("write failed for '" + path + "'");
  }
}

}  // namespace swisscheese
