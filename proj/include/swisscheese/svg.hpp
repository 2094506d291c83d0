#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "swisscheese/document.hpp"

namespace swisscheese {

namespace detail {

inline std::string svg_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

inline void append_circle(std::string& out, double cx, double cy, double r,
                          const char* fill, const char* stroke,
                          double stroke_width) {
  out += "  <circle cx=\"" + svg_num(cx) + "\" cy=\"" + svg_num(cy) +
         "\" r=\"" + svg_num(r) + "\" fill=\"" + fill + "\" stroke=\"" +
         stroke + "\" stroke-width=\"" + svg_num(stroke_width) + "\"/>\n";
}

/// One cheese frame: the outer disc filled, each deleted disc drawn as a
/// background-coloured hole. Plane y is mapped to SVG y directly (circles
/// are mirror-invariant).
inline void append_cheese_frame(std::string& out, const CheeseDocument& doc,
                                double stroke_width) {
  append_circle(out, doc.outer.cx, doc.outer.cy, doc.outer.r, "#e8c06a",
                "#7a5a1e", stroke_width);
  for (const DiscEntryDoc& d : doc.discs) {
    append_circle(out, d.cx, d.cy, d.r, "#ffffff", "#9aa0a6",
                  stroke_width * 0.5);
  }
}

}  // namespace detail

/// SVG of a single cheese: viewBox fitted to the outer disc with a 5%
/// margin. Byte output is deterministic for a fixed document.
inline std::string render_cheese_svg(const CheeseDocument& doc, int width) {
  const double r = doc.outer.r;
  const double margin = 0.05 * (2.0 * r);
  const double x0 = doc.outer.cx - r - margin;
  const double y0 = doc.outer.cy - r - margin;
  const double side = 2.0 * (r + margin);
  const double stroke = side / 400.0;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(width) +
         "\" viewBox=\"" + detail::svg_num(x0) + " " + detail::svg_num(y0) +
         " " + detail::svg_num(side) + " " + detail::svg_num(side) + "\">\n";
  detail::append_cheese_frame(out, doc, stroke);
  out += "</svg>\n";
  return out;
}

/// SVG of a run: one group per stage (initial plus one per step), laid out
/// left to right. Every frame shares the initial outer disc's view window,
/// which contains all later stages.
inline std::string render_trace_svg(const TraceDocument& doc, int width) {
  // Reconstruct the stage cheeses by replaying the records.
  std::vector<CheeseDocument> stages;
  DiscAssignment stage =
      assignment_from_cheese(cheese_from_document(doc.initial));
  stages.push_back(doc.initial);
  for (const StepRecord& rec : doc.steps) {
    stage = apply_step_record(stage, rec);
    stages.push_back(document_from_cheese(cheese_from_assignment(stage)));
  }

  const double r = doc.initial.outer.r;
  const double margin = 0.05 * (2.0 * r);
  const double side = 2.0 * (r + margin);
  const double x0 = doc.initial.outer.cx - r - margin;
  const double y0 = doc.initial.outer.cy - r - margin;
  const double stroke = side / 400.0;
  const auto frames = stages.size();

  const int height =
      static_cast<int>(static_cast<double>(width) / static_cast<double>(frames));
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"" + detail::svg_num(x0) + " " + detail::svg_num(y0) +
         " " + detail::svg_num(side * static_cast<double>(frames)) + " " +
         detail::svg_num(side) + "\">\n";
  for (std::size_t f = 0; f < frames; ++f) {
    out += "<g transform=\"translate(" +
           detail::svg_num(side * static_cast<double>(f)) + " 0)\">\n";
    detail::append_cheese_frame(out, stages[f], stroke);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace swisscheese
