#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include "swisscheese/allocation.hpp"
#include "swisscheese/document.hpp"
#include "swisscheese/engine.hpp"
#include "swisscheese/generator.hpp"
#include "swisscheese/oracle.hpp"
#include "swisscheese/svg.hpp"

namespace swisscheese::cli {

// Exit codes shared by the subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;        // verification failed / not stabilised
inline constexpr int kExitParse = 2;       // unreadable input or bad parameters
inline constexpr int kExitNoFh = 3;        // Feinstein-Heath condition violated
inline constexpr int kExitInternal = 4;    // internal invariant failure

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// `gen`: write a seeded random cheese document to out_path (or stream it
/// to `out` when out_path is empty).
inline int run_gen(std::uint64_t seed, std::size_t n_discs, double delta_min,
                   double outer_r, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  try {
    const CheeseDocument doc = gen_cheese(seed, n_discs, delta_min, outer_r);
    const std::string text = serialize(to_json(doc));
    if (out_path.empty()) {
      out << text;
    } else {
      save_text_file(out_path, text);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << "\n";
    return kExitParse;
  }
}

/// `classicalise`: run the engine on a cheese document and write the trace
/// document. Prints the two δ values and the step count.
inline int run_classicalise(const std::string& in_path,
                            const std::string& trace_path,
                            std::optional<std::size_t> budget,
                            std::ostream& out, std::ostream& err) {
  CheeseDocument input;
  try {
    input = cheese_document_from_json(load_json_file(in_path));
  } catch (const std::exception& e) {
    err << "classicalise: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    const DiscAssignment initial =
        assignment_from_cheese(cheese_from_document(input));
    if (!has_fh_condition(initial)) {
      err << "classicalise: Feinstein-Heath condition violated (delta = "
          << detail::fmt(delta_of_assignment(initial).delta) << ")\n";
      return kExitNoFh;
    }
    const ClassicalisationResult result = classicalise(initial, budget);

    TraceDocument trace;
    trace.initial = input;
    trace.steps = result.trace;
    trace.final = document_from_cheese(cheese_from_assignment(result.final));
    trace.delta_initial = delta_of_assignment(initial).delta;
    trace.delta_final = delta_of_assignment(result.final).delta;
    trace.stabilised = result.stabilised;
    if (!trace_path.empty()) {
      save_text_file(trace_path, serialize(to_json(trace)));
    }

    out << "delta_initial = " << detail::fmt(trace.delta_initial) << "\n"
        << "delta_final   = " << detail::fmt(trace.delta_final) << "\n"
        << "steps         = " << result.steps << "\n"
        << "stabilised    = " << (result.stabilised ? "true" : "false") << "\n";
    if (!result.stabilised) {
      err << "classicalise: budget exhausted before stabilisation\n";
      return kExitFail;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "classicalise: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "classicalise: internal invariant failure: " << e.what() << "\n";
    return kExitInternal;
  }
}

/// `verify`: replay a trace document through the certificate checker.
inline int run_verify(const std::string& trace_path, std::size_t n_points,
                      std::uint64_t seed, std::ostream& out,
                      std::ostream& err) {
  TraceDocument doc;
  try {
    doc = trace_document_from_json(load_json_file(trace_path));
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return kExitParse;
  }

  const DiscAssignment initial =
      assignment_from_cheese(cheese_from_document(doc.initial));

  // Rebuild the final assignment by replaying the records, then check that
  // the document's final cheese matches the replay.
  VerificationReport report;
  DiscAssignment final_assignment = initial;
  bool replay_ok = true;
  for (const StepRecord& rec : doc.steps) {
    try {
      final_assignment = apply_step_record(final_assignment, rec);
    } catch (const std::invalid_argument&) {
      replay_ok = false;
      break;
    }
  }
  ++report.checks_run;
  if (!replay_ok ||
      !cheese_approx_equal(cheese_from_assignment(final_assignment),
                           cheese_from_document(doc.final), 0.0)) {
    report.fail("trace-replay-mismatch",
                "stored final cheese does not match the replayed records");
  } else {
    ClassicalisationResult result{final_assignment, doc.steps,
                                  doc.steps.size(), doc.stabilised};
    report.merge(verify_run(result, initial, n_points, seed));
  }

  out << "checks_run = " << report.checks_run << "\n"
      << "failures   = " << report.failures.size() << "\n";
  for (const VerificationFailure& f : report.failures) {
    out << "FAIL " << f.check << ": " << f.witness << "\n";
  }
  out << (report.passed() ? "PASSED" : "FAILED") << "\n";
  return report.passed() ? kExitOk : kExitFail;
}

/// `render`: emit an SVG for a cheese document, or a per-step frame strip
/// for a trace document (detected by the presence of "steps").
inline int run_render(const std::string& in_path, const std::string& svg_path,
                      int width, std::ostream& err) {
  try {
    const nlohmann::json j = load_json_file(in_path);
    std::string svg;
    if (j.is_object() && j.contains("steps")) {
      svg = render_trace_svg(trace_document_from_json(j), width);
    } else {
      svg = render_cheese_svg(cheese_document_from_json(j), width);
    }
    save_text_file(svg_path, svg);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "render: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace swisscheese::cli
