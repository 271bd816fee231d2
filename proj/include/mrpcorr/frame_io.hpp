#pragma once

#include <string>
#include <variant>

#include "mrpcorr/frames.hpp"
#include "mrpcorr/semantics.hpp"

namespace mrpcorr {

struct FrameFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyFrame = std::variant<KripkeFrame, GraphFrame, PolarityFrame>;

/// Frame documents are JSON objects:
///   {"type": "kripke"|"graph"|"polarity",
///    "domain": [labels]            (or "A": [...], "X": [...] for polarity),
///    "E": [[src,dst],...]          ("I" for polarity),
///    "R_box": [...], "R_dia": [...]}
/// with every pair given as [source label, target label]. A "valuation"
/// member may map atom names to subsets (kripke) or {extent, intent} pairs.
AnyFrame parse_frame_json(const std::string& text);
std::string frame_to_json(const KripkeFrame& f);
std::string frame_to_json(const GraphFrame& f);
std::string frame_to_json(const PolarityFrame& f);

/// Extracts the optional valuation block of a frame document.
std::map<std::string, Bits> parse_kripke_valuation(const std::string& text, const KripkeFrame& f);
std::map<std::string, Concept> parse_graph_valuation(const std::string& text, const GraphFrame& f);

std::string model_to_json(const KripkeModel& m);
std::string model_to_json(const GraphModel& m);

}  // namespace mrpcorr
