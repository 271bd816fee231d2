#include "mrpcorr/frame_io.hpp"

#include <json.hpp>

namespace mrpcorr {

using nlohmann::json;

namespace {

FiniteDomain domain_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw FrameFormatError(std::string("missing label array '") + key + "'");
  std::vector<std::string> labels;
  for (const auto& l : j[key]) {
    if (!l.is_string()) throw FrameFormatError("domain labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  try {
    return FiniteDomain(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw FrameFormatError(e.what());
  }
}

FiniteRelation relation_from(const json& j, const char* key, const FiniteDomain& src,
                             const FiniteDomain& dst) {
  if (!j.contains(key) || !j[key].is_array())
    throw FrameFormatError(std::string("missing pair array '") + key + "'");
  FiniteRelation r(src, dst);
  for (const auto& p : j[key]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw FrameFormatError(std::string("'") + key + "' entries must be [source,target] labels");
    auto u = src.index(p[0].get<std::string>());
    auto v = dst.index(p[1].get<std::string>());
    if (!u) throw FrameFormatError("unknown label " + p[0].get<std::string>() + " in " + key);
    if (!v) throw FrameFormatError("unknown label " + p[1].get<std::string>() + " in " + key);
    r.set(*u, *v);
  }
  return r;
}

json relation_pairs(const FiniteRelation& r) {
  json out = json::array();
  for (auto [u, v] : r.pairs()) out.push_back({r.src().label(u), r.dst().label(v)});
  return out;
}

Bits subset_from(const json& j, const FiniteDomain& dom) {
  Bits s = 0;
  if (!j.is_array()) throw FrameFormatError("subsets must be label arrays");
  for (const auto& l : j) {
    auto i = dom.index(l.get<std::string>());
    if (!i) throw FrameFormatError("unknown label " + l.get<std::string>() + " in valuation");
    s |= bit(*i);
  }
  return s;
}

json subset_to(const FiniteDomain& dom, Bits s) {
  json out = json::array();
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (contains(s, i)) out.push_back(dom.label(i));
  return out;
}

json parse_checked(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw FrameFormatError("frame document is not valid JSON");
  if (!j.is_object()) throw FrameFormatError("frame document must be a JSON object");
  return j;
}

}  // namespace

AnyFrame parse_frame_json(const std::string& text) {
  json j = parse_checked(text);
  std::string type = j.value("type", "");
  if (type == "kripke") {
    FiniteDomain dom = domain_from(j, "domain");
    FiniteRelation rb = relation_from(j, "R_box", dom, dom);
    FiniteRelation rd = relation_from(j, "R_dia", dom, dom);
    return KripkeFrame{dom, std::move(rb), std::move(rd)};
  }
  if (type == "graph") {
    FiniteDomain dom = domain_from(j, "domain");
    FiniteRelation e = relation_from(j, "E", dom, dom);
    FiniteRelation rb = relation_from(j, "R_box", dom, dom);
    FiniteRelation rd = relation_from(j, "R_dia", dom, dom);
    return GraphFrame{dom, std::move(e), std::move(rb), std::move(rd)};
  }
  if (type == "polarity") {
    FiniteDomain a = domain_from(j, "A"), x = domain_from(j, "X");
    FiniteRelation i = relation_from(j, "I", a, x);
    FiniteRelation rb = relation_from(j, "R_box", a, x);
    FiniteRelation rd = relation_from(j, "R_dia", x, a);
    return PolarityFrame{a, x, std::move(i), std::move(rb), std::move(rd)};
  }
  throw FrameFormatError("frame 'type' must be kripke, graph or polarity");
}

std::string frame_to_json(const KripkeFrame& f) {
  json j{{"type", "kripke"},
         {"domain", f.dom.labels()},
         {"R_box", relation_pairs(f.r_box)},
         {"R_dia", relation_pairs(f.r_dia)}};
  return j.dump(2);
}

std::string frame_to_json(const GraphFrame& f) {
  json j{{"type", "graph"},
         {"domain", f.dom.labels()},
         {"E", relation_pairs(f.e)},
         {"R_box", relation_pairs(f.r_box)},
         {"R_dia", relation_pairs(f.r_dia)}};
  return j.dump(2);
}

std::string frame_to_json(const PolarityFrame& f) {
  json j{{"type", "polarity"},
         {"A", f.a.labels()},
         {"X", f.x.labels()},
         {"I", relation_pairs(f.i)},
         {"R_box", relation_pairs(f.r_box)},
         {"R_dia", relation_pairs(f.r_dia)}};
  return j.dump(2);
}

std::map<std::string, Bits> parse_kripke_valuation(const std::string& text, const KripkeFrame& f) {
  json j = parse_checked(text);
  std::map<std::string, Bits> out;
  if (!j.contains("valuation")) return out;
  for (auto& [name, val] : j["valuation"].items()) out[name] = subset_from(val, f.dom);
  return out;
}

std::map<std::string, Concept> parse_graph_valuation(const std::string& text, const GraphFrame& f) {
  json j = parse_checked(text);
  std::map<std::string, Concept> out;
  if (!j.contains("valuation")) return out;
  for (auto& [name, val] : j["valuation"].items()) {
    if (!val.is_object() || !val.contains("extent") || !val.contains("intent"))
      throw FrameFormatError("graph valuations map atoms to {extent, intent} objects");
    out[name] = Concept{subset_from(val["extent"], f.dom), subset_from(val["intent"], f.dom)};
  }
  return out;
}

std::string model_to_json(const KripkeModel& m) {
  json j = json::parse(frame_to_json(m.frame));
  json val = json::object();
  for (const auto& [name, s] : m.valuation) val[name] = subset_to(m.frame.dom, s);
  j["valuation"] = val;
  return j.dump(2);
}

std::string model_to_json(const GraphModel& m) {
  json j = json::parse(frame_to_json(m.frame));
  json val = json::object();
  for (const auto& [name, c] : m.valuation)
    val[name] = {{"extent", subset_to(m.frame.dom, c.extent)},
                 {"intent", subset_to(m.frame.dom, c.intent)}};
  j["valuation"] = val;
  return j.dump(2);
}

}  // namespace mrpcorr
