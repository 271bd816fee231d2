// Python surface over the core operations: classification, correspondents,
// lattices, validity, the transfer maps and the verification drivers.
// Frames travel as JSON strings in the documented format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrpcorr/axioms.hpp"
#include "mrpcorr/correspond.hpp"
#include "mrpcorr/frame_io.hpp"
#include "mrpcorr/roughsets.hpp"
#include "mrpcorr/verify.hpp"

namespace py = pybind11;
using namespace mrpcorr;

namespace {

MrpClassification classify_text(const std::string& text) {
  Inequality q = parse_inequality(text);
  return classify_mrp(q.lhs, q.rhs);
}

RelLang lang_of(const std::string& semantics) {
  if (semantics == "kripke") return RelLang::KRel;
  if (semantics == "graph") return RelLang::GRel;
  if (semantics == "polarity") return RelLang::PRel;
  throw std::invalid_argument("semantics must be kripke, graph or polarity");
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict out;
  out["mrp"] = rep.mrp;
  out["mode"] = rep.mode;
  out["checks"] = rep.checks;
  out["pass"] = rep.pass();
  out["seed"] = rep.seed;
  out["wall_seconds"] = rep.wall_seconds;
  py::dict strata;
  for (const auto& [k, v] : rep.strata) strata[py::str(k)] = v;
  out["frames_tested"] = strata;
  py::list dis;
  for (const Disagreement& d : rep.disagreements) {
    py::dict w;
    w["frame"] = d.frame_json;
    w["detail"] = d.detail;
    dis.append(w);
  }
  out["disagreements"] = dis;
  return out;
}

VerifyOptions options_from(std::size_t samples, std::uint64_t seed, std::size_t jobs,
                           std::vector<std::size_t> sizes) {
  VerifyOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.jobs = jobs;
  if (!sizes.empty()) opt.sampled_sizes = std::move(sizes);
  return opt;
}

py::dict flag_dict(const FlagResult& f) {
  py::dict out;
  out["holds"] = f.holds;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sahlqvist modal reduction principles and their relational correspondents";

  m.def("classify", [](const std::string& mrp) { return describe_classification(classify_text(mrp)); },
        py::arg("mrp"));
  m.def("is_inductive", [](const std::string& mrp) { return classify_text(mrp).sahlqvist(); },
        py::arg("mrp"));
  m.def(
      "alba",
      [](const std::string& mrp) {
        std::vector<std::string> out;
        for (const PureInequality& p : alba_output(classify_text(mrp)))
          out.push_back(print_pure_inequality(p));
        return out;
      },
      py::arg("mrp"));
  m.def(
      "correspondent",
      [](const std::string& mrp, const std::string& semantics) {
        std::vector<std::string> out;
        for (const Correspondent& c : correspondent(classify_text(mrp), lang_of(semantics)))
          out.push_back(print_rel_inequality(c.ineq));
        return out;
      },
      py::arg("mrp"), py::arg("semantics") = "graph");

  m.def("catalogue", [] { return render_catalogue(regenerate_catalogue()); });
  m.def("catalogue_diff", [] { return catalogue_diff(); });

  m.def(
      "lattice",
      [](const std::string& frame_json) {
        AnyFrame any = parse_frame_json(frame_json);
        ConceptLattice lat = std::visit(
            [](const auto& f) -> ConceptLattice {
              using T = std::decay_t<decltype(f)>;
              if constexpr (std::is_same_v<T, KripkeFrame>)
                return ConceptLattice::of_graph(shift(f));
              else if constexpr (std::is_same_v<T, GraphFrame>)
                return ConceptLattice::of_graph(f);
              else
                return ConceptLattice::of_polarity(f);
            },
            any);
        std::vector<std::string> out;
        for (const Concept& c : lat.concepts()) out.push_back(format_concept(lat, c));
        return out;
      },
      py::arg("frame_json"));
  m.def(
      "lattice_dot",
      [](const std::string& frame_json) {
        AnyFrame any = parse_frame_json(frame_json);
        if (auto* g = std::get_if<GraphFrame>(&any))
          return lattice_to_dot(ConceptLattice::of_graph(*g));
        if (auto* p = std::get_if<PolarityFrame>(&any))
          return lattice_to_dot(ConceptLattice::of_polarity(*p));
        return lattice_to_dot(ConceptLattice::of_graph(shift(std::get<KripkeFrame>(any))));
      },
      py::arg("frame_json"));

  m.def(
      "validate_frame",
      [](const std::string& frame_json) -> std::optional<std::string> {
        AnyFrame any = parse_frame_json(frame_json);
        std::optional<FrameViolation> v;
        if (auto* g = std::get_if<GraphFrame>(&any)) v = validate_frame(*g);
        if (auto* p = std::get_if<PolarityFrame>(&any)) v = validate_frame(*p);
        if (v) return v->message;
        return std::nullopt;
      },
      py::arg("frame_json"));

  m.def(
      "frame_valid",
      [](const std::string& frame_json, const std::string& sequent) {
        AnyFrame any = parse_frame_json(frame_json);
        Inequality seq = parse_inequality(sequent);
        if (auto* k = std::get_if<KripkeFrame>(&any)) {
          KripkeValidity v = frame_valid(*k, seq);
          return py::make_tuple(v.valid,
                                v.valid ? py::object(py::none())
                                        : py::object(py::str(model_to_json(KripkeModel{*k, *v.countervaluation}))));
        }
        if (!std::holds_alternative<GraphFrame>(any))
          throw std::invalid_argument("validity is checked on kripke or graph frames");
        auto& g = std::get<GraphFrame>(any);
        GraphValidity v = frame_valid(g, seq);
        return py::make_tuple(v.valid,
                              v.valid ? py::object(py::none())
                                      : py::object(py::str(model_to_json(GraphModel{g, *v.countervaluation}))));
      },
      py::arg("frame_json"), py::arg("sequent"));

  m.def(
      "check_inequality",
      [](const std::string& frame_json, const std::string& ineq) {
        AnyFrame any = parse_frame_json(frame_json);
        IneqCheck c;
        if (auto* k = std::get_if<KripkeFrame>(&any))
          c = ineq_holds(parse_rel_inequality(ineq, RelLang::KRel), *k);
        else if (auto* g = std::get_if<GraphFrame>(&any))
          c = ineq_holds(parse_rel_inequality(ineq, RelLang::GRel), *g);
        else
          c = ineq_holds(parse_rel_inequality(ineq, RelLang::PRel), std::get<PolarityFrame>(any));
        return py::make_tuple(c.holds, c.counterpair ? py::object(py::make_tuple(c.counterpair->first,
                                                                                 c.counterpair->second))
                                                     : py::object(py::none()));
      },
      py::arg("frame_json"), py::arg("inequality"));

  m.def(
      "shift_frame",
      [](const std::string& frame_json) {
        AnyFrame any = parse_frame_json(frame_json);
        if (auto* k = std::get_if<KripkeFrame>(&any)) return frame_to_json(shift(*k));
        return frame_to_json(unshift(std::get<GraphFrame>(any)));
      },
      py::arg("frame_json"));
  m.def(
      "lift_frame",
      [](const std::string& frame_json) {
        AnyFrame any = parse_frame_json(frame_json);
        return frame_to_json(lift(std::get<GraphFrame>(any)));
      },
      py::arg("frame_json"));

  m.def(
      "classify_space",
      [](const std::string& frame_json) {
        AnyFrame any = parse_frame_json(frame_json);
        py::dict out;
        if (auto* k = std::get_if<KripkeFrame>(&any)) {
          SpaceClassReport r = classify_space(*k);
          out["kind"] = "kripke";
          out["serial"] = flag_dict(r.serial);
          out["reflexive"] = flag_dict(r.reflexive);
          out["symmetric"] = flag_dict(r.symmetric);
          out["transitive"] = flag_dict(r.transitive);
          out["euclidean"] = flag_dict(r.euclidean);
          return out;
        }
        auto& g = std::get<GraphFrame>(any);
        SpaceClassReport r = classify_space(g);
        out["kind"] = "graph";
        out["serial"] = flag_dict(r.serial);
        out["E_reflexive"] = flag_dict(r.e_reflexive);
        out["E_symmetric"] = flag_dict(r.e_symmetric);
        out["E_transitive"] = r.e_transitive();
        out["pawlak"] = r.pawlak();
        return out;
      },
      py::arg("frame_json"));

  m.def(
      "verify_correspondence",
      [](const std::string& mrp, const std::string& semantics, std::size_t samples,
         std::uint64_t seed, std::size_t jobs, std::vector<std::size_t> sizes) {
        return report_dict(
            verify_correspondence(mrp, semantics != "kripke", options_from(samples, seed, jobs, sizes)));
      },
      py::arg("mrp"), py::arg("semantics") = "graph", py::arg("samples") = 200,
      py::arg("seed") = 2024, py::arg("jobs") = 1, py::arg("sizes") = std::vector<std::size_t>{});
  m.def(
      "verify_shifting",
      [](const std::string& mrp, std::size_t samples, std::uint64_t seed, std::size_t jobs,
         std::vector<std::size_t> sizes) {
        return report_dict(verify_shifting(mrp, options_from(samples, seed, jobs, sizes)));
      },
      py::arg("mrp"), py::arg("samples") = 200, py::arg("seed") = 2024, py::arg("jobs") = 1,
      py::arg("sizes") = std::vector<std::size_t>{});
  m.def(
      "verify_lifting",
      [](const std::string& mrp, std::size_t samples, std::uint64_t seed, std::size_t jobs,
         std::vector<std::size_t> sizes) {
        return report_dict(verify_lifting(mrp, options_from(samples, seed, jobs, sizes)));
      },
      py::arg("mrp"), py::arg("samples") = 200, py::arg("seed") = 2024, py::arg("jobs") = 1,
      py::arg("sizes") = std::vector<std::size_t>{});

  py::register_exception<ParseError>(m, "FormulaParseError");
  py::register_exception<FrameFormatError>(m, "FrameFormatError");
}
