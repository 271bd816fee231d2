#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mrpcorr/axioms.hpp"
#include "mrpcorr/correspond.hpp"
#include "mrpcorr/frame_io.hpp"
#include "mrpcorr/roughsets.hpp"
#include "mrpcorr/verify.hpp"

#include <json.hpp>

namespace {

using namespace mrpcorr;

constexpr int kExitPass = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameFormatError("cannot open frame file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RelLang lang_of(const std::string& semantics) {
  if (semantics == "kripke") return RelLang::KRel;
  if (semantics == "graph") return RelLang::GRel;
  if (semantics == "polarity") return RelLang::PRel;
  throw CLI::ValidationError("--semantics must be kripke, graph or polarity");
}

MrpClassification classify_arg(const std::string& text) {
  Inequality mrp = parse_inequality(text);
  return classify_mrp(mrp.lhs, mrp.rhs);
}

int cmd_classify(const std::string& mrp) {
  MrpClassification c = classify_arg(mrp);
  std::cout << describe_classification(c) << "\n";
  return c.sahlqvist() ? kExitPass : kExitDisagreement;
}

int cmd_alba(const std::string& mrp) {
  MrpClassification c = classify_arg(mrp);
  if (!c.sahlqvist()) {
    std::cerr << "not an inductive mrp\n";
    return kExitDisagreement;
  }
  for (const PureInequality& p : alba_output(c)) std::cout << print_pure_inequality(p) << "\n";
  return kExitPass;
}

int cmd_correspond(const std::string& mrp, const std::string& semantics) {
  MrpClassification c = classify_arg(mrp);
  if (!c.sahlqvist()) {
    std::cerr << "not an inductive mrp\n";
    return kExitDisagreement;
  }
  for (const Correspondent& row : correspondent(c, lang_of(semantics)))
    std::cout << print_rel_inequality(row.ineq) << "\n";
  return kExitPass;
}

int cmd_frame_check(const std::string& path, const std::string& ineq_text) {
  AnyFrame any = parse_frame_json(slurp(path));
  IneqCheck res;
  const FiniteDomain* src = nullptr;
  const FiniteDomain* dst = nullptr;
  if (auto* k = std::get_if<KripkeFrame>(&any)) {
    res = ineq_holds(parse_rel_inequality(ineq_text, RelLang::KRel), *k);
    src = dst = &k->dom;
  } else if (auto* g = std::get_if<GraphFrame>(&any)) {
    if (auto v = validate_frame(*g)) {
      std::cerr << "invalid frame: " << v->message << "\n";
      return kExitUsage;
    }
    res = ineq_holds(parse_rel_inequality(ineq_text, RelLang::GRel), *g);
    src = dst = &g->dom;
  } else {
    auto& p = std::get<PolarityFrame>(any);
    if (auto v = validate_frame(p)) {
      std::cerr << "invalid frame: " << v->message << "\n";
      return kExitUsage;
    }
    RelInequality q = parse_rel_inequality(ineq_text, RelLang::PRel);
    res = ineq_holds(q, p);
    src = q.lhs->sort()->row == SortSide::A ? &p.a : &p.x;
    dst = q.lhs->sort()->col == SortSide::A ? &p.a : &p.x;
  }
  if (res.holds) {
    std::cout << "holds\n";
    return kExitPass;
  }
  std::cout << "fails, witness " << format_pair(*src, *dst, *res.counterpair) << "\n";
  return kExitDisagreement;
}

int cmd_frame_validate(const std::string& path, const std::string& sequent) {
  AnyFrame any = parse_frame_json(slurp(path));
  Inequality seq = parse_inequality(sequent);
  if (auto* k = std::get_if<KripkeFrame>(&any)) {
    KripkeValidity v = frame_valid(*k, seq);
    if (v.valid) {
      std::cout << "valid\n";
      return kExitPass;
    }
    std::cout << "invalid; countermodel:\n"
              << model_to_json(KripkeModel{*k, *v.countervaluation}) << "\n";
    return kExitDisagreement;
  }
  if (auto* g = std::get_if<GraphFrame>(&any)) {
    if (auto v = validate_frame(*g)) {
      std::cerr << "invalid frame: " << v->message << "\n";
      return kExitUsage;
    }
    GraphValidity v = frame_valid(*g, seq);
    if (v.valid) {
      std::cout << "valid\n";
      return kExitPass;
    }
    std::cout << "invalid; countermodel:\n"
              << model_to_json(GraphModel{*g, *v.countervaluation}) << "\n";
    return kExitDisagreement;
  }
  std::cerr << "validity is checked on kripke or graph frames\n";
  return kExitUsage;
}

int cmd_frame_lattice(const std::string& path, bool dot) {
  AnyFrame any = parse_frame_json(slurp(path));
  ConceptLattice lat = [&] {
    if (auto* g = std::get_if<GraphFrame>(&any)) return ConceptLattice::of_graph(*g);
    if (auto* p = std::get_if<PolarityFrame>(&any)) return ConceptLattice::of_polarity(*p);
    return ConceptLattice::of_graph(shift(std::get<KripkeFrame>(any)));
  }();
  if (dot) {
    std::cout << lattice_to_dot(lat);
  } else {
    std::cout << lat.size() << " concepts\n";
    for (const Concept& c : lat.concepts()) std::cout << format_concept(lat, c) << "\n";
  }
  return kExitPass;
}

int cmd_frame_shift(const std::string& path) {
  AnyFrame any = parse_frame_json(slurp(path));
  if (auto* k = std::get_if<KripkeFrame>(&any)) {
    std::cout << frame_to_json(shift(*k)) << "\n";
    return kExitPass;
  }
  if (auto* g = std::get_if<GraphFrame>(&any)) {
    std::cout << frame_to_json(unshift(*g)) << "\n";
    return kExitPass;
  }
  std::cerr << "shift maps kripke frames to graph frames (and back)\n";
  return kExitUsage;
}

int cmd_frame_lift(const std::string& path) {
  AnyFrame any = parse_frame_json(slurp(path));
  auto* g = std::get_if<GraphFrame>(&any);
  if (!g) {
    std::cerr << "lift expects a graph frame\n";
    return kExitUsage;
  }
  if (auto v = validate_frame(*g)) {
    std::cerr << "invalid frame: " << v->message << "\n";
    return kExitUsage;
  }
  std::cout << frame_to_json(lift(*g)) << "\n";
  return kExitPass;
}

nlohmann::json flag_json(const FlagResult& f, const FiniteDomain& dom) {
  nlohmann::json j;
  j["holds"] = f.holds;
  if (f.witness) j["witness"] = {dom.label(f.witness->first), dom.label(f.witness->second)};
  return j;
}

int cmd_frame_classify(const std::string& path) {
  AnyFrame any = parse_frame_json(slurp(path));
  nlohmann::json j;
  if (auto* k = std::get_if<KripkeFrame>(&any)) {
    SpaceClassReport r = classify_space(*k);
    j["kind"] = "kripke";
    j["serial"] = flag_json(r.serial, k->dom);
    j["reflexive"] = flag_json(r.reflexive, k->dom);
    j["symmetric"] = flag_json(r.symmetric, k->dom);
    j["transitive"] = flag_json(r.transitive, k->dom);
    j["euclidean"] = flag_json(r.euclidean, k->dom);
  } else if (auto* g = std::get_if<GraphFrame>(&any)) {
    if (auto v = validate_frame(*g)) {
      std::cerr << "invalid frame: " << v->message << "\n";
      return kExitUsage;
    }
    SpaceClassReport r = classify_space(*g);
    j["kind"] = "graph";
    j["serial"] = flag_json(r.serial, g->dom);
    j["E_reflexive"] = flag_json(r.e_reflexive, g->dom);
    j["E_symmetric"] = flag_json(r.e_symmetric, g->dom);
    j["E_transitive_box"] = flag_json(r.e_transitive_box, g->dom);
    j["E_transitive_dia"] = flag_json(r.e_transitive_dia, g->dom);
    j["E_transitive"] = r.e_transitive();
    j["pawlak"] = r.pawlak();
    if (r.pawlak()) {
      PawlakReport p = pawlak_check(*g);
      nlohmann::json items = nlohmann::json::array();
      for (const PawlakItem& it : p.items) items.push_back({{"name", it.name}, {"holds", it.holds}});
      j["pawlak_conditions"] = items;
    }
  } else {
    std::cerr << "space classification applies to kripke or graph frames\n";
    return kExitUsage;
  }
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int report_exit(const VerificationReport& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.summary() << "\n";
  if (!rep.pass() && !as_json)
    for (const Disagreement& d : rep.disagreements)
      std::cout << "  disagreement on frame " << d.frame_hash << ": " << d.detail << "\n";
  return rep.pass() ? kExitPass : kExitDisagreement;
}

int cmd_axioms(bool diff_only) {
  auto diffs = catalogue_diff();
  if (!diff_only) std::cout << render_catalogue(regenerate_catalogue());
  if (diffs.empty()) {
    std::cout << "golden diff: clean\n";
    return kExitPass;
  }
  for (const std::string& d : diffs) std::cout << "golden diff: " << d << "\n";
  return kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correspondents of Sahlqvist modal reduction principles on Kripke, graph-based and "
               "polarity-based frames"};
  app.require_subcommand(1);

  std::string mrp, semantics = "graph", frame_path, ineq_text, sequent_text;
  bool dot = false, as_json = false, diff_only = false;
  VerifyOptions opt;

  auto* classify = app.add_subcommand("classify", "Classify an mrp");
  classify->add_option("mrp", mrp, "inequality, e.g. \"dia box p <= box p\"")->required();

  auto* alba = app.add_subcommand("alba", "Print the quantified pure inequality of an inductive mrp");
  alba->add_option("mrp", mrp)->required();

  auto* corr = app.add_subcommand("correspond", "Print the relational correspondent(s) of an mrp");
  corr->add_option("mrp", mrp)->required();
  corr->add_option("--semantics", semantics, "kripke|graph|polarity (default graph)");

  auto* frame = app.add_subcommand("frame", "Operate on a frame file");
  frame->require_subcommand(1);
  auto add_frame_opt = [&](CLI::App* sub) {
    sub->add_option("--frame", frame_path, "frame JSON file")->required();
  };
  auto* fcheck = frame->add_subcommand("check", "Evaluate a relational inequality on the frame");
  add_frame_opt(fcheck);
  fcheck->add_option("--ineq", ineq_text, "relational inequality")->required();
  auto* fvalidate = frame->add_subcommand("validate", "Brute-force a sequent over all valuations");
  add_frame_opt(fvalidate);
  fvalidate->add_option("--sequent", sequent_text, "sequent, e.g. \"box p <= p\"")->required();
  auto* flattice = frame->add_subcommand("lattice", "List the concept lattice");
  add_frame_opt(flattice);
  flattice->add_flag("--dot", dot, "emit DOT of the Hasse diagram");
  auto* fshift = frame->add_subcommand("shift", "Embed a Kripke frame as a graph frame (or back)");
  add_frame_opt(fshift);
  auto* flift = frame->add_subcommand("lift", "Lift a graph frame to a polarity frame");
  add_frame_opt(flift);
  auto* fclassify = frame->add_subcommand("classify", "Approximation-space classification report");
  add_frame_opt(fclassify);

  auto* verify = app.add_subcommand("verify", "Instance-check the metatheory on frame populations");
  verify->require_subcommand(1);
  auto add_verify_opts = [&](CLI::App* sub) {
    sub->add_option("--mrp", mrp)->required();
    sub->add_option("--samples", opt.samples, "samples per stratum (default 200)");
    sub->add_option("--seed", opt.seed, "rng seed (default 2024)");
    sub->add_option("--jobs", opt.jobs, "worker threads (default 1)");
    sub->add_option("--size", opt.sampled_sizes, "sampled frame sizes (default 3 4)");
    sub->add_flag("--json", as_json, "emit the full report as JSON");
  };
  auto* vcorr = verify->add_subcommand("correspondence", "frame_valid vs relational inequality");
  add_verify_opts(vcorr);
  vcorr->add_option("--semantics", semantics, "kripke|graph (default graph)");
  auto* vshift = verify->add_subcommand("shifting", "graph correspondent is the shifted Kripke one");
  add_verify_opts(vshift);
  auto* vlift = verify->add_subcommand("lifting", "polarity correspondent is the lifted graph one");
  add_verify_opts(vlift);

  auto* axioms = app.add_subcommand("axioms", "Regenerate the built-in axiom catalogue");
  axioms->add_flag("--diff", diff_only, "print only the diff against the golden copy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(mrp);
    if (alba->parsed()) return cmd_alba(mrp);
    if (corr->parsed()) return cmd_correspond(mrp, semantics);
    if (frame->parsed()) {
      if (fcheck->parsed()) return cmd_frame_check(frame_path, ineq_text);
      if (fvalidate->parsed()) return cmd_frame_validate(frame_path, sequent_text);
      if (flattice->parsed()) return cmd_frame_lattice(frame_path, dot);
      if (fshift->parsed()) return cmd_frame_shift(frame_path);
      if (flift->parsed()) return cmd_frame_lift(frame_path);
      if (fclassify->parsed()) return cmd_frame_classify(frame_path);
    }
    if (verify->parsed()) {
      if (vcorr->parsed()) {
        if (semantics == "both") {
          int a = report_exit(verify_correspondence(mrp, true, opt), as_json);
          int b = report_exit(verify_correspondence(mrp, false, opt), as_json);
          return a != kExitPass ? a : b;
        }
        return report_exit(verify_correspondence(mrp, semantics != "kripke", opt), as_json);
      }
      if (vshift->parsed()) return report_exit(verify_shifting(mrp, opt), as_json);
      if (vlift->parsed()) return report_exit(verify_lifting(mrp, opt), as_json);
    }
    if (axioms->parsed()) return cmd_axioms(diff_only);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const FrameFormatError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
