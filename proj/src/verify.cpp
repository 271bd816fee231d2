#include "mrpcorr/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mrpcorr/frame_io.hpp"
#include "mrpcorr/relterm.hpp"

namespace mrpcorr {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::size_t workers = std::min(jobs, count);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

void finish(VerificationReport& rep, Clock::time_point start) {
  std::sort(rep.disagreements.begin(), rep.disagreements.end(),
            [](const Disagreement& a, const Disagreement& b) { return a.frame_hash < b.frame_hash; });
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

std::string counter_detail(const GraphFrame& f, const GraphValidity& v) {
  if (!v.countervaluation) return "";
  GraphModel m{f, *v.countervaluation};
  return model_to_json(m);
}

std::string counter_detail(const KripkeFrame& f, const KripkeValidity& v) {
  if (!v.countervaluation) return "";
  KripkeModel m{f, *v.countervaluation};
  return model_to_json(m);
}

std::string pair_text(const FiniteDomain& dom, const IneqCheck& c) {
  if (!c.counterpair) return "";
  return format_pair(dom, dom, *c.counterpair);
}

MrpClassification classify_text(const std::string& mrp_text) {
  Inequality mrp = parse_inequality(mrp_text);
  MrpClassification c = classify_mrp(mrp.lhs, mrp.rhs);
  if (!c.sahlqvist()) throw std::invalid_argument("mrp is not inductive: " + mrp_text);
  return c;
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["mrp"] = mrp;
  j["mode"] = mode;
  j["seed"] = seed;
  j["checks"] = checks;
  j["agreements"] = checks - disagreements.size();
  j["wall_seconds"] = wall_seconds;
  j["pass"] = pass();
  nlohmann::json strata_json = nlohmann::json::object();
  for (const auto& [k, v] : strata) strata_json[k] = v;
  j["frames_tested"] = strata_json;
  j["sampler"] = {{"relations_tried", sampler.relations_tried},
                  {"relations_accepted", sampler.relations_accepted}};
  nlohmann::json dis = nlohmann::json::array();
  for (const Disagreement& d : disagreements) {
    nlohmann::json w;
    w["frame_hash"] = d.frame_hash;
    w["frame"] = nlohmann::json::parse(d.frame_json, nullptr, false);
    w["detail"] = d.detail;
    dis.push_back(w);
  }
  j["disagreements"] = dis;
  return j.dump(2);
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << mode << " '" << mrp << "': " << checks << " checks, "
     << (checks - disagreements.size()) << " agreements, " << disagreements.size()
     << " disagreements";
  std::size_t total = 0;
  for (const auto& [k, v] : strata) total += v;
  os << " over " << total << " frames (seed " << seed << ", " << wall_seconds << "s)";
  return os.str();
}

namespace {

template <class Frame>
void run_correspondence(VerificationReport& rep, const Inequality& mrp,
                        const std::vector<Correspondent>& rows, const std::vector<Frame>& frames,
                        std::size_t jobs, std::mutex& mu) {
  std::atomic<std::uint64_t> checks{0};
  std::vector<std::vector<Disagreement>> found(frames.size());
  parallel_for(frames.size(), jobs, [&](std::size_t i) {
    const Frame& f = frames[i];
    auto validity = frame_valid(f, mrp);
    for (const Correspondent& row : rows) {
      IneqCheck c = ineq_holds(row.ineq, f);
      ++checks;
      if (c.holds != validity.valid) {
        std::ostringstream detail;
        detail << "row (" << row.type << ") " << print_rel_inequality(row.ineq) << ": frame_valid="
               << (validity.valid ? "true" : "false") << " ineq_holds=" << (c.holds ? "true" : "false");
        if (!validity.valid) detail << "; countermodel=" << counter_detail(f, validity);
        if (!c.holds) detail << "; counterpair=" << pair_text(f.dom, c);
        found[i].push_back({f.hash(), frame_to_json(f), detail.str()});
      }
    }
  });
  rep.checks += checks.load();
  std::lock_guard<std::mutex> lock(mu);
  for (auto& v : found)
    for (auto& d : v) rep.disagreements.push_back(std::move(d));
}

}  // namespace

VerificationReport verify_correspondence(const std::string& mrp_text, bool graph_side,
                                         const VerifyOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.mrp = mrp_text;
  rep.mode = graph_side ? "correspondence/graph" : "correspondence/kripke";
  rep.seed = opt.seed;
  MrpClassification c = classify_text(mrp_text);
  Inequality mrp = parse_inequality(mrp_text);
  std::mutex mu;

  if (graph_side) {
    auto rows = correspondent(c, RelLang::GRel);
    auto raw = correspondent(c, RelLang::GRel, /*normalized=*/false);
    rows.insert(rows.end(), raw.begin(), raw.end());
    for (std::size_t n = 1; n <= opt.graph_exhaustive_max; ++n) {
      auto frames = all_graph_frames(n, opt.graph_exhaustive_max);
      rep.strata.emplace_back("graph/exhaustive/n=" + std::to_string(n), frames.size());
      run_correspondence(rep, mrp, rows, frames, opt.jobs, mu);
    }
    FrameSampler sampler(opt.seed);
    for (std::size_t n : opt.sampled_sizes) {
      std::vector<GraphFrame> frames;
      frames.reserve(opt.samples);
      for (std::size_t i = 0; i < opt.samples; ++i) frames.push_back(sampler.graph_frame(n));
      rep.strata.emplace_back("graph/sampled/n=" + std::to_string(n), frames.size());
      run_correspondence(rep, mrp, rows, frames, opt.jobs, mu);
    }
    rep.sampler = sampler.stats();
  } else {
    auto rows = correspondent(c, RelLang::KRel);
    auto raw = correspondent(c, RelLang::KRel, /*normalized=*/false);
    rows.insert(rows.end(), raw.begin(), raw.end());
    for (std::size_t n = 1; n <= opt.kripke_exhaustive_max; ++n) {
      auto frames = all_kripke_frames(n, opt.kripke_exhaustive_max);
      rep.strata.emplace_back("kripke/exhaustive/n=" + std::to_string(n), frames.size());
      run_correspondence(rep, mrp, rows, frames, opt.jobs, mu);
    }
  }
  finish(rep, start);
  return rep;
}

VerificationReport verify_shifting(const std::string& mrp_text, const VerifyOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.mrp = mrp_text;
  rep.mode = "shifting";
  rep.seed = opt.seed;
  MrpClassification c = classify_text(mrp_text);
  auto grel = correspondent(c, RelLang::GRel);
  auto krel = correspondent(c, RelLang::KRel);

  // Syntactic half: the translated graph row is literally the Kripke row.
  for (std::size_t i = 0; i < grel.size(); ++i) {
    ++rep.checks;
    RelInequality translated = normalize(translate_tau(grel[i].ineq));
    if (!(translated == krel[i].ineq)) {
      rep.disagreements.push_back(
          {0, "{}",
           std::string("translated row (") + grel[i].type + ") " + print_rel_inequality(translated) +
               " differs from " + print_rel_inequality(krel[i].ineq)});
    }
  }
  rep.strata.emplace_back("syntactic rows", grel.size());

  // Semantic half: evaluation commutes with the embedding of Kripke frames.
  FrameSampler sampler(opt.seed);
  std::vector<KripkeFrame> frames;
  std::size_t max_n = opt.sampled_sizes.empty() ? 4 : opt.sampled_sizes.back();
  for (std::size_t i = 0; i < opt.samples; ++i) {
    std::size_t n = 1 + std::size_t(sampler.next() % max_n);
    frames.push_back(sampler.kripke_frame(n));
  }
  rep.strata.emplace_back("kripke/sampled/n<=" + std::to_string(max_n), frames.size());

  std::mutex mu;
  std::atomic<std::uint64_t> checks{0};
  std::vector<std::vector<Disagreement>> found(frames.size());
  parallel_for(frames.size(), opt.jobs, [&](std::size_t i) {
    const KripkeFrame& x = frames[i];
    GraphFrame fx = shift(x);
    for (std::size_t r = 0; r < grel.size(); ++r) {
      for (auto side : {&RelInequality::lhs, &RelInequality::rhs}) {
        ++checks;
        FiniteRelation on_graph = eval_term(grel[r].ineq.*side, fx);
        FiniteRelation on_kripke = eval_term(krel[r].ineq.*side, x);
        if (!(on_graph == on_kripke))
          found[i].push_back({x.hash(), frame_to_json(x),
                              std::string("term evaluation differs for row (") + grel[r].type +
                                  ") side " + print_rel_term(grel[r].ineq.*side)});
      }
      ++checks;
      bool kh = ineq_holds(krel[r].ineq, x).holds;
      bool gh = ineq_holds(grel[r].ineq, fx).holds;
      if (kh != gh)
        found[i].push_back({x.hash(), frame_to_json(x),
                            std::string("inequality row (") + grel[r].type +
                                ") disagrees across the embedding"});
    }
  });
  rep.checks += checks.load();
  {
    std::lock_guard<std::mutex> lock(mu);
    for (auto& v : found)
      for (auto& d : v) rep.disagreements.push_back(std::move(d));
  }
  finish(rep, start);
  return rep;
}

VerificationReport verify_lifting(const std::string& mrp_text, const VerifyOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.mrp = mrp_text;
  rep.mode = "lifting";
  rep.seed = opt.seed;
  MrpClassification c = classify_text(mrp_text);
  auto grel = correspondent(c, RelLang::GRel);
  auto prel = correspondent(c, RelLang::PRel);

  FrameSampler sampler(opt.seed);
  std::vector<GraphFrame> frames;
  std::size_t max_n = 3;
  for (std::size_t n : opt.sampled_sizes)
    if (n <= 3) max_n = n;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    std::size_t n = 1 + std::size_t(sampler.next() % max_n);
    frames.push_back(sampler.graph_frame(n));
  }
  rep.strata.emplace_back("graph/sampled/n<=" + std::to_string(max_n), frames.size());
  rep.sampler = sampler.stats();

  std::mutex mu;
  std::atomic<std::uint64_t> checks{0};
  std::vector<std::vector<Disagreement>> found(frames.size());
  parallel_for(frames.size(), opt.jobs, [&](std::size_t i) {
    const GraphFrame& f = frames[i];
    PolarityFrame p = lift(f);
    for (std::size_t r = 0; r < grel.size(); ++r) {
      // The polarity row reverses the inclusion: its left side lifts the
      // graph row's right side and vice versa, by complement.
      FiniteRelation want_lhs = eval_term(grel[r].ineq.rhs, f).complement();
      FiniteRelation want_rhs = eval_term(grel[r].ineq.lhs, f).complement();
      FiniteRelation got_lhs = eval_term(prel[r].ineq.lhs, p);
      FiniteRelation got_rhs = eval_term(prel[r].ineq.rhs, p);
      checks += 2;
      if (!(got_lhs.rows() == want_lhs.rows()))
        found[i].push_back({f.hash(), frame_to_json(f),
                            std::string("lift equality fails for row (") + prel[r].type +
                                ") left side " + print_rel_term(prel[r].ineq.lhs)});
      if (!(got_rhs.rows() == want_rhs.rows()))
        found[i].push_back({f.hash(), frame_to_json(f),
                            std::string("lift equality fails for row (") + prel[r].type +
                                ") right side " + print_rel_term(prel[r].ineq.rhs)});
      ++checks;
      bool gh = ineq_holds(grel[r].ineq, f).holds;
      bool ph = ineq_holds(prel[r].ineq, p).holds;
      if (gh != ph)
        found[i].push_back({f.hash(), frame_to_json(f),
                            std::string("inequality row (") + prel[r].type +
                                ") disagrees across the lifting"});
    }
  });
  rep.checks += checks.load();
  {
    std::lock_guard<std::mutex> lock(mu);
    for (auto& v : found)
      for (auto& d : v) rep.disagreements.push_back(std::move(d));
  }
  finish(rep, start);
  return rep;
}

}  // namespace mrpcorr
