#include "pipeline.hpp"

#include <chrono>
#include <sstream>

namespace curvepi::pipeline {

using exactpoly::CurveParams;
using exactpoly::Integer;
using groups::FreeProductWord;
using groups::Presentation;

PipelineOptions options_from_json(const std::string& text) {
  PipelineOptions opts;
  if (text.empty()) return opts;
  Json j = Json::parse(text);
  if (j.is_null()) return opts;
  if (!j.is_object()) fail(ErrorCode::InvalidArgument, "options must be a JSON object");
  if (j.contains("catalog")) opts.catalog = groups::catalog_size_from_string(j["catalog"]);
  if (j.contains("tuple_cap")) opts.tuple_cap = j["tuple_cap"];
  if (j.contains("tietze_budget")) opts.tietze_budget = j["tietze_budget"];
  if (j.contains("search_length")) opts.search_length = j["search_length"];
  if (j.contains("ball_radius")) opts.ball_radius = j["ball_radius"];
  if (j.contains("epi_syllable_bound")) opts.epi_syllable_bound = j["epi_syllable_bound"];
  if (j.contains("threads")) opts.threads = j["threads"];
  if (j.contains("strict")) opts.strict = j["strict"];
  if (j.contains("seed")) opts.seed = j["seed"];
  if (j.contains("timings")) opts.timings = j["timings"];
  return opts;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BudgetExceeded: return 3;
    case ErrorCode::Internal: return 4;
    default: return 2;
  }
}

namespace {

Json json_int(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v.convert_to<long long>());
  return v.str();
}

Json options_to_json(const PipelineOptions& o) {
  Json j;
  j["catalog"] = groups::to_string(o.catalog);
  j["tuple_cap"] = o.tuple_cap;
  j["tietze_budget"] = o.tietze_budget;
  j["search_length"] = o.search_length;
  j["ball_radius"] = o.ball_radius;
  j["epi_syllable_bound"] = o.epi_syllable_bound;
  j["strict"] = o.strict;
  j["seed"] = o.seed;
  return j;
}

Json params_to_json(const CurveParams& p) {
  return Json{{"N", p.N}, {"a", p.a}, {"b", p.b}, {"m", p.m}, {"d", p.d}};
}

} // namespace

Json branch_to_json(const resolve::BranchResolution& br) {
  Json j;
  j["tangent_direction"] = br.tangent_direction;
  j["mult_sequence"] = br.mult_sequence;
  j["proximity"] = br.proximity;
  j["char_exponents"] = br.char_exponents;
  j["semigroup"] = br.semigroup;
  j["delta"] = br.delta;
  j["exceptional_contacts"] = br.exceptional_contacts;
  Json stages = Json::array();
  for (const resolve::StageInfo& s : br.stages) {
    Json st;
    st["multiplicity"] = s.multiplicity;
    if (s.quasi.conclusive)
      st["quasi_type"] = Json::array({s.quasi.p, s.quasi.q});
    else
      st["quasi_type"] = s.quasi.reason;
    st["contact_E"] = s.contact_E;
    st["contact_new_exceptional"] = s.contact_new_exceptional;
    stages.push_back(st);
  }
  j["stages"] = stages;
  return j;
}

Json audit_to_json(const resolve::FamilyAudit& audit) {
  Json j;
  j["an_side"] = audit.an_side;
  Json claims = Json::array();
  for (const resolve::ClaimCheck& c : audit.claims) {
    Json cj;
    cj["id"] = c.id;
    cj["description"] = c.description;
    cj["claimed"] = c.claimed;
    cj["measured"] = c.measured;
    cj["verdict"] = c.match ? "match" : "mismatch";
    if (c.documented_discrepancy) cj["documented_discrepancy"] = true;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["structural_match"] = audit.structural_match;
  j["branch_l0"] = branch_to_json(audit.branch_l0);
  j["branch_linf"] = branch_to_json(audit.branch_linf);
  return j;
}

Json genus_to_json(const resolve::GenusCheck& g) {
  return Json{{"delta_total", g.delta_total},
              {"arithmetic_genus_bound", g.arithmetic_genus_bound},
              {"equality", g.equality}};
}

Json replay_to_json(const surface::NagataReplay& replay, bool include_trace) {
  Json j;
  j["blowups"] = replay.blowups;
  j["blowdowns"] = replay.blowdowns;
  j["balanced"] = static_cast<int>(replay.final.divisors.size()) ==
                  3 + replay.blowups - replay.blowdowns;
  Json fin;
  fin["E2"] = replay.final.self("E");
  fin["C2"] = replay.final.self("C");
  fin["CE"] = replay.final.intersection("C", "E");
  Json fibers;
  for (const auto& [name, div] : replay.final.divisors) {
    if (div.role != "fiber") continue;
    fibers[name] = Json{{"self", div.self_intersection},
                        {"C", replay.final.intersection("C", name)},
                        {"E", replay.final.intersection("E", name)}};
  }
  fin["fibers"] = fibers;
  j["final"] = fin;
  if (include_trace) {
    Json tr = Json::array();
    for (const surface::ReplayStep& s : replay.trace) {
      Json st;
      st["kind"] = s.kind;
      st["center"] = s.center;
      st["self_intersections"] = s.self_after;
      tr.push_back(st);
    }
    j["trace"] = tr;
  }
  return j;
}

Json fingerprint_to_json(const groups::HomFingerprint& fp) {
  Json j = Json::array();
  for (const auto& [id, count] : fp.counts) j.push_back(Json{{"target", id}, {"count", count}});
  return j;
}

Json orbifold_to_json(const groups::OrbifoldSpec& spec, const PipelineOptions& opts) {
  Json j;
  j["genus"] = 0;
  j["punctures"] = spec.punctures;
  j["cone_multiplicities"] = spec.cone_multiplicities;
  Presentation pres = groups::orbifold_pi1(spec);
  j["presentation"] = to_string(pres);
  groups::SimplifyResult simp = groups::tietze_simplify(pres, opts.tietze_budget);
  j["simplified"] = to_string(simp.presentation);
  Json ab = Json::array();
  for (const Integer& v : groups::abelianization(pres)) ab.push_back(json_int(v));
  j["abelianization"] = ab;
  groups::HomCountOptions hc{opts.tuple_cap, opts.threads};
  j["fingerprint"] = fingerprint_to_json(
      groups::fingerprint(simp.presentation, groups::catalog(opts.catalog), hc));
  return j;
}

Json pencil_to_json(const groups::TorusPencilOrbifold& t, const PipelineOptions& opts) {
  Json j;
  j["p"] = t.p;
  j["q"] = t.q;
  Json cert;
  cert["pencil"] = "[" + t.fiber_over_zero + " : " + t.fiber_over_infinity + "]";
  cert["pencil_degree"] = t.pencil_degree;
  cert["fiber_over_[0:1]"] =
      Json{{"member", t.fiber_over_zero}, {"multiple", t.multiplicity_over_zero}};
  cert["fiber_over_[1:0]"] =
      Json{{"member", t.fiber_over_infinity}, {"multiple", t.multiplicity_over_infinity}};
  cert["puncture"] = t.puncture;
  j["multiple_fiber_certificate"] = cert;
  j["orbifold"] = orbifold_to_json(t.spec, opts);
  return j;
}

Json group_fingerprint_report(const std::string& presentation_text, const PipelineOptions& opts) {
  Presentation pres = groups::parse_presentation(presentation_text);
  Json j;
  j["presentation"] = to_string(pres);
  Json ab = Json::array();
  for (const Integer& v : groups::abelianization(pres)) ab.push_back(json_int(v));
  j["abelianization"] = ab;
  j["catalog"] = groups::to_string(opts.catalog);
  groups::HomCountOptions hc{opts.tuple_cap, opts.threads};
  j["fingerprint"] =
      fingerprint_to_json(groups::fingerprint(pres, groups::catalog(opts.catalog), hc));
  return j;
}

namespace {

struct EpiResult {
  bool found = false;
  std::vector<FreeProductWord> images;
  int syllable_bound = 0;
  int surjectivity_depth = 0;
};

// Deterministic search for an epimorphism onto Z/p * Z/q with short images.
EpiResult find_epimorphism(const Presentation& pres, int p, int q, int syllable_bound,
                           int search_length) {
  std::vector<FreeProductWord> words = groups::fp_enumerate(p, q, syllable_bound);
  int gens = pres.rank();
  EpiResult res;
  std::vector<size_t> idx(gens, 0);
  std::vector<FreeProductWord> images(gens, groups::fp_identity(p, q));
  for (;;) {
    for (int i = 0; i < gens; ++i) images[i] = words[idx[i]];
    if (groups::eval_hom(pres, images).is_hom) {
      int depth = 0;
      if (groups::fp_generates_within(p, q, images, search_length, &depth)) {
        res.found = true;
        res.images = images;
        res.surjectivity_depth = depth;
        for (const FreeProductWord& w : images)
          res.syllable_bound = std::max(res.syllable_bound, w.syllable_length());
        return res;
      }
    }
    int k = gens - 1;
    while (k >= 0 && ++idx[k] == words.size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return res;
}

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

} // namespace

PipelineOutcome run_pipeline(const CurveParams& params, const PipelineOptions& opts) {
  PipelineOutcome out;
  Json& j = out.report;
  Json timings;
  Clock::time_point t0 = Clock::now();

  j["tool"] = "curvepi";
  j["command"] = "analyze";
  j["params"] = params_to_json(params);
  j["options"] = options_to_json(opts);

  const int N = params.N, d = params.d;

  exactpoly::SparsePolynomial curve = exactpoly::build_curve(params);
  Json cj;
  cj["degree"] = d * N;
  cj["generic_fiber_points"] = d * N - (N - 1) * d;
  cj["terms"] = curve.term_count();
  cj["polynomial"] = to_string(curve);
  j["curve"] = cj;
  if (opts.timings) timings["curve"] = ms_since(t0);

  // Stage failures are embedded and abort the dependent stages.
  auto record_error = [&](const char* stage, const Error& e) {
    j["error"] = Json{{"stage", stage}, {"message", e.what()}};
    j["verdict"] = "error";
    out.exit_code = exit_code_for(e);
  };

  resolve::FamilyAudit audit;
  try {
    Clock::time_point t = Clock::now();
    audit = resolve::audit_family(params);
    j["audit"] = audit_to_json(audit);
    j["genus_check"] = genus_to_json(resolve::genus_check(params));
    if (opts.timings) timings["resolve"] = ms_since(t);
  } catch (const Error& e) {
    record_error("resolve", e);
    return out;
  }

  try {
    Clock::time_point t = Clock::now();
    surface::NagataReplay replay =
        surface::replay_nagata(params, audit.branch_l0, audit.branch_linf);
    j["surface"] = replay_to_json(replay, /*include_trace=*/false);
    if (opts.timings) timings["surface"] = ms_since(t);
  } catch (const Error& e) {
    record_error("surface", e);
    return out;
  }

  braid::MonodromyBraids mb = braid::monodromy_braids(params);
  j["braids"] = Json{{"strands", d},
                     {"beta", to_string(mb.beta)},
                     {"beta0", to_string(mb.beta0)},
                     {"beta_inf", to_string(mb.beta_inf)}};

  Presentation raw, simplified;
  bool tietze_exhausted = false;
  try {
    Clock::time_point t = Clock::now();
    raw = groups::zvk_presentation({mb.beta0, mb.beta_inf}, d, N);
    groups::SimplifyResult simp = groups::tietze_simplify(raw, opts.tietze_budget);
    simplified = simp.presentation;
    tietze_exhausted = simp.budget_exhausted;
    Json pj;
    pj["raw"] = to_string(raw);
    pj["raw_relators"] = static_cast<int>(raw.relators.size());
    pj["simplified"] = to_string(simplified);
    pj["simplified_relators"] = static_cast<int>(simplified.relators.size());
    pj["tietze_budget_exhausted"] = tietze_exhausted;
    j["presentation"] = pj;
    if (opts.timings) timings["presentation"] = ms_since(t);
  } catch (const Error& e) {
    record_error("presentation", e);
    return out;
  }

  bool ab_match = false, fp_match = false;
  EpiResult epi;
  try {
    Clock::time_point t = Clock::now();
    std::vector<Integer> ab_raw = groups::abelianization(raw);
    std::vector<Integer> ab_simpl = groups::abelianization(simplified);
    if (ab_raw != ab_simpl)
      fail(ErrorCode::Internal, "abelianization changed under Tietze simplification");
    Presentation target = groups::parse_presentation("< A B | A^" + std::to_string(d) + ", B^" +
                                                     std::to_string(N) + " >");
    std::vector<Integer> ab_target = groups::abelianization(target);
    ab_match = ab_raw == ab_target;
    Json ab = Json::array();
    for (const Integer& v : ab_simpl) ab.push_back(json_int(v));
    j["abelianization"] = ab;
    Json abt = Json::array();
    for (const Integer& v : ab_target) abt.push_back(json_int(v));
    j["abelianization_free_product"] = abt;
    if (opts.timings) timings["abelianization"] = ms_since(t);

    t = Clock::now();
    std::vector<groups::FiniteGroup> targets = groups::catalog(opts.catalog);
    groups::HomCountOptions hc{opts.tuple_cap, opts.threads};
    groups::HomFingerprint fp_pres = groups::fingerprint(simplified, targets, hc);
    groups::HomFingerprint fp_free = groups::free_product_fingerprint(d, N, targets);
    fp_match = fp_pres == fp_free;
    Json fj;
    fj["catalog"] = groups::to_string(opts.catalog);
    fj["presentation"] = fingerprint_to_json(fp_pres);
    fj["free_product"] = fingerprint_to_json(fp_free);
    fj["match"] = fp_match;
    j["fingerprints"] = fj;
    if (opts.timings) timings["fingerprints"] = ms_since(t);

    t = Clock::now();
    epi = find_epimorphism(simplified, d, N, opts.epi_syllable_bound, opts.search_length);
    Json ej;
    ej["found"] = epi.found;
    if (epi.found) {
      Json imgs = Json::array();
      for (const FreeProductWord& w : epi.images) imgs.push_back(to_string(w));
      ej["images"] = imgs;
      ej["max_syllables"] = epi.syllable_bound;
      ej["surjectivity_depth"] = epi.surjectivity_depth;
    }
    j["epimorphism"] = ej;
    if (opts.timings) timings["epimorphism"] = ms_since(t);
  } catch (const Error& e) {
    record_error("groups", e);
    return out;
  }

  bool certified = ab_match && fp_match && epi.found;
  j["verdict"] = certified ? "certified-match" : "mismatch";
  j["verdict_evidence"] =
      Json{{"abelianization_match", ab_match},
           {"fingerprint_match", fp_match},
           {"epimorphism_found", epi.found},
           {"free_product", "Z/" + std::to_string(d) + " * Z/" + std::to_string(N)}};
  if (opts.timings) {
    timings["total"] = ms_since(t0);
    j["timings_ms"] = timings;
  }

  if (!certified)
    out.exit_code = 1;
  else if (opts.strict && !audit.structural_match)
    out.exit_code = 1;
  else
    out.exit_code = 0;
  return out;
}

PipelineOutcome run_resolve(const CurveParams& params, const PipelineOptions& opts) {
  PipelineOutcome out;
  out.report["tool"] = "curvepi";
  out.report["command"] = "resolve";
  out.report["params"] = params_to_json(params);
  resolve::FamilyAudit audit = resolve::audit_family(params);
  out.report["audit"] = audit_to_json(audit);
  out.report["genus_check"] = genus_to_json(resolve::genus_check(params));
  out.exit_code = (!opts.strict || audit.structural_match) ? 0 : 1;
  return out;
}

PipelineOutcome run_surface(const CurveParams& params, const PipelineOptions& opts) {
  PipelineOutcome out;
  out.report["tool"] = "curvepi";
  out.report["command"] = "surface";
  out.report["params"] = params_to_json(params);
  resolve::FamilyAudit audit = resolve::audit_family(params);
  surface::NagataReplay replay = surface::replay_nagata(params, audit.branch_l0, audit.branch_linf);
  out.report["surface"] = replay_to_json(replay, /*include_trace=*/true);
  out.exit_code = 0;
  (void)opts;
  return out;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  if (j.contains("params")) {
    const Json& p = j["params"];
    os << "curve F_{N,a,b}: N=" << p["N"] << " a=" << p["a"] << " b=" << p["b"]
       << "  (m=" << p["m"] << ", d=" << p["d"] << ")\n";
  }
  if (j.contains("curve"))
    os << "degree " << j["curve"]["degree"] << ", generic fiber meets "
       << j["curve"]["generic_fiber_points"] << " points, " << j["curve"]["terms"] << " terms\n";
  if (j.contains("audit")) {
    os << "family audit (aN side: " << j["audit"]["an_side"].get<std::string>() << "):\n";
    for (const Json& c : j["audit"]["claims"]) {
      os << "  [" << (c["verdict"] == "match" ? "ok" : "MISMATCH") << "] (" << c["id"].get<std::string>()
         << ") " << c["description"].get<std::string>() << ": claimed " << c["claimed"].get<std::string>()
         << ", measured " << c["measured"].get<std::string>();
      if (c.contains("documented_discrepancy")) os << " (known notation clash, reported)";
      os << "\n";
    }
  }
  if (j.contains("genus_check"))
    os << "genus check: delta_total " << j["genus_check"]["delta_total"] << " vs bound "
       << j["genus_check"]["arithmetic_genus_bound"]
       << (j["genus_check"]["equality"].get<bool>() ? " (rational curve)" : "") << "\n";
  if (j.contains("surface")) {
    const Json& s = j["surface"]["final"];
    os << "surface replay: E^2=" << s["E2"] << " C^2=" << s["C2"] << " C.E=" << s["CE"]
       << ", blowups " << j["surface"]["blowups"] << ", blowdowns " << j["surface"]["blowdowns"]
       << (j["surface"]["balanced"].get<bool>() ? ", balanced" : ", UNBALANCED") << "\n";
  }
  if (j.contains("braids"))
    os << "monodromy: beta0 = " << j["braids"]["beta0"].get<std::string>()
       << "; beta_inf = " << j["braids"]["beta_inf"].get<std::string>() << "\n";
  if (j.contains("presentation"))
    os << "presentation: raw " << j["presentation"]["raw_relators"] << " relators -> simplified "
       << j["presentation"]["simplified"].get<std::string>() << "\n";
  if (j.contains("abelianization")) os << "abelianization: " << j["abelianization"].dump() << "\n";
  if (j.contains("fingerprints"))
    os << "fingerprints over catalog '" << j["fingerprints"]["catalog"].get<std::string>()
       << "': " << (j["fingerprints"]["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
  if (j.contains("epimorphism") && j["epimorphism"]["found"].get<bool>()) {
    os << "epimorphism: ";
    for (const Json& w : j["epimorphism"]["images"]) os << "[" << w.get<std::string>() << "] ";
    os << "\n";
  }
  if (j.contains("presentation_text")) os << j["presentation_text"].get<std::string>() << "\n";
  if (j.contains("fingerprint")) os << "fingerprint: " << j["fingerprint"].dump() << "\n";
  if (j.contains("orbifold"))
    os << "orbifold pi1: " << j["orbifold"]["presentation"].get<std::string>() << " -> "
       << j["orbifold"]["simplified"].get<std::string>() << "\n";
  if (j.contains("multiple_fiber_certificate"))
    os << "pencil " << j["multiple_fiber_certificate"]["pencil"].get<std::string>()
       << ": multiple fibers certified by exponent\n";
  if (j.contains("error"))
    os << "error at stage " << j["error"]["stage"].get<std::string>() << ": "
       << j["error"]["message"].get<std::string>() << "\n";
  if (j.contains("verdict")) os << "verdict: " << j["verdict"].get<std::string>() << "\n";
  return os.str();
}

} // namespace curvepi::pipeline
