#include "curvepi.h"

#include <cstring>
#include <string>

#include "pipeline.hpp"

using namespace curvepi;

struct cp_report {
  cp_status status = CP_OK;
  std::string json;
  std::string error;
  std::string text; // cached render, reserved for future C surface
};

namespace {

cp_status status_from(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BudgetExceeded: return CP_BUDGET_EXHAUSTED;
    case ErrorCode::Internal: return CP_INTERNAL_ERROR;
    default: return CP_INVALID_INPUT;
  }
}

template <typename Fn>
cp_report* guarded(Fn&& fn) {
  auto* rep = new cp_report;
  try {
    fn(*rep);
  } catch (const Error& e) {
    rep->status = status_from(e);
    rep->error = e.what();
  } catch (const std::exception& e) {
    rep->status = CP_INVALID_INPUT;
    rep->error = e.what();
  }
  return rep;
}

cp_status exit_code_to_status(int code) {
  switch (code) {
    case 0: return CP_OK;
    case 1: return CP_MISMATCH;
    case 2: return CP_INVALID_INPUT;
    case 3: return CP_BUDGET_EXHAUSTED;
    default: return CP_INTERNAL_ERROR;
  }
}

} // namespace

extern "C" {

cp_report* cp_analyze(long N, long a, long b, const char* options_json) {
  return guarded([&](cp_report& rep) {
    pipeline::PipelineOptions opts = pipeline::options_from_json(options_json ? options_json : "");
    exactpoly::CurveParams params(static_cast<int>(N), static_cast<int>(a), static_cast<int>(b));
    pipeline::PipelineOutcome out = pipeline::run_pipeline(params, opts);
    rep.status = exit_code_to_status(out.exit_code);
    rep.json = out.report.dump(2);
    if (out.report.contains("error")) rep.error = out.report["error"]["message"];
  });
}

cp_report* cp_resolve(long N, long a, long b, const char* options_json) {
  return guarded([&](cp_report& rep) {
    pipeline::PipelineOptions opts = pipeline::options_from_json(options_json ? options_json : "");
    exactpoly::CurveParams params(static_cast<int>(N), static_cast<int>(a), static_cast<int>(b));
    pipeline::PipelineOutcome out = pipeline::run_resolve(params, opts);
    rep.status = exit_code_to_status(out.exit_code);
    rep.json = out.report.dump(2);
  });
}

cp_report* cp_surface(long N, long a, long b, const char* options_json) {
  return guarded([&](cp_report& rep) {
    pipeline::PipelineOptions opts = pipeline::options_from_json(options_json ? options_json : "");
    exactpoly::CurveParams params(static_cast<int>(N), static_cast<int>(a), static_cast<int>(b));
    pipeline::PipelineOutcome out = pipeline::run_surface(params, opts);
    rep.status = exit_code_to_status(out.exit_code);
    rep.json = out.report.dump(2);
  });
}

cp_report* cp_orbifold(const long* cone_multiplicities, size_t cone_count, long punctures,
                       const char* options_json) {
  return guarded([&](cp_report& rep) {
    pipeline::PipelineOptions opts = pipeline::options_from_json(options_json ? options_json : "");
    groups::OrbifoldSpec spec;
    spec.punctures = static_cast<int>(punctures);
    for (size_t i = 0; i < cone_count; ++i)
      spec.cone_multiplicities.push_back(static_cast<int>(cone_multiplicities[i]));
    pipeline::Json j;
    j["tool"] = "curvepi";
    j["command"] = "orbifold";
    j["orbifold"] = pipeline::orbifold_to_json(spec, opts);
    rep.json = j.dump(2);
  });
}

cp_report* cp_orbifold_pencil(long p, long q, const char* options_json) {
  return guarded([&](cp_report& rep) {
    pipeline::PipelineOptions opts = pipeline::options_from_json(options_json ? options_json : "");
    groups::TorusPencilOrbifold t =
        groups::torus_pencil_orbifold(static_cast<int>(p), static_cast<int>(q));
    pipeline::Json j;
    j["tool"] = "curvepi";
    j["command"] = "orbifold";
    j.update(pipeline::pencil_to_json(t, opts));
    rep.json = j.dump(2);
  });
}

cp_report* cp_group_fingerprint(const char* presentation, const char* options_json) {
  return guarded([&](cp_report& rep) {
    if (!presentation) fail(ErrorCode::InvalidArgument, "null presentation");
    pipeline::PipelineOptions opts = pipeline::options_from_json(options_json ? options_json : "");
    pipeline::Json j;
    j["tool"] = "curvepi";
    j["command"] = "group fingerprint";
    j.update(pipeline::group_fingerprint_report(presentation, opts));
    rep.json = j.dump(2);
  });
}

cp_status cp_report_status(const cp_report* report) {
  return report ? report->status : CP_INTERNAL_ERROR;
}

const char* cp_report_json(const cp_report* report) {
  if (!report || report->json.empty()) return nullptr;
  return report->json.c_str();
}

const char* cp_report_text(cp_report* report) {
  if (!report) return nullptr;
  if (report->text.empty()) {
    if (report->json.empty()) {
      report->text = report->error.empty() ? "no report\n" : ("error: " + report->error + "\n");
    } else {
      report->text = pipeline::render_text(pipeline::Json::parse(report->json));
    }
  }
  return report->text.c_str();
}

const char* cp_report_error(const cp_report* report) {
  return report ? report->error.c_str() : "null report";
}

void cp_report_free(cp_report* report) { delete report; }

char* cp_braid_act(long strands, const char* braid_word, const char* free_word, cp_status* status) {
  try {
    if (!braid_word || !free_word) fail(ErrorCode::InvalidArgument, "null word");
    braid::BraidWord w = braid::parse_braid_word(braid_word, static_cast<int>(strands));
    braid::FreeWord x = braid::parse_free_word(free_word, static_cast<int>(strands));
    std::string out = to_string(braid::hurwitz_act(w, x));
    char* s = static_cast<char*>(std::malloc(out.size() + 1));
    if (!s) {
      if (status) *status = CP_INTERNAL_ERROR;
      return nullptr;
    }
    std::memcpy(s, out.c_str(), out.size() + 1);
    if (status) *status = CP_OK;
    return s;
  } catch (const Error& e) {
    if (status) *status = status_from(e);
    return nullptr;
  } catch (const std::exception&) {
    if (status) *status = CP_INVALID_INPUT;
    return nullptr;
  }
}

void cp_string_free(char* s) { std::free(s); }

const char* cp_version(void) { return "0.1.0"; }

} // extern "C"
