// Command line front end; talks to the library exclusively through the
// C API in curvepi.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvepi.h"

namespace {

struct CommonOpts {
  std::string json_path;
  std::string catalog = "small";
  bool strict = false;
  long long tuple_cap = 1000000000;
  int tietze_budget = 10000;
  int search_length = 6;
  int ball_radius = 6;
  int epi_syllable_bound = 3;
  int threads = 1;
  unsigned seed = 0;
  bool timings = false;

  std::string to_json() const {
    std::ostringstream os;
    os << "{\"catalog\":\"" << catalog << "\",\"strict\":" << (strict ? "true" : "false")
       << ",\"tuple_cap\":" << tuple_cap << ",\"tietze_budget\":" << tietze_budget
       << ",\"search_length\":" << search_length << ",\"ball_radius\":" << ball_radius
       << ",\"epi_syllable_bound\":" << epi_syllable_bound << ",\"threads\":" << threads
       << ",\"seed\":" << seed << ",\"timings\":" << (timings ? "true" : "false") << "}";
    return os.str();
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--json", opts.json_path, "write the JSON report to this path");
  cmd->add_option("--catalog", opts.catalog, "finite-quotient catalog: tiny, small, full")
      ->check(CLI::IsMember({"tiny", "small", "full"}));
  cmd->add_flag("--strict", opts.strict, "exit nonzero on any undocumented mismatch");
  cmd->add_option("--tuple-cap", opts.tuple_cap, "hom-count tuple budget");
  cmd->add_option("--tietze-budget", opts.tietze_budget, "Tietze simplification budget");
  cmd->add_option("--search-length", opts.search_length, "surjectivity search length L");
  cmd->add_option("--ball-radius", opts.ball_radius, "injectivity ball radius R");
  cmd->add_option("--epi-bound", opts.epi_syllable_bound, "syllable bound for epimorphism images");
  cmd->add_option("--threads", opts.threads, "hom-count worker threads");
  cmd->add_option("--seed", opts.seed, "seed for randomized property-test helpers only");
  cmd->add_flag("--timings", opts.timings, "include timings in the report");
}

int finish(cp_report* rep, const CommonOpts& opts) {
  std::unique_ptr<cp_report, decltype(&cp_report_free)> guard(rep, cp_report_free);
  cp_status status = cp_report_status(rep);
  const char* json = cp_report_json(rep);
  if (!json) {
    std::cerr << "error: " << cp_report_error(rep) << "\n";
    return static_cast<int>(status);
  }
  if (!opts.json_path.empty()) {
    std::ofstream out(opts.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << opts.json_path << "\n";
      return 2;
    }
    out << json << "\n";
  }
  std::cout << cp_report_text(rep);
  return static_cast<int>(status);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of plane curve complements via ruled surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cp_version());

  long N = 0, a = 0, b = 0;
  long p = 0, q = 0;
  std::string braid_word, free_word, presentation, cone_csv;
  long strands = 2, punctures = 0;
  CommonOpts opts;

  CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline for F_{N,a,b}");
  analyze->add_option("--N", N, "odd N = 2m+1")->required();
  analyze->add_option("--a", a, "exponent a")->required();
  analyze->add_option("--b", b, "exponent b")->required();
  add_common(analyze, opts);

  CLI::App* resolve = app.add_subcommand("resolve", "singularity resolution and claim audit only");
  resolve->add_option("--N", N)->required();
  resolve->add_option("--a", a)->required();
  resolve->add_option("--b", b)->required();
  add_common(resolve, opts);

  CLI::App* surface = app.add_subcommand("surface", "ruled-surface replay only");
  surface->add_option("--N", N)->required();
  surface->add_option("--a", a)->required();
  surface->add_option("--b", b)->required();
  add_common(surface, opts);

  CLI::App* braid = app.add_subcommand("braid", "braid utilities");
  CLI::App* braid_act = braid->add_subcommand("act", "apply a braid word to a free word");
  braid_act->add_option("--strands", strands, "number of strands d")->required();
  braid_act->add_option("--word", braid_word, "braid word, e.g. \"s1 s2^-1\"")->required();
  braid_act->add_option("--on", free_word, "free word, e.g. \"m1 m2\"")->required();

  CLI::App* group = app.add_subcommand("group", "presentation utilities");
  CLI::App* group_fp = group->add_subcommand("fingerprint", "abelianization and hom counts");
  group_fp->add_option("--presentation", presentation, "e.g. \"< a b | a^2, b^3 >\"")->required();
  add_common(group_fp, opts);

  CLI::App* orbifold = app.add_subcommand("orbifold", "orbifold fundamental groups");
  orbifold->add_option("--p", p, "torus pencil exponent p");
  orbifold->add_option("--q", q, "torus pencil exponent q");
  orbifold->add_option("--cone", cone_csv, "cone multiplicities, e.g. 2,3");
  orbifold->add_option("--punctures", punctures, "puncture count");
  add_common(orbifold, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return finish(cp_analyze(N, a, b, opts.to_json().c_str()), opts);
    if (resolve->parsed()) return finish(cp_resolve(N, a, b, opts.to_json().c_str()), opts);
    if (surface->parsed()) return finish(cp_surface(N, a, b, opts.to_json().c_str()), opts);
    if (braid->parsed()) {
      cp_status status = CP_OK;
      char* out = cp_braid_act(strands, braid_word.c_str(), free_word.c_str(), &status);
      if (!out) {
        std::cerr << "error: invalid braid/word input\n";
        return static_cast<int>(status);
      }
      std::cout << out << "\n";
      cp_string_free(out);
      return 0;
    }
    if (group->parsed())
      return finish(cp_group_fingerprint(presentation.c_str(), opts.to_json().c_str()), opts);
    if (orbifold->parsed()) {
      if (p != 0 || q != 0)
        return finish(cp_orbifold_pencil(p, q, opts.to_json().c_str()), opts);
      std::vector<long> cones;
      std::stringstream ss(cone_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) cones.push_back(std::stol(item));
      return finish(cp_orbifold(cones.data(), cones.size(), punctures, opts.to_json().c_str()),
                    opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
