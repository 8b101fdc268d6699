#include "chaingeo/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "chaingeo/error.hpp"

namespace chaingeo {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

void TrialResult::expect(bool cond, const std::string& what, Json data) {
  if (cond || !pass) return;
  pass = false;
  detail = {{"failed", what}};
  if (!data.is_null()) detail["data"] = std::move(data);
}

void TrialResult::count(const std::string& key, long by) {
  stats[key] = stats.value(key, 0L) + by;
}

const CheckDef& find_check(const std::string& id) {
  for (const CheckDef& d : registry())
    if (d.id == id) return d;
  fail(ErrorKind::UnknownCheck, "unknown check '" + id + "'");
}

std::vector<std::string> parse_suite(const std::string& suite) {
  std::vector<std::string> ids;
  if (suite == "all") {
    for (const CheckDef& d : registry()) ids.push_back(d.id);
    return ids;
  }
  std::stringstream ss(suite);
  std::string id;
  while (std::getline(ss, id, ',')) {
    find_check(id);
    ids.push_back(id);
  }
  if (ids.empty()) fail(ErrorKind::UnknownCheck, "empty suite");
  return ids;
}

std::uint64_t trial_seed(const std::string& id, std::uint64_t seed, std::size_t trial) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return derive_seed(derive_seed(seed, h), trial);
}

int thread_count() {
  if (const char* env = std::getenv("CHAINGEO_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return omp_get_max_threads();
}

std::size_t trials_for(const std::string& id, std::size_t trials) {
  (void)id;
  return trials;
}

namespace {

TrialResult run_one(const CheckDef& def, const TrialContext& ctx) {
  try {
    return def.trial(ctx);
  } catch (const GeometryError& e) {
    TrialResult r;
    r.expect(false, "unexpected error", {{"error", std::string(to_string(e.kind()))}, {"what", e.what()}});
    return r;
  } catch (const std::exception& e) {
    TrialResult r;
    r.expect(false, "unexpected exception", {{"what", e.what()}});
    return r;
  }
}

void merge_stats(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = into.value(it.key(), 0L) + it.value().get<long>();
}

Json counterexample(const CheckDef& def, const SampleConfig& cfg, const TrialContext& ctx, const Json& detail) {
  return {{"check", def.id},   {"m", cfg.m},
          {"n", cfg.n},        {"seed", cfg.seed},
          {"height", cfg.height}, {"trial", ctx.trial},
          {"trial_seed", ctx.trial_seed}, {"detail", detail}};
}

}  // namespace

CheckReport run_definition(const CheckDef& def, const SampleConfig& cfg, std::size_t trials, ExecMode mode,
                           bool strict) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.check_id = def.id;
  rep.m = cfg.m;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  const HermSpace space = cfg.space();
  if (def.skip) {
    if (auto reason = def.skip(space)) {
      if (strict) fail(ErrorKind::InvalidRegime, def.id + ": " + *reason);
      rep.status = CheckStatus::Skip;
      rep.skip_reason = *reason;
      return rep;
    }
  }
  rep.trials = trials;
  std::vector<TrialResult> results(trials);
  auto body = [&](std::size_t t) {
    TrialContext ctx{space, t, trial_seed(def.id, cfg.seed, t), cfg.height};
    results[t] = run_one(def, ctx);
  };
  if (mode == ExecMode::Serial) {
    for (std::size_t t = 0; t < trials; ++t) body(t);
  } else {
    const long count = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long t = 0; t < count; ++t) body(static_cast<std::size_t>(t));
  }
  // Merge in trial order so reports do not depend on scheduling.
  for (std::size_t t = 0; t < trials; ++t) {
    merge_stats(rep.stats, results[t].stats);
    if (results[t].pass) continue;
    if (rep.failures++ == 0) {
      TrialContext ctx{space, t, trial_seed(def.id, cfg.seed, t), cfg.height};
      rep.first_counterexample = counterexample(def, cfg, ctx, results[t].detail);
    }
  }
  rep.status = rep.failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CheckReport run_check(const std::string& id, const SampleConfig& cfg, std::size_t trials, ExecMode mode,
                      bool strict) {
  return run_definition(find_check(id), cfg, trials, mode, strict);
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, const SampleConfig& cfg,
                                   std::size_t trials, ExecMode mode) {
  std::vector<CheckReport> out;
  for (const std::string& id : ids) out.push_back(run_check(id, cfg, trials_for(id, trials), mode));
  return out;
}

CheckReport replay(const Json& ce, const CheckDef* def) {
  try {
    const CheckDef& d = def ? *def : find_check(ce.at("check").get<std::string>());
    SampleConfig cfg;
    cfg.m = ce.at("m").get<std::size_t>();
    cfg.n = ce.at("n").get<std::size_t>();
    cfg.seed = ce.at("seed").get<std::uint64_t>();
    cfg.height = ce.at("height").get<long>();
    const std::size_t trial = ce.at("trial").get<std::size_t>();
    CheckReport rep;
    rep.check_id = d.id;
    rep.m = cfg.m;
    rep.n = cfg.n;
    rep.seed = cfg.seed;
    rep.trials = 1;
    TrialContext ctx{cfg.space(), trial, ce.at("trial_seed").get<std::uint64_t>(), cfg.height};
    TrialResult r = run_one(d, ctx);
    rep.stats = r.stats;
    if (!r.pass) {
      rep.failures = 1;
      rep.first_counterexample = counterexample(d, cfg, ctx, r.detail);
    }
    rep.status = r.pass ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Schema, std::string("bad counterexample: ") + e.what());
  }
}

Json to_json(const CheckReport& r, bool include_elapsed) {
  Json j = {{"check_id", r.check_id}, {"params", {{"m", r.m}, {"n", r.n}, {"seed", r.seed}}},
            {"status", std::string(to_string(r.status))}, {"trials", r.trials},
            {"failures", r.failures}, {"stats", r.stats}};
  if (r.status == CheckStatus::Skip) j["skip_reason"] = r.skip_reason;
  if (r.first_counterexample) j["first_counterexample"] = *r.first_counterexample;
  if (include_elapsed) j["elapsed"] = r.elapsed_seconds;
  return j;
}

int exit_code(const std::vector<CheckReport>& reports) {
  bool any_ran = false;
  for (const CheckReport& r : reports) {
    if (r.status == CheckStatus::Fail) return 1;
    any_ran = any_ran || r.status == CheckStatus::Pass;
  }
  return any_ran ? 0 : 3;
}

}  // namespace chaingeo
