#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "chaingeo/sampler.hpp"
#include "chaingeo/serialize.hpp"

namespace chaingeo {

enum class CheckStatus { Pass, Fail, Skip };
enum class ExecMode { Serial, Parallel };

std::string_view to_string(CheckStatus s);

struct TrialContext {
  HermSpace space;
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  long height = 10;
};

struct TrialResult {
  bool pass = true;
  Json detail;                  ///< what failed, with the offending data
  Json stats = Json::object();  ///< integer counters, summed over trials

  /// Records the first failure only. `data` may be a callable producing the
  /// Json, so passing trials never serialize anything.
  void expect(bool cond, const std::string& what, Json data = nullptr);
  template <typename F>
    requires std::is_invocable_r_v<Json, F>
  void expect(bool cond, const std::string& what, F&& data) {
    if (!cond && pass) expect(false, what, Json(data()));
  }
  void count(const std::string& key, long by = 1);
};

struct CheckDef {
  std::string id;
  std::string summary;
  /// Reason the check does not apply to a space, or nullopt.
  std::function<std::optional<std::string>(const HermSpace&)> skip;
  std::function<TrialResult(const TrialContext&)> trial;
};

struct CheckReport {
  std::string check_id;
  std::size_t m = 0, n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string skip_reason;
  std::optional<Json> first_counterexample;
  Json stats = Json::object();
  double elapsed_seconds = 0;
};

const std::vector<CheckDef>& registry();
/// Throws UnknownCheck.
const CheckDef& find_check(const std::string& id);
/// "all" or a comma-separated list of ids. Throws UnknownCheck.
std::vector<std::string> parse_suite(const std::string& suite);

/// Seed of trial `trial` of check `id`.
std::uint64_t trial_seed(const std::string& id, std::uint64_t seed, std::size_t trial);

/// Runs `trials` seeded trials. A check that does not apply reports SKIP,
/// or throws InvalidRegime when `strict`.
CheckReport run_definition(const CheckDef& def, const SampleConfig& cfg, std::size_t trials,
                           ExecMode mode = ExecMode::Parallel, bool strict = false);
CheckReport run_check(const std::string& id, const SampleConfig& cfg, std::size_t trials,
                      ExecMode mode = ExecMode::Parallel, bool strict = false);
std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, const SampleConfig& cfg,
                                   std::size_t trials, ExecMode mode = ExecMode::Parallel);
/// Re-runs the single trial a counterexample came from.
CheckReport replay(const Json& counterexample, const CheckDef* def = nullptr);

Json to_json(const CheckReport& r, bool include_elapsed = true);
/// 0 all pass, 1 any failure, 3 nothing but skips.
int exit_code(const std::vector<CheckReport>& reports);
/// CHAINGEO_THREADS if set and positive, else the OpenMP default.
int thread_count();

/// Trial budget a check gets when the suite runs with `trials` (SURJ and
/// SPAN are heavier and run at least 200).
std::size_t trials_for(const std::string& id, std::size_t trials);

}  // namespace chaingeo
