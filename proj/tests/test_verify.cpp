#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "chaingeo/error.hpp"
#include "chaingeo/verify.hpp"

using namespace chaingeo;

namespace {

SampleConfig config(std::size_t m, std::size_t n, std::uint64_t seed = 1) {
  SampleConfig c;
  c.m = m;
  c.n = n;
  c.seed = seed;
  return c;
}

// Fails on a fixed subset of trials, decided by the trial seed alone.
CheckDef broken_check() {
  return {"BROKEN", "fails on every seventh trial seed", nullptr, [](const TrialContext& ctx) {
            TrialResult r;
            Sampler smp(ctx.space, ctx.trial_seed, ctx.height);
            const Matrix a = smp.matrix(2, 2);
            r.expect(ctx.trial_seed % 7 != 3, "seeded fault", {{"a", to_json(a)}});
            r.count("ran");
            return r;
          }};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Schema;
}

}  // namespace

TEST(Registry, IdsAndLookup) {
  const std::vector<std::string> expected{"VC",  "VF",  "TI",   "TK",   "S0", "S1", "UM",   "LIFT", "ERR", "SMAP",
                                          "BETA", "C45", "SURJ", "SPAN", "OO", "IC", "BERG", "CAR",  "XSIG"};
  std::vector<std::string> ids;
  for (const CheckDef& d : registry()) ids.push_back(d.id);
  EXPECT_EQ(ids, expected);
  EXPECT_EQ(parse_suite("all"), expected);
  EXPECT_EQ(parse_suite("UM,BERG"), (std::vector<std::string>{"UM", "BERG"}));
  EXPECT_EQ(kind_of([] { find_check("NOPE"); }), ErrorKind::UnknownCheck);
  EXPECT_EQ(kind_of([] { parse_suite("VC,NOPE"); }), ErrorKind::UnknownCheck);
}

TEST(Registry, RegimeSkips) {
  const auto reports = run_suite(parse_suite("all"), config(1, 2), 3);
  std::set<std::string> skipped;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Skip) {
      skipped.insert(r.check_id);
      EXPECT_FALSE(r.skip_reason.empty());
      EXPECT_EQ(r.trials, 0u);
    } else {
      EXPECT_EQ(r.status, CheckStatus::Pass) << r.check_id;
    }
  }
  EXPECT_EQ(skipped, (std::set<std::string>{"BETA", "C45", "SURJ", "SPAN"}));
  EXPECT_EQ(exit_code(reports), 0);

  const auto c45 = run_check("C45", config(2, 5), 5);
  EXPECT_EQ(c45.status, CheckStatus::Skip);
  EXPECT_EQ(exit_code({c45}), 3);
  EXPECT_EQ(kind_of([] { run_check("C45", config(2, 5), 5, ExecMode::Serial, true); }), ErrorKind::InvalidRegime);
  EXPECT_EQ(run_check("CAR", config(2, 3), 5).status, CheckStatus::Skip);
  EXPECT_EQ(run_check("OO", config(2, 2), 5).status, CheckStatus::Skip);
}

TEST(Runner, SerialAndParallelReportsAgree) {
  for (const char* id : {"BERG", "OO", "SPAN"}) {
    const auto serial = run_check(id, config(2, 3, 5), 16, ExecMode::Serial);
    const auto parallel = run_check(id, config(2, 3, 5), 16, ExecMode::Parallel);
    EXPECT_EQ(to_json(serial, false), to_json(parallel, false)) << id;
  }
}

TEST(Runner, DeterministicPerSeed) {
  const auto a = run_check("SPAN", config(2, 3, 9), 12);
  const auto b = run_check("SPAN", config(2, 3, 9), 12);
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
  EXPECT_NE(trial_seed("SPAN", 9, 0), trial_seed("SPAN", 10, 0));
  EXPECT_NE(trial_seed("SPAN", 9, 0), trial_seed("BETA", 9, 0));
  EXPECT_NE(trial_seed("SPAN", 9, 0), trial_seed("SPAN", 9, 1));
}

TEST(Runner, FaultInjectionGivesReplayableCounterexample) {
  const CheckDef def = broken_check();
  const std::size_t trials = 200;
  std::size_t expected_failures = 0;
  std::optional<std::size_t> first;
  for (std::size_t t = 0; t < trials; ++t)
    if (trial_seed(def.id, 4, t) % 7 == 3) {
      ++expected_failures;
      if (!first) first = t;
    }
  ASSERT_GT(expected_failures, 0u);

  for (ExecMode mode : {ExecMode::Serial, ExecMode::Parallel}) {
    const CheckReport rep = run_definition(def, config(2, 3, 4), trials, mode);
    EXPECT_EQ(rep.status, CheckStatus::Fail);
    EXPECT_EQ(rep.failures, expected_failures);
    EXPECT_EQ(rep.stats["ran"].get<long>(), static_cast<long>(trials));
    ASSERT_TRUE(rep.first_counterexample.has_value());
    const Json& ce = *rep.first_counterexample;
    EXPECT_EQ(ce["trial"].get<std::size_t>(), *first);
    EXPECT_EQ(ce["detail"]["failed"], "seeded fault");
    EXPECT_EQ(exit_code({rep}), 1);

    // The serialized counterexample fails again on its own.
    const CheckReport again = replay(Json::parse(ce.dump()), &def);
    EXPECT_EQ(again.status, CheckStatus::Fail);
    EXPECT_EQ(again.first_counterexample->at("detail"), ce["detail"]);
  }
}

TEST(Runner, CounterexampleOnlyOnFailure) {
  const auto rep = run_check("TK", config(2, 3), 10);
  EXPECT_EQ(rep.status, CheckStatus::Pass);
  EXPECT_FALSE(rep.first_counterexample.has_value());
  EXPECT_FALSE(to_json(rep).contains("first_counterexample"));
  const Json j = to_json(rep, false);
  EXPECT_EQ(j["check_id"], "TK");
  EXPECT_EQ(j["params"]["m"], 2);
  EXPECT_FALSE(j.contains("elapsed"));
  EXPECT_TRUE(to_json(rep, true).contains("elapsed"));
}

TEST(Runner, ExceptionsBecomeFailures) {
  CheckDef def{"THROWS", "", nullptr, [](const TrialContext& ctx) -> TrialResult {
                 if (ctx.trial == 2) fail(ErrorKind::Singular, "boom");
                 return {};
               }};
  const auto rep = run_definition(def, config(1, 2), 5, ExecMode::Serial);
  EXPECT_EQ(rep.failures, 1u);
  EXPECT_EQ(rep.first_counterexample->at("detail")["data"]["error"], "Singular");
  EXPECT_EQ(kind_of([] { replay(Json{{"check", "VC"}}); }), ErrorKind::Schema);
}

TEST(Runner, ThreadCountFromEnvironment) {
  setenv("CHAINGEO_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3);
  setenv("CHAINGEO_THREADS", "0", 1);
  EXPECT_GE(thread_count(), 1);
  unsetenv("CHAINGEO_THREADS");
  EXPECT_GE(thread_count(), 1);
}

TEST(Sampler, Reproducible) {
  auto dump = [](std::uint64_t seed) {
    Sampler smp(HermSpace(2, 3), seed);
    Json j = Json::array();
    j.push_back(to_json(smp.point()));
    j.push_back(to_json(smp.chain(1)));
    auto [x, y, z] = smp.maximal_triple();
    j.push_back(to_json(z));
    j.push_back(to_json(smp.h_unitary()));
    return j.dump();
  };
  EXPECT_EQ(dump(11), dump(11));
  EXPECT_NE(dump(11), dump(12));
}

TEST(Sampler, ObjectsSatisfyInvariants) {
  Sampler smp(HermSpace(3, 5), 13);
  const HermSpace& s = smp.space();
  for (int t = 0; t < 10; ++t) {
    const Matrix g = smp.h_unitary();
    EXPECT_EQ(g.adjoint() * s.h() * g, s.h());
    EXPECT_TRUE(is_unitary(smp.unitary(3)));
    const Matrix su = smp.special_unitary(2);
    EXPECT_TRUE(is_unitary(su));
    EXPECT_EQ(determinant(su), GaussianRational(1));
    EXPECT_TRUE(is_shilov_point(transformed(g, v_inf(s)).subspace()));
    auto [x, y, z] = smp.maximal_triple();
    EXPECT_TRUE(is_maximal_triple_space(x, y, z));
    EXPECT_EQ(std::labs(bergmann_index(x, y, z)), 3);
  }
}
