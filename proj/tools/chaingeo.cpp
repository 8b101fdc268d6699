#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chaingeo/error.hpp"
#include "chaingeo/intersection.hpp"
#include "chaingeo/verify.hpp"

using namespace chaingeo;

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HermSpace checked_space(std::size_t m, std::size_t n) {
  try {
    return {m, n};
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
}

Json read_items(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array()) j = Json::array({j});
  return j;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<ShilovPoint> points_of(const Json& item, std::size_t count) {
  const Json& pts = item.is_object() && item.contains("points") ? item.at("points") : item;
  if (!pts.is_array() || (count != 0 && pts.size() != count))
    fail(ErrorKind::Schema, "expected " + (count ? std::to_string(count) : std::string("a list of")) + " points");
  std::vector<ShilovPoint> out;
  for (const Json& p : pts) out.push_back(point_from_json(p));
  if (!out.empty())
    for (const auto& p : out)
      if (!(p.space() == out.front().space())) fail(ErrorKind::Schema, "points of different spaces");
  return out;
}

Json tuple_json(const char* kind, const std::vector<ShilovPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return {{"kind", kind}, {"points", arr}};
}

Json error_json(const GeometryError& e) {
  return {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

/// Applies op to each item; schema errors abort, other geometry errors
/// become per-item error objects.
template <typename Op>
std::vector<Json> map_items(const Json& items, Op op) {
  std::vector<Json> out;
  for (const Json& item : items) {
    try {
      out.push_back(op(item));
    } catch (const GeometryError& e) {
      if (e.kind() == ErrorKind::Schema) throw;
      out.push_back(error_json(e));
    }
  }
  return out;
}

std::string lines(const std::vector<Json>& results) {
  std::string s;
  for (const Json& r : results) s += (r.is_string() ? r.get<std::string>() : r.dump()) + "\n";
  return s;
}

struct GenOptions {
  std::size_t m = 1, n = 2;
  std::string kind = "point";
  std::optional<std::size_t> k;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  long height = 10;
  std::string out;
};

int run_gen(const GenOptions& o) {
  const HermSpace s = checked_space(o.m, o.n);
  if (o.k && o.kind != "chain") throw UsageError("--k only applies to --kind chain");
  const std::size_t k = o.k.value_or(s.m);
  if (o.kind == "chain" && (k < min_vertical_index(s) || k > s.m))
    throw UsageError("--k must lie in [" + std::to_string(min_vertical_index(s)) + ", " + std::to_string(s.m) + "]");
  if (o.height < 1) throw UsageError("--height must be positive");
  Sampler smp(s, o.seed, o.height);
  Json out = Json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    if (o.kind == "point") {
      out.push_back(to_json(smp.point()));
    } else if (o.kind == "pair") {
      out.push_back(tuple_json("pair", {smp.point(), smp.point()}));
    } else if (o.kind == "triple") {
      auto [x, y, z] = smp.maximal_triple();
      out.push_back(tuple_json("triple", {x, y, z}));
    } else if (o.kind == "chain") {
      out.push_back(to_json(smp.chain(k)));
    } else {
      out.push_back(to_json(smp.heis_point()));
    }
  }
  write_output(o.out, out.dump(1) + "\n");
  return 0;
}

char* format_cartan(double c, char (&buf)[64]) {
  std::snprintf(buf, sizeof buf, "%.12f", c);
  return buf;
}

int run_inv(const std::string& kind, const std::string& in) {
  const Json items = read_items(in);
  std::vector<Json> results;
  if (kind == "bergmann" || kind == "cartan") {
    results = map_items(items, [&](const Json& item) -> Json {
      const auto p = points_of(item, 3);
      if (kind == "bergmann") return bergmann_index(p[0], p[1], p[2]);
      char buf[64];
      return std::string(format_cartan(cartan_invariant(p[0], p[1], p[2]), buf));
    });
  } else if (kind == "index") {
    // A chain (index at v_inf) or {"point": ..., "chain": ...}.
    results = map_items(items, [](const Json& item) -> Json {
      if (item.is_object() && item.contains("chain")) {
        const MChain t = chain_from_json(item.at("chain"));
        const ShilovPoint x = item.contains("point") ? point_from_json(item.at("point")) : v_inf(t.space());
        if (!(x.space() == t.space())) fail(ErrorKind::Schema, "point and chain of different spaces");
        return intersection_index(x, t);
      }
      const MChain t = chain_from_json(item);
      return intersection_index(v_inf(t.space()), t);
    });
  } else {
    results = map_items(items, [](const Json& item) -> Json {
      const auto p = points_of(item, 0);
      if (p.empty()) fail(ErrorKind::Schema, "empty point list");
      std::vector<Subspace> parts;
      for (const auto& x : p) parts.push_back(x.subspace());
      return span(parts).dim();
    });
  }
  std::cout << lines(results);
  return 0;
}

int run_chain(const std::string& op, const std::string& in, const std::string& out) {
  const Json items = read_items(in);
  std::vector<Json> results;
  if (op == "through") {
    results = map_items(items, [](const Json& item) -> Json {
      const auto p = points_of(item, 2);
      return to_json(chain_through(p[0], p[1]));
    });
  } else if (op == "project") {
    results = map_items(items, [](const Json& item) -> Json { return to_json(project_chain(chain_from_json(item))); });
  } else if (op == "lift") {
    results = map_items(items, [](const Json& item) -> Json {
      if (!item.is_object() || !item.contains("circle") || !item.contains("point"))
        fail(ErrorKind::Schema, "lift items need 'circle' and 'point'");
      const Circle c = circle_from_json(item.at("circle"));
      const ShilovPoint x = point_from_json(item.at("point"));
      if (!(x.space() == c.witness.space())) fail(ErrorKind::Schema, "point and circle of different spaces");
      return to_json(lift_circle(c, x));
    });
  } else {
    results = map_items(items, [](const Json& item) -> Json {
      const Json& list = item.is_object() && item.contains("chains") ? item.at("chains") : item;
      if (!list.is_array() || list.empty()) fail(ErrorKind::Schema, "expected a list of chains");
      std::vector<MChain> ts;
      for (const Json& t : list) ts.push_back(chain_from_json(t));
      for (const auto& t : ts)
        if (!(t.space() == ts.front().space())) fail(ErrorKind::Schema, "chains of different spaces");
      return to_json(intersect_chains(ts));
    });
  }
  write_output(out, Json(results).dump(1) + "\n");
  return 0;
}

struct CheckOptions {
  std::string suite = "all";
  std::size_t m = 1, n = 2;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  long height = 10;
  bool json = false;
  bool timing = false;
  bool serial = false;
};

int run_checks(const CheckOptions& o) {
  checked_space(o.m, o.n);
  if (o.height < 1) throw UsageError("--height must be positive");
  std::vector<std::string> ids;
  try {
    ids = parse_suite(o.suite);
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
  SampleConfig cfg;
  cfg.m = o.m;
  cfg.n = o.n;
  cfg.seed = o.seed;
  cfg.height = o.height;
  std::vector<CheckReport> reports;
  for (const std::string& id : ids) {
    reports.push_back(
        run_check(id, cfg, trials_for(id, o.trials), o.serial ? ExecMode::Serial : ExecMode::Parallel));
    const CheckReport& r = reports.back();
    if (o.json) {
      std::cout << to_json(r, o.timing).dump() << "\n";
    } else {
      std::printf("%-5s %-4s trials=%-5zu failures=%-4zu %8.2fs  %s\n", r.check_id.c_str(),
                  std::string(to_string(r.status)).c_str(), r.trials, r.failures, r.elapsed_seconds,
                  r.status == CheckStatus::Skip ? r.skip_reason.c_str() : find_check(id).summary.c_str());
      if (r.first_counterexample) std::printf("      first counterexample: %s\n", r.first_counterexample->dump().c_str());
    }
    std::fflush(stdout);
  }
  return exit_code(reports);
}

int run_replay(const std::string& in) {
  std::ifstream f(in);
  if (!f) throw UsageError("cannot open " + in);
  Json j;
  try {
    f >> j;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
  if (j.contains("first_counterexample")) j = j.at("first_counterexample");
  const CheckReport r = replay(j);
  std::cout << to_json(r, false).dump() << "\n";
  return exit_code({r});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with chains in the Shilov boundary of SU(m,n)"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "sample points, pairs, triples, chains or chart points");
  g->add_option("--m", gen.m)->required();
  g->add_option("--n", gen.n)->required();
  g->add_option("--kind", gen.kind)->check(CLI::IsMember({"point", "pair", "triple", "chain", "heis"}));
  g->add_option("--k", gen.k, "index at v_inf, chains only");
  g->add_option("--count", gen.count);
  g->add_option("--seed", gen.seed);
  g->add_option("--height", gen.height);
  g->add_option("--out", gen.out);

  std::string inv_kind = "bergmann", inv_in;
  auto* inv = app.add_subcommand("inv", "compute invariants of the input items");
  inv->add_option("--kind", inv_kind)->check(CLI::IsMember({"bergmann", "cartan", "index", "span"}));
  inv->add_option("--in", inv_in)->required();

  std::string chain_op, chain_in, chain_out;
  auto* ch = app.add_subcommand("chain", "chain operations");
  ch->add_option("op", chain_op)->required()->check(CLI::IsMember({"through", "project", "lift", "intersect"}));
  ch->add_option("--in", chain_in)->required();
  ch->add_option("--out", chain_out);

  CheckOptions chk;
  auto* c = app.add_subcommand("check", "run verification checks");
  c->add_option("--suite", chk.suite);
  c->add_option("--m", chk.m)->required();
  c->add_option("--n", chk.n)->required();
  c->add_option("--trials", chk.trials);
  c->add_option("--seed", chk.seed);
  c->add_option("--height", chk.height);
  c->add_flag("--json", chk.json, "one JSON object per check");
  c->add_flag("--timing", chk.timing, "include elapsed seconds in JSON output");
  c->add_flag("--serial", chk.serial, "use the serial reference runner");

  std::string replay_in;
  auto* rp = app.add_subcommand("replay", "re-run the trial of a counterexample");
  rp->add_option("--in", replay_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*inv) return run_inv(inv_kind, inv_in);
    if (*ch) return run_chain(chain_op, chain_in, chain_out);
    if (*c) return run_checks(chk);
    return run_replay(replay_in);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
}
