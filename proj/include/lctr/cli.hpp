#pragma once

// Command-line front end. run() is the whole program minus process setup so
// it can be driven in-process by tests.
//
// Exit status: 0 success, 1 verification mismatch, 2 parse/usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "families.hpp"
#include "grundy.hpp"
#include "json_io.hpp"
#include "partition.hpp"
#include "random.hpp"
#include "service.hpp"
#include "session.hpp"

namespace lctr::cli {

struct CliConfig {
  std::string subcommand;
  std::string partition_text;
  std::string engine = "grid";
  std::string format = "plain";
  // reachable
  bool list = false;
  // verify
  std::string family = "all";
  std::size_t n_max = 0, m_max = 0, r_max = 0, s_max = 0, k_max = 0;
  // bench
  std::vector<std::uint64_t> sizes{10'000, 100'000, 1'000'000};
  std::string shape = "staircase";
  std::vector<std::string> engines{"grid", "memo"};
  std::uint64_t seed = 1;
  std::size_t parts = 0;
  // serve
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string log_path;
  std::string ui_dir;
};

namespace detail {

using Json = nlohmann::json;

inline std::string paren(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

inline std::vector<Partition> ordered_positions(const std::set<Partition>& set) {
  std::vector<Partition> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline VerifyBounds bounds_for(FamilyKind kind, const CliConfig& c) {
  VerifyBounds b = VerifyBounds::defaults(kind);
  if (c.n_max) b.n.hi = c.n_max;
  if (c.m_max) b.m.hi = c.m_max;
  if (c.r_max) b.r.hi = c.r_max;
  if (c.s_max) b.s.hi = c.s_max;
  if (c.k_max) b.k.hi = c.k_max;
  return b;
}

inline int run_verify(const CliConfig& c, bool json, std::ostream& out) {
  std::vector<FamilyKind> kinds;
  if (c.family == "all")
    kinds.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  else
    kinds.push_back(parse_family(c.family));

  bool ok = true;
  Json doc = Json::array();
  for (FamilyKind kind : kinds) {
    VerifyReport r = verify_family_range(kind, bounds_for(kind, c));
    ok = ok && r.ok();
    if (json) {
      Json mismatches = Json::array();
      for (const auto& m : r.mismatches)
        mismatches.push_back({{"params", m.params}, {"partition", m.partition},
                              {"closed_form", m.closed_form}, {"dp", m.dp}});
      doc.push_back({{"family", family_name(kind)}, {"total", r.total}, {"passed", r.passed},
                     {"failed", r.failed}, {"mismatches", mismatches}});
      continue;
    }
    out << family_name(kind) << ": " << r.total << " comparisons, " << r.passed << " passed, "
        << r.failed << " failed\n";
    for (const auto& m : r.mismatches)
      out << "  MISMATCH " << m.params << " partition=(" << m.partition
          << ") closed_form=" << m.closed_form << " dp=" << m.dp << '\n';
  }
  if (json) out << doc.dump() << '\n';
  return ok ? 0 : 1;
}

inline int run_bench(const CliConfig& c, bool json, std::ostream& out) {
  std::vector<Engine> engines;
  for (const auto& e : c.engines) engines.push_back(parse_engine(e));
  const Shape shape = parse_shape(c.shape);
  auto rows = run_benchmark(c.sizes, shape, engines, c.seed, c.parts);
  if (json) {
    Json doc = Json::array();
    for (const auto& r : rows)
      doc.push_back({{"engine", engine_name(r.engine)}, {"shape", shape_name(r.shape)},
                     {"size", r.cells}, {"millis", r.millis}});
    out << doc.dump() << '\n';
    return 0;
  }
  out << "engine,shape,size,millis\n";
  for (const auto& r : rows)
    out << engine_name(r.engine) << ',' << shape_name(r.shape) << ',' << r.cells << ','
        << std::fixed << std::setprecision(4) << r.millis << '\n';
  return 0;
}

inline int run_serve(const CliConfig& c, std::ostream& out, std::ostream& err) {
  std::string log_path = c.log_path;
  if (log_path.empty())
    if (const char* env = std::getenv("LCTR_LOG")) log_path = env;
  auto log = log_path.empty() ? std::make_shared<MoveLog>() : std::make_shared<MoveLog>(log_path);
  GameServer server(log);
  if (!c.ui_dir.empty() && !server.mount_static(c.ui_dir)) {
    err << "error: cannot serve UI directory '" << c.ui_dir << "'\n";
    return 2;
  }
  out << "listening on " << c.host << ':' << c.port << std::endl;
  if (!server.listen(c.host, c.port)) {
    err << "error: cannot listen on " << c.host << ':' << c.port << '\n';
    return 2;
  }
  return 0;
}

inline int execute(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const bool json = c.format == "json";
  const std::string& cmd = c.subcommand;

  if (cmd == "verify") return run_verify(c, json, out);
  if (cmd == "bench") return run_bench(c, json, out);
  if (cmd == "serve") return run_serve(c, out, err);

  const Partition p = parse_partition(c.partition_text);

  if (cmd == "eval") {
    const Engine engine = parse_engine(c.engine);
    const GrundyValue value = sg(p, engine);
    if (json)
      out << Json{{"partition", p}, {"engine", engine_name(engine)}, {"sg", value.value()}}.dump() << '\n';
    else
      out << value << '\n';
  } else if (cmd == "outcome") {
    const GrundyValue value = sg_grid(p);
    const Outcome o = outcome(p);
    if (json)
      out << Json{{"partition", p}, {"outcome", outcome_letter(o)}, {"sg", value.value()}}.dump() << '\n';
    else
      out << outcome_letter(o) << '\n';
  } else if (cmd == "best-move") {
    const Move m = best_move(p);
    const bool winning = !sg_grid(p).is_zero();
    if (json)
      out << Json{{"partition", p}, {"move", move_token(m.kind)}, {"result", m.result},
                  {"winning", winning}}.dump() << '\n';
    else
      out << move_token(m.kind) << ' ' << paren(m.result) << (winning ? "" : " (no winning move)") << '\n';
  } else if (cmd == "followers") {
    const Followers f = follower_values(p);
    if (json)
      out << Json{{"partition", p}, {"followers", followers_json(f)}}.dump() << '\n';
    else
      out << "L " << paren(f.left.position) << ' ' << f.left.value << '\n'
          << "T " << paren(f.top.position) << ' ' << f.top.value << '\n';
  } else if (cmd == "reachable") {
    const auto positions = ordered_positions(reachable_positions(p));
    if (json) {
      Json doc{{"partition", p}, {"count", positions.size()}};
      if (c.list) doc["positions"] = positions;
      out << doc.dump() << '\n';
    } else if (c.list) {
      for (const auto& q : positions) out << paren(q) << '\n';
    } else {
      out << positions.size() << '\n';
    }
  } else if (cmd == "plays") {
    const std::string plays = count_plays(p).str();
    if (json)
      out << Json{{"partition", p}, {"plays", plays}}.dump() << '\n';
    else
      out << plays << '\n';
  } else if (cmd == "classify") {
    const FamilyClass fc = classify(p);
    const auto closed = closed_form_sg(p);
    if (json)
      out << Json{{"partition", p}, {"family", describe(fc)},
                  {"closed_form", closed ? Json(closed->value()) : Json(nullptr)}}.dump() << '\n';
    else
      out << describe(fc) << (closed ? " sg=" + std::to_string(closed->value()) : "") << '\n';
  }
  return 0;
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CliConfig c;
  CLI::App app{"LCTR: Sprague-Grundy engine for the Left Column / Top Row partition game", "lctr"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}));

  auto partition_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("partition", c.partition_text, "Partition, e.g. \"5,3^2,2,1^2\"")->required();
    return sub;
  };

  auto* eval = partition_command("eval", "Sprague-Grundy value");
  eval->add_option("--engine", c.engine, "grid | memo | naive")
      ->check(CLI::IsMember({"grid", "memo", "naive"}));
  partition_command("outcome", "N or P");
  partition_command("best-move", "Optimal move and resulting position");
  partition_command("followers", "Both followers with their values");
  auto* reachable = partition_command("reachable", "Positions reachable from a partition");
  auto* count_flag = reachable->add_flag("--count", "Print the number of positions (default)");
  reachable->add_flag("--list", c.list, "Print every position")->excludes(count_flag);
  partition_command("plays", "Number of distinct complete plays");
  partition_command("classify", "Family and closed-form value, if any");

  auto* verify = app.add_subcommand("verify", "Check closed forms against the grid DP");
  verify->fallthrough();
  verify->add_option("--family", c.family, "rectangle | staircase | gamma | diagonal | thick-gamma | quadrated | all")
      ->check(CLI::IsMember({"all", "rectangle", "staircase", "gamma", "diagonal", "thick-gamma", "quadrated"}));
  verify->add_option("--n-max", c.n_max, "Upper bound for n")->check(CLI::PositiveNumber);
  verify->add_option("--m-max", c.m_max, "Upper bound for m")->check(CLI::PositiveNumber);
  verify->add_option("--r-max", c.r_max, "Upper bound for r")->check(CLI::PositiveNumber);
  verify->add_option("--s-max", c.s_max, "Upper bound for s")->check(CLI::PositiveNumber);
  verify->add_option("--k-max", c.k_max, "Upper bound for quadrated block count")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Wall-clock timings per engine and size");
  bench->fallthrough();
  bench->add_option("--sizes", c.sizes, "Target cell counts")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--shape", c.shape, "staircase | rectangle | random")
      ->check(CLI::IsMember({"staircase", "rectangle", "random"}));
  bench->add_option("--engines", c.engines, "Engines to time")
      ->delimiter(',')
      ->check(CLI::IsMember({"grid", "memo", "naive"}));
  bench->add_option("--seed", c.seed, "Seed for the random shape");
  bench->add_option("--parts", c.parts, "Part count for the random shape (default cbrt(size))");

  auto* serve = app.add_subcommand("serve", "Run the game service");
  serve->fallthrough();
  serve->add_option("--host", c.host, "Bind address");
  serve->add_option("--port", c.port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--log", c.log_path, "Append accepted moves as JSON lines (default $LCTR_LOG)");
  serve->add_option("--ui", c.ui_dir, "Directory of static UI files to serve at /");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    return detail::execute(c, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace lctr::cli
