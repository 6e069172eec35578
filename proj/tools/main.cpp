#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dooroute/json_io.hpp"
#include "dooroute/svg_render.hpp"

namespace {

using namespace dooroute;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::BadInput, "cannot write " + out_path);
    out << text << "\n";
  }
}

struct BoardContext {
  ValidatedLayout layout;
  std::vector<ConvexRegion> regions;
  SpatialGraph graph;
};

BoardContext load_board(const std::string& layout_path) {
  Layout layout = layout_path.empty() ? bundled_board()
                                      : layout_from_json(slurp(layout_path));
  ValidatedLayout validated = validate_layout(layout);
  std::vector<ConvexRegion> regions = decompose(validated);
  SpatialGraph graph = build_graph(regions, validated);
  return {std::move(validated), std::move(regions), std::move(graph)};
}

int run(int argc, char** argv) {
  CLI::App app{"Deformable one-dimensional object routing over a convex-"
               "decomposed work region"};
  app.require_subcommand(1);

  std::string layout_path;
  std::string input_path;
  std::string goal_path;
  std::string out_path;
  std::string format = "json";
  double sample_step = kSampleStep;
  bool raw = false;
  uint64_t seed = 0;
  int trials = 200;
  int cap = 15;
  double len_min = 0.3;
  double len_max = 0.5;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write output to a file");
    cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Convex decomposition of a layout");
  decompose_cmd->add_option("layout", layout_path)->required();
  add_common(decompose_cmd);

  auto* graph_cmd =
      app.add_subcommand("graph", "Spatial representation graph of a layout");
  graph_cmd->add_option("layout", layout_path)->required();
  add_common(graph_cmd);

  auto* encode_cmd =
      app.add_subcommand("encode", "Encode a polyline into a configuration");
  encode_cmd->add_option("layout", layout_path)->required();
  encode_cmd->add_option("polyline", input_path)->required();
  encode_cmd->add_flag("--raw", raw, "Skip slack simplification");
  encode_cmd->add_option("--sample-step", sample_step, "Sampling step (m)");
  add_common(encode_cmd);

  auto* plan_cmd =
      app.add_subcommand("plan", "Next routing action toward a goal");
  plan_cmd->add_option("layout", layout_path)->required();
  plan_cmd->add_option("current", input_path,
                       "Current polyline or configuration JSON")
      ->required();
  plan_cmd->add_option("goal", goal_path, "Goal configuration JSON")
      ->required();
  plan_cmd->add_option("--sample-step", sample_step, "Sampling step (m)");
  add_common(plan_cmd);

  auto* sim_cmd = app.add_subcommand(
      "simulate", "Run a plan/act/re-encode episode, one JSON line per step");
  sim_cmd->add_option("layout", layout_path)->required();
  sim_cmd->add_option("initial", input_path, "Initial polyline JSON")
      ->required();
  sim_cmd->add_option("goal", goal_path, "Goal configuration JSON")
      ->required();
  sim_cmd->add_option("--cap", cap, "Maximum actions per episode");
  add_common(sim_cmd);

  auto* bench_cmd =
      app.add_subcommand("bench", "Seeded benchmark over random placements");
  bench_cmd->add_option("layout", layout_path,
                        "Layout JSON (default: bundled board)");
  bench_cmd->add_option("--trials", trials, "Number of trials");
  bench_cmd->add_option("--seed", seed, "Benchmark seed");
  bench_cmd->add_option("--cap", cap, "Maximum actions per episode");
  bench_cmd->add_option("--len-min", len_min, "Minimum cable length (m)");
  bench_cmd->add_option("--len-max", len_max, "Maximum cable length (m)");
  add_common(bench_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG of a layout");
  render_cmd->add_option("layout", layout_path)->required();
  render_cmd->add_option("polyline", input_path, "Optional DOO polyline JSON");
  add_common(render_cmd);

  CLI11_PARSE(app, argc, argv);

  if (decompose_cmd->parsed()) {
    BoardContext board = load_board(layout_path);
    emit(layout_to_json(board.layout.get(), board.regions), out_path);
    return 0;
  }
  if (graph_cmd->parsed()) {
    BoardContext board = load_board(layout_path);
    emit(graph_to_json(board.graph), out_path);
    return 0;
  }
  if (encode_cmd->parsed()) {
    BoardContext board = load_board(layout_path);
    DooPolyline doo = polyline_from_json(slurp(input_path));
    Configuration c =
        encode(doo, board.graph, board.regions, board.layout, sample_step);
    if (!raw) c = simplify(c);
    emit(configuration_to_json(c), out_path);
    return 0;
  }
  if (plan_cmd->parsed()) {
    BoardContext board = load_board(layout_path);
    std::string current_text = slurp(input_path);
    Configuration current;
    if (json_is_polyline(current_text)) {
      current = simplify(encode(polyline_from_json(current_text), board.graph,
                                board.regions, board.layout, sample_step));
    } else {
      current = configuration_from_json(current_text);
    }
    Configuration goal = configuration_from_json(slurp(goal_path));

    auto t0 = std::chrono::steady_clock::now();
    PlanOutcome outcome = next_action(current, goal, board.graph);
    auto t1 = std::chrono::steady_clock::now();
    double plan_us = std::chrono::duration<double, std::micro>(t1 - t0).count();

    nlohmann::json j;
    if (std::holds_alternative<Done>(outcome)) {
      j["outcome"] = "done";
    } else {
      const auto& next = std::get<NextStep>(outcome);
      Configuration projected = project(current, next.action);
      j["outcome"] = "next";
      j["span"] = {next.action.span_start, next.action.span_end};
      j["replacement"] = next.action.replacement;
      j["projected"] = projected.seq;
      j["distance_before"] = orient_goal(current, goal).distance;
      j["distance_after"] = next.action.expected_distance_after;
      j["plan_time_us"] = plan_us;
    }
    if (format == "text") {
      std::ostringstream ss;
      if (j["outcome"] == "done") {
        ss << "already at goal";
      } else {
        ss << "replace span [" << j["span"][0] << ", " << j["span"][1]
           << ") -> " << j["replacement"].dump() << ", distance "
           << j["distance_before"] << " -> " << j["distance_after"];
      }
      emit(ss.str(), out_path);
    } else {
      emit(j.dump(), out_path);
    }
    return 0;
  }
  if (sim_cmd->parsed()) {
    BoardContext board = load_board(layout_path);
    World world{board.layout, board.regions, board.graph,
                polyline_from_json(slurp(input_path))};
    Configuration goal = configuration_from_json(slurp(goal_path));
    Episode ep = run_episode(world, goal, cap);
    std::ostringstream ss;
    for (const EpisodeStep& step : ep.steps) {
      ss << episode_step_to_json(step) << "\n";
    }
    nlohmann::json tail;
    tail["outcome"] = ep.outcome == Episode::Outcome::Converged
                          ? "converged"
                          : "action_cap_reached";
    tail["actions"] = ep.steps.size();
    ss << tail.dump();
    emit(ss.str(), out_path);
    return 0;
  }
  if (bench_cmd->parsed()) {
    int threads = 0;
    if (const char* env = std::getenv("DOO_ROUTE_THREADS")) {
      threads = std::atoi(env);
    }
    Layout layout = layout_path.empty() ? bundled_board()
                                        : layout_from_json(slurp(layout_path));
    BenchmarkStats stats =
        run_benchmark(layout, trials, seed, cap, len_min, len_max, threads);
    if (format == "text") {
      std::ostringstream ss;
      ss << "trials " << stats.trials << " (excluded " << stats.excluded
         << "), success rate " << stats.success_rate << ", mean actions "
         << stats.mean_actions << ", max actions " << stats.max_actions
         << ", plan time p50 " << stats.plan_time_p50_us << " us, p99 "
         << stats.plan_time_p99_us << " us";
      emit(ss.str(), out_path);
    } else {
      emit(stats_to_json(stats), out_path);
    }
    return 0;
  }
  if (render_cmd->parsed()) {
    BoardContext board = load_board(layout_path);
    std::optional<DooPolyline> doo;
    if (!input_path.empty()) doo = polyline_from_json(slurp(input_path));
    emit(render_svg(board.layout, board.regions, board.graph, doo), out_path);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::NoProgress ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
