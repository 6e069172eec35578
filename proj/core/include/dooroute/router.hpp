#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "dooroute/configuration.hpp"

namespace dooroute {

struct EditOp {
  enum class Kind { Match, Substitute, Delete, Insert };
  Kind kind = Kind::Match;
  // Positions into the current (a) / goal (b) sequences; -1 when the op does
  // not consume that side.
  int pos_a = -1;
  int pos_b = -1;

  bool operator==(const EditOp&) const = default;
};

struct Alignment {
  int distance = 0;
  std::vector<EditOp> ops;
};

// Full-table unit-cost Levenshtein.
struct DpTable {
  size_t rows = 0;  // |a| + 1
  size_t cols = 0;  // |b| + 1
  std::vector<int> cells;
  int& at(size_t i, size_t j) { return cells[i * cols + j]; }
  int at(size_t i, size_t j) const { return cells[i * cols + j]; }
};

struct DistanceResult {
  int distance = 0;
  DpTable table;
};

DistanceResult edit_distance(const Configuration& a, const Configuration& b);

// One canonical optimal alignment. Cell-level tie preference:
// Match > Substitute > Delete > Insert.
Alignment backtrace(const DpTable& table, const Configuration& a,
                    const Configuration& b);

struct OrientedGoal {
  Configuration oriented;
  int distance = 0;  // bidirectional distance
};

// Whichever of goal / reverse(goal) is closer to current; forward wins ties.
OrientedGoal orient_goal(const Configuration& current,
                         const Configuration& goal);

// Replace current[span_start, span_end) by `replacement`, then collapse
// consecutive duplicates.
struct RoutingAction {
  size_t span_start = 0;
  size_t span_end = 0;  // exclusive; == span_start for pure insertion
  std::vector<VertexId> replacement;
  int expected_distance_after = 0;
};

Configuration project(const Configuration& c, const RoutingAction& action);

struct NextStep {
  RoutingAction action;
  Configuration oriented_goal;
};
struct Done {};
using PlanOutcome = std::variant<Done, NextStep>;

// Derives the next distance-reducing, graph-valid span replacement: align
// current with the oriented goal, take the leftmost maximal run of non-Match
// ops, widen it over adjacent matches until the projection is valid (bridging
// invalid junctions with shortest paths); replacing the whole sequence by the
// oriented goal is the terminal fallback.
PlanOutcome next_action(const Configuration& current, const Configuration& goal,
                        const SpatialGraph& g);

}  // namespace dooroute
