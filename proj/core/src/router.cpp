#include "dooroute/router.hpp"

#include <algorithm>
#include <string>

namespace dooroute {

DistanceResult edit_distance(const Configuration& a, const Configuration& b) {
  const size_t n = a.seq.size();
  const size_t m = b.seq.size();
  if (n == 0 || m == 0) {
    throw Error(ErrorCode::BadInput, "edit_distance over empty sequence");
  }
  DpTable table;
  table.rows = n + 1;
  table.cols = m + 1;
  table.cells.resize(table.rows * table.cols);
  for (size_t i = 0; i <= n; ++i) table.at(i, 0) = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) table.at(0, j) = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int sub = table.at(i - 1, j - 1) + (a.seq[i - 1] == b.seq[j - 1] ? 0 : 1);
      int del = table.at(i - 1, j) + 1;
      int ins = table.at(i, j - 1) + 1;
      table.at(i, j) = std::min({sub, del, ins});
    }
  }
  return {table.at(n, m), std::move(table)};
}

Alignment backtrace(const DpTable& table, const Configuration& a,
                    const Configuration& b) {
  size_t i = a.seq.size();
  size_t j = b.seq.size();
  Alignment out;
  out.distance = table.at(i, j);
  std::vector<EditOp> rev;
  while (i > 0 || j > 0) {
    int cur = table.at(i, j);
    if (i > 0 && j > 0 && a.seq[i - 1] == b.seq[j - 1] &&
        cur == table.at(i - 1, j - 1)) {
      rev.push_back({EditOp::Kind::Match, static_cast<int>(i - 1),
                     static_cast<int>(j - 1)});
      --i;
      --j;
    } else if (i > 0 && j > 0 && cur == table.at(i - 1, j - 1) + 1) {
      rev.push_back({EditOp::Kind::Substitute, static_cast<int>(i - 1),
                     static_cast<int>(j - 1)});
      --i;
      --j;
    } else if (i > 0 && cur == table.at(i - 1, j) + 1) {
      rev.push_back({EditOp::Kind::Delete, static_cast<int>(i - 1), -1});
      --i;
    } else {
      rev.push_back({EditOp::Kind::Insert, -1, static_cast<int>(j - 1)});
      --j;
    }
  }
  out.ops.assign(rev.rbegin(), rev.rend());
  return out;
}

OrientedGoal orient_goal(const Configuration& current,
                         const Configuration& goal) {
  int fwd = edit_distance(current, goal).distance;
  Configuration rev = reverse(goal);
  int bwd = edit_distance(current, rev).distance;
  if (fwd < bwd) return {goal, fwd};
  if (bwd < fwd) return {std::move(rev), bwd};
  // Tie: pick the lexicographically smaller reading so the choice does not
  // depend on which direction the caller happened to pass the goal in.
  if (!std::lexicographical_compare(rev.seq.begin(), rev.seq.end(),
                                    goal.seq.begin(), goal.seq.end())) {
    return {goal, fwd};
  }
  return {std::move(rev), bwd};
}

Configuration project(const Configuration& c, const RoutingAction& action) {
  if (action.span_start > action.span_end ||
      action.span_end > c.seq.size()) {
    throw Error(ErrorCode::SpanOutOfRange,
                "[" + std::to_string(action.span_start) + "," +
                    std::to_string(action.span_end) + ") on length " +
                    std::to_string(c.seq.size()));
  }
  std::vector<VertexId> out;
  auto push = [&](VertexId v) {
    if (out.empty() || out.back() != v) out.push_back(v);
  };
  for (size_t i = 0; i < action.span_start; ++i) push(c.seq[i]);
  for (VertexId v : action.replacement) push(v);
  for (size_t i = action.span_end; i < c.seq.size(); ++i) push(c.seq[i]);
  return Configuration{std::move(out)};
}

namespace {

int bidirectional_distance(const Configuration& a, const Configuration& b) {
  int fwd = edit_distance(a, b).distance;
  int bwd = edit_distance(a, reverse(b)).distance;
  return std::min(fwd, bwd);
}

// Widens [lo, hi) over the current sequence so it never separates the two
// entrance vertices of one tunnel (a grasp must take the whole traversal).
void avoid_splitting_tunnel(const Configuration& cur, const SpatialGraph& g,
                            size_t& lo, size_t& hi) {
  auto twins = [&](VertexId u, VertexId v) {
    const VertexKind& ku = g.kind(u);
    const VertexKind& kv = g.kind(v);
    return ku.type == VertexKind::Type::TunnelEntrance &&
           kv.type == VertexKind::Type::TunnelEntrance &&
           ku.tunnel_id == kv.tunnel_id;
  };
  while (lo > 0 && lo < cur.seq.size() &&
         twins(cur.seq[lo - 1], cur.seq[lo])) {
    --lo;
  }
  while (hi > 0 && hi < cur.seq.size() &&
         twins(cur.seq[hi - 1], cur.seq[hi])) {
    ++hi;
  }
}

}  // namespace

PlanOutcome next_action(const Configuration& current, const Configuration& goal,
                        const SpatialGraph& g) {
  OrientedGoal og = orient_goal(current, goal);
  if (og.distance == 0) return Done{};
  // The goal may be any sequence (even one the graph cannot realize through
  // intermediate splices); the current state must be traversable.
  if (validate(current, g)) {
    throw Error(ErrorCode::BadInput,
                "next_action requires a graph-valid current configuration");
  }
  const Configuration& oriented = og.oriented;

  // When the goal carries no slack itself, the action must also make progress
  // after slack simplification; the episode loop re-encodes to the simplified
  // form, so this keeps episodes monotone.
  const bool goal_is_simplified = simplify(goal) == goal;

  DistanceResult dr = edit_distance(current, oriented);
  Alignment align = backtrace(dr.table, current, oriented);

  // Leftmost maximal run of non-Match ops, as index extents into current
  // ([a_lo, a_hi)) and oriented goal ([b_lo, b_hi)).
  size_t run_begin = 0;
  while (run_begin < align.ops.size() &&
         align.ops[run_begin].kind == EditOp::Kind::Match) {
    ++run_begin;
  }
  size_t run_end = run_begin;
  while (run_end < align.ops.size() &&
         align.ops[run_end].kind != EditOp::Kind::Match) {
    ++run_end;
  }
  size_t a_lo = current.seq.size();
  size_t a_hi = 0;
  size_t b_lo = oriented.seq.size();
  size_t b_hi = 0;
  {
    // Current/goal positions consumed before the run.
    size_t ca = 0;
    size_t cb = 0;
    for (size_t k = 0; k < run_begin; ++k) {
      if (align.ops[k].pos_a >= 0) ++ca;
      if (align.ops[k].pos_b >= 0) ++cb;
    }
    a_lo = ca;
    b_lo = cb;
    for (size_t k = run_begin; k < run_end; ++k) {
      if (align.ops[k].pos_a >= 0) ++ca;
      if (align.ops[k].pos_b >= 0) ++cb;
    }
    a_hi = ca;
    b_hi = cb;
  }

  // Candidate spans: widen the run over adjacent matches, one step on each
  // side per round; the final candidate is the whole sequence replaced by the
  // oriented goal, which is always valid and ends the plan.
  const size_t max_widen =
      std::max(a_lo + b_lo, std::max(current.seq.size() - a_hi,
                                     oriented.seq.size() - b_hi));
  for (size_t widen = 0; widen <= max_widen + 1; ++widen) {
    size_t wl = std::min(widen, std::min(a_lo, b_lo));
    size_t wr = std::min(widen, std::min(current.seq.size() - a_hi,
                                         oriented.seq.size() - b_hi));
    if (widen > max_widen) {  // terminal fallback: full span
      wl = std::min(a_lo, b_lo);
      wr = std::min(current.seq.size() - a_hi, oriented.seq.size() - b_hi);
    }
    size_t sa_lo = a_lo - wl;
    size_t sa_hi = a_hi + wr;
    size_t sb_lo = b_lo - wl;
    size_t sb_hi = b_hi + wr;
    if (widen > max_widen) {
      sa_lo = 0;
      sa_hi = current.seq.size();
      sb_lo = 0;
      sb_hi = oriented.seq.size();
    }
    avoid_splitting_tunnel(current, g, sa_lo, sa_hi);

    std::vector<VertexId> replacement(oriented.seq.begin() + sb_lo,
                                      oriented.seq.begin() + sb_hi);
    // Bridge the junctions against the retained context.
    auto bridge_front = [&](VertexId left) {
      if (replacement.empty()) return;
      if (replacement.front() == left || g.has_edge(left, replacement.front()))
        return;
      auto path = g.shortest_path(left, replacement.front());
      replacement.insert(replacement.begin(), path.begin() + 1,
                         path.end() - 1);
    };
    auto bridge_back = [&](VertexId right) {
      if (replacement.empty()) return;
      if (replacement.back() == right || g.has_edge(replacement.back(), right))
        return;
      auto path = g.shortest_path(replacement.back(), right);
      replacement.insert(replacement.end(), path.begin() + 1, path.end() - 1);
    };
    if (replacement.empty() && sa_lo > 0 && sa_hi < current.seq.size()) {
      // Pure deletion: the splice ends must themselves join up.
      VertexId left = current.seq[sa_lo - 1];
      VertexId right = current.seq[sa_hi];
      if (left != right && !g.has_edge(left, right)) {
        auto path = g.shortest_path(left, right);
        replacement.assign(path.begin() + 1, path.end() - 1);
      }
    } else {
      if (sa_lo > 0) bridge_front(current.seq[sa_lo - 1]);
      if (sa_hi < current.seq.size()) bridge_back(current.seq[sa_hi]);
    }

    RoutingAction action;
    action.span_start = sa_lo;
    action.span_end = sa_hi;
    action.replacement = std::move(replacement);

    Configuration projected = project(current, action);
    if (projected.seq.empty()) continue;
    // The terminal fallback lays the whole oriented goal down verbatim; only
    // intermediate splices must remain graph-traversable.
    if (widen <= max_widen && validate(projected, g)) continue;
    int after = bidirectional_distance(projected, goal);
    bool simplified_ok =
        !goal_is_simplified ||
        bidirectional_distance(simplify(projected), goal) <= og.distance - 1;
    if (after <= og.distance - 1 && simplified_ok) {
      action.expected_distance_after = after;
      return NextStep{std::move(action), oriented};
    }
  }
  throw Error(ErrorCode::NoProgress,
              "no distance-reducing valid action found");
}

}  // namespace dooroute
