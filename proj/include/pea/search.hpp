#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pea::plan {

/// Search-space description over opaque states and actions. successors must
/// be deterministic and finite per state; state_key must collide only on
/// semantically equal states.
template <class State, class Action>
struct SearchProblem {
  State initial;
  std::function<bool(const State&)> is_goal;
  std::function<std::vector<std::pair<Action, State>>(const State&)> successors;
  std::function<std::string(const State&)> state_key;
};

/// Unit-cost action sequence; cost is the action count.
template <class Action>
struct Plan {
  std::vector<Action> actions;
  std::size_t cost() const { return actions.size(); }
};

/// Desk-scale guardrails for searches that would otherwise run away.
struct SearchLimits {
  std::size_t max_expanded_states = 1'000'000;
  std::size_t max_depth = 64;
};

enum class SearchStatus { found, no_plan, limit_exceeded };

template <class Action>
struct SearchResult {
  SearchStatus status = SearchStatus::no_plan;
  Plan<Action> plan; // set iff status == found
  std::size_t expanded = 0;
};

struct PlanCheck {
  bool valid = false;
  std::size_t failed_step = 0; // == plan length when the goal test fails
  std::string reason;
};

/// Breadth-first search; unit costs make the first goal hit a minimum-length
/// plan, and successor order fixes tie-breaks. `deduplicate` exists so tests
/// can show the visited set never changes the returned plan length.
template <class State, class Action>
SearchResult<Action> bfs_plan(const SearchProblem<State, Action>& problem,
                              const SearchLimits& limits, bool deduplicate = true) {
  if (limits.max_expanded_states < 1 || limits.max_depth < 1)
    throw std::invalid_argument("search limits must be >= 1");

  SearchResult<Action> result;
  if (problem.is_goal(problem.initial)) {
    result.status = SearchStatus::found;
    return result;
  }

  struct Node {
    State state;
    std::size_t depth;
    std::vector<Action> path;
  };
  std::deque<Node> frontier;
  std::unordered_set<std::string> visited;
  frontier.push_back({problem.initial, 0, {}});
  if (deduplicate) visited.insert(problem.state_key(problem.initial));

  bool depth_capped = false;
  while (!frontier.empty()) {
    Node current = std::move(frontier.front());
    frontier.pop_front();
    if (result.expanded >= limits.max_expanded_states) {
      result.status = SearchStatus::limit_exceeded;
      return result;
    }
    ++result.expanded;
    if (current.depth >= limits.max_depth) {
      depth_capped = true;
      continue;
    }

    for (auto& [action, next] : problem.successors(current.state)) {
      if (deduplicate) {
        std::string key = problem.state_key(next);
        if (!visited.insert(std::move(key)).second) continue;
      }
      std::vector<Action> path = current.path;
      path.push_back(action);
      if (problem.is_goal(next)) {
        result.status = SearchStatus::found;
        result.plan.actions = std::move(path);
        return result;
      }
      frontier.push_back({std::move(next), current.depth + 1, std::move(path)});
    }
  }
  // A frontier exhausted without ever hitting the depth cap means the
  // reachable space truly holds no goal; otherwise deeper plans may exist.
  result.status = depth_capped ? SearchStatus::limit_exceeded : SearchStatus::no_plan;
  return result;
}

/// Simulate the plan from the initial state. Invalid at the first step whose
/// action is not among the current state's successors; otherwise the goal
/// test decides, reporting step == plan length on a final-state miss.
template <class State, class Action>
PlanCheck verify_plan(const SearchProblem<State, Action>& problem,
                      const Plan<Action>& plan) {
  State current = problem.initial;
  for (std::size_t i = 0; i < plan.actions.size(); ++i) {
    bool applied = false;
    for (auto& [action, next] : problem.successors(current)) {
      if (action == plan.actions[i]) {
        current = std::move(next);
        applied = true;
        break;
      }
    }
    if (!applied)
      return {false, i, "action not applicable in step " + std::to_string(i)};
  }
  if (!problem.is_goal(current))
    return {false, plan.actions.size(), "final state does not satisfy the goal"};
  return {true, 0, ""};
}

/// Iterative-deepening DFS oracle: minimum-length plan within max_depth or
/// NO_PLAN. Prunes only revisits along the current path, which never cuts a
/// shortest plan, so optimality matches bfs_plan.
template <class State, class Action>
SearchResult<Action> iddfs_oracle(const SearchProblem<State, Action>& problem,
                                  std::size_t max_depth) {
  SearchResult<Action> result;

  std::vector<Action> path;
  std::vector<std::string> on_path;

  const std::function<bool(const State&, std::size_t)> dfs =
      [&](const State& state, std::size_t remaining) -> bool {
    ++result.expanded;
    if (problem.is_goal(state)) return true;
    if (remaining == 0) return false;
    std::string key = problem.state_key(state);
    for (const std::string& seen : on_path)
      if (seen == key) return false;
    on_path.push_back(std::move(key));
    for (auto& [action, next] : problem.successors(state)) {
      path.push_back(action);
      if (dfs(next, remaining - 1)) {
        on_path.pop_back();
        return true;
      }
      path.pop_back();
    }
    on_path.pop_back();
    return false;
  };

  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    path.clear();
    on_path.clear();
    if (dfs(problem.initial, depth)) {
      result.status = SearchStatus::found;
      result.plan.actions = path;
      return result;
    }
  }
  result.status = SearchStatus::no_plan;
  return result;
}

} // namespace pea::plan
