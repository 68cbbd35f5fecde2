#pragma once

// Bounded bidirectional search for a common descendant under a rewrite
// relation whose states never lose weight along a rewrite. Shared by the
// ungraded and graded engines.
//
// A System provides
//   using State;  // totally ordered, equality comparable
//   using Move;   // label of a single rewrite
//   using Hash;   // hash functor for State
//   void successors(State const&, std::vector<std::pair<Move, State>>&) const;
//   std::uint64_t weight(State const&) const;

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leavitt::detail {

struct SearchLimits {
  std::size_t max_steps;
  std::uint64_t max_weight;
  std::size_t max_states;
};

struct SideReport {
  std::size_t depth = 0;       // deepest layer expanded
  std::size_t states = 0;      // states discovered on this side
  std::uint64_t max_weight = 0;
  // Every state reachable from the start was enumerated (no limit or
  // relative bound cut anything off), so the closure is finite and known.
  bool closure_finite = false;
};

enum class SearchOutcome { met, disjoint, exhausted };

template <class Move, class State>
struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  State common{};
  std::vector<std::pair<Move, State>> lhs_path;
  std::vector<std::pair<Move, State>> rhs_path;
  SideReport lhs;
  SideReport rhs;
  bool size_pruned = false;
  bool depth_limited = false;
  bool state_limited = false;
};

template <class System>
class ConfluenceSearch {
 public:
  using State = typename System::State;
  using Move = typename System::Move;
  using Result = SearchResult<Move, State>;

  ConfluenceSearch(System const& system, SearchLimits limits)
      : system_(system), limits_(limits) {}

  // Searches for c with a ->* c and b ->* c. Frontiers are expanded one
  // whole layer at a time, smaller frontier first (then shallower side), each layer in State order.
  Result run(State const& a, State const& b) {
    Result result;
    Side sides[2];
    sides[0].reset(a, system_.weight(a));
    sides[1].reset(b, system_.weight(b));
    total_states_ = 2;
    if (a == b) {
      result.outcome = SearchOutcome::met;
      result.common = a;
      finish(result, sides);
      return result;
    }

    std::vector<std::pair<Move, State>> buffer;
    for (;;) {
      // With one closure fully known, the common descendant must lie in it;
      // weights never decrease, so the other side is refuted once its start
      // outweighs everything in that closure.
      for (int s = 0; s < 2; ++s) {
        Side const& done = sides[s];
        Side const& other = sides[1 - s];
        if (done.complete() && other.start_weight > done.max_weight) {
          result.outcome = SearchOutcome::disjoint;
          finish(result, sides);
          return result;
        }
      }
      if (sides[0].complete() && sides[1].complete()) {
        result.outcome = SearchOutcome::disjoint;
        finish(result, sides);
        return result;
      }

      int pick = -1;
      for (int s = 0; s < 2; ++s) {
        if (sides[s].closed) continue;
        if (pick < 0 || std::pair(sides[s].frontier.size(), sides[s].depth) <
                            std::pair(sides[pick].frontier.size(), sides[pick].depth)) {
          pick = s;
        }
      }
      if (pick < 0) break;

      Side& side = sides[pick];
      Side const& other = sides[1 - pick];
      if (side.depth >= limits_.max_steps) {
        side.closed = true;
        side.cut = true;
        result.depth_limited = true;
        continue;
      }

      std::uint64_t const relative_bound = other.complete()
                                               ? other.max_weight
                                               : std::numeric_limits<std::uint64_t>::max();
      std::vector<std::size_t> frontier = std::move(side.frontier);
      std::sort(frontier.begin(), frontier.end(), [&](std::size_t x, std::size_t y) {
        return side.states[x] < side.states[y];
      });
      std::vector<std::size_t> next;
      for (std::size_t parent : frontier) {
        buffer.clear();
        system_.successors(side.states[parent], buffer);
        for (auto& [move, t] : buffer) {
          std::uint64_t const w = system_.weight(t);
          if (w > relative_bound) {
            side.bounded = true;
            continue;
          }
          if (w > limits_.max_weight) {
            side.cut = true;
            result.size_pruned = true;
            continue;
          }
          if (side.index.contains(t)) continue;
          if (total_states_ >= limits_.max_states) {
            side.cut = true;
            result.state_limited = true;
            side.depth += 1;
            finish(result, sides);
            return result;
          }
          std::size_t id = side.states.size();
          side.index.emplace(t, id);
          side.nodes.push_back({parent, move});
          side.states.push_back(t);
          side.max_weight = std::max(side.max_weight, w);
          ++total_states_;
          if (auto hit = other.index.find(t); hit != other.index.end()) {
            side.depth += 1;
            result.outcome = SearchOutcome::met;
            result.common = t;
            std::size_t ids[2];
            ids[pick] = id;
            ids[1 - pick] = hit->second;
            result.lhs_path = sides[0].path_to(ids[0]);
            result.rhs_path = sides[1].path_to(ids[1]);
            finish(result, sides);
            return result;
          }
          next.push_back(id);
        }
      }
      side.depth += 1;
      side.frontier = std::move(next);
      if (side.frontier.empty()) side.closed = true;
    }
    finish(result, sides);
    return result;
  }

  // Breadth-first closure of a single start state under the same limits.
  std::pair<std::vector<State>, bool> closure(State const& a) {
    Side side;
    side.reset(a, system_.weight(a));
    std::vector<std::pair<Move, State>> buffer;
    while (!side.frontier.empty()) {
      if (side.depth >= limits_.max_steps) {
        side.cut = true;
        break;
      }
      std::vector<std::size_t> next;
      bool stop = false;
      for (std::size_t parent : side.frontier) {
        buffer.clear();
        system_.successors(side.states[parent], buffer);
        for (auto& [move, t] : buffer) {
          if (system_.weight(t) > limits_.max_weight) {
            side.cut = true;
            continue;
          }
          if (side.index.contains(t)) continue;
          if (side.states.size() >= limits_.max_states) {
            side.cut = true;
            stop = true;
            break;
          }
          side.index.emplace(t, side.states.size());
          side.nodes.push_back({parent, move});
          side.states.push_back(t);
          next.push_back(side.states.size() - 1);
        }
        if (stop) break;
      }
      if (stop) break;
      side.frontier = std::move(next);
      side.depth += 1;
    }
    std::vector<State> states = std::move(side.states);
    std::sort(states.begin(), states.end());
    return {std::move(states), !side.cut};
  }

 private:
  static constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();

  struct Node {
    std::size_t parent;
    Move move;
  };

  struct Side {
    std::unordered_map<State, std::size_t, typename System::Hash> index;
    std::vector<State> states;
    std::vector<Node> nodes;
    std::vector<std::size_t> frontier;
    std::size_t depth = 0;
    std::uint64_t start_weight = 0;
    std::uint64_t max_weight = 0;
    bool closed = false;
    bool cut = false;      // a hard limit discarded something
    bool bounded = false;  // discarded states heavier than the other closure

    void reset(State const& start, std::uint64_t w) {
      index.emplace(start, 0);
      states.push_back(start);
      nodes.push_back({kRoot, Move{}});
      frontier.push_back(0);
      start_weight = max_weight = w;
    }

    bool complete() const { return closed && !cut; }

    std::vector<std::pair<Move, State>> path_to(std::size_t id) const {
      std::vector<std::pair<Move, State>> path;
      while (nodes[id].parent != kRoot) {
        path.emplace_back(nodes[id].move, states[id]);
        id = nodes[id].parent;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
  };

  static void fill(SideReport& report, Side const& side) {
    report.depth = side.depth;
    report.states = side.states.size();
    report.max_weight = side.max_weight;
    report.closure_finite = side.complete() && !side.bounded;
  }

  static void finish(Result& result, Side const (&sides)[2]) {
    fill(result.lhs, sides[0]);
    fill(result.rhs, sides[1]);
  }

  System const& system_;
  SearchLimits limits_;
  std::size_t total_states_ = 0;
};

}  // namespace leavitt::detail
