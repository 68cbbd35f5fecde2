#include "leavitt/monoid.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "leavitt/detail/confluence_search.hpp"
#include "leavitt/error.hpp"

namespace leavitt {

// MonoidElement

MonoidElement MonoidElement::of(VertexId v, BigInt count) {
  MonoidElement a;
  a.add(v, count);
  return a;
}

MonoidElement MonoidElement::from_dense(std::vector<BigInt> const& coefficients) {
  MonoidElement a;
  for (VertexId v = 0; v < coefficients.size(); ++v) {
    if (coefficients[v] < 0) throw InvalidParameter("negative coefficient in monoid element");
    if (coefficients[v] != 0) a.terms_.push_back({v, coefficients[v]});
  }
  return a;
}

BigInt MonoidElement::coefficient(VertexId v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](Term const& t, VertexId x) { return t.vertex < x; });
  return it != terms_.end() && it->vertex == v ? it->count : BigInt(0);
}

BigInt MonoidElement::total() const {
  BigInt sum = 0;
  for (auto const& t : terms_) sum += t.count;
  return sum;
}

std::vector<BigInt> MonoidElement::dense(std::size_t vertex_count) const {
  std::vector<BigInt> out(vertex_count);
  for (auto const& t : terms_) out.at(t.vertex) = t.count;
  return out;
}

MonoidElement& MonoidElement::add(VertexId v, BigInt const& n) {
  if (n < 0) throw InvalidParameter("cannot add a negative count");
  if (n == 0) return *this;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](Term const& t, VertexId x) { return t.vertex < x; });
  if (it != terms_.end() && it->vertex == v) {
    it->count += n;
  } else {
    terms_.insert(it, Term{v, n});
  }
  return *this;
}

MonoidElement& MonoidElement::remove(VertexId v, BigInt const& n) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](Term const& t, VertexId x) { return t.vertex < x; });
  if (n < 0 || it == terms_.end() || it->vertex != v || it->count < n) {
    throw InvalidParameter("cannot remove more copies of a vertex than are present");
  }
  it->count -= n;
  if (it->count == 0) terms_.erase(it);
  return *this;
}

MonoidElement& MonoidElement::operator+=(MonoidElement const& other) {
  for (auto const& t : other.terms_) add(t.vertex, t.count);
  return *this;
}

MonoidElement MonoidElement::scaled(BigInt const& k) const {
  if (k < 0) throw InvalidParameter("cannot scale by a negative count");
  if (k == 0) return {};
  MonoidElement out = *this;
  for (auto& t : out.terms_) t.count *= k;
  return out;
}

std::strong_ordering operator<=>(MonoidElement const& a, MonoidElement const& b) {
  // Dense lexicographic order: at the first vertex where the coefficients
  // differ, the larger coefficient wins.
  std::size_t i = 0;
  for (; i < a.terms_.size() && i < b.terms_.size(); ++i) {
    auto const& x = a.terms_[i];
    auto const& y = b.terms_[i];
    if (x.vertex != y.vertex) {
      return x.vertex < y.vertex ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (x.count != y.count) {
      return x.count < y.count ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  if (a.terms_.size() == b.terms_.size()) return std::strong_ordering::equal;
  return i < a.terms_.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

MonoidElement unit_element(Graph const& g) {
  MonoidElement a;
  for (VertexId v = 0; v < g.vertex_count(); ++v) a.add(v, 1);
  return a;
}

// Budget and labels

void SearchBudget::validate() const {
  if (max_steps == 0 || max_element_size == 0 || max_frontier == 0) {
    throw InvalidParameter("search budgets must be positive");
  }
}

char const* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::equal: return "equal";
    case VerdictKind::unequal: return "unequal";
    case VerdictKind::unknown: return "unknown";
  }
  return "?";
}

char const* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::k0_class: return "k0_class";
    case WitnessKind::zero_element: return "zero_element";
    case WitnessKind::disjoint_closures: return "disjoint_closures";
    case WitnessKind::graded_invariant: return "graded_invariant";
  }
  return "?";
}

// Rewriting

std::optional<MonoidElement> rewrite_at(Graph const& g, MonoidElement const& a, VertexId v) {
  if (g.is_sink(v) || a.coefficient(v) == 0) return std::nullopt;
  MonoidElement out = a;
  out.remove(v, 1);
  for (EdgeId e : g.out_edges(v)) out.add(g.edge(e).range, 1);
  return out;
}

std::vector<MonoidElement> one_step_rewrites(Graph const& g, MonoidElement const& a) {
  if (a.is_zero()) throw ZeroElement("the one-step relation is not defined on 0");
  std::vector<MonoidElement> out;
  for (auto const& t : a.terms()) {
    auto b = rewrite_at(g, a, t.vertex);
    if (b && std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(std::move(*b));
  }
  return out;
}

namespace {

// Search states are dense machine-word coefficient vectors; the budget keeps
// element sizes far below overflow.
class DenseSystem {
 public:
  using State = std::vector<std::uint64_t>;
  using Move = VertexId;

  struct Hash {
    std::size_t operator()(State const& s) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (std::uint64_t x : s) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  explicit DenseSystem(Graph const& g) : sink_(g.vertex_count()), gains_(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      sink_[v] = g.is_sink(v);
      for (VertexId r = 0; r < g.vertex_count(); ++r) {
        if (std::size_t m = g.multiplicity(v, r)) gains_[v].emplace_back(r, m);
      }
    }
  }

  void successors(State const& s, std::vector<std::pair<Move, State>>& out) const {
    for (VertexId v = 0; v < s.size(); ++v) {
      if (s[v] == 0 || sink_[v]) continue;
      State t = s;
      t[v] -= 1;
      for (auto [r, m] : gains_[v]) t[r] += m;
      bool duplicate = std::any_of(out.begin(), out.end(),
                                   [&](auto const& p) { return p.second == t; });
      if (!duplicate) out.emplace_back(v, std::move(t));
    }
  }

  std::uint64_t weight(State const& s) const {
    std::uint64_t w = 0;
    for (std::uint64_t x : s) w += x;
    return w;
  }

 private:
  std::vector<bool> sink_;
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> gains_;
};

// Coefficients beyond this cannot be searched without risking overflow.
constexpr std::uint64_t kSearchableCoefficient = std::uint64_t{1} << 40;

std::optional<DenseSystem::State> to_state(MonoidElement const& a, std::size_t n) {
  DenseSystem::State s(n, 0);
  BigInt total = 0;
  for (auto const& t : a.terms()) {
    total += t.count;
    if (total > kSearchableCoefficient) return std::nullopt;
    s[t.vertex] = static_cast<std::uint64_t>(t.count);
  }
  return s;
}

MonoidElement from_state(DenseSystem::State const& s) {
  MonoidElement a;
  for (VertexId v = 0; v < s.size(); ++v) {
    if (s[v] != 0) a.add(v, s[v]);
  }
  return a;
}

std::vector<RewriteStep> to_steps(std::vector<std::pair<VertexId, DenseSystem::State>> const& path) {
  std::vector<RewriteStep> out;
  out.reserve(path.size());
  for (auto const& [v, s] : path) out.push_back({v, from_state(s)});
  return out;
}

detail::SearchLimits limits_of(SearchBudget const& b) {
  return {b.max_steps, b.max_element_size, b.max_frontier};
}

}  // namespace

ReachableSet reachable(Graph const& g, MonoidElement const& a, SearchBudget const& budget) {
  if (a.is_zero()) throw ZeroElement("reachability is not defined from 0");
  budget.validate();
  auto start = to_state(a, g.vertex_count());
  if (!start) return ReachableSet{{a}, false};
  DenseSystem system(g);
  detail::ConfluenceSearch<DenseSystem> search(system, limits_of(budget));
  auto [states, complete] = search.closure(*start);
  ReachableSet out;
  out.complete = complete;
  for (auto const& s : states) out.elements.push_back(from_state(s));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Verdict decide_equal(Graph const& g, MonoidElement const& a, MonoidElement const& b,
                     SearchBudget const& budget) {
  return decide_equal(g, k0_of_graph(g), a, b, budget);
}

Verdict decide_equal(Graph const& g, K0Data const& k0, MonoidElement const& a,
                     MonoidElement const& b, SearchBudget const& budget) {
  budget.validate();
  Verdict verdict;
  verdict.stats.budget = budget;

  if (a.is_zero() || b.is_zero()) {
    // The one-step relation lives on nonzero elements, so 0 is only
    // congruent to itself.
    if (a.is_zero() && b.is_zero()) {
      verdict.kind = VerdictKind::equal;
      verdict.certificate = Certificate{};
    } else {
      verdict.kind = VerdictKind::unequal;
      verdict.witness = UnequalWitness{WitnessKind::zero_element, class_in_k0(k0, a),
                                       class_in_k0(k0, b), "exactly one side is zero"};
    }
    return verdict;
  }
  if (a == b) {
    verdict.kind = VerdictKind::equal;
    verdict.certificate = Certificate{a, {}, {}};
    return verdict;
  }

  K0Class ca = class_in_k0(k0, a);
  K0Class cb = class_in_k0(k0, b);
  if (ca != cb) {
    verdict.kind = VerdictKind::unequal;
    verdict.witness = UnequalWitness{WitnessKind::k0_class, std::move(ca), std::move(cb),
                                     "K0 classes differ"};
    return verdict;
  }

  auto sa = to_state(a, g.vertex_count());
  auto sb = to_state(b, g.vertex_count());
  if (!sa || !sb) {
    verdict.stats.size_pruned = true;
    return verdict;
  }

  DenseSystem system(g);
  detail::ConfluenceSearch<DenseSystem> search(system, limits_of(budget));
  auto result = search.run(*sa, *sb);

  SearchStats& st = verdict.stats;
  st.lhs_depth = result.lhs.depth;
  st.rhs_depth = result.rhs.depth;
  st.states = result.lhs.states + result.rhs.states;
  st.size_pruned = result.size_pruned;
  st.depth_limited = result.depth_limited;
  st.frontier_limited = result.state_limited;
  st.lhs_closure_finite = result.lhs.closure_finite;
  st.rhs_closure_finite = result.rhs.closure_finite;
  st.lhs_max_weight = result.lhs.max_weight;
  st.rhs_max_weight = result.rhs.max_weight;

  switch (result.outcome) {
    case detail::SearchOutcome::met:
      verdict.kind = VerdictKind::equal;
      verdict.certificate =
          Certificate{from_state(result.common), to_steps(result.lhs_path), to_steps(result.rhs_path)};
      break;
    case detail::SearchOutcome::disjoint:
      verdict.kind = VerdictKind::unequal;
      verdict.witness = UnequalWitness{WitnessKind::disjoint_closures, std::move(ca), std::move(cb),
                                       "rewrite closures are finite and share no element"};
      break;
    case detail::SearchOutcome::exhausted:
      break;
  }
  return verdict;
}

namespace {

bool replay_chain(Graph const& g, MonoidElement current, std::vector<RewriteStep> const& steps,
                  MonoidElement const& end) {
  for (auto const& step : steps) {
    if (step.vertex >= g.vertex_count()) return false;
    auto next = rewrite_at(g, current, step.vertex);
    if (!next || *next != step.result) return false;
    current = std::move(*next);
  }
  return current == end;
}

}  // namespace

bool certificate_replays(Graph const& g, MonoidElement const& a, MonoidElement const& b,
                         Certificate const& cert) {
  return replay_chain(g, a, cert.lhs, cert.common) && replay_chain(g, b, cert.rhs, cert.common);
}

MonoidEnumeration enumerate_monoid(Graph const& g, SearchBudget const& budget) {
  budget.validate();
  K0Data const k0 = k0_of_graph(g);
  MonoidEnumeration out;
  out.representatives.push_back(MonoidElement{});
  std::vector<K0Class> classes{k0.zero()};

  auto by_size = [](MonoidElement const& x, MonoidElement const& y) {
    BigInt tx = x.total(), ty = y.total();
    if (tx != ty) return tx < ty;
    return x > y;  // larger dense-lexicographic means earlier vertices first
  };
  std::set<MonoidElement, decltype(by_size)> pending(by_size);
  for (VertexId v = 0; v < g.vertex_count(); ++v) pending.insert(MonoidElement::of(v));

  while (!pending.empty()) {
    MonoidElement x = *pending.begin();
    pending.erase(pending.begin());
    K0Class cx = class_in_k0(k0, x);

    bool merged = false;
    bool undecided = false;
    for (std::size_t i = 1; i < out.representatives.size() && !merged; ++i) {
      if (classes[i] != cx) continue;
      Verdict v = decide_equal(g, k0, x, out.representatives[i], budget);
      merged = v.is_equal();
      undecided = undecided || v.is_unknown();
    }
    if (merged) continue;
    if (undecided) return out;
    if (out.representatives.size() >= kMaxEnumeratedClasses ||
        x.total() > budget.max_element_size) {
      return out;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) pending.insert(x + MonoidElement::of(v));
    out.representatives.push_back(std::move(x));
    classes.push_back(std::move(cx));
  }
  out.complete = true;
  return out;
}

}  // namespace leavitt
