#include "leavitt/talented.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <tuple>

#include "leavitt/detail/confluence_search.hpp"
#include "leavitt/error.hpp"

namespace leavitt {

namespace {

auto key(GradedElement::Term const& t) { return std::make_tuple(t.shift, t.vertex); }

template <class Terms>
auto find_term(Terms& terms, VertexId v, Shift shift) {
  return std::lower_bound(terms.begin(), terms.end(), std::make_tuple(shift, v),
                          [](auto const& t, auto const& k) { return key(t) < k; });
}

}  // namespace

GradedElement GradedElement::of(VertexId v, Shift shift, BigInt count) {
  GradedElement a;
  a.add(v, shift, count);
  return a;
}

GradedElement GradedElement::unit(Graph const& g, Shift shift) {
  GradedElement a;
  for (VertexId v = 0; v < g.vertex_count(); ++v) a.add(v, shift, 1);
  return a;
}

GradedElement GradedElement::lift(MonoidElement const& a) {
  GradedElement out;
  for (auto const& t : a.terms()) out.add(t.vertex, 0, t.count);
  return out;
}

BigInt GradedElement::coefficient(VertexId v, Shift shift) const {
  auto it = find_term(terms_, v, shift);
  return it != terms_.end() && it->vertex == v && it->shift == shift ? it->count : BigInt(0);
}

BigInt GradedElement::total() const {
  BigInt sum = 0;
  for (auto const& t : terms_) sum += t.count;
  return sum;
}

GradedElement& GradedElement::add(VertexId v, Shift shift, BigInt const& n) {
  if (n < 0) throw InvalidParameter("cannot add a negative count");
  if (n == 0) return *this;
  auto it = find_term(terms_, v, shift);
  if (it != terms_.end() && it->vertex == v && it->shift == shift) {
    it->count += n;
  } else {
    terms_.insert(it, Term{shift, v, n});
  }
  return *this;
}

GradedElement& GradedElement::remove(VertexId v, Shift shift, BigInt const& n) {
  auto it = find_term(terms_, v, shift);
  if (n < 0 || it == terms_.end() || it->vertex != v || it->shift != shift || it->count < n) {
    throw InvalidParameter("cannot remove more copies of v(i) than are present");
  }
  it->count -= n;
  if (it->count == 0) terms_.erase(it);
  return *this;
}

GradedElement& GradedElement::operator+=(GradedElement const& other) {
  for (auto const& t : other.terms_) add(t.vertex, t.shift, t.count);
  return *this;
}

bool operator<(GradedElement const& a, GradedElement const& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](auto const& x, auto const& y) {
        return std::make_tuple(x.shift, x.vertex, x.count) < std::make_tuple(y.shift, y.vertex, y.count);
      });
}

GradedElement shift_action(Shift n, GradedElement const& a) {
  GradedElement out;
  for (auto const& t : a.terms()) out.add(t.vertex, t.shift + n, t.count);
  return out;
}

MonoidElement forget_shifts(GradedElement const& a) {
  MonoidElement out;
  for (auto const& t : a.terms()) out.add(t.vertex, t.count);
  return out;
}

std::optional<GradedElement> graded_rewrite_at(Graph const& g, GradedElement const& a, VertexId v,
                                               Shift shift) {
  if (v >= g.vertex_count() || g.is_sink(v) || a.coefficient(v, shift) == 0) return std::nullopt;
  GradedElement out = a;
  out.remove(v, shift, 1);
  for (EdgeId e : g.out_edges(v)) out.add(g.edge(e).range, shift + 1, 1);
  return out;
}

std::vector<GradedElement> graded_one_step(Graph const& g, GradedElement const& a) {
  if (a.is_zero()) throw ZeroElement("the graded one-step relation is not defined on 0");
  std::vector<GradedElement> out;
  for (auto const& t : a.terms()) {
    auto b = graded_rewrite_at(g, a, t.vertex, t.shift);
    if (b && std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(std::move(*b));
  }
  return out;
}

namespace {

bool replay_graded(Graph const& g, GradedElement current,
                   std::vector<GradedRewriteStep> const& steps, GradedElement const& end) {
  for (auto const& step : steps) {
    auto next = graded_rewrite_at(g, current, step.vertex, step.shift);
    if (!next || *next != step.result) return false;
    current = std::move(*next);
  }
  return current == end;
}

}  // namespace

bool graded_certificate_replays(Graph const& g, GradedElement const& a, GradedElement const& b,
                                GradedCertificate const& cert) {
  return replay_graded(g, a, cert.lhs, cert.common) && replay_graded(g, b, cert.rhs, cert.common);
}

GradedCertificate shift_certificate(Shift n, GradedCertificate const& cert) {
  GradedCertificate out{shift_action(n, cert.common), {}, {}};
  for (auto const& s : cert.lhs) out.lhs.push_back({s.vertex, s.shift + n, shift_action(n, s.result)});
  for (auto const& s : cert.rhs) out.rhs.push_back({s.vertex, s.shift + n, shift_action(n, s.result)});
  return out;
}

// Evaluations

namespace {

constexpr std::uint64_t kPrimes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049};
constexpr std::size_t kPointsPerPrime = 4;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t big_mod(BigInt const& x, std::uint64_t p) {
  return static_cast<std::uint64_t>(mod_floor(x, BigInt(p)));
}

}  // namespace

// Only lambdas where the relation columns are dependent give a nonzero
// quotient, so every lambda in F_p^* is tried and the singular ones kept.
GradedEvaluations::GradedEvaluations(Graph const& g) : vertex_count_(g.vertex_count()) {
  for (std::uint64_t p : kPrimes) {
    std::size_t kept = 0;
    for (std::uint64_t lambda = 1; lambda < p && kept < kPointsPerPrime; ++lambda) {
      Point pt{p, lambda, inv_mod(lambda, p), {}, {}};
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        std::vector<std::uint64_t> col(vertex_count_, 0);
        col[v] = 1;
        for (EdgeId e : g.out_edges(v)) {
          VertexId r = g.edge(e).range;
          col[r] = (col[r] + p - lambda) % p;
        }
        for (std::size_t b = 0; b < pt.basis.size(); ++b) {
          std::uint64_t f = col[pt.pivots[b]];
          if (f == 0) continue;
          for (std::size_t i = 0; i < vertex_count_; ++i) {
            col[i] = (col[i] + p - mul_mod(f, pt.basis[b][i], p)) % p;
          }
        }
        auto nz = std::find_if(col.begin(), col.end(), [](std::uint64_t x) { return x != 0; });
        if (nz == col.end()) continue;
        std::size_t pivot = static_cast<std::size_t>(nz - col.begin());
        std::uint64_t inv = inv_mod(col[pivot], p);
        for (auto& x : col) x = mul_mod(x, inv, p);
        // Keep the basis fully reduced so membership is a single pass.
        for (auto& row : pt.basis) {
          std::uint64_t f = row[pivot];
          if (f == 0) continue;
          for (std::size_t i = 0; i < vertex_count_; ++i) {
            row[i] = (row[i] + p - mul_mod(f, col[i], p)) % p;
          }
        }
        pt.basis.push_back(std::move(col));
        pt.pivots.push_back(pivot);
      }
      if (pt.basis.size() == vertex_count_) continue;
      points_.push_back(std::move(pt));
      ++kept;
    }
  }
}

std::pair<std::uint64_t, std::uint64_t> GradedEvaluations::point(std::size_t i) const {
  return {points_.at(i).prime, points_.at(i).lambda};
}

std::vector<std::uint64_t> GradedEvaluations::evaluate(Point const& p, GradedElement const& a) const {
  std::vector<std::uint64_t> out(vertex_count_, 0);
  for (auto const& t : a.terms()) {
    std::uint64_t w = t.shift >= 0 ? pow_mod(p.lambda, static_cast<std::uint64_t>(t.shift), p.prime)
                                   : pow_mod(p.lambda_inverse, static_cast<std::uint64_t>(-t.shift), p.prime);
    out[t.vertex] = (out[t.vertex] + mul_mod(w, big_mod(t.count, p.prime), p.prime)) % p.prime;
  }
  return out;
}

bool GradedEvaluations::in_span(Point const& p, std::vector<std::uint64_t> v) const {
  for (std::size_t b = 0; b < p.basis.size(); ++b) {
    std::uint64_t f = v[p.pivots[b]];
    if (f == 0) continue;
    for (std::size_t i = 0; i < vertex_count_; ++i) {
      v[i] = (v[i] + p.prime - mul_mod(f, p.basis[b][i], p.prime)) % p.prime;
    }
  }
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

std::optional<std::size_t> GradedEvaluations::separating_point(GradedElement const& a,
                                                               GradedElement const& b) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    Point const& p = points_[i];
    auto ea = evaluate(p, a);
    auto eb = evaluate(p, b);
    for (std::size_t k = 0; k < vertex_count_; ++k) ea[k] = (ea[k] + p.prime - eb[k]) % p.prime;
    if (!in_span(p, std::move(ea))) return i;
  }
  return std::nullopt;
}

// Search

namespace {

struct PackedTerm {
  Shift shift;
  std::uint32_t vertex;
  std::uint64_t count;

  friend bool operator==(PackedTerm const&, PackedTerm const&) = default;
  friend auto operator<=>(PackedTerm const&, PackedTerm const&) = default;
};

class GradedSystem {
 public:
  using State = std::vector<PackedTerm>;
  using Move = std::pair<VertexId, Shift>;

  struct Hash {
    std::size_t operator()(State const& s) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto const& t : s) {
        for (std::uint64_t x : {static_cast<std::uint64_t>(t.shift), std::uint64_t{t.vertex}, t.count}) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
          h *= 1099511628211ULL;
        }
      }
      return static_cast<std::size_t>(h);
    }
  };

  explicit GradedSystem(Graph const& g) : gains_(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (VertexId r = 0; r < g.vertex_count(); ++r) {
        if (std::size_t m = g.multiplicity(v, r)) gains_[v].emplace_back(static_cast<std::uint32_t>(r), m);
      }
    }
  }

  void successors(State const& s, std::vector<std::pair<Move, State>>& out) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto const& term = s[i];
      if (gains_[term.vertex].empty()) continue;
      State t = s;
      if (--t[i].count == 0) t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto [r, m] : gains_[term.vertex]) {
        PackedTerm add{term.shift + 1, r, m};
        auto it = std::lower_bound(t.begin(), t.end(), add, [](auto const& x, auto const& y) {
          return std::tie(x.shift, x.vertex) < std::tie(y.shift, y.vertex);
        });
        if (it != t.end() && it->shift == add.shift && it->vertex == add.vertex) {
          it->count += m;
        } else {
          t.insert(it, add);
        }
      }
      bool duplicate = std::any_of(out.begin(), out.end(), [&](auto const& p) { return p.second == t; });
      if (!duplicate) out.emplace_back(Move{term.vertex, term.shift}, std::move(t));
    }
  }

  std::uint64_t weight(State const& s) const {
    std::uint64_t w = 0;
    for (auto const& t : s) w += t.count;
    return w;
  }

 private:
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> gains_;
};

constexpr std::uint64_t kSearchableCoefficient = std::uint64_t{1} << 40;

std::optional<GradedSystem::State> to_state(GradedElement const& a) {
  GradedSystem::State s;
  BigInt total = 0;
  for (auto const& t : a.terms()) {
    total += t.count;
    if (total > kSearchableCoefficient) return std::nullopt;
    s.push_back({t.shift, static_cast<std::uint32_t>(t.vertex), static_cast<std::uint64_t>(t.count)});
  }
  return s;
}

GradedElement from_state(GradedSystem::State const& s) {
  GradedElement a;
  for (auto const& t : s) a.add(t.vertex, t.shift, t.count);
  return a;
}

std::vector<GradedRewriteStep> to_steps(
    std::vector<std::pair<GradedSystem::Move, GradedSystem::State>> const& path) {
  std::vector<GradedRewriteStep> out;
  for (auto const& [move, s] : path) out.push_back({move.first, move.second, from_state(s)});
  return out;
}

GradedVerdict decide(Graph const& g, K0Data const& k0, GradedEvaluations const& evals,
                     GradedElement const& a, GradedElement const& b, SearchBudget const& budget) {
  budget.validate();
  GradedVerdict verdict;
  verdict.stats.budget = budget;
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) {
      verdict.kind = VerdictKind::equal;
      verdict.certificate = GradedCertificate{};
    } else {
      verdict.kind = VerdictKind::unequal;
      verdict.witness = UnequalWitness{WitnessKind::zero_element, class_in_k0(k0, forget_shifts(a)),
                                       class_in_k0(k0, forget_shifts(b)), "exactly one side is zero"};
    }
    return verdict;
  }
  if (a == b) {
    verdict.kind = VerdictKind::equal;
    verdict.certificate = GradedCertificate{a, {}, {}};
    return verdict;
  }
  K0Class ca = class_in_k0(k0, forget_shifts(a));
  K0Class cb = class_in_k0(k0, forget_shifts(b));
  if (ca != cb) {
    verdict.kind = VerdictKind::unequal;
    verdict.witness = UnequalWitness{WitnessKind::k0_class, std::move(ca), std::move(cb),
                                     "K0 classes of the shift-forgotten elements differ"};
    return verdict;
  }
  if (auto point = evals.separating_point(a, b)) {
    auto [p, lambda] = evals.point(*point);
    verdict.kind = VerdictKind::unequal;
    verdict.witness = UnequalWitness{WitnessKind::graded_invariant, {}, {},
                                     "graded K0 evaluated at x = " + std::to_string(lambda) +
                                         " over F_" + std::to_string(p) + " differs"};
    return verdict;
  }

  auto sa = to_state(a);
  auto sb = to_state(b);
  if (!sa || !sb) {
    verdict.stats.size_pruned = true;
    return verdict;
  }
  GradedSystem system(g);
  detail::ConfluenceSearch<GradedSystem> search(
      system, {budget.max_steps, budget.max_element_size, budget.max_frontier});
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
      verdict.certificate = GradedCertificate{from_state(result.common), to_steps(result.lhs_path),
                                              to_steps(result.rhs_path)};
      break;
    case detail::SearchOutcome::disjoint:
      verdict.kind = VerdictKind::unequal;
      verdict.witness = UnequalWitness{WitnessKind::disjoint_closures, std::move(ca), std::move(cb),
                                       "graded rewrite closures are finite and share no element"};
      break;
    case detail::SearchOutcome::exhausted:
      break;
  }
  return verdict;
}

}  // namespace

GradedVerdict graded_decide_equal(Graph const& g, GradedElement const& a, GradedElement const& b,
                                  SearchBudget const& budget) {
  return decide(g, k0_of_graph(g), GradedEvaluations(g), a, b, budget);
}

// Graded Serre check

void ShiftWindow::validate() const {
  if (lo > hi) throw InvalidParameter("shift window requires lo <= hi");
}

char const* to_string(GradedFreeStatus s) {
  switch (s) {
    case GradedFreeStatus::holds: return "holds";
    case GradedFreeStatus::fails_in_window: return "fails_in_window";
    case GradedFreeStatus::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Largest number of shift multisets examined (before invariant filtering) per
// vertex.
constexpr std::size_t kMaxShiftMultisets = 200'000;

// Calls visit(shifts) for each nondecreasing length-m sequence over the
// window, by increasing max |shift| and lexicographically within that,
// until visit returns false.
template <class Visit>
bool for_each_multiset(ShiftWindow w, std::size_t m, Visit&& visit) {
  Shift const reach = std::max(std::abs(w.lo), std::abs(w.hi));
  for (Shift r = std::max<Shift>(0, std::max(w.lo, -w.hi)); r <= reach; ++r) {
    Shift const lo = std::max(w.lo, -r);
    Shift const hi = std::min(w.hi, r);
    if (lo > hi) continue;
    std::vector<Shift> shifts(m, lo);
    for (;;) {
      bool on_ring = std::any_of(shifts.begin(), shifts.end(), [r](Shift s) { return std::abs(s) == r; });
      if (on_ring && !visit(shifts)) return false;
      std::size_t i = m;
      while (i > 0 && shifts[i - 1] == hi) --i;
      if (i == 0) break;
      Shift next = shifts[i - 1] + 1;
      for (std::size_t j = i - 1; j < m; ++j) shifts[j] = next;
    }
  }
  return true;
}

GradedVertexReport check_vertex(Graph const& g, K0Data const& k0, GradedEvaluations const& evals,
                                VertexId v, SearchBudget const& budget, ShiftWindow window) {
  GradedVertexReport report;
  report.vertex = v;
  GradedElement const target = GradedElement::of(v, 0);
  auto const summands = solve_multiplier(k0, k0.vertex_classes[v], k0.unit_class);
  if (!summands || !summands->first_at_least(1)) {
    report.status = GradedFreeStatus::fails_in_window;
    report.detail = "no positive multiple of the unit has the vertex's K0 class";
    return report;
  }

  std::size_t const n = g.vertex_count();
  // Candidate summand counts are complete when K0 pins a single one, or when
  // v(0)'s closure turns out finite (weights never drop along rewrites).
  std::optional<BigInt> max_summands;
  if (summands->step == 0) max_summands = summands->base;
  bool undecided = false;
  std::size_t examined = 0;

  BigInt m_big = *summands->first_at_least(1);
  for (; m_big <= kMaxGradedSummands; m_big += summands->step == 0 ? BigInt(kMaxGradedSummands) : summands->step) {
    if (max_summands && m_big > *max_summands) break;
    std::size_t const m = static_cast<std::size_t>(m_big);
    bool aborted = false;
    bool found = false;
    for_each_multiset(window, m, [&](std::vector<Shift> const& shifts) {
      if (++examined > kMaxShiftMultisets || report.candidates_searched >= kMaxGradedCandidates) {
        aborted = true;
        return false;
      }
      GradedElement rhs;
      for (Shift s : shifts) rhs += GradedElement::unit(g, s);
      if (evals.separating_point(target, rhs)) return true;
      ++report.candidates_searched;
      GradedVerdict verdict = decide(g, k0, evals, target, rhs, budget);
      if (verdict.is_equal()) {
        report.status = GradedFreeStatus::holds;
        report.shifts = shifts;
        report.certificate = std::move(verdict.certificate);
        found = true;
        return false;
      }
      if (verdict.stats.lhs_closure_finite) {
        BigInt bound = BigInt(verdict.stats.lhs_max_weight) / n;
        if (!max_summands || bound < *max_summands) max_summands = bound;
      }
      if (verdict.is_unknown()) undecided = true;
      return true;
    });
    if (found) return report;
    if (aborted) {
      undecided = true;
      break;
    }
  }
  bool const summands_exhausted = max_summands && *max_summands <= kMaxGradedSummands;
  if (!undecided && summands_exhausted) {
    report.status = GradedFreeStatus::fails_in_window;
    report.detail = "every candidate shift multiset in the window is refuted";
  } else {
    report.status = GradedFreeStatus::unknown;
    report.detail = "no certificate found within budget";
  }
  return report;
}

}  // namespace

GradedSerreReport graded_serre_check(Graph const& g, SearchBudget const& budget, ShiftWindow window) {
  budget.validate();
  window.validate();
  K0Data const k0 = k0_of_graph(g);
  GradedEvaluations const evals(g);
  GradedSerreReport report;
  report.window = window;
  bool any_fail = false;
  bool any_unknown = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    report.vertices.push_back(check_vertex(g, k0, evals, v, budget, window));
    any_fail = any_fail || report.vertices.back().status == GradedFreeStatus::fails_in_window;
    any_unknown = any_unknown || report.vertices.back().status == GradedFreeStatus::unknown;
  }
  report.status = any_fail      ? GradedFreeStatus::fails_in_window
                  : any_unknown ? GradedFreeStatus::unknown
                                : GradedFreeStatus::holds;
  return report;
}

}  // namespace leavitt
