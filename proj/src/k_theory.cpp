#include "leavitt/k_theory.hpp"

#include <stdexcept>

namespace leavitt {

namespace {

// Row-style Hermite normal form of a full-row-rank block, in place.
void hermite_rows(IntMatrix& m, std::size_t first, std::size_t last) {
  std::size_t row = first;
  for (std::size_t col = 0; col < m.cols() && row < last; ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < last; ++i) {
        if (m(i, col) != 0 && (!best || abs_big(m(i, col)) < abs_big(m(*best, col)))) best = i;
      }
      if (!best) break;
      m.swap_rows(row, *best);
      bool clean = true;
      for (std::size_t i = row + 1; i < last; ++i) {
        if (m(i, col) == 0) continue;
        m.add_row_multiple(i, row, -(m(i, col) / m(row, col)));
        clean = clean && m(i, col) == 0;
      }
      if (clean) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) m.negate_row(row);
    for (std::size_t i = first; i < row; ++i) {
      BigInt q = m(i, col) / m(row, col);
      if (m(i, col) - q * m(row, col) < 0) q -= 1;
      m.add_row_multiple(i, row, -q);
    }
    ++row;
  }
}

BigInt inverse_mod(BigInt const& a, BigInt const& m) {
  auto e = extended_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw std::logic_error("inverse_mod of a non-unit");
  return mod_floor(e.s, m);
}

}  // namespace

K0Class K0Data::reduce(K0Class x) const {
  for (std::size_t i = 0; i < torsion_divisors.size(); ++i) {
    x[i] = mod_floor(x[i], torsion_divisors[i]);
  }
  return x;
}

K0Class K0Data::add(K0Class const& a, K0Class const& b) const {
  K0Class out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

K0Class K0Data::scale(BigInt const& k, K0Class const& a) const {
  K0Class out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * a[i];
  return reduce(std::move(out));
}

std::optional<BigInt> K0Data::order(K0Class const& x) const {
  std::size_t const t = torsion_divisors.size();
  for (std::size_t i = t; i < x.size(); ++i) {
    if (x[i] != 0) return std::nullopt;
  }
  BigInt order = 1;
  for (std::size_t i = 0; i < t; ++i) {
    BigInt const& d = torsion_divisors[i];
    order = lcm_big(order, d / gcd_big(x[i], d));
  }
  return order;
}

IntMatrix relation_matrix(Graph const& g) {
  auto regular = regular_vertices(g).members();
  IntMatrix m(g.vertex_count(), regular.size());
  for (std::size_t c = 0; c < regular.size(); ++c) {
    VertexId v = regular[c];
    m(v, c) += 1;
    for (EdgeId e : g.out_edges(v)) m(g.edge(e).range, c) -= 1;
  }
  return m;
}

K0Data k0_of_graph(Graph const& g) {
  std::size_t const n = g.vertex_count();
  SmithForm smith = smith_normal_form(relation_matrix(g));

  std::vector<std::size_t> torsion_rows;
  K0Data k0;
  for (std::size_t i = 0; i < smith.rank; ++i) {
    BigInt const& d = smith.diagonal(i, i);
    if (d >= 2) {
      torsion_rows.push_back(i);
      k0.torsion_divisors.push_back(d);
    }
  }
  std::size_t const t = torsion_rows.size();
  k0.free_rank = n - smith.rank;

  IntMatrix& coords = k0.coordinates;
  coords = IntMatrix(t + k0.free_rank, n);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t v = 0; v < n; ++v) coords(i, v) = smith.left(torsion_rows[i], v);
  }
  for (std::size_t i = 0; i < k0.free_rank; ++i) {
    for (std::size_t v = 0; v < n; ++v) coords(t + i, v) = smith.left(smith.rank + i, v);
  }
  hermite_rows(coords, t, t + k0.free_rank);

  for (std::size_t i = 0; i < t; ++i) {
    BigInt const& d = k0.torsion_divisors[i];
    BigInt unit_coord = 0;
    for (std::size_t v = 0; v < n; ++v) {
      coords(i, v) = mod_floor(coords(i, v), d);
      unit_coord += coords(i, v);
    }
    std::optional<BigInt> scale_by;
    if (gcd_big(unit_coord, d) == 1) {
      scale_by = inverse_mod(unit_coord, d);
    } else {
      for (std::size_t v = 0; v < n && !scale_by; ++v) {
        if (gcd_big(coords(i, v), d) == 1) scale_by = inverse_mod(coords(i, v), d);
      }
    }
    if (scale_by) {
      for (std::size_t v = 0; v < n; ++v) coords(i, v) = mod_floor(coords(i, v) * *scale_by, d);
    }
  }

  k0.vertex_classes.resize(n);
  k0.unit_class = k0.zero();
  for (std::size_t v = 0; v < n; ++v) {
    K0Class c(k0.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords(i, v);
    k0.vertex_classes[v] = k0.reduce(std::move(c));
    k0.unit_class = k0.add(k0.unit_class, k0.vertex_classes[v]);
  }
  return k0;
}

K0Class class_in_k0(K0Data const& k0, MonoidElement const& a) {
  K0Class out = k0.zero();
  for (auto const& term : a.terms()) {
    K0Class const& c = k0.vertex_classes.at(term.vertex);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term.count * c[i];
  }
  return k0.reduce(std::move(out));
}

K0Class class_in_k0(Graph const& g, MonoidElement const& a) {
  return class_in_k0(k0_of_graph(g), a);
}

bool MultiplierSet::contains(BigInt const& m) const {
  if (step == 0) return m == base;
  return mod_floor(m - base, step) == 0;
}

std::optional<BigInt> MultiplierSet::first_at_least(BigInt const& lower) const {
  if (step == 0) return base >= lower ? std::optional<BigInt>(base) : std::nullopt;
  return lower + mod_floor(base - lower, step);
}

std::optional<MultiplierSet> solve_multiplier(K0Data const& k0, K0Class const& target,
                                              K0Class const& generator) {
  std::size_t const t = k0.torsion_divisors.size();
  std::optional<BigInt> fixed;
  for (std::size_t i = t; i < k0.dimension(); ++i) {
    BigInt const& u = generator[i];
    BigInt const& c = target[i];
    if (u == 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    if (c % u != 0) return std::nullopt;
    BigInt m = c / u;
    if (fixed && *fixed != m) return std::nullopt;
    fixed = m;
  }

  // m = residue (mod modulus), built up one torsion coordinate at a time.
  BigInt residue = 0;
  BigInt modulus = 1;
  for (std::size_t i = 0; i < t; ++i) {
    BigInt const& d = k0.torsion_divisors[i];
    BigInt u = mod_floor(generator[i], d);
    BigInt c = mod_floor(target[i], d);
    BigInt g = gcd_big(u, d);
    if (c % g != 0) return std::nullopt;
    BigInt m_i = d / g;
    if (m_i == 1) continue;
    BigInt r_i = mod_floor((c / g) * inverse_mod(u / g, m_i), m_i);

    BigInt h = gcd_big(modulus, m_i);
    if (mod_floor(r_i - residue, h) != 0) return std::nullopt;
    BigInt step = m_i / h;
    BigInt lift = step == 1 ? BigInt(0)
                            : mod_floor((r_i - residue) / h * inverse_mod(modulus / h, step), step);
    residue += modulus * lift;
    modulus *= step;
    residue = mod_floor(residue, modulus);
  }

  if (fixed) {
    if (mod_floor(*fixed - residue, modulus) != 0) return std::nullopt;
    return MultiplierSet{*fixed, 0};
  }
  return MultiplierSet{mod_floor(residue, modulus), modulus};
}

UnitGeneration unit_generates_k0(K0Data const& k0) {
  UnitGeneration out;
  for (K0Class const& c : k0.vertex_classes) {
    auto sol = solve_multiplier(k0, c, k0.unit_class);
    if (!sol) return UnitGeneration{};
    out.multipliers.push_back(sol->base);
  }
  out.generates = true;
  return out;
}

UnitGeneration unit_generates_k0(Graph const& g) { return unit_generates_k0(k0_of_graph(g)); }

bool is_finite_cyclic_with_unit_generator(K0Data const& k0) {
  if (k0.free_rank > 0) return false;
  if (k0.torsion_divisors.size() > 1) return false;
  return unit_generates_k0(k0).generates;
}

}  // namespace leavitt
