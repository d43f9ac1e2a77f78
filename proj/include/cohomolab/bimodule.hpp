#pragma once

// Bimodules over a finite group algebra k[G], given by per-element action
// matrices, and the Hochschild cochain complex C*(k[G], M) built from them.
//
// Conventions, fixed once for the whole library:
//  * left actions are homomorphisms: L(g) L(h) = L(gh);
//  * right actions compose contravariantly: R(g) R(h) = R(hg)
//    (R(g) is "act by g on the right", applied innermost-first);
//  * the dual bimodule swaps and transposes: L'(g) = R(g)^T, R'(g) = L(g)^T.
//
// C^n(k[G], M) has basis indexed by (g_1, ..., g_n, module coordinate), in
// lexicographic tuple order with the module coordinate fastest.

#include <string>
#include <vector>

#include "cohomolab/complex.hpp"
#include "cohomolab/group.hpp"
#include "cohomolab/matrix.hpp"

namespace cohomolab {

class MemoryCapError : public std::runtime_error {
 public:
  MemoryCapError(std::size_t need, std::size_t cap)
      : std::runtime_error(
            "complex would need ~" + std::to_string(need) +
            " stored matrix entries, over the cap of " + std::to_string(cap) +
            "; reduce max_degree or raise --memory-cap"),
        need(need),
        cap(cap) {}
  std::size_t need, cap;
};

inline constexpr std::size_t kDefaultMemoryCap = 2'000'000;

template <FieldLike F>
struct Bimodule {
  Group group;
  int dim = 0;
  std::vector<ExactMatrix<F>> left;   // per group element
  std::vector<ExactMatrix<F>> right;  // per group element
  std::string label;

  const F& field() const { return left.at(0).field(); }
};

// Full-scan validation of the bimodule axioms.
template <FieldLike F>
void validate_bimodule(const Bimodule<F>& m) {
  const Group& g = m.group;
  if (static_cast<int>(m.left.size()) != g.order() ||
      static_cast<int>(m.right.size()) != g.order())
    throw std::invalid_argument(m.label + ": one action matrix per element");
  for (int a = 0; a < g.order(); ++a)
    if (m.left[a].rows() != m.dim || m.left[a].cols() != m.dim ||
        m.right[a].rows() != m.dim || m.right[a].cols() != m.dim)
      throw std::invalid_argument(m.label + ": action matrix shape");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      if (!m.left[a].mul(m.left[b]).equals(m.left[g.mul(a, b)]))
        throw std::invalid_argument(
            m.label + ": left action is not a homomorphism at (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
      if (!m.right[a].mul(m.right[b]).equals(m.right[g.mul(b, a)]))
        throw std::invalid_argument(
            m.label + ": right action is not contravariant at (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
      if (!m.left[a].mul(m.right[b]).equals(m.right[b].mul(m.left[a])))
        throw std::invalid_argument(
            m.label + ": left and right actions do not commute at (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

// The regular bimodule k[G] with translation actions.
template <FieldLike F>
Bimodule<F> group_algebra_bimodule(const F& f, const Group& g) {
  Bimodule<F> m{g, g.order(), {}, {}, "k[" + g.name() + "]"};
  for (int a = 0; a < g.order(); ++a) {
    ExactMatrix<F> l(f, g.order(), g.order());
    ExactMatrix<F> r(f, g.order(), g.order());
    for (int h = 0; h < g.order(); ++h) {
      l.add_entry(g.mul(a, h), h, f.one());
      r.add_entry(g.mul(h, a), h, f.one());
    }
    l.finalize();
    r.finalize();
    m.left.push_back(std::move(l));
    m.right.push_back(std::move(r));
  }
  return m;
}

template <FieldLike F>
Bimodule<F> dualize(const Bimodule<F>& m) {
  Bimodule<F> d{m.group, m.dim, {}, {}, m.label + "'"};
  for (int a = 0; a < m.group.order(); ++a) {
    d.left.push_back(m.right[a].transpose());
    d.right.push_back(m.left[a].transpose());
  }
  return d;
}

// The one-dimensional module on which every group element acts as 1.
template <FieldLike F>
Bimodule<F> augmentation_bimodule(const F& f, const Group& g) {
  Bimodule<F> m{g, 1, {}, {}, "C_eps"};
  for (int a = 0; a < g.order(); ++a) {
    m.left.push_back(ExactMatrix<F>::identity(f, 1));
    m.right.push_back(ExactMatrix<F>::identity(f, 1));
  }
  return m;
}

// Functions on the set of a left action: left action (g.phi)(s) = phi(g^{-1}s)
// (on indicator basis: g . e_t = e_{g.t}), trivial right action.
template <FieldLike F>
Bimodule<F> function_dual_of_action(const F& f, const GAction& a) {
  const Group& g = a.group();
  Bimodule<F> m{g, a.set_size(), {}, {}, "k(" + a.name() + ")'"};
  for (int h = 0; h < g.order(); ++h) {
    ExactMatrix<F> l(f, a.set_size(), a.set_size());
    for (int s = 0; s < a.set_size(); ++s) l.add_entry(a.act(h, s), s, f.one());
    l.finalize();
    m.left.push_back(std::move(l));
    m.right.push_back(ExactMatrix<F>::identity(f, a.set_size()));
  }
  return m;
}

namespace detail {

// Column-major views of the action matrices, for the column-wise coboundary
// assembly below.
template <FieldLike F>
std::vector<std::vector<SparseVec<F>>> action_columns(
    const std::vector<ExactMatrix<F>>& mats) {
  std::vector<std::vector<SparseVec<F>>> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.columns());
  return out;
}

template <FieldLike F>
std::size_t max_action_spread(const Bimodule<F>& m) {
  std::size_t spread = 1;
  for (int a = 0; a < m.group.order(); ++a) {
    for (const auto& col : m.left[a].columns()) spread = std::max(spread, col.size());
    for (const auto& col : m.right[a].columns()) spread = std::max(spread, col.size());
  }
  return spread;
}

}  // namespace detail

// Predicted stored entries of the largest coboundary matrix; used by the
// memory guard before any allocation happens.
template <FieldLike F>
std::size_t hochschild_cost_estimate(const Group& g, const Bimodule<F>& m,
                                     int max_degree) {
  constexpr std::size_t kHuge = std::size_t(1) << 60;
  std::size_t spread = detail::max_action_spread(m);
  std::size_t rows = static_cast<std::size_t>(m.dim);
  for (int k = 1; k <= max_degree + 1; ++k) {
    rows *= static_cast<std::size_t>(g.order());
    if (rows > kHuge) return kHuge;
  }
  return rows * static_cast<std::size_t>(max_degree + 2) * spread;
}

// C*(k[G], M) as a cochain complex with spaces C^0 .. C^{D+1} and coboundaries
// delta^0 .. delta^D, so that cohomology is fully reportable in degrees <= D.
//
// (delta psi)(g_1..g_{n+1}) = g_1 psi(g_2..g_{n+1})
//                           + sum_j (-1)^j psi(g_1,..,g_j g_{j+1},..,g_{n+1})
//                           + (-1)^{n+1} psi(g_1..g_n) g_{n+1}.
template <FieldLike F>
NormedComplex<F> hochschild_complex(const F& f, const Group& g,
                                    const Bimodule<F>& m, int max_degree,
                                    std::size_t memory_cap = kDefaultMemoryCap) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (!(g.order() == m.group.order()))
    throw std::invalid_argument("bimodule is over a different group");
  std::size_t need = hochschild_cost_estimate(g, m, max_degree);
  if (need > memory_cap) throw MemoryCapError(need, memory_cap);

  const int n_elems = g.order();
  const int md = m.dim;
  auto lcols = detail::action_columns<F>(m.left);
  auto rcols = detail::action_columns<F>(m.right);

  std::vector<int> dims;
  for (int n = 0; n <= max_degree + 1; ++n) {
    long d = md;
    for (int k = 0; k < n; ++k) d *= n_elems;
    dims.push_back(static_cast<int>(d));
  }

  std::vector<ExactMatrix<F>> deltas;
  const typename F::Scalar one = f.one(), minus = f.neg(f.one());

  for (int n = 0; n <= max_degree; ++n) {
    ExactMatrix<F> delta(f, dims[n + 1], dims[n]);
    // Enumerate the domain tuples (g_1..g_n) with an odometer.
    std::vector<int> tup(n, 0);
    long stride = 1;  // |G|^n: domain tuple count
    for (int k = 0; k < n; ++k) stride *= n_elems;
    // Row index helpers for the (n+1)-tuples: row tuple index * md + coord.
    auto out_index = [&](const std::vector<int>& t) {
      long idx = 0;
      for (int v : t) idx = idx * n_elems + v;
      return idx;
    };
    for (long ti = 0; ti < stride; ++ti) {
      // first term: a . psi evaluated on (a, g_1..g_n)
      std::vector<int> outt(n + 1);
      for (int k = 0; k < n; ++k) outt[k + 1] = tup[k];
      for (int a = 0; a < n_elems; ++a) {
        outt[0] = a;
        long base = out_index(outt) * md;
        for (int j = 0; j < md; ++j) {
          long col = ti * md + j;
          for (const auto& [i, v] : lcols[a][j])
            delta.add_entry(static_cast<int>(base + i), static_cast<int>(col), v);
        }
      }
      // middle terms: merge positions jj = 1..n (1-based in the formula)
      for (int jj = 1; jj <= n; ++jj) {
        const bool odd = (jj % 2) == 1;
        std::vector<int> t2(n + 1);
        for (int k = 0; k < jj - 1; ++k) t2[k] = tup[k];
        for (int k = jj; k < n; ++k) t2[k + 1] = tup[k];
        int merged = tup[jj - 1];
        for (int x = 0; x < n_elems; ++x) {
          int y = g.mul(g.inv(x), merged);
          t2[jj - 1] = x;
          t2[jj] = y;
          long base = out_index(t2) * md;
          for (int j = 0; j < md; ++j)
            delta.add_entry(static_cast<int>(base + j),
                            static_cast<int>(ti * md + j), odd ? minus : one);
        }
      }
      // last term: psi(g_1..g_n) . b on (g_1..g_n, b)
      {
        const bool odd = ((n + 1) % 2) == 1;
        std::vector<int> t3(n + 1);
        for (int k = 0; k < n; ++k) t3[k] = tup[k];
        for (int b = 0; b < n_elems; ++b) {
          t3[n] = b;
          long base = out_index(t3) * md;
          for (int j = 0; j < md; ++j) {
            long col = ti * md + j;
            for (const auto& [i, v] : rcols[b][j])
              delta.add_entry(static_cast<int>(base + i),
                              static_cast<int>(col),
                              odd ? f.neg(v) : v);
          }
        }
      }
      // bump odometer
      for (int k = n - 1; k >= 0; --k) {
        if (++tup[k] < n_elems) break;
        tup[k] = 0;
      }
    }
    delta.finalize();
    deltas.push_back(std::move(delta));
  }

  return make_complex(f, Direction::Cochain, std::move(dims), std::move(deltas),
                      F::has_norm ? NormKind::Linf : NormKind::None,
                      "C*(k[" + g.name() + "], " + m.label + ")");
}

// Independent route to H^0: the centre {m : g.m = m.g for all g}, solved
// directly from the stacked action differences.
template <FieldLike F>
int centre_dim(const F& f, const Bimodule<F>& m) {
  const int n = m.group.order();
  ExactMatrix<F> stacked(f, n * m.dim, m.dim);
  for (int a = 0; a < n; ++a) {
    auto diff = m.left[a].add(m.right[a].negated());
    for (int i = 0; i < m.dim; ++i)
      for (const auto& [c, v] : diff.row(i))
        stacked.add_entry(a * m.dim + i, c, v);
  }
  stacked.finalize();
  return kernel_dim(stacked);
}

}  // namespace cohomolab
