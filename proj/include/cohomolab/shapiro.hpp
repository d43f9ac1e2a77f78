#pragma once

// The resolution apparatus behind the stabilizer disintegration:
//
//  * one-sided bar resolutions of the trivial module over k[H], with the
//    insert-identity contracting homotopy, norm-certified;
//  * induction k[G] (x)_H (-) realized through a coset transversal, with the
//    mutually inverse coordinate isomorphisms T and R;
//  * assembly of the resolution P_* of k(S) over all orbits, 1-split with
//    contractive block homotopies;
//  * the equivariant dual of P_*, identified degree-by-degree with the sum of
//    stabilizer cochain complexes (the identification is constructed as an
//    explicit isometric chain map and verified exactly);
//  * the fast cohomology path through stabilizers, and the brute-force
//    Hochschild oracle it is checked against.
//
// Coordinate conventions. Bar words over H are tuples (h_0,...,h_{n}), indexed
// lexicographically. The coordinate model of the induced complex at chain
// level j >= 1 has basis (coset, word of length j); level 0 has basis the
// cosets. The free model at level j >= 1 has basis (group element, word of
// length j-1) via the normal form e_g (x) (id, u_1, ..., u_{j-1}).

#include <string>
#include <vector>

#include "cohomolab/bimodule.hpp"
#include "cohomolab/complex.hpp"
#include "cohomolab/group.hpp"

namespace cohomolab {

namespace detail {

inline long ipow(long base, int exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace detail

template <FieldLike F>
struct BarResolution {
  Group h;
  NormedComplex<F> complex;                // chain levels 0..D+1
  std::vector<ExactMatrix<F>> homotopies;  // s_0..s_D
  SplitCertificate<F> certificate;
};

// Augmented bar resolution of the trivial module over k[H], chain levels
// k, k[H], k[H]^{(x)2}, ..., k[H]^{(x)(D+1)}. The differential at bar degree n
// has l1 norm at most n+2 (chain level j: at most j+1); the standard homotopy
// inserts the identity on the left and is an isometry, so the certificate is
// contractive.
template <FieldLike F>
BarResolution<F> bar_resolution(const F& f, const Group& h, int max_bar_degree,
                                std::size_t memory_cap = kDefaultMemoryCap) {
  if (max_bar_degree < 0) throw std::invalid_argument("bar degree >= 0");
  const int m = h.order();
  const int top = max_bar_degree + 1;  // top chain level
  {
    std::size_t need = static_cast<std::size_t>(detail::ipow(m, top)) *
                       static_cast<std::size_t>(top + 1);
    if (need > memory_cap) throw MemoryCapError(need, memory_cap);
  }

  std::vector<int> dims;
  dims.push_back(1);
  for (int j = 1; j <= top; ++j)
    dims.push_back(static_cast<int>(detail::ipow(m, j)));

  const auto one = f.one(), minus = f.neg(f.one());
  std::vector<ExactMatrix<F>> maps;

  // d_0 = augmentation: every basis vector of k[H] maps to 1.
  {
    ExactMatrix<F> eps(f, 1, m);
    for (int x = 0; x < m; ++x) eps.add_entry(0, x, one);
    eps.finalize();
    maps.push_back(std::move(eps));
  }
  // d_j : words of length j+1 -> words of length j (bar degree n = j-1).
  for (int j = 1; j < top; ++j) {
    long cols = detail::ipow(m, j + 1), rows = detail::ipow(m, j);
    ExactMatrix<F> d(f, static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> w(j + 1, 0);
    for (long ci = 0; ci < cols; ++ci) {
      // merge positions i = 0..j-1, sign (-1)^i
      for (int i = 0; i < j; ++i) {
        long idx = 0;
        for (int k = 0; k < j + 1; ++k) {
          if (k == i) {
            idx = idx * m + h.mul(w[i], w[i + 1]);
            ++k;  // skip w[i+1], it was merged
          } else {
            idx = idx * m + w[k];
          }
        }
        d.add_entry(static_cast<int>(idx), static_cast<int>(ci),
                    (i % 2) ? minus : one);
      }
      // drop the last letter, sign (-1)^j
      long idx = 0;
      for (int k = 0; k < j; ++k) idx = idx * m + w[k];
      d.add_entry(static_cast<int>(idx), static_cast<int>(ci),
                  (j % 2) ? minus : one);
      for (int k = j; k >= 0; --k) {
        if (++w[k] < m) break;
        w[k] = 0;
      }
    }
    d.finalize();
    maps.push_back(std::move(d));
  }

  // Homotopies: s_0 sends 1 to e_id; s_j prepends the identity letter.
  std::vector<ExactMatrix<F>> homotopies;
  {
    ExactMatrix<F> s0(f, m, 1);
    s0.add_entry(h.identity(), 0, one);
    s0.finalize();
    homotopies.push_back(std::move(s0));
  }
  for (int j = 1; j < top; ++j) {
    long cols = detail::ipow(m, j), rows = detail::ipow(m, j + 1);
    ExactMatrix<F> s(f, static_cast<int>(rows), static_cast<int>(cols));
    long id_off = static_cast<long>(h.identity()) * cols;
    for (long ci = 0; ci < cols; ++ci)
      s.add_entry(static_cast<int>(id_off + ci), static_cast<int>(ci), one);
    s.finalize();
    homotopies.push_back(std::move(s));
  }

  BarResolution<F> out{h,
                       make_complex(f, Direction::Chain, std::move(dims),
                                    std::move(maps), NormKind::L1,
                                    "bar(k[" + h.name() + "])"),
                       std::move(homotopies),
                       {}};
  out.certificate = certify_split(out.complex, out.homotopies, F::has_norm);
  return out;
}

// The induced complex k[G] (x)_H bar(k[H]) in two coordinate systems, with
// the transversal-driven isomorphisms between them.
template <FieldLike F>
struct InducedComplex {
  Subgroup stabilizer;
  Transversal transversal;
  NormedComplex<F> coordinate;  // (coset, word) basis; bottom k(G/H)
  NormedComplex<F> free_model;  // (group element, word) basis; bottom k(G/H)
  ChainMap<F> to_coordinate;    // T
  ChainMap<F> to_free;          // R
  ChainMapReport tr_report;
  std::vector<ExactMatrix<F>> homotopies;  // on the coordinate model
  SplitCertificate<F> certificate;
};

template <FieldLike F>
InducedComplex<F> induce(const F& f, const Group& g, Subgroup h,
                         Transversal tau, const BarResolution<F>& bar) {
  const Group& hloc = h.local_group();
  const int m = hloc.order();
  const int c = tau.num_cosets();
  const int top = bar.complex.levels() - 1;
  const auto one = f.one();

  // Coordinate model: block-diagonal copies of the bar complex over the
  // cosets (the factor map of any transversal fixes the chosen
  // representatives, so induction does not twist the differentials).
  std::vector<int> cdims;
  cdims.push_back(c);
  for (int j = 1; j <= top; ++j)
    cdims.push_back(static_cast<int>(c * detail::ipow(m, j)));
  std::vector<ExactMatrix<F>> cmaps;
  std::vector<ExactMatrix<F>> homotopies;
  for (int j = 0; j < top; ++j) {
    std::vector<ExactMatrix<F>> blocks(c, bar.complex.maps[j]);
    cmaps.push_back(ExactMatrix<F>::block_diag(f, blocks));
    std::vector<ExactMatrix<F>> hblocks(c, bar.homotopies[j]);
    homotopies.push_back(ExactMatrix<F>::block_diag(f, hblocks));
  }
  auto coordinate =
      make_complex(f, Direction::Chain, std::move(cdims), std::move(cmaps),
                   NormKind::L1,
                   "k(" + g.name() + "/" + hloc.name() + ") (x) bar");

  // Free model: normal form e_g (x) (id, u_1..u_{j-1}).
  std::vector<int> fdims;
  fdims.push_back(c);
  for (int j = 1; j <= top; ++j)
    fdims.push_back(static_cast<int>(g.order() * detail::ipow(m, j - 1)));
  std::vector<ExactMatrix<F>> fmaps;
  {
    // d'_0: e_g -> e_{gH}
    ExactMatrix<F> d0(f, c, g.order());
    for (int x = 0; x < g.order(); ++x)
      d0.add_entry(tau.coset_of[x], x, one);
    d0.finalize();
    fmaps.push_back(std::move(d0));
  }
  const auto minus = f.neg(one);
  for (int j = 1; j < top; ++j) {
    long wc = detail::ipow(m, j - 1);
    long rows = g.order() * wc;
    long cols = g.order() * wc * m;
    ExactMatrix<F> d(f, static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> u(j, 0);
    for (long wi = 0; wi < detail::ipow(m, j); ++wi) {
      for (int gg = 0; gg < g.order(); ++gg) {
        long col = gg * detail::ipow(m, j) + wi;
        // i = 0: absorb u_1 into the group coordinate.
        {
          long rest = 0;
          for (int k = 1; k < j; ++k) rest = rest * m + u[k];
          long row = static_cast<long>(g.mul(gg, h.parent_index(u[0]))) * wc + rest;
          d.add_entry(static_cast<int>(row), static_cast<int>(col), one);
        }
        // i = 1..j-1: merge u_i u_{i+1} (local product), sign (-1)^i.
        for (int i = 1; i < j; ++i) {
          long rest = 0;
          for (int k = 0; k < j; ++k) {
            if (k == i - 1) {
              rest = rest * m + hloc.mul(u[i - 1], u[i]);
              ++k;
            } else {
              rest = rest * m + u[k];
            }
          }
          d.add_entry(static_cast<int>(gg * wc + rest), static_cast<int>(col),
                      (i % 2) ? minus : one);
        }
        // drop the last letter, sign (-1)^j.
        {
          long rest = 0;
          for (int k = 0; k < j - 1; ++k) rest = rest * m + u[k];
          d.add_entry(static_cast<int>(gg * wc + rest), static_cast<int>(col),
                      (j % 2) ? minus : one);
        }
      }
      for (int k = j - 1; k >= 0; --k) {
        if (++u[k] < m) break;
        u[k] = 0;
      }
    }
    d.finalize();
    fmaps.push_back(std::move(d));
  }
  auto free_model =
      make_complex(f, Direction::Chain, std::move(fdims), std::move(fmaps),
                   NormKind::L1, "k[" + g.name() + "] (x) words");
  {
    auto v = verify_complex(free_model);
    if (!v.ok) throw std::logic_error("free model differential is broken");
  }

  // T: e_g (x) (id, u) -> (gH, (eta(g), u)); R: (J, (h_0, u)) ->
  // e_{tau(J) h_0} (x) (id, u). Both are permutation matrices, hence
  // isometries; they are mutually inverse because eta(tau(J) h_0) = h_0.
  ChainMap<F> T{{}, "T"};
  ChainMap<F> R{{}, "R"};
  T.components.push_back(ExactMatrix<F>::identity(f, c));
  R.components.push_back(ExactMatrix<F>::identity(f, c));
  for (int j = 1; j <= top; ++j) {
    long wc = detail::ipow(m, j - 1);
    long cdim = c * wc * m, fdim = g.order() * wc;
    ExactMatrix<F> tm(f, static_cast<int>(cdim), static_cast<int>(fdim));
    for (int gg = 0; gg < g.order(); ++gg) {
      long row0 = (static_cast<long>(tau.coset_of[gg]) * m + tau.eta[gg]) * wc;
      for (long wi = 0; wi < wc; ++wi)
        tm.add_entry(static_cast<int>(row0 + wi),
                     static_cast<int>(gg * wc + wi), one);
    }
    tm.finalize();
    T.components.push_back(std::move(tm));

    ExactMatrix<F> rm(f, static_cast<int>(fdim), static_cast<int>(cdim));
    for (int J = 0; J < c; ++J)
      for (int h0 = 0; h0 < m; ++h0) {
        long gidx = g.mul(tau.tau[J], h.parent_index(h0));
        long col0 = (static_cast<long>(J) * m + h0) * wc;
        for (long wi = 0; wi < wc; ++wi)
          rm.add_entry(static_cast<int>(gidx * wc + wi),
                       static_cast<int>(col0 + wi), one);
      }
    rm.finalize();
    R.components.push_back(std::move(rm));
  }

  InducedComplex<F> out{std::move(h),       std::move(tau),
                        std::move(coordinate), std::move(free_model),
                        std::move(T),       std::move(R),
                        {},                 std::move(homotopies),
                        {}};
  out.tr_report = verify_chain_iso(out.free_model, out.coordinate,
                                   out.to_coordinate, out.to_free,
                                   F::has_norm);
  out.certificate = certify_split(out.coordinate, out.homotopies, F::has_norm);
  return out;
}

// The assembled resolution of k(S): per-orbit induced complexes summed in the
// l1 sense, bottom level relabeled to k(S) through coset J -> tau(J).x.
template <FieldLike F>
struct AssembledResolution {
  OrbitDecomposition orbits;
  std::vector<InducedComplex<F>> parts;
  NormedComplex<F> total;       // bottom level indexed by the points of S
  std::vector<ExactMatrix<F>> homotopies;
  SplitCertificate<F> certificate;
  NormedComplex<F> total_free;  // freeness witness: blocks k[G] (x) words
  ChainMap<F> freeness;         // total_free -> total, isometric iso
  ChainMap<F> freeness_inv;
  ChainMapReport freeness_report;
};

template <FieldLike F>
AssembledResolution<F> assemble_resolution(
    const F& f, const GAction& action, int max_bar_degree,
    std::size_t memory_cap = kDefaultMemoryCap,
    std::optional<std::uint64_t> transversal_seed = std::nullopt) {
  const Group& g = action.group();
  auto od = orbit_decompose(action);

  std::vector<InducedComplex<F>> parts;
  for (std::size_t k = 0; k < od.representatives.size(); ++k) {
    const Subgroup& stab = od.stabilizers[k];
    auto tau = transversal_seed
                   ? make_random_transversal(g, stab, *transversal_seed + k)
                   : make_transversal(g, stab);
    auto bar = bar_resolution(f, stab.local_group(), max_bar_degree,
                              memory_cap);
    parts.push_back(induce(f, g, stab, std::move(tau), bar));
  }

  std::vector<NormedComplex<F>> coords, frees;
  std::vector<std::vector<ExactMatrix<F>>> homots;
  for (auto& p : parts) {
    coords.push_back(p.coordinate);
    frees.push_back(p.free_model);
    homots.push_back(p.homotopies);
  }
  NormedComplex<F> total = sum_complexes(coords, NormKind::L1).sum;
  NormedComplex<F> total_free = sum_complexes(frees, NormKind::L1).sum;
  auto homotopies = sum_homotopies(f, homots);

  // Relabel the bottom: block coordinate (orbit k, coset J) -> point
  // tau_k(J) . rep_k. This is the orbit/coset correspondence, a bijection.
  const int s_size = action.set_size();
  if (total.dims[0] != s_size)
    throw std::logic_error("coset count does not match the set size");
  ExactMatrix<F> P(f, s_size, s_size);
  {
    int off = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const auto& tau = parts[k].transversal;
      int rep = od.representatives[k];
      for (int J = 0; J < tau.num_cosets(); ++J)
        P.add_entry(action.act(tau.tau[J], rep), off + J, f.one());
      off += tau.num_cosets();
    }
    P.finalize();
  }
  if (rank(P) != s_size)
    throw std::logic_error("orbit-coset correspondence is not a bijection");

  total.label = "P_*(" + g.name() + " on " + action.name() + ")";
  total.maps[0] = P.mul(total.maps[0]);
  homotopies[0] = homotopies[0].mul(P.transpose());
  auto certificate = certify_split(total, homotopies, F::has_norm);

  // Freeness witness on the assembled complex: block T/R with the bottom
  // relabeling folded in.
  ChainMap<F> freeness{{}, "T"};
  ChainMap<F> freeness_inv{{}, "R"};
  freeness.components.push_back(P);
  freeness_inv.components.push_back(P.transpose());
  for (int j = 1; j < total.levels(); ++j) {
    std::vector<ExactMatrix<F>> tb, rb;
    for (auto& p : parts) {
      tb.push_back(p.to_coordinate.components[j]);
      rb.push_back(p.to_free.components[j]);
    }
    freeness.components.push_back(ExactMatrix<F>::block_diag(f, tb));
    freeness_inv.components.push_back(ExactMatrix<F>::block_diag(f, rb));
  }
  auto freeness_report =
      verify_chain_iso(total_free, total, freeness, freeness_inv, F::has_norm);

  return AssembledResolution<F>{std::move(od),          std::move(parts),
                                std::move(total),       std::move(homotopies),
                                std::move(certificate), std::move(total_free),
                                std::move(freeness),    std::move(freeness_inv),
                                std::move(freeness_report)};
}

// Equivariant dual of the assembled resolution, identified with the sum of
// stabilizer cochain complexes.
template <FieldLike F>
struct DualizedResolution {
  NormedComplex<F> hom_complex;  // duals of chain levels 1.., maps d^T
  NormedComplex<F> small;        // sum over orbits of C*(k[H_x], C_eps)
  ChainMap<F> iota;              // small -> hom_complex, isometric embedding
  ChainMap<F> rho;               // left inverse of iota (restriction)
  ChainMapReport iota_report;
  bool rho_iota_identity = false;
  bool iota_invariant = false;       // stacked (g^T - id) annihilates iota
  std::vector<int> invariant_dims;   // per checked level
  std::vector<int> iota_ranks;       // aligned with invariant_dims
};

// The G-action on chain level j of the coordinate model (used to cut out the
// equivariant functionals): g.(J, (h_0, u)) = (gJ, (eta(g tau(J)) h_0, u)).
template <FieldLike F>
ExactMatrix<F> coordinate_action(const F& f, const GAction& action,
                                 const AssembledResolution<F>& P, int level,
                                 int g_elem) {
  const Group& g = action.group();
  int dim = P.total.dims[level];
  ExactMatrix<F> act(f, dim, dim);
  if (level == 0) {
    for (int s = 0; s < dim; ++s)
      act.add_entry(action.act(g_elem, s), s, f.one());
  } else {
    long off = 0;
    for (const auto& part : P.parts) {
      const auto& tau = part.transversal;
      const Subgroup& h = part.stabilizer;
      const int m = h.order();
      long wc = detail::ipow(m, level - 1);
      for (int J = 0; J < tau.num_cosets(); ++J) {
        int gt = g.mul(g_elem, tau.tau[J]);
        int J2 = tau.coset_of[gt];
        int eta = tau.eta[gt];
        for (int h0 = 0; h0 < m; ++h0) {
          int h0p = h.local_group().mul(eta, h0);
          long src0 = off + (static_cast<long>(J) * m + h0) * wc;
          long dst0 = off + (static_cast<long>(J2) * m + h0p) * wc;
          for (long wi = 0; wi < wc; ++wi)
            act.add_entry(static_cast<int>(dst0 + wi),
                          static_cast<int>(src0 + wi), f.one());
        }
      }
      off += static_cast<long>(tau.num_cosets()) * detail::ipow(m, level);
    }
  }
  act.finalize();
  return act;
}

template <FieldLike F>
DualizedResolution<F> dualize_resolution(const F& f, const GAction& action,
                                         const AssembledResolution<F>& P,
                                         std::size_t memory_cap = kDefaultMemoryCap,
                                         int invariance_check_depth = 2) {
  const Group& g = action.group();
  const int top = P.total.levels() - 1;  // chain levels 0..top
  const int d_small = top - 1;           // cochain levels 0..d_small

  // Dual complex: level n is the dual of chain level n+1.
  std::vector<int> hdims;
  for (int n = 0; n <= d_small; ++n) hdims.push_back(P.total.dims[n + 1]);
  std::vector<ExactMatrix<F>> hmaps;
  for (int n = 0; n < d_small; ++n)
    hmaps.push_back(P.total.maps[n + 1].transpose());
  DualizedResolution<F> out{
      make_complex(f, Direction::Cochain, std::move(hdims), std::move(hmaps),
                   F::has_norm ? NormKind::Linf : NormKind::None,
                   "Hom(P_*, C_eps)"),
      {}, {}, {}, {}, false, false, {}, {}};

  // Small side: sum of stabilizer cochain complexes, same degree range.
  std::vector<NormedComplex<F>> smalls;
  for (const auto& part : P.parts)
    smalls.push_back(hochschild_complex(
        f, part.stabilizer.local_group(),
        augmentation_bimodule(f, part.stabilizer.local_group()), d_small - 1,
        memory_cap));
  out.small = sum_complexes(smalls, NormKind::Linf).sum;
  out.small.label = "sum_x C*(k[H_x], C_eps)";

  // iota_n: the cochain (x, u) corresponds to the equivariant functional
  // whose value at (x, J, (h_0, u')) is [u' = u]; rho_n samples at the
  // identity coset with first letter id.
  out.iota.label = "iota";
  out.rho.label = "rho";
  for (int n = 0; n <= d_small; ++n) {
    ExactMatrix<F> io(f, out.hom_complex.dims[n], out.small.dims[n]);
    ExactMatrix<F> ro(f, out.small.dims[n], out.hom_complex.dims[n]);
    long hoff = 0, soff = 0;
    for (const auto& part : P.parts) {
      const auto& tau = part.transversal;
      const Subgroup& h = part.stabilizer;
      const int m = h.order();
      const int c = tau.num_cosets();
      long wc = detail::ipow(m, n);  // cochain words u of length n
      int j0 = tau.coset_of[g.identity()];
      int idl = h.local_index(g.identity());
      for (long u = 0; u < wc; ++u) {
        for (int J = 0; J < c; ++J)
          for (int h0 = 0; h0 < m; ++h0)
            io.add_entry(
                static_cast<int>(hoff + (static_cast<long>(J) * m + h0) * wc + u),
                static_cast<int>(soff + u), f.one());
        ro.add_entry(
            static_cast<int>(soff + u),
            static_cast<int>(hoff + (static_cast<long>(j0) * m + idl) * wc + u),
            f.one());
      }
      hoff += static_cast<long>(c) * m * wc;
      soff += wc;
    }
    io.finalize();
    ro.finalize();
    out.iota.components.push_back(std::move(io));
    out.rho.components.push_back(std::move(ro));
  }

  out.iota_report = verify_chain_map(out.small, out.hom_complex, out.iota);
  if (out.iota_report.ok && F::has_norm) {
    if constexpr (F::has_norm) {
      out.iota_report.isometric = true;
      for (int n = 0; n <= d_small; ++n) {
        if (out.small.dims[n] == 0) continue;
        if (!f.eq(linf_norm(out.iota.components[n]), f.one()) ||
            !f.eq(linf_norm(out.rho.components[n]), f.one()))
          out.iota_report.isometric = false;
      }
    }
  }

  out.rho_iota_identity = true;
  for (int n = 0; n <= d_small; ++n)
    if (!out.rho.components[n]
             .mul(out.iota.components[n])
             .equals(ExactMatrix<F>::identity(f, out.small.dims[n])))
      out.rho_iota_identity = false;

  // Equivariance: the image of iota is exactly the G-fixed part of the dual.
  out.iota_invariant = true;
  for (int n = 0; n <= std::min(invariance_check_depth, d_small); ++n) {
    int dim = out.hom_complex.dims[n];
    ExactMatrix<F> stacked(f, dim * g.order(), dim);
    for (int a = 0; a < g.order(); ++a) {
      auto am = coordinate_action(f, action, P, n + 1, a).transpose();
      for (int i = 0; i < dim; ++i) {
        for (const auto& [cidx, v] : am.row(i))
          stacked.add_entry(a * dim + i, cidx, v);
        stacked.add_entry(a * dim + i, i, f.neg(f.one()));
      }
    }
    stacked.finalize();
    if (!stacked.mul(out.iota.components[n]).is_zero())
      out.iota_invariant = false;
    out.invariant_dims.push_back(kernel_dim(stacked));
    out.iota_ranks.push_back(rank(out.iota.components[n]));
  }
  return out;
}

// Fast path: cohomology of the summed stabilizer complexes, at cost
// sum_x |H_x|^n per degree instead of |G|^n |S|.
template <FieldLike F>
CohomologyReport disintegrate(const F& f, const GAction& action,
                              int max_degree,
                              std::size_t memory_cap = kDefaultMemoryCap) {
  auto od = orbit_decompose(action);
  std::vector<NormedComplex<F>> parts;
  for (const auto& stab : od.stabilizers)
    parts.push_back(hochschild_complex(f, stab.local_group(),
                                       augmentation_bimodule(f, stab.local_group()),
                                       max_degree, memory_cap));
  auto summed = sum_complexes(parts, NormKind::Linf);
  auto rep = cohomology_dims(summed.sum, "fast path");
  rep.label = "H*(k[" + action.group().name() + "], k(" + action.name() +
              ")') via stabilizers";
  return rep;
}

// Oracle: the full Hochschild computation on C*(k[G], k(S)').
template <FieldLike F>
CohomologyReport brute_force_oracle(const F& f, const GAction& action,
                                    int max_degree,
                                    std::size_t memory_cap = kDefaultMemoryCap) {
  auto coeffs = function_dual_of_action(f, action);
  auto complex =
      hochschild_complex(f, action.group(), coeffs, max_degree, memory_cap);
  auto rep = cohomology_dims(complex, "oracle");
  rep.label = "H*(k[" + action.group().name() + "], k(" + action.name() + ")')";
  return rep;
}

// The averaging homotopies on C*(k[H], C_eps): sigma_n averages the last
// argument over H, with sign (-1)^n. Over Q every sigma_n has linf norm
// exactly 1, which is the finite-group form of the contractive splitting that
// amenability provides in positive degrees. Requires |H| invertible in the
// field.
template <FieldLike F>
std::vector<ExactMatrix<F>> averaging_homotopies(const F& f, const Group& h,
                                                 const NormedComplex<F>& c) {
  const int m = h.order();
  auto inv_order = f.inv(f.from_int(m));  // throws when char divides |H|
  std::vector<ExactMatrix<F>> sigmas;
  for (int n = 0; n < c.levels(); ++n) {
    if (n == 0) {
      sigmas.push_back(ExactMatrix<F>::zero(f, 1, 1));  // unused placeholder
      continue;
    }
    long rows = detail::ipow(m, n - 1);
    long cols = detail::ipow(m, n);
    ExactMatrix<F> s(f, static_cast<int>(rows), static_cast<int>(cols));
    auto val = (n % 2) ? f.neg(inv_order) : inv_order;
    for (long u = 0; u < rows; ++u)
      for (int last = 0; last < m; ++last)
        s.add_entry(static_cast<int>(u), static_cast<int>(u * m + last), val);
    s.finalize();
    sigmas.push_back(std::move(s));
  }
  return sigmas;
}

}  // namespace cohomolab
