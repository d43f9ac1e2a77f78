#pragma once

// Chain/cochain complexes of exact matrices with declared norms, and the
// verification machinery built on them: composition-zero checks, cohomology
// dimension reports, chain-map and chain-isomorphism verification, splitting
// certificates with norm bounds, finite l1/linf sums with uniform-bound
// reporting, and the running counterexample showing why termwise splittings
// of an linf-sum need uniform norm control.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohomolab/matrix.hpp"

namespace cohomolab {

enum class Direction { Chain, Cochain };
enum class NormKind { L1, Linf, None };

inline std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::L1: return "l1";
    case NormKind::Linf: return "linf";
    default: return "none";
  }
}

// A finite complex of exact matrices.
//
// Chain direction:   maps[j] : E_{j+1} -> E_j      (resolutions)
// Cochain direction: maps[j] : E_j     -> E_{j+1}  (Hochschild complexes)
//
// Levels run 0..dims.size()-1; there is always exactly one map fewer than
// there are levels.
template <FieldLike F>
struct NormedComplex {
  F field;
  Direction direction = Direction::Cochain;
  std::vector<int> dims;
  std::vector<ExactMatrix<F>> maps;
  std::vector<NormKind> norm_kinds;
  std::string label;

  int levels() const { return static_cast<int>(dims.size()); }
  int num_maps() const { return static_cast<int>(maps.size()); }

  // Shape of maps[j] as (rows, cols) implied by the direction.
  std::pair<int, int> expected_shape(int j) const {
    if (direction == Direction::Chain) return {dims[j], dims[j + 1]};
    return {dims[j + 1], dims[j]};
  }
};

template <FieldLike F>
NormedComplex<F> make_complex(F field, Direction dir, std::vector<int> dims,
                              std::vector<ExactMatrix<F>> maps,
                              NormKind kind, std::string label) {
  if (dims.empty() || maps.size() + 1 != dims.size())
    throw std::invalid_argument("complex needs one more level than maps");
  NormedComplex<F> c{std::move(field), dir, std::move(dims), std::move(maps),
                     {}, std::move(label)};
  c.norm_kinds.assign(c.dims.size(), kind);
  for (int j = 0; j < c.num_maps(); ++j) {
    auto [r, cols] = c.expected_shape(j);
    if (c.maps[j].rows() != r || c.maps[j].cols() != cols)
      throw std::invalid_argument(
          "map " + std::to_string(j) + " of " + c.label + " has shape " +
          std::to_string(c.maps[j].rows()) + "x" +
          std::to_string(c.maps[j].cols()) + ", expected " +
          std::to_string(r) + "x" + std::to_string(cols));
  }
  return c;
}

struct ComplexWitness {
  int degree;  // the level shared by the two offending maps
  int row, col;
  std::string value;
};

struct VerifyResult {
  bool ok;
  std::optional<ComplexWitness> witness;
};

// Checks that consecutive maps compose to zero, exactly.
template <FieldLike F>
VerifyResult verify_complex(const NormedComplex<F>& c) {
  const F& f = c.field;
  for (int j = 0; j + 1 < c.num_maps(); ++j) {
    ExactMatrix<F> prod = (c.direction == Direction::Chain)
                              ? c.maps[j].mul(c.maps[j + 1])
                              : c.maps[j + 1].mul(c.maps[j]);
    for (int i = 0; i < prod.rows(); ++i)
      if (!prod.row(i).empty()) {
        const auto& [col, v] = prod.row(i).front();
        return {false, ComplexWitness{j + 1, i, col, f.to_string(v)}};
      }
  }
  return {true, std::nullopt};
}

struct DegreeDims {
  int degree;
  int z, b, h;  // cycle, boundary, cohomology dimensions
};

struct CohomologyReport {
  std::string label;
  std::string field_name;
  std::string tag;  // "oracle" / "fast path" / ...
  int max_degree = -1;
  std::vector<DegreeDims> dims;

  std::vector<int> h_vector() const {
    std::vector<int> h;
    h.reserve(dims.size());
    for (const auto& d : dims) h.push_back(d.h);
    return h;
  }
};

// Per-degree Z/B/H dimensions by exact rank accounting. Degree n is reported
// when both the map into and out of level n are stored, i.e. for
// n = 0 .. num_maps()-1; reporting degree D therefore requires a complex built
// with D+1 maps. The complex is re-verified first so that the subspace
// inclusion B <= Z is certain before dimensions are subtracted.
template <FieldLike F>
CohomologyReport cohomology_dims(const NormedComplex<F>& c,
                                 std::string tag = "") {
  auto ver = verify_complex(c);
  if (!ver.ok)
    throw std::logic_error(
        "cohomology_dims on a broken complex (" + c.label + "): maps " +
        std::to_string(ver.witness->degree) + "," +
        std::to_string(ver.witness->degree + 1) + " compose to " +
        ver.witness->value + " at (" + std::to_string(ver.witness->row) + "," +
        std::to_string(ver.witness->col) + ")");

  CohomologyReport rep;
  rep.label = c.label;
  rep.field_name = c.field.name();
  rep.tag = std::move(tag);
  rep.max_degree = c.num_maps() - 1;

  std::vector<int> ranks(c.num_maps());
  for (int j = 0; j < c.num_maps(); ++j) ranks[j] = rank(c.maps[j]);

  for (int n = 0; n < c.num_maps(); ++n) {
    int z, b;
    if (c.direction == Direction::Cochain) {
      z = c.dims[n] - ranks[n];              // ker(maps[n] : E_n -> E_{n+1})
      b = (n == 0) ? 0 : ranks[n - 1];       // im(maps[n-1])
    } else {
      z = (n == 0) ? c.dims[0]               // no boundary out of level 0
                   : c.dims[n] - ranks[n - 1];
      b = ranks[n];                          // im(maps[n] : E_{n+1} -> E_n)
    }
    if (b > z)
      throw std::logic_error("boundaries exceed cycles at degree " +
                             std::to_string(n) + " of " + c.label);
    rep.dims.push_back({n, z, b, z - b});
  }
  return rep;
}

// ---- Chain maps ----

template <FieldLike F>
struct ChainMap {
  std::vector<ExactMatrix<F>> components;  // per level
  std::string label;
};

struct ChainMapWitness {
  int level;
  std::string detail;
};

struct ChainMapReport {
  bool ok = false;
  bool isomorphism = false;
  bool isometric = false;
  std::optional<ChainMapWitness> witness;
};

// Degree-wise commutation with the differentials.
template <FieldLike F>
ChainMapReport verify_chain_map(const NormedComplex<F>& src,
                                const NormedComplex<F>& dst,
                                const ChainMap<F>& f) {
  ChainMapReport rep;
  if (src.direction != dst.direction || src.levels() != dst.levels()) {
    rep.witness = ChainMapWitness{-1, "shape/direction mismatch"};
    return rep;
  }
  if (static_cast<int>(f.components.size()) != src.levels()) {
    rep.witness = ChainMapWitness{-1, "component count mismatch"};
    return rep;
  }
  for (int j = 0; j < src.levels(); ++j)
    if (f.components[j].rows() != dst.dims[j] ||
        f.components[j].cols() != src.dims[j]) {
      rep.witness = ChainMapWitness{j, "component shape mismatch"};
      return rep;
    }
  for (int j = 0; j < src.num_maps(); ++j) {
    ExactMatrix<F> lhs =
        (src.direction == Direction::Chain)
            ? f.components[j].mul(src.maps[j])        // E_{j+1} -> F_j
            : f.components[j + 1].mul(src.maps[j]);   // E_j -> F_{j+1}
    ExactMatrix<F> rhs = (src.direction == Direction::Chain)
                             ? dst.maps[j].mul(f.components[j + 1])
                             : dst.maps[j].mul(f.components[j]);
    if (!lhs.equals(rhs)) {
      rep.witness =
          ChainMapWitness{j, "does not commute with the differential"};
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

// Mutually inverse chain maps; optionally certifies both directions as
// isometries (component norms exactly 1, per the declared norm kind).
template <FieldLike F>
ChainMapReport verify_chain_iso(const NormedComplex<F>& src,
                                const NormedComplex<F>& dst,
                                const ChainMap<F>& fwd, const ChainMap<F>& bwd,
                                bool check_isometry = false) {
  ChainMapReport rep = verify_chain_map(src, dst, fwd);
  if (!rep.ok) return rep;
  ChainMapReport back = verify_chain_map(dst, src, bwd);
  if (!back.ok) return back;
  for (int j = 0; j < src.levels(); ++j) {
    auto rt = bwd.components[j].mul(fwd.components[j]);
    auto tr = fwd.components[j].mul(bwd.components[j]);
    if (!rt.equals(ExactMatrix<F>::identity(src.field, src.dims[j]))) {
      rep.ok = false;
      rep.witness = ChainMapWitness{j, "backward*forward is not the identity"};
      return rep;
    }
    if (!tr.equals(ExactMatrix<F>::identity(src.field, dst.dims[j]))) {
      rep.ok = false;
      rep.witness = ChainMapWitness{j, "forward*backward is not the identity"};
      return rep;
    }
  }
  rep.isomorphism = true;
  if (check_isometry) {
    if constexpr (F::has_norm) {
      const F& f = src.field;
      rep.isometric = true;
      for (int j = 0; j < src.levels(); ++j) {
        auto norm_of = [&](const ExactMatrix<F>& m) {
          return src.norm_kinds[j] == NormKind::Linf ? linf_norm(m)
                                                     : l1_norm(m);
        };
        bool fwd_one = src.dims[j] == 0 || f.eq(norm_of(fwd.components[j]), f.one());
        bool bwd_one = dst.dims[j] == 0 || f.eq(norm_of(bwd.components[j]), f.one());
        if (!fwd_one || !bwd_one) {
          rep.isometric = false;
          rep.witness = ChainMapWitness{j, "component norm differs from 1"};
          break;
        }
      }
    } else {
      throw std::invalid_argument("isometry certification needs norms (Q)");
    }
  }
  return rep;
}

// ---- Splitting certificates ----

struct SplitWitness {
  int degree;
  std::string what;  // failing identity or offending norm value
};

template <FieldLike F>
struct SplitCertificate {
  bool ok = false;
  bool norms_checked = false;
  // Largest homotopy norm when checked (the certificate is contractive iff
  // this is <= 1).
  std::optional<typename F::Scalar> max_norm;
  std::optional<SplitWitness> witness;
};

// Verifies d_0 s_0 = id and s_{j-1} d_{j-1} + d_j s_j = id for a chain
// complex, exactly; with check_norms (Q only) also certifies every homotopy
// contractive in the complex's declared norm.
template <FieldLike F>
SplitCertificate<F> certify_split(const NormedComplex<F>& c,
                                  const std::vector<ExactMatrix<F>>& s,
                                  bool check_norms) {
  SplitCertificate<F> cert;
  if (c.direction != Direction::Chain)
    throw std::invalid_argument("certify_split expects a chain complex");
  if (s.size() != c.maps.size())
    throw std::invalid_argument("expected one homotopy per differential");
  const F& f = c.field;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j].rows() != c.dims[j + 1] || s[j].cols() != c.dims[j]) {
      cert.witness = SplitWitness{static_cast<int>(j), "homotopy shape"};
      return cert;
    }

  if (!c.maps[0].mul(s[0]).equals(ExactMatrix<F>::identity(f, c.dims[0]))) {
    cert.witness = SplitWitness{0, "d0 s0 != id"};
    return cert;
  }
  for (std::size_t j = 1; j < s.size(); ++j) {
    auto lhs = s[j - 1].mul(c.maps[j - 1]).add(c.maps[j].mul(s[j]));
    if (!lhs.equals(ExactMatrix<F>::identity(f, c.dims[j]))) {
      cert.witness = SplitWitness{static_cast<int>(j),
                                  "s_{j-1} d_{j-1} + d_j s_j != id"};
      return cert;
    }
  }

  if (check_norms) {
    if constexpr (F::has_norm) {
      auto best = f.zero();
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto nv = c.norm_kinds[j] == NormKind::Linf ? linf_norm(s[j])
                                                   : l1_norm(s[j]);
        if (f.less(best, nv)) best = nv;
      }
      cert.norms_checked = true;
      cert.max_norm = best;
      if (f.less(f.one(), best)) {
        cert.witness = SplitWitness{-1, "homotopy norm " + f.to_string(best) +
                                            " exceeds 1"};
        return cert;
      }
    } else {
      throw std::invalid_argument("norm certification needs Q coefficients");
    }
  }
  cert.ok = true;
  return cert;
}

// Cochain-side splitting in degrees >= 1: homotopies s[n] : C^n -> C^{n-1}
// (s[0] unused) with s_{n+1} delta_n + delta_{n-1} s_n = id for n >= 1. This
// certifies exactness in all interior positive degrees; degree 0 survives.
template <FieldLike F>
SplitCertificate<F> certify_cochain_splitting(
    const NormedComplex<F>& c, const std::vector<ExactMatrix<F>>& s,
    bool check_norms) {
  SplitCertificate<F> cert;
  if (c.direction != Direction::Cochain)
    throw std::invalid_argument("expects a cochain complex");
  if (static_cast<int>(s.size()) != c.levels())
    throw std::invalid_argument("expected one homotopy per level");
  const F& f = c.field;
  for (int n = 1; n + 1 < c.levels(); ++n) {
    auto lhs = s[n + 1].mul(c.maps[n]).add(c.maps[n - 1].mul(s[n]));
    if (!lhs.equals(ExactMatrix<F>::identity(f, c.dims[n]))) {
      cert.witness =
          SplitWitness{n, "s_{n+1} delta_n + delta_{n-1} s_n != id"};
      return cert;
    }
  }
  if (check_norms) {
    if constexpr (F::has_norm) {
      auto best = f.zero();
      for (int n = 1; n < c.levels(); ++n) {
        auto nv = c.norm_kinds[n] == NormKind::Linf ? linf_norm(s[n])
                                                    : l1_norm(s[n]);
        if (f.less(best, nv)) best = nv;
      }
      cert.norms_checked = true;
      cert.max_norm = best;
      if (f.less(f.one(), best)) {
        cert.witness = SplitWitness{-1, "homotopy norm " + f.to_string(best) +
                                            " exceeds 1"};
        return cert;
      }
    } else {
      throw std::invalid_argument("norm certification needs Q coefficients");
    }
  }
  cert.ok = true;
  return cert;
}

// ---- Finite sums ----

template <FieldLike F>
struct SumResult {
  NormedComplex<F> sum;
  bool norms_checked = false;
  // Per-map maximum differential norm across the parts: the finite-index
  // surrogate of the uniform-bound hypothesis needed for a sum of split
  // complexes to stay split.
  std::vector<typename F::Scalar> max_map_norms;
};

template <FieldLike F>
SumResult<F> sum_complexes(const std::vector<NormedComplex<F>>& parts,
                           NormKind mode) {
  if (parts.empty()) throw std::invalid_argument("empty sum");
  const F& f = parts[0].field;
  for (const auto& p : parts) {
    if (!(p.field == f) || p.direction != parts[0].direction ||
        p.levels() != parts[0].levels())
      throw std::invalid_argument("summands must share field and degree range");
  }
  SumResult<F> out{{f, parts[0].direction, {}, {}, {}, "sum"}, false, {}};
  auto& c = out.sum;
  for (int j = 0; j < parts[0].levels(); ++j) {
    int d = 0;
    for (const auto& p : parts) d += p.dims[j];
    c.dims.push_back(d);
  }
  for (int j = 0; j < parts[0].num_maps(); ++j) {
    std::vector<ExactMatrix<F>> blocks;
    blocks.reserve(parts.size());
    for (const auto& p : parts) blocks.push_back(p.maps[j]);
    c.maps.push_back(ExactMatrix<F>::block_diag(f, blocks));
  }
  c.norm_kinds.assign(c.dims.size(), mode);
  c.label = "sum(" + std::to_string(parts.size()) + " parts, " +
            to_string(mode) + ")";
  if constexpr (F::has_norm) {
    out.norms_checked = true;
    for (int j = 0; j < parts[0].num_maps(); ++j) {
      auto best = f.zero();
      for (const auto& p : parts) {
        auto nv = mode == NormKind::Linf ? linf_norm(p.maps[j])
                                         : l1_norm(p.maps[j]);
        if (f.less(best, nv)) best = nv;
      }
      out.max_map_norms.push_back(best);
    }
  }
  return out;
}

// Block-diagonal homotopy for a sum of split parts.
template <FieldLike F>
std::vector<ExactMatrix<F>> sum_homotopies(
    const F& f, const std::vector<std::vector<ExactMatrix<F>>>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty sum");
  std::vector<ExactMatrix<F>> out;
  for (std::size_t j = 0; j < parts[0].size(); ++j) {
    std::vector<ExactMatrix<F>> blocks;
    for (const auto& p : parts) blocks.push_back(p[j]);
    out.push_back(ExactMatrix<F>::block_diag(f, blocks));
  }
  return out;
}

// ---- The divide-by-n demonstration ----
//
// Each one-step complex 0 <- Q <-(1/n)- Q is onto, so every cokernel is zero
// and the summed cokernel is zero. But the unique right inverse of the
// truncated linf-sum diag(1, 1/2, ..., 1/N) is diag(1, ..., N), of linf norm
// exactly N: there is no uniformly bounded family of splittings as N grows.
// This is the finite-scale shadow of the failure of cohomology to commute
// with linf-sums, and the reason splitting certificates here insist on
// norm <= 1 rather than mere existence.
struct SniperReport {
  int n = 0;
  int summed_cokernel_dim = 0;
  Rational forced_inverse_norm;
  std::vector<Rational> part_inverse_norms;
};

inline SniperReport sniper_demo(int n) {
  if (n < 1) throw std::invalid_argument("sniper_demo needs N >= 1");
  Rationals q;
  SniperReport rep;
  rep.n = n;

  std::vector<NormedComplex<Rationals>> parts;
  for (int k = 1; k <= n; ++k) {
    ExactMatrix<Rationals> fk(q, 1, 1);
    fk.add_entry(0, 0, q.div(q.one(), q.from_int(k)));
    fk.finalize();
    parts.push_back(make_complex(q, Direction::Chain, {1, 1}, {fk},
                                 NormKind::Linf, "f" + std::to_string(k)));
    rep.part_inverse_norms.push_back(q.from_int(k));
    // cokernel of f_k is zero:
    if (1 - rank(parts.back().maps[0]) != 0)
      throw std::logic_error("divide-by-n map must be onto");
  }
  auto summed = sum_complexes(parts, NormKind::Linf);
  rep.summed_cokernel_dim = summed.sum.dims[0] - rank(summed.sum.maps[0]);

  auto inv = inverse(summed.sum.maps[0]);
  if (!inv.has_value())
    throw std::logic_error("truncated sum must be invertible");
  rep.forced_inverse_norm = linf_norm(*inv);
  return rep;
}

}  // namespace cohomolab
