#pragma once

// Finite groups as validated multiplication tables, plus the combinatorial
// apparatus the homological pipelines consume: subgroups, conjugacy classes,
// centralizers, actions with orbit/stabilizer decompositions, and coset
// transversals with their factor maps.
//
// Everything is value-semantic and immutable after construction; the types do
// not hold pointers into each other, so they can be moved and stored freely.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohomolab {

class GroupValidationError : public std::invalid_argument {
 public:
  enum class Kind { Shape, NotAssociative, NoIdentity, NotInvertible };

  GroupValidationError(Kind kind, std::string msg, std::array<int, 3> witness)
      : std::invalid_argument(std::move(msg)), kind(kind), witness(witness) {}

  Kind kind;
  std::array<int, 3> witness;
};

class Group {
 public:
  // Validates the full table: associativity by triple scan, a two-sided
  // identity, and two-sided inverses. The identity is detected, not assumed to
  // sit at index 0.
  static Group from_table(std::string name, std::vector<std::vector<int>> mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0)
      throw GroupValidationError(GroupValidationError::Kind::Shape,
                                 "empty multiplication table", {0, 0, 0});
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(mul[i].size()) != n)
        throw GroupValidationError(GroupValidationError::Kind::Shape,
                                   "table is not square at row " +
                                       std::to_string(i),
                                   {i, 0, 0});
      for (int j = 0; j < n; ++j)
        if (mul[i][j] < 0 || mul[i][j] >= n)
          throw GroupValidationError(
              GroupValidationError::Kind::Shape,
              "table entry out of range at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")",
              {i, j, mul[i][j]});
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = (mul[e][x] == x && mul[x][e] == x);
      if (ok) identity = e;
    }
    if (identity < 0)
      throw GroupValidationError(GroupValidationError::Kind::NoIdentity,
                                 "no two-sided identity element", {0, 0, 0});

    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (mul[x][y] == identity && mul[y][x] == identity) {
          inv[x] = y;
          break;
        }
      if (inv[x] < 0)
        throw GroupValidationError(GroupValidationError::Kind::NotInvertible,
                                   "element " + std::to_string(x) +
                                       " has no two-sided inverse",
                                   {x, 0, 0});
    }

    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw GroupValidationError(
                GroupValidationError::Kind::NotAssociative,
                "associativity fails at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")",
                {a, b, c});

    Group g;
    g.name_ = std::move(name);
    g.mul_ = std::move(mul);
    g.identity_ = identity;
    g.inv_ = std::move(inv);
    return g;
  }

  // Closure of permutation generators (image lists on {0..degree-1}); the
  // identity is enumerated first, so it lands at index 0.
  static Group from_permutations(std::string name, int degree,
                                 const std::vector<std::vector<int>>& gens) {
    for (const auto& p : gens) {
      if (static_cast<int>(p.size()) != degree)
        throw std::invalid_argument("generator degree mismatch");
      std::vector<bool> seen(degree, false);
      for (int v : p) {
        if (v < 0 || v >= degree || seen[v])
          throw std::invalid_argument("generator is not a permutation");
        seen[v] = true;
      }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    auto intern = [&](const std::vector<int>& p) {
      auto [it, fresh] = index.emplace(p, static_cast<int>(elems.size()));
      if (fresh) elems.push_back(p);
      return it->second;
    };
    intern(id);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& gen : gens) {
        std::vector<int> prod(degree);
        for (int i = 0; i < degree; ++i) prod[i] = elems[head][gen[i]];
        intern(prod);
      }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> prod(degree);
        for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
        auto it = index.find(prod);
        if (it == index.end())
          throw std::logic_error("closure missed a product");
        mul[a][b] = it->second;
      }
    return from_table(std::move(name), std::move(mul));
  }

  static Group direct_product(std::string name, const Group& a, const Group& b) {
    const int n = a.order() * b.order();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
      for (int y1 = 0; y1 < b.order(); ++y1)
        for (int x2 = 0; x2 < a.order(); ++x2)
          for (int y2 = 0; y2 < b.order(); ++y2)
            mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return from_table(std::move(name), std::move(mul));
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }

  int conjugate(int g, int x) const { return mul_[mul_[g][x]][inv_[g]]; }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = a + 1; b < order(); ++b)
        if (mul_[a][b] != mul_[b][a]) return false;
    return true;
  }

  void check_element(int x) const {
    if (x < 0 || x >= order())
      throw std::out_of_range("element index " + std::to_string(x) +
                              " out of range for group of order " +
                              std::to_string(order()));
  }

 private:
  std::string name_;
  std::vector<std::vector<int>> mul_;
  int identity_ = 0;
  std::vector<int> inv_;
};

// A validated subgroup, carrying its own local multiplication table so that
// downstream code can treat it as a group in its own right.
class Subgroup {
 public:
  static Subgroup from_elements(const Group& parent, std::vector<int> elements,
                                std::string name = "") {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    const int k = static_cast<int>(elements.size());
    std::vector<int> local_of(parent.order(), -1);
    for (int i = 0; i < k; ++i) {
      parent.check_element(elements[i]);
      local_of[elements[i]] = i;
    }
    if (k == 0 || local_of[parent.identity()] < 0)
      throw std::invalid_argument("subgroup must contain the identity");
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
      if (local_of[parent.inv(elements[i])] < 0)
        throw std::invalid_argument("subset not closed under inverse");
      for (int j = 0; j < k; ++j) {
        int prod = parent.mul(elements[i], elements[j]);
        if (local_of[prod] < 0)
          throw std::invalid_argument("subset not closed under multiplication");
        table[i][j] = local_of[prod];
      }
    }
    Subgroup s;
    if (name.empty())
      name = parent.name() + "-sub" + std::to_string(k);
    s.elements_ = std::move(elements);
    s.local_of_ = std::move(local_of);
    s.local_ = Group::from_table(std::move(name), std::move(table));
    return s;
  }

  static Subgroup whole(const Group& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return from_elements(g, std::move(all), g.name());
  }

  static Subgroup trivial(const Group& g) {
    return from_elements(g, {g.identity()}, "1");
  }

  int order() const { return local_.order(); }
  const std::vector<int>& elements() const { return elements_; }
  const Group& local_group() const { return local_; }
  bool contains(int parent_idx) const { return local_of_[parent_idx] >= 0; }
  int local_index(int parent_idx) const { return local_of_[parent_idx]; }
  int parent_index(int local_idx) const { return elements_[local_idx]; }

 private:
  std::vector<int> elements_;
  std::vector<int> local_of_;
  Group local_ = Group::from_table("1", {{0}});
};

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // ordered by smallest representative
  std::vector<int> class_of;

  int representative(int k) const { return classes[k].front(); }
};

inline ConjugacyClasses conjugacy_classes(const Group& g) {
  ConjugacyClasses cc;
  cc.class_of.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order(); ++h) {
      int y = g.conjugate(h, x);
      if (cc.class_of[y] < 0) {
        cc.class_of[y] = static_cast<int>(cc.classes.size());
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

inline Subgroup centralizer(const Group& g, int x) {
  g.check_element(x);
  std::vector<int> elems;
  for (int a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a)) elems.push_back(a);
  return Subgroup::from_elements(g, std::move(elems),
                                 "C(" + std::to_string(x) + ")");
}

struct CommutativeTransitiveWitness {
  int element;          // x with nonabelian centralizer
  int first, second;    // a noncommuting pair inside C_x
};

struct CommutativeTransitiveResult {
  bool commutative_transitive;
  std::optional<CommutativeTransitiveWitness> witness;
};

// True iff every non-identity element has an abelian centralizer.
inline CommutativeTransitiveResult is_commutative_transitive(const Group& g) {
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    auto c = centralizer(g, x);
    const auto& elems = c.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i]))
          return {false, CommutativeTransitiveWitness{
                             x, elems[i], elems[j]}};
  }
  return {true, std::nullopt};
}

// A left action of a group on a finite set, validated on the full table.
class GAction {
 public:
  static GAction from_table(Group group, int set_size,
                            std::vector<std::vector<int>> act,
                            std::string name = "action") {
    if (set_size <= 0) throw std::invalid_argument("empty action set");
    if (static_cast<int>(act.size()) != group.order())
      throw std::invalid_argument("action table has wrong number of rows");
    for (const auto& row : act) {
      if (static_cast<int>(row.size()) != set_size)
        throw std::invalid_argument("action table row has wrong length");
      for (int s : row)
        if (s < 0 || s >= set_size)
          throw std::invalid_argument("action table point out of range");
    }
    for (int s = 0; s < set_size; ++s)
      if (act[group.identity()][s] != s)
        throw std::invalid_argument("identity does not act trivially at point " +
                                    std::to_string(s));
    for (int a = 0; a < group.order(); ++a)
      for (int b = 0; b < group.order(); ++b) {
        int ab = group.mul(a, b);
        for (int s = 0; s < set_size; ++s)
          if (act[a][act[b][s]] != act[ab][s])
            throw std::invalid_argument(
                "action law fails at g=" + std::to_string(a) +
                ", h=" + std::to_string(b) + ", s=" + std::to_string(s));
      }
    GAction out;
    out.group_ = std::move(group);
    out.set_size_ = set_size;
    out.act_ = std::move(act);
    out.name_ = std::move(name);
    return out;
  }

  // Conjugation on the non-identity elements. Point i corresponds to the
  // (i+1 <= ...) ascending non-identity element; labels are kept.
  static GAction conjugation(const Group& g) {
    if (g.order() < 2)
      throw std::invalid_argument(
          "conjugation action needs a nontrivial group");
    std::vector<int> labels;
    std::vector<int> point_of(g.order(), -1);
    for (int x = 0; x < g.order(); ++x)
      if (x != g.identity()) {
        point_of[x] = static_cast<int>(labels.size());
        labels.push_back(x);
      }
    std::vector<std::vector<int>> act(g.order(),
                                      std::vector<int>(labels.size()));
    for (int h = 0; h < g.order(); ++h)
      for (std::size_t i = 0; i < labels.size(); ++i)
        act[h][i] = point_of[g.conjugate(h, labels[i])];
    auto out = from_table(g, static_cast<int>(labels.size()), std::move(act),
                          "conjugation");
    out.point_labels_ = std::move(labels);
    return out;
  }

  static GAction regular(const Group& g) {
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
      for (int s = 0; s < g.order(); ++s) act[a][s] = g.mul(a, s);
    return from_table(g, g.order(), std::move(act), "regular");
  }

  static GAction trivial(const Group& g, int npoints) {
    std::vector<int> id(npoints);
    for (int i = 0; i < npoints; ++i) id[i] = i;
    std::vector<std::vector<int>> act(g.order(), id);
    return from_table(g, npoints, std::move(act), "trivial");
  }

  const Group& group() const { return group_; }
  int set_size() const { return set_size_; }
  int act(int g, int s) const { return act_[g][s]; }
  const std::string& name() const { return name_; }
  const std::vector<int>& point_labels() const { return point_labels_; }

 private:
  Group group_ = Group::from_table("1", {{0}});
  int set_size_ = 1;
  std::vector<std::vector<int>> act_;
  std::string name_;
  std::vector<int> point_labels_;  // conjugation only: point -> group element
};

struct OrbitDecomposition {
  std::vector<int> representatives;        // smallest point per orbit
  std::vector<std::vector<int>> orbits;    // sorted points, rep order
  std::vector<Subgroup> stabilizers;       // aligned with representatives
  std::vector<int> orbit_of;               // point -> orbit index
};

inline OrbitDecomposition orbit_decompose(const GAction& a) {
  const Group& g = a.group();
  OrbitDecomposition od;
  od.orbit_of.assign(a.set_size(), -1);
  for (int s = 0; s < a.set_size(); ++s) {
    if (od.orbit_of[s] >= 0) continue;
    int k = static_cast<int>(od.orbits.size());
    std::vector<int> orbit;
    for (int h = 0; h < g.order(); ++h) {
      int t = a.act(h, s);
      if (od.orbit_of[t] < 0) {
        od.orbit_of[t] = k;
        orbit.push_back(t);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<int> stab;
    for (int h = 0; h < g.order(); ++h)
      if (a.act(h, s) == s) stab.push_back(h);
    od.representatives.push_back(s);
    od.orbits.push_back(std::move(orbit));
    od.stabilizers.push_back(Subgroup::from_elements(
        g, std::move(stab), "Stab(" + std::to_string(s) + ")"));
    if (static_cast<long>(od.orbits.back().size()) *
            od.stabilizers.back().order() !=
        g.order())
      throw std::logic_error("orbit-stabilizer count failed");
  }
  return od;
}

// Left-coset transversal for H <= G with its factor map eta: G -> H defined by
// g = tau(gH) * eta(g). eta values are local H indices. The default choice
// takes the smallest element of each coset, except that the coset of the
// identity always gets the identity itself (so eta restricted to H is the
// identity map even when the identity is not element 0).
struct Transversal {
  std::vector<int> tau;       // coset -> parent element
  std::vector<int> coset_of;  // parent element -> coset
  std::vector<int> eta;       // parent element -> local H index

  int num_cosets() const { return static_cast<int>(tau.size()); }
};

namespace detail {

inline Transversal transversal_from_tau(const Group& g, const Subgroup& h,
                                        Transversal t) {
  t.eta.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    int rep = t.tau[t.coset_of[x]];
    int e = g.mul(g.inv(rep), x);
    int loc = h.local_index(e);
    if (loc < 0) throw std::logic_error("factor map left the subgroup");
    t.eta[x] = loc;
  }
  return t;
}

}  // namespace detail

inline Transversal make_transversal(const Group& g, const Subgroup& h) {
  Transversal t;
  t.coset_of.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] >= 0) continue;
    int k = static_cast<int>(t.tau.size());
    bool has_identity = false;
    for (int e : h.elements()) {
      int y = g.mul(x, e);
      t.coset_of[y] = k;
      if (y == g.identity()) has_identity = true;
    }
    t.tau.push_back(has_identity ? g.identity() : x);
  }
  return detail::transversal_from_tau(g, h, std::move(t));
}

inline Transversal make_random_transversal(const Group& g, const Subgroup& h,
                                           std::uint64_t seed) {
  Transversal t = make_transversal(g, h);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> members(t.num_cosets());
  for (int x = 0; x < g.order(); ++x) members[t.coset_of[x]].push_back(x);
  for (int k = 0; k < t.num_cosets(); ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, members[k].size() - 1);
    t.tau[k] = members[k][pick(rng)];
  }
  return detail::transversal_from_tau(g, h, std::move(t));
}

}  // namespace cohomolab
