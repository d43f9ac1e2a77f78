#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "cohomolab/group.hpp"
#include "cohomolab/io.hpp"
#include "support/helpers.hpp"

using namespace cohomolab;

namespace {

Group corpus_group(const std::string& name) {
  auto idx = load_corpus_index(testutil::corpus_dir());
  return load_corpus_group(idx, name);
}

std::vector<std::string> kSmallCorpus = {"trivial", "c2", "c3", "c5",
                                         "c6",      "s3", "d4", "q8"};

// Independent CT oracle: for each x != id, test all pairs in C_x directly.
bool ct_oracle(const Group& g) {
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    std::vector<int> cx;
    for (int a = 0; a < g.order(); ++a)
      if (g.mul(a, x) == g.mul(x, a)) cx.push_back(a);
    for (int a : cx)
      for (int b : cx)
        if (g.mul(a, b) != g.mul(b, a)) return false;
  }
  return true;
}

std::multiset<std::size_t> class_sizes(const Group& g) {
  std::multiset<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g).classes) sizes.insert(c.size());
  return sizes;
}

}  // namespace

TEST_CASE("group construction and validation", "[groups]") {
  auto triv = Group::from_table("1", {{0}});
  CHECK(triv.order() == 1);
  CHECK(triv.identity() == 0);

  auto c2 = Group::from_table("C2", {{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.identity() == 0);
  CHECK(c2.inv(1) == 1);

  auto s3 = corpus_group("s3");
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);

  // Non-associative: a Latin square that is not a group table.
  std::vector<std::vector<int>> bad = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    Group::from_table("bad", bad);
    FAIL("expected validation failure");
  } catch (const GroupValidationError& e) {
    CHECK(e.kind == GroupValidationError::Kind::NotAssociative);
    auto [a, b, c] = e.witness;
    CHECK(bad[bad[a][b]][c] != bad[a][bad[b][c]]);
  }

  // No two-sided identity (each row is a left identity, neither works on the
  // right).
  CHECK_THROWS_AS(Group::from_table("bad", {{0, 1}, {0, 1}}),
                  GroupValidationError);
  // A table whose identity is not element 0 is still a group.
  CHECK(Group::from_table("c2r", {{1, 0}, {0, 1}}).identity() == 1);
  // Out-of-range entry.
  CHECK_THROWS_AS(Group::from_table("bad", {{0, 1}, {1, 7}}),
                  GroupValidationError);

  // Identity detection when it is not element 0: relabeled C3 with id at 1.
  // Relabel 0<->1 in the cyclic table.
  auto shuffled = Group::from_table("C3s", {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  CHECK(shuffled.identity() == 1);
  CHECK(shuffled.order() == 3);
}

TEST_CASE("permutation generators and direct products", "[groups]") {
  auto d4p = Group::from_permutations("D4perm", 4,
                                      {{1, 2, 3, 0}, {0, 3, 2, 1}});
  CHECK(d4p.order() == 8);
  CHECK(d4p.identity() == 0);
  CHECK(class_sizes(d4p) == std::multiset<std::size_t>{1, 1, 2, 2, 2});

  auto idx = load_corpus_index(testutil::corpus_dir());
  auto d4_file = load_group_file(idx.dir + "/d4_perm.json");
  CHECK(d4_file.order() == 8);

  auto c2 = corpus_group("c2");
  auto s3 = corpus_group("s3");
  auto prod = Group::direct_product("C2xS3", c2, s3);
  CHECK(prod.order() == 12);
  CHECK(corpus_group("c2xs3").order() == 12);
  CHECK(corpus_group("s3xs3").order() == 36);
}

TEST_CASE("conjugacy classes", "[groups]") {
  CHECK(class_sizes(corpus_group("trivial")) == std::multiset<std::size_t>{1});
  CHECK(class_sizes(corpus_group("c3")) ==
        std::multiset<std::size_t>{1, 1, 1});
  CHECK(class_sizes(corpus_group("s3")) == std::multiset<std::size_t>{1, 2, 3});
  CHECK(class_sizes(corpus_group("d4")) ==
        std::multiset<std::size_t>{1, 1, 2, 2, 2});
  CHECK(class_sizes(corpus_group("q8")) ==
        std::multiset<std::size_t>{1, 1, 2, 2, 2});

  for (const auto& name : kSmallCorpus) {
    auto g = corpus_group(name);
    auto cc = conjugacy_classes(g);
    // Classes partition G and sizes divide |G|.
    std::size_t total = 0;
    for (std::size_t k = 0; k < cc.classes.size(); ++k) {
      total += cc.classes[k].size();
      CHECK(g.order() % cc.classes[k].size() == 0);
      for (int x : cc.classes[k]) CHECK(cc.class_of[x] == static_cast<int>(k));
      // canonical representative is the smallest member
      CHECK(cc.representative(k) ==
            *std::min_element(cc.classes[k].begin(), cc.classes[k].end()));
    }
    CHECK(total == static_cast<std::size_t>(g.order()));
    // identity's class is a singleton
    CHECK(cc.classes[cc.class_of[g.identity()]].size() == 1);
  }
}

TEST_CASE("centralizers", "[groups]") {
  auto s3 = corpus_group("s3");
  CHECK(centralizer(s3, s3.identity()).order() == 6);
  CHECK(centralizer(s3, 1).order() == 2);  // transposition
  CHECK(centralizer(s3, 4).order() == 3);  // 3-cycle

  auto d4 = corpus_group("d4");
  CHECK(centralizer(d4, 2).order() == 8);  // central rotation r^2

  CHECK_THROWS_AS(centralizer(s3, 17), std::out_of_range);
}

TEST_CASE("commutative-transitive classifier", "[groups]") {
  auto check_group = [&](const std::string& name, bool expect) {
    auto g = corpus_group(name);
    auto r = is_commutative_transitive(g);
    INFO("group " << name);
    CHECK(r.commutative_transitive == expect);
    CHECK(r.commutative_transitive == ct_oracle(g));
    if (!r.commutative_transitive) {
      REQUIRE(r.witness.has_value());
      auto w = *r.witness;
      // witness pair lies in the centralizer of the witness element and does
      // not commute
      CHECK(g.mul(w.first, w.element) == g.mul(w.element, w.first));
      CHECK(g.mul(w.second, w.element) == g.mul(w.element, w.second));
      CHECK(g.mul(w.first, w.second) != g.mul(w.second, w.first));
    }
  };
  check_group("c6", true);
  check_group("s3", true);
  check_group("d4", false);
  check_group("q8", false);
  check_group("c2xs3", false);
  check_group("s3xs3", false);

  // D4's canonical witness is the central rotation r^2 = index 2.
  auto d4 = corpus_group("d4");
  auto r = is_commutative_transitive(d4);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->element == 2);
}

TEST_CASE("orbit decomposition", "[groups]") {
  auto s3 = corpus_group("s3");

  auto triv = GAction::trivial(s3, 4);
  auto od_triv = orbit_decompose(triv);
  CHECK(od_triv.orbits.size() == 4);
  for (const auto& stab : od_triv.stabilizers) CHECK(stab.order() == 6);

  auto conj = GAction::conjugation(s3);
  CHECK(conj.set_size() == 5);
  auto od = orbit_decompose(conj);
  REQUIRE(od.orbits.size() == 2);
  CHECK(od.orbits[0].size() == 3);
  CHECK(od.orbits[1].size() == 2);
  CHECK(od.stabilizers[0].order() == 2);
  CHECK(od.stabilizers[1].order() == 3);

  // Stabilizers of the conjugation action equal centralizers element-wise.
  for (std::size_t k = 0; k < od.orbits.size(); ++k) {
    int rep_elem = conj.point_labels()[od.representatives[k]];
    auto cent = centralizer(s3, rep_elem);
    CHECK(od.stabilizers[k].elements() == cent.elements());
  }

  auto c2 = corpus_group("c2");
  auto reg = GAction::regular(c2);
  auto od_reg = orbit_decompose(reg);
  CHECK(od_reg.orbits.size() == 1);
  CHECK(od_reg.stabilizers[0].order() == 1);

  // Orbit-stabilizer bookkeeping across the corpus conjugation actions.
  for (const auto& name : std::vector<std::string>{"c2", "c3", "s3", "d4", "q8"}) {
    auto g = corpus_group(name);
    auto a = GAction::conjugation(g);
    auto od2 = orbit_decompose(a);
    std::size_t total = 0;
    for (std::size_t k = 0; k < od2.orbits.size(); ++k) {
      total += od2.orbits[k].size();
      CHECK(static_cast<long>(od2.orbits[k].size()) *
                od2.stabilizers[k].order() ==
            g.order());
    }
    CHECK(total == static_cast<std::size_t>(a.set_size()));
  }

  // Q8 conjugation: -1 is a fixed point, the rest fall in 2-point orbits.
  auto q8 = corpus_group("q8");
  auto odq = orbit_decompose(GAction::conjugation(q8));
  std::multiset<std::size_t> sizes;
  for (const auto& o : odq.orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 2, 2});

  CHECK_THROWS_AS(GAction::conjugation(corpus_group("trivial")),
                  std::invalid_argument);
}

TEST_CASE("transversals and factor maps", "[groups]") {
  auto s3 = corpus_group("s3");

  auto check_laws = [&](const Group& g, const Subgroup& h, const Transversal& t) {
    for (int x = 0; x < g.order(); ++x) {
      int rep = t.tau[t.coset_of[x]];
      CHECK(t.coset_of[rep] == t.coset_of[x]);
      // g = tau(gH) * eta(g)
      CHECK(g.mul(rep, h.parent_index(t.eta[x])) == x);
    }
    // covariance eta(g h) = eta(g) * h, as local H elements
    for (int x = 0; x < g.order(); ++x)
      for (int hl = 0; hl < h.order(); ++hl) {
        int xh = g.mul(x, h.parent_index(hl));
        CHECK(t.eta[xh] == h.local_group().mul(t.eta[x], hl));
      }
  };

  // H = G: single coset, tau = id, eta = identity map.
  auto whole = Subgroup::whole(s3);
  auto t_whole = make_transversal(s3, whole);
  CHECK(t_whole.num_cosets() == 1);
  CHECK(t_whole.tau[0] == s3.identity());
  for (int x = 0; x < 6; ++x) CHECK(whole.parent_index(t_whole.eta[x]) == x);
  check_laws(s3, whole, t_whole);

  // H = {id}: singleton cosets, eta constantly the identity.
  auto triv = Subgroup::trivial(s3);
  auto t_triv = make_transversal(s3, triv);
  CHECK(t_triv.num_cosets() == 6);
  for (int x = 0; x < 6; ++x) {
    CHECK(t_triv.tau[t_triv.coset_of[x]] == x);
    CHECK(triv.parent_index(t_triv.eta[x]) == s3.identity());
  }

  // H = <transposition>: 3 cosets; laws by full scan.
  auto h = Subgroup::from_elements(s3, {0, 1});
  auto t = make_transversal(s3, h);
  CHECK(t.num_cosets() == 3);
  CHECK(t.tau[t.coset_of[s3.identity()]] == s3.identity());
  check_laws(s3, h, t);

  // Randomized transversals still satisfy the laws.
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    check_laws(s3, h, make_random_transversal(s3, h, seed));

  // Subgroup validation rejects non-closed subsets.
  CHECK_THROWS_AS(Subgroup::from_elements(s3, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Subgroup::from_elements(s3, {1}), std::invalid_argument);
}

TEST_CASE("group and action file parsing errors", "[groups]") {
  auto idx = load_corpus_index(testutil::corpus_dir());
  auto s3 = load_corpus_group(idx, "s3");

  CHECK_THROWS_AS(load_group_file(idx.dir + "/nonexistent.json"), ParseError);

  auto conj = load_action_file(idx.dir + "/actions/s3_conj.json", s3);
  CHECK(conj.set_size() == 5);
  auto mixed = load_action_file(idx.dir + "/actions/s3_mixed5.json", s3);
  CHECK(mixed.set_size() == 5);
  CHECK(orbit_decompose(mixed).orbits.size() == 3);

  // Mismatched group reference.
  auto c2 = load_corpus_group(idx, "c2");
  CHECK_THROWS_AS(load_action_file(idx.dir + "/actions/s3_conj.json", c2),
                  ParseError);

  // Invalid action table: identity must act trivially.
  CHECK_THROWS_AS(
      GAction::from_table(c2, 2, {{1, 0}, {0, 1}}, "broken"),
      std::invalid_argument);
}
