#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/structure_maps.hpp"

using namespace tiltlab;

namespace {

const Quiver point = fixtures::point();
const Quiver k2 = fixtures::kronecker();
const Quiver t3 = fixtures::triangle();
const Quiver c4 = fixtures::cube4();

CubeSubquiver chain_cube(int length) {
  // 0..0, 10..0, 110..0, ..., 1..1 in C^{length-1}
  std::vector<CubeNode> nodes;
  for (int k = 0; k < length; ++k) {
    CubeNode v(length - 1, 0);
    for (int i = 0; i < k; ++i) v[i] = 1;
    nodes.push_back(v);
  }
  return CubeSubquiver(length - 1, nodes);
}

CubeSubquiver full_cube(int dim) {
  std::vector<CubeNode> nodes;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    CubeNode v(dim);
    for (int i = 0; i < dim; ++i) v[i] = mask >> i & 1;
    nodes.push_back(v);
  }
  return CubeSubquiver(dim, nodes);
}

std::vector<CubeSubquiver> all_L_members(int dim) {
  std::vector<CubeNode> all = full_cube(dim).nodes();
  std::vector<CubeSubquiver> out;
  for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
    std::vector<CubeNode> pick;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1u) pick.push_back(all[k]);
    CubeSubquiver c(dim, pick);
    if (is_in_script_L(c).member) out.push_back(c);
  }
  return out;
}

std::vector<Quiver> completed_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Quiver> out{point, k2, t3, c4};
  for (int t = 0; t < count; ++t) out.push_back(oracle::random_completed(rng, 2, 6));
  return out;
}

}  // namespace

TEST_CASE("completion") {
  CHECK(labeled_equal(complete(fixtures::chain(2)), k2));
  CHECK(labeled_equal(complete(point), point));
  CHECK(labeled_equal(complete(fixtures::chain(3)), Quiver(3, {{1, 0}, {2, 1}, {2, 0}})));
  CHECK(complete(k2).multiplicity(1, 0) == 3);
}

TEST_CASE("amalgam") {
  CHECK(labeled_equal(amalgam(point, point), fixtures::chain(2)));
  CHECK(labeled_equal(amalgam(point, point, AmalgamMode::literal), fixtures::chain(2)));
  const Quiver kk = amalgam(k2, k2);
  CHECK(kk.size() == 4);
  CHECK(kk.multiplicity(3, 2) == 2);
  CHECK(kk.multiplicity(2, 1) == 1);
  CHECK(kk.multiplicity(1, 0) == 2);
  CHECK(kk.arrow_count() == 5);
  CHECK(kk.is_normalized());
  // literal reading joins source of the upper part to sink of the lower,
  // leaving the lower source without an incoming arrow
  const Quiver lit = amalgam(k2, k2, AmalgamMode::literal);
  CHECK(lit.multiplicity(3, 0) == 1);
  CHECK(lit.sources() == std::vector<Vertex>{1, 3});
}

TEST_CASE("phi examples") {
  CHECK(labeled_equal(phi(point, point).quiver, k2));
  const auto pk = phi(point, k2);
  CHECK(pk.in_A_circ);
  CHECK(pk.quiver.multiplicity(2, 1) == 1);
  CHECK(pk.quiver.multiplicity(1, 0) == 2);
  CHECK(pk.quiver.multiplicity(2, 0) == 1);
  const auto kp = phi(k2, point);
  CHECK(kp.quiver.multiplicity(2, 1) == 2);
  CHECK(kp.quiver.multiplicity(1, 0) == 1);
  CHECK(kp.quiver.multiplicity(2, 0) == 1);
  CHECK_FALSE(phi(point, k2, AmalgamMode::literal).in_A_circ);
  CHECK_THROWS_AS(phi(fixtures::diamond(), point), PreconditionError);
}

TEST_CASE("psi examples") {
  CHECK(psi(k2) == CubeSubquiver(1, {{0}, {1}}));
  CHECK(psi(t3) == chain_cube(3));
  CHECK(psi(c4) == full_cube(3));
  CHECK(psi(c4).edges().size() == 12);
  CHECK(psi(point) == CubeSubquiver(0, {CubeNode{}}));
  CHECK_THROWS_AS(psi(fixtures::diamond()), PreconditionError);
}

TEST_CASE("meet and join") {
  auto mj = meet_join({1, 0}, {0, 1});
  CHECK(mj.plus == CubeNode{0, 0});
  CHECK(mj.minus == CubeNode{1, 1});
  mj = meet_join({1, 1, 0}, {1, 0, 0});
  CHECK(mj.plus == CubeNode{1, 0, 0});
  CHECK(mj.minus == CubeNode{1, 1, 0});
  mj = meet_join({0, 1}, {0, 1});
  CHECK(mj.plus == mj.minus);
  CHECK_THROWS_AS(meet_join({0}, {0, 1}), ValidationError);
}

TEST_CASE("membership in L") {
  CHECK(is_in_script_L(full_cube(2)).member);
  CHECK(is_in_script_L(chain_cube(3)).member);
  const auto corners = is_in_script_L(CubeSubquiver(2, {{0, 0}, {1, 1}}));
  CHECK_FALSE(corners.member);
  CHECK(corners.failed == LCondition::paths);
  CHECK(is_in_script_L(CubeSubquiver(2, {{0, 0}, {1, 0}})).failed == LCondition::corners);
  // (0,1,0) and (1,0,0) are joined to the top through different nodes but
  // their meet is there and their join (1,1,0) is not
  const CubeSubquiver gap(3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 0, 1}, {1, 1, 1}});
  CHECK(is_in_script_L(gap).failed == LCondition::closure);
  CHECK_THROWS_AS(CubeSubquiver(2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(CubeSubquiver(2, {{0}}), ValidationError);
}

TEST_CASE("psi inverse examples") {
  CHECK(labeled_equal(psi_inverse(CubeSubquiver(1, {{0}, {1}})), k2));
  CHECK(labeled_equal(psi_inverse(chain_cube(3)), t3));
  const Quiver c3 = psi_inverse(full_cube(2));
  CHECK(c3.size() == 3);
  CHECK(c3.multiplicity(2, 0) == 2);
  CHECK(c3.multiplicity(2, 1) == 2);
  CHECK(c3.arrow_count() == 4);
  CHECK(labeled_equal(psi_inverse(full_cube(3)), c4));
  CHECK(labeled_equal(psi_inverse(CubeSubquiver(0, {CubeNode{}})), point));
  CHECK_THROWS_AS(psi_inverse(CubeSubquiver(2, {{0, 0}, {1, 1}})), PreconditionError);
}

TEST_CASE("reduction steps") {
  const Quiver pk = phi(point, k2).quiver;
  const auto step = leadsto_step(pk);
  REQUIRE(step.has_value());
  CHECK(step->multiplicity(1, 0) == 1);
  CHECK(labeled_equal(*step, t3));
  CHECK_FALSE(leadsto_step(k2).has_value());
  CHECK_FALSE(leadsto_step(t3).has_value());
  CHECK_FALSE(leadsto_step(c4).has_value());
  CHECK_THROWS_AS(leadsto_step(fixtures::diamond()), PreconditionError);
  // three parallel source-sink arrows: condition (2) applies
  const Quiver k3(2, {{1, 0}, {1, 0}, {1, 0}});
  CHECK(eligible_arrows(k3).size() == 3);
  CHECK(labeled_equal(normal_form(k3), k2));
}

TEST_CASE("normal forms") {
  CHECK(labeled_equal(normal_form(phi(point, k2).quiver), t3));
  CHECK(labeled_equal(normal_form(k2), k2));
  CHECK(labeled_equal(normal_form(phi(point, point).quiver), k2));
}

TEST_CASE("equivalence") {
  auto e = equivalent(phi(point, k2).quiver, t3);
  CHECK(e.equivalent);
  CHECK(e.labeled);
  CHECK_FALSE(equivalent(k2, t3).equivalent);
  // relabelled T3 is equivalent only up to isomorphism
  const Quiver t3b(3, {{2, 0}, {0, 1}, {2, 1}});
  e = equivalent(t3b, t3);
  CHECK(e.equivalent);
  CHECK_FALSE(e.labeled);
}

TEST_CASE("decomposition examples") {
  const auto chain3 = decompose(chain_cube(3), true);
  REQUIRE(chain3.pieces.size() == 3);
  for (const auto& p : chain3.pieces) CHECK(p.cube.nodes().size() == 1);
  CHECK(chain3.glue == std::vector<int>{0, 1});
  CHECK(recompose(chain3) == chain_cube(3));

  const auto sq = decompose(full_cube(2), true);
  REQUIRE(sq.pieces.size() == 1);
  CHECK(sq.pieces[0].cube == full_cube(2));

  const auto chain2 = decompose(CubeSubquiver(1, {{0}, {1}}), true);
  CHECK(chain2.pieces.size() == 2);

  const auto once = decompose(chain_cube(4), false);
  CHECK(once.pieces.size() == 2);
  CHECK(recompose(once) == chain_cube(4));
  CHECK_THROWS_AS(decompose(CubeSubquiver(2, {{0, 0}, {1, 1}})), PreconditionError);
}

TEST_CASE("cube amalgam and decomposition are inverse") {
  const auto a = cube_amalgam(full_cube(2), CubeSubquiver(1, {{0}, {1}}));
  CHECK(a.dim() == 4);
  CHECK(a.nodes().size() == 6);
  CHECK(is_in_script_L(a).member);
  const auto d = decompose(a, true);
  REQUIRE(d.pieces.size() == 3);
  CHECK(d.pieces[0].cube == full_cube(2));
  CHECK(d.pieces[0].coords == std::vector<int>{0, 1});
  CHECK(d.glue.front() == 2);
  CHECK(recompose(d) == a);
}

TEST_CASE("commutative diagram examples") {
  for (auto [a, b] : std::vector<std::pair<Quiver, Quiver>>{{point, point}, {point, k2}, {k2, point}}) {
    const auto rep = verify_commute(a, b);
    CHECK(rep.equal);
  }
  CHECK(verify_commute(point, point).lhs == CubeSubquiver(1, {{0}, {1}}));
  CHECK(verify_commute(point, k2).lhs == chain_cube(3));
  CHECK(verify_commute(k2, point).rhs == chain_cube(3));
  CHECK_THROWS_AS(verify_commute(point, k2, AmalgamMode::literal), PreconditionError);
}

TEST_CASE("same tilting quiver") {
  auto r = same_tp(t3, k2, true, 3);
  CHECK(r.same);
  CHECK(r.windows_isomorphic == true);
  r = same_tp(c4, k2, true, 3);
  CHECK_FALSE(r.same);
  CHECK(r.windows_isomorphic == false);
  for (const Quiver& q : {k2, t3, c4}) CHECK(same_tp(q, q, true, 3).same);
}

TEST_CASE("psi lands in L and round-trips") {
  for (const auto& q : completed_corpus(43, 50)) {
    const auto k = psi(q);
    CHECK(is_in_script_L(k).member);
    const Quiver back = psi_inverse(k);
    CHECK(classify(back).in_S);
    CHECK(equivalent(q, back).equivalent);
    CHECK(psi(back) == k);
  }
}

TEST_CASE("psi of psi inverse is the identity on L") {
  for (int dim = 0; dim <= 3; ++dim) {
    const auto members = all_L_members(dim);
    CHECK_FALSE(members.empty());
    for (const auto& k : members) CHECK(psi(psi_inverse(k)) == k);
  }
}

TEST_CASE("psi is unchanged by a reduction step") {
  for (const auto& q : completed_corpus(47, 50)) {
    const auto step = leadsto_step(q);
    if (step) CHECK(psi(*step) == psi(q));
  }
}

TEST_CASE("reduction is confluent") {
  std::mt19937_64 rng(53);
  for (const auto& q : completed_corpus(59, 30)) {
    const Quiver nf = normal_form(q);
    for (int k = 0; k < 20; ++k) CHECK(labeled_equal(random_normal_form(q, rng), nf));
  }
}

TEST_CASE("phi respects equivalence") {
  const auto corpus = completed_corpus(61, 12);
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    for (std::size_t b = 0; b < corpus.size(); b += 3) {
      const auto& x = corpus[a];
      const auto& y = corpus[b];
      const Quiver x2 = normal_form(x), y2 = normal_form(y);
      const auto lhs = phi(x, y), rhs = phi(x2, y2);
      if (!lhs.in_A_circ || !rhs.in_A_circ) continue;
      CHECK(equivalent(lhs.quiver, rhs.quiver).equivalent);
    }
  }
}

TEST_CASE("commutative diagram on the corpus") {
  const auto corpus = completed_corpus(67, 10);
  int checked = 0;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (!phi(a, b).in_A_circ) continue;
      ++checked;
      CHECK(verify_commute(a, b).equal);
    }
  CHECK(checked > 0);
}

TEST_CASE("meet and join closure of psi images") {
  for (const auto& q : completed_corpus(71, 30)) {
    const auto k = psi(q);
    for (const auto& a : k.nodes())
      for (const auto& b : k.nodes()) {
        const auto mj = meet_join(a, b);
        CHECK(k.contains(mj.plus));
        CHECK(k.contains(mj.minus));
      }
  }
}

TEST_CASE("decompositions of psi images recompose") {
  for (const auto& q : completed_corpus(73, 30)) {
    const auto k = psi(q);
    const auto d = decompose(k, true);
    CHECK(recompose(d) == k);
    for (const auto& p : d.pieces) CHECK(decompose(p.cube, true).pieces.size() == 1);
  }
}
