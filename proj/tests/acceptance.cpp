// One line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tiltlab/ar_oracle.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/structure_maps.hpp"
#include "tiltlab/tilting_poset.hpp"

using namespace tiltlab;

namespace {

const std::string fx = TILTLAB_FIXTURES;

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::vector<Quiver> criterion_corpus() {
  std::mt19937_64 rng(2024);
  std::vector<Quiver> out{fixtures::kronecker(), fixtures::triangle(), fixtures::diamond(), fixtures::cube4()};
  for (int t = 0; t < 100; ++t) out.push_back(oracle::random_sparse_knittable(rng, 2, 6));
  return out;
}

std::vector<Quiver> unique_source_corpus() {
  std::mt19937_64 rng(2025);
  std::vector<Quiver> out{fixtures::kronecker(), fixtures::triangle(), fixtures::diamond(), fixtures::cube4()};
  while (out.size() < 104) {
    Quiver q = oracle::random_knittable(rng, 2, 6);
    if (q.sources().size() == 1) out.push_back(q);
  }
  return out;
}

std::vector<Quiver> completed_corpus() {
  std::mt19937_64 rng(2026);
  std::vector<Quiver> out{fixtures::point(), fixtures::kronecker(), fixtures::triangle(), fixtures::cube4()};
  for (int t = 0; t < 50; ++t) out.push_back(oracle::random_completed(rng, 2, 6));
  return out;
}

std::string name_of(const Quiver& q, std::size_t k) {
  return q.name().empty() ? "corpus#" + std::to_string(k) : q.name();
}

Outcome criterion_1() {
  Outcome o;
  const auto corpus = criterion_corpus();
  std::size_t pairs = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& q = corpus[k];
    const LMatrix l = l_matrix(q);
    const PreprojOracle knit(q, 8);
    const auto dims = oracle::coxeter_dims(q, 8);
    for (Vertex i = 0; i < q.size(); ++i)
      for (Vertex j = 0; j < q.size(); ++j)
        for (Shift r = 0; r <= 8; ++r)
          for (Shift s = 0; s <= 8; ++s) {
            ++pairs;
            const bool v = ext_vanishes(l, {i, r}, {j, s});
            const auto e = knit.ext_dim({i, r}, {j, s});
            o.expect(e == oracle::ext_by_duality(dims, i, r, j, s),
                     "knitting disagrees with the Coxeter oracle on " + name_of(q, k));
            o.expect(v == (e == 0),
                     "mismatch on " + name_of(q, k) + " at (" + std::to_string(i) + "," + std::to_string(r) +
                         "),(" + std::to_string(j) + "," + std::to_string(s) + ")");
          }
  }
  if (o.passed) o.detail = std::to_string(corpus.size()) + " quivers, " + std::to_string(pairs) + " pairs";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto corpus = criterion_corpus();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto rep = check_consistency(corpus[k], 8);
    o.expect(rep.euler, "Euler form on " + name_of(corpus[k], k) + ": " + rep.first_failure.value_or(""));
    o.expect(rep.coxeter, "Coxeter images on " + name_of(corpus[k], k) + ": " + rep.first_failure.value_or(""));
    o.expect(rep.passed(), "consistency on " + name_of(corpus[k], k) + ": " + rep.first_failure.value_or(""));
  }
  if (o.passed) o.detail = std::to_string(corpus.size()) + " quivers, R=8";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const Quiver k2 = fixtures::kronecker();
  const auto dims = dim_vectors(k2, 10);
  for (std::int64_t m = 0; m < 22; ++m)
    o.expect(dims.vectors[m] == IntVector{m + 1, m}, "flat index " + std::to_string(m));
  for (Shift r = 0; r <= 10; ++r)
    o.expect(dims.at({0, r}) == IntVector{2 * r + 1, 2 * r}, "tau^-r P(0) at r=" + std::to_string(r));
  const auto t = ext_table(k2, 0, 2);
  o.expect(t.ext[2] == 1, "d_0(2)");
  o.expect(t.ext[3] == 2, "d_0(3)");
  if (o.passed) o.detail = "dim at flat index m is (m+1,m) for m<=21; d_0(2)=1, d_0(3)=2";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const Quiver c4 = fixtures::cube4();
  const LMatrix l = l_matrix(c4);
  const auto nodes = enumerate_lk(l, 3, 0);
  o.expect(nodes.size() == 8, "component size " + std::to_string(nodes.size()));
  const auto g = hasse_edges(l, nodes, 3, true);
  o.expect(g.edges.size() == 12, "edge count " + std::to_string(g.edges.size()));
  std::vector<std::pair<Vertex, Vertex>> cube_edges;
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b)
      if (!(u >> b & 1)) cube_edges.emplace_back(u, u | 1 << b);
  Quiver found(static_cast<int>(nodes.size()), std::vector<std::pair<Vertex, Vertex>>(g.edges.begin(), g.edges.end()));
  o.expect(oracle::isomorphic_brute(found, Quiver(8, cube_edges)), "not the 3-cube skeleton");
  o.expect(nodes.size() == (1u << (c4.size() - 1)), "bound not attained");
  if (o.passed) o.detail = "8 nodes, 12 edges, isomorphic to C^3, bound 2^3 attained";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const auto corpus = unique_source_corpus();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto rep = verify_theorem_t(corpus[k], 3);
    for (const auto& a : rep.assertions)
      o.expect(a.passed, name_of(corpus[k], k) + " assertion (" + std::to_string(a.id) + "): " + a.detail);
  }
  if (o.passed) o.detail = std::to_string(corpus.size()) + " quivers, six assertions each, R=3";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto g = tp_window(fixtures::triangle(), 3);
  std::vector<int> out(g.nodes.size(), 0), in(g.nodes.size(), 0);
  for (auto [u, v] : g.edges) ++out[u], ++in[v];
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    o.expect(out[k] <= 1, "out-degree > 1 at " + g.nodes[k].to_string());
    o.expect(in[k] <= 1, "in-degree > 1 at " + g.nodes[k].to_string());
  }
  o.expect(g.edges.size() + 1 == g.nodes.size(), "T3 window is not a single chain");

  // D4: the enumerated component, each member certified, and an independent
  // brute-force count over Ext-free shift vectors with P(3) as a summand.
  const Quiver d4 = fixtures::diamond();
  const LMatrix l = l_matrix(d4);
  const auto comp = enumerate_lk(l, 3, 0);
  o.expect(comp.size() == 6, "D4 component has " + std::to_string(comp.size()) + " members");
  const PreprojOracle knit(d4, 6);
  for (const auto& v : comp) {
    const auto why = certify_tilting(knit, l, v);
    o.expect(!why, "certificate: " + why.value_or(""));
  }
  const auto dims = oracle::coxeter_dims(d4, 6);
  std::size_t brute = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c) {
        const std::array<std::int64_t, 4> v{a, b, c, 0};
        bool free = true;
        for (int i = 0; i < 4 && free; ++i)
          for (int j = 0; j < 4 && free; ++j) free = oracle::ext_by_duality(dims, i, v[i], j, v[j]) == 0;
        brute += free;
      }
  o.expect(brute == 6, "brute-force count " + std::to_string(brute));
  if (o.passed)
    o.detail = "T3 window is a chain of " + std::to_string(g.nodes.size()) + " nodes; D4 component has 6 members (certified)";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto corpus = completed_corpus();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& q = corpus[k];
    const auto cube = psi(q);
    o.expect(is_in_script_L(cube).member, "psi outside L for " + name_of(q, k));
    o.expect(equivalent(q, psi_inverse(cube)).equivalent, "round trip fails for " + name_of(q, k));
    if (q.size() >= 2) {
      const auto ideals = order_ideals(q);
      const auto comp = enumerate_lk(l_matrix(q), q.sources().front(), 0);
      o.expect(ideals.ideals.size() == comp.size(), "ideal count for " + name_of(q, k));
      o.expect(ideals.matches_enumeration && ideals.order_isomorphic, "ideal order for " + name_of(q, k));
    }
  }
  const std::vector<Quiver> fixtures_A{fixtures::point(), fixtures::kronecker(), fixtures::triangle(),
                                       fixtures::cube4()};
  int pairs = 0;
  for (const auto& a : fixtures_A)
    for (const auto& b : fixtures_A) {
      if (!phi(a, b).in_A_circ) continue;
      ++pairs;
      o.expect(verify_commute(a, b).equal, "diagram fails for (" + a.name() + ", " + b.name() + ")");
    }
  if (o.passed)
    o.detail = std::to_string(corpus.size()) + " quivers; diagram checked on " + std::to_string(pairs) + " fixture pairs";
  return o;
}

// Labeled normal forms reached from every quiver on n vertices with source n-1
// (up to two parallel arrows per pair), against all L-members of C^{n-1}.
Outcome criterion_8() {
  Outcome o;
  std::size_t total_S = 0, total_L = 0;
  for (int n = 1; n <= 4; ++n) {
    const int s = n - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) pairs.emplace_back(i, j);
    // per pair: 0 none, 1..2 i->j, 3..4 j->i; per non-source vertex: 0..2 arrows from s
    const int pair_choices = 5, src_choices = 3;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) combos *= pair_choices;
    for (int k = 0; k < s; ++k) combos *= src_choices;

    std::map<std::string, Quiver> normal_forms;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      std::vector<std::pair<Vertex, Vertex>> arrows;
      for (auto [i, j] : pairs) {
        const int pick = c % pair_choices;
        c /= pair_choices;
        const int mult = pick <= 2 ? pick : pick - 2;
        for (int m = 0; m < mult; ++m) arrows.emplace_back(pick <= 2 ? i : j, pick <= 2 ? j : i);
      }
      for (int v = 0; v < s; ++v) {
        const int m = c % src_choices;
        c /= src_choices;
        for (int t = 0; t < m; ++t) arrows.emplace_back(s, v);
      }
      const Quiver seed(n, arrows);
      if (find_cycle(seed) || !seed.is_connected() || seed.sources() != std::vector<Vertex>{s}) continue;
      const Quiver q = complete(seed);
      if (!classify(q).in_A_circ) continue;
      const Quiver nf = normal_form(q);
      auto pairs_sorted = nf.arrow_pairs();
      std::sort(pairs_sorted.begin(), pairs_sorted.end());
      std::ostringstream key;
      for (auto [a, b] : pairs_sorted) key << a << ">" << b << " ";
      normal_forms.emplace(key.str(), nf);
    }

    std::set<std::vector<CubeNode>> images;
    for (const auto& [key, nf] : normal_forms) {
      o.expect(classify(nf).in_S, "normal form outside S at n=" + std::to_string(n));
      images.insert(psi(nf).nodes());
    }
    o.expect(images.size() == normal_forms.size(), "psi not injective at n=" + std::to_string(n));

    std::set<std::vector<CubeNode>> L;
    const int dim = n - 1;
    std::vector<CubeNode> all;
    for (int mask = 0; mask < (1 << dim); ++mask) {
      CubeNode v(dim);
      for (int b = 0; b < dim; ++b) v[b] = mask >> b & 1;
      all.push_back(v);
    }
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<CubeNode> pick;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1u) pick.push_back(all[k]);
      const CubeSubquiver cube(dim, pick);
      if (is_in_script_L(cube).member) L.insert(cube.nodes());
    }
    o.expect(images == L, "image differs from L at n=" + std::to_string(n) + " (" + std::to_string(images.size()) +
                              " vs " + std::to_string(L.size()) + ")");
    total_S += normal_forms.size();
    total_L += L.size();
  }
  if (o.passed)
    o.detail = std::to_string(total_S) + " labeled normal forms <-> " + std::to_string(total_L) +
               " members of L in C^0..C^3";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto a = same_tp(fixtures::triangle(), fixtures::kronecker(), true, 3);
  o.expect(a.same, "same_tp(T3, K2) is false");
  o.expect(a.windows_isomorphic == true, "T3 and K2 windows differ");
  const auto b = same_tp(fixtures::cube4(), fixtures::kronecker(), true, 3);
  o.expect(!b.same, "same_tp(C4, K2) is true");
  o.expect(b.windows_isomorphic == false, "C4 and K2 windows agree");
  if (o.passed) o.detail = "(T3,K2) true, (C4,K2) false, both confirmed on R=3 windows";
  return o;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return {-1, {}};
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
  const int status = pclose(p);
  return {status, out};
}

Outcome criterion_10() {
  Outcome o;
  const std::string bin = TILTLAB_BIN;
  const std::vector<std::string> quivers{"point", "k2", "t3", "d4", "c4"};
  const std::vector<std::string> single{"validate", "l-matrix",  "oracle-check", "enumerate-lk", "hasse",
                                        "tp-window", "verify-theorem", "ideals", "psi", "normal-form",
                                        "decompose", "export-dot"};
  const std::vector<std::string> formats{"text", "json", "dot"};
  std::vector<std::string> commands;
  for (const auto& q : quivers) {
    for (const auto& c : single)
      for (const auto& f : formats) commands.push_back(c + " " + fx + "/" + q + ".quiver --format " + f);
    commands.push_back("normal-form " + fx + "/" + q + ".quiver --verify oracle --seed 7");
    commands.push_back("ext " + fx + "/" + q + ".quiver 0 2 0 0 --format json");
    for (const auto& q2 : quivers)
      for (const auto& c : {"equivalent", "commute", "same-tp"})
        commands.push_back(std::string(c) + " " + fx + "/" + q + ".quiver " + fx + "/" + q2 + ".quiver --verify oracle");
  }
  for (const auto& cube : {"chain3", "square", "antichain_corners"})
    for (const auto& c : {"psi-inverse", "decompose"})
      commands.push_back(std::string(c) + " " + fx + "/" + cube + ".cube.json");
  for (const auto& c : commands) {
    const auto first = capture(bin + " " + c);
    const auto second = capture(bin + " " + c);
    o.expect(first.first != -1, "could not run " + c);
    o.expect(first == second, "output differs for: " + c);
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " invocations byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"criterion-oracle equivalence", criterion_1},
      {"knitting self-consistency", criterion_2},
      {"Kronecker series", criterion_3},
      {"cube component of C4", criterion_4},
      {"structural assertions on windows", criterion_5},
      {"T3 chain and D4 count", criterion_6},
      {"structure map round trips", criterion_7},
      {"S <-> L bijection", criterion_8},
      {"same tilting quiver", criterion_9},
      {"CLI determinism", criterion_10},
  };
  const std::vector<double> budget{10, 0, 0, 0, 30, 0, 20, 0, 0, 0};
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget[k] > 0 && secs >= budget[k]) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(budget[k])) + " s budget)";
    }
    all = all && o.passed;
    std::printf("criterion %2zu %-34s %s  %s [%.2f s]\n", k + 1, criteria[k].first, o.passed ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
  }
  return all ? 0 : 1;
}
