#include <algorithm>
#include <array>

#include "doctest.h"
#include "repgrowth/cohom/cohomology.hpp"
#include "repgrowth/crowns/crowns.hpp"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/groups/subgroups.hpp"

using namespace repgrowth;
using namespace repgrowth::crowns;

namespace {

std::vector<std::size_t> orders(const ChiefSeries& cs) {
  std::vector<std::size_t> v;
  for (auto& f : cs.factors) v.push_back(f.order);
  return v;
}

// No normal subgroup strictly between consecutive terms.
bool is_chief(const groups::GroupPtr& G, const ChiefSeries& cs) {
  for (std::size_t i = 0; i + 1 < cs.chain.size(); ++i) {
    const auto& X = cs.chain[i];
    const auto& Y = cs.chain[i + 1];
    if (!groups::is_normal(*G, Y)) return false;
    for (auto x : X.items()) {
      if (Y.contains(x)) continue;
      std::vector<groups::Index> S = Y.sorted();
      S.push_back(x);
      if (groups::normal_closure(*G, S).size() != X.size()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("chief series") {
  auto S4 = groups::symmetric(4);
  auto cs = chief_series(S4);
  CHECK(orders(cs) == std::vector<std::size_t>{2, 3, 4});
  CHECK(is_chief(S4, cs));
  for (auto& f : cs.factors) {
    CHECK(f.abelian);
    CHECK(!f.frattini);
  }
  CHECK(cs.factors[2].dim == 2);
  CHECK(cs.factors[2].module->verify());

  auto C4 = groups::cyclic(4);
  auto c4 = chief_series(C4);
  REQUIRE(c4.factors.size() == 2);
  CHECK(!c4.factors[0].frattini);
  CHECK(c4.factors[1].frattini);

  auto A5 = chief_series(groups::alternating(5));
  REQUIRE(A5.factors.size() == 1);
  CHECK(!A5.factors[0].abelian);
  CHECK(A5.factors[0].copies == 1);
  CHECK(A5.factors[0].simple_order == 60);

  auto P = groups::direct_product({groups::alternating(5), groups::alternating(5)});
  auto pc = chief_series(P);
  CHECK(orders(pc) == std::vector<std::size_t>{60, 60});
}

TEST_CASE("chief series invariants") {
  for (auto G : {groups::symmetric(4), groups::special_linear(2, 3), groups::cyclic(12),
                 groups::direct_product({groups::elementary_abelian(2, 2), groups::cyclic(3)}),
                 groups::special_linear(2, 5)}) {
    auto a = chief_series(G), b = chief_series(G, true);
    CHECK(is_chief(G, a));
    CHECK(is_chief(G, b));
    auto oa = orders(a), ob = orders(b);
    std::size_t prod = 1;
    for (auto o : oa) prod *= o;
    CHECK(prod == G->order());
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    CHECK(oa == ob);
    std::size_t fa = 0, fb = 0;
    for (auto& f : a.factors) fa += f.frattini;
    for (auto& f : b.factors) fb += f.frattini;
    CHECK(fa == fb);
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      const auto& f = a.factors[i];
      if (!f.abelian) continue;
      auto Q = groups::quotient(G, f.lower);
      groups::ElementSet E(Q.group->order());
      for (auto x : f.upper.items()) E.insert(Q.coset_of[x]);
      CHECK(f.frattini == !cohom::complement_exists(Q.group, E).exists);
    }
  }
}

TEST_CASE("delta and r") {
  auto F2 = fq::Field::make(2);
  auto V = groups::elementary_abelian(2, 2);
  auto d = delta_and_r(V, gmod::trivial_module(V, F2));
  CHECK(d.delta == 2);
  CHECK(d.r == 1);
  CHECK(d.h_prime == 0);

  auto S4 = groups::symmetric(4);
  auto cs = chief_series(S4);
  CHECK(delta_and_r(cs, *cs.factors[2].module).delta == 1);
  CHECK(delta_and_r(cs, gmod::trivial_module(S4, F2)).delta == 1);

  auto C4 = groups::cyclic(4);
  CHECK(delta_and_r(C4, gmod::trivial_module(C4, F2)).delta == 1);

  auto A4 = groups::alternating(4);
  auto ca = chief_series(A4);
  REQUIRE(ca.factors.size() == 2);
  auto da = delta_and_r(ca, *ca.factors[1].module);
  CHECK(da.delta == 1);
  CHECK(da.endo_degree == 2);
  CHECK(da.r == 1);

  auto C3 = groups::cyclic(3);
  CHECK(delta_and_r(C3, gmod::trivial_module(C3, F2)).delta == 0);
  CHECK(delta_and_r(C3, gmod::trivial_module(C3, fq::Field::make(3))).delta == 1);

  auto P = groups::direct_product({V, groups::cyclic(3)});
  CHECK(delta_and_r(P, gmod::trivial_module(P, F2)).delta == 2);
}

TEST_CASE("faithful image") {
  auto S4 = groups::symmetric(4);
  auto cs = chief_series(S4);
  auto img = faithful_image(*cs.factors[2].module);
  CHECK(img.kernel.size() == 4);
  CHECK(img.module.group().order() == 6);
  CHECK(img.module.verify());
}

TEST_CASE("fp1") {
  for (unsigned k = 2; k <= 4; ++k) {
    auto G = groups::elementary_abelian(2, k);
    auto r = fp1_sup(G);
    CHECK(r.value == k);
    REQUIRE(r.attained);
    CHECK(r.attained->data.delta == k);
  }
  CHECK(fp1_sup(groups::cyclic(1)).value == 0);
  auto a5 = fp1_sup(groups::alternating(5));
  for (auto& t : a5.scanned) CHECK(t.data.delta == 0);
  CHECK(a5.value >= 1);
}

TEST_CASE("T-rank") {
  auto A5 = groups::alternating(5);
  CHECK(rk_T(groups::direct_product({A5, A5}), A5) == 2);
  CHECK(rk_T(groups::direct_product({A5, groups::symmetric(4)}), A5) == 1);
  CHECK(rk_T(groups::symmetric(4), A5) == 0);
  CHECK(isomorphic(A5, groups::projective_special_linear(2, 5)));
  CHECK(!isomorphic(A5, groups::direct_product({groups::alternating(4), groups::cyclic(5)})));
}

TEST_CASE("epimorphism census") {
  auto C2 = groups::cyclic(2);
  auto e = epi_census(groups::elementary_abelian(2, 2), C2);
  CHECK(e.epis == 3);
  CHECK(e.classes == 3);

  auto S3 = groups::symmetric(3);
  auto nat = gmod::chop(gmod::regular_module(S3, fq::Field::make(2))).factors;
  auto two = std::find_if(nat.begin(), nat.end(), [](auto& f) { return f.module.dim() == 2; });
  REQUIRE(two != nat.end());
  auto s = epi_census(groups::symmetric(4), S3, &two->module);
  CHECK(s.epis == 6);
  CHECK(s.classes == 1);
  CHECK(*s.module_size == 4);
  CHECK(s.lower_holds);
  CHECK(s.upper_holds);

  auto A5 = groups::alternating(5);
  auto a = epi_census(A5, A5);
  CHECK(a.epis == 120);
  CHECK(a.classes == 2);
}

TEST_CASE("generator counts") {
  CHECK(d_bruteforce(groups::cyclic(1), 3) == 0);
  CHECK(d_bruteforce(groups::cyclic(6), 3) == 1);
  CHECK(d_bruteforce(groups::elementary_abelian(2, 2), 3) == 2);
  CHECK(d_bruteforce(groups::elementary_abelian(2, 3), 2) == std::nullopt);
  CHECK(d_bruteforce(groups::symmetric(4), 3) == 2);
  auto S4 = groups::symmetric(4);
  auto N = groups::minimal_normal_subgroups(*S4).front();
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto L = groups::crown_power(S4, N, k);
    std::size_t expect = 24;
    for (std::size_t i = 1; i < k; ++i) expect *= 4;
    CHECK(L->order() == expect);
    auto d = d_bruteforce(L, 3);
    REQUIRE(d);
    CHECK(*d >= prev);
    prev = *d;
  }
  // Generating pairs counted against the lift formula
  // phi_2(L_k) = phi_2(L_{k-1}) (|V|^2 - 2^{k-1} |Der(S3, V)|), |V| = |Der| = 4.
  auto pairs = [](const groups::GroupPtr& G) {
    std::uint64_t count = 0;
    for (Index a = 0; a < G->order(); ++a)
      for (Index b = 0; b < G->order(); ++b) {
        std::array<Index, 2> g{a, b};
        if (groups::subgroup_closure(*G, g).size() == G->order()) ++count;
      }
    return count;
  };
  CHECK(pairs(groups::symmetric(3)) == 18);
  CHECK(pairs(S4) == 18 * 12);
  CHECK(pairs(groups::crown_power(S4, N, 2)) == 18 * 12 * 8);
  CHECK(pairs(groups::crown_power(S4, N, 3)) == 0);
  CHECK(d_bruteforce(groups::crown_power(S4, N, 3), 3) == 3);
  auto gs = d_bruteforce(groups::g_star(7, 2), 3);
  REQUIRE(gs);
  CHECK(*gs >= 2);
}
