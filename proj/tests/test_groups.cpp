#include <set>

#include "doctest.h"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/groups/domains.hpp"

using namespace repgrowth::groups;

namespace {

// class count by brute-force orbit partition over all conjugators
std::size_t brute_class_count(const Group& G, std::optional<unsigned> p = std::nullopt) {
  std::vector<int> seen(G.order(), 0);
  std::size_t count = 0;
  for (Index x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    for (Index g = 0; g < G.order(); ++g) seen[G.conj(x, g)] = 1;
    std::size_t o = 1;
    for (Index y = x; y != 0; y = G.mul(y, x)) ++o;
    if (!p || o % *p != 0) ++count;
  }
  return count;
}

bool is_abelian(const Group& G) {
  for (auto a : G.generators())
    for (auto b : G.generators())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

}  // namespace

TEST_CASE("enumeration") {
  auto dom = std::make_shared<PermDomain>(3);
  CHECK(Group::enumerate(dom, {dom->parse_cycles("(1 2 3)")})->order() == 3);
  CHECK(Group::enumerate(dom, {})->order() == 1);
  CHECK(special_linear(2, 5)->order() == 120);
  CHECK_THROWS_AS(Group::enumerate(std::make_shared<PermDomain>(6), {PermDomain(6).parse_cycles("(1 2 3 4 5 6)"), PermDomain(6).parse_cycles("(1 2)")}, 100), BudgetExceeded);
}

TEST_CASE("group tables are consistent") {
  for (auto G : {special_linear(2, 5), symmetric(4), g_star(7, 1), sl2_zmod(3)}) {
    for (Index x = 0; x < G->order(); ++x) {
      CHECK(G->mul(x, G->inverse(x)) == 0);
      for (std::size_t s = 0; s < G->num_generators(); ++s) {
        CHECK(G->lmul_gen_inv(G->mul(G->generator(s), x), s) == x);
        CHECK(G->element(G->mul_gen(x, s)) ==
              G->domain().multiply(G->element(x), G->element(G->generator(s))));
      }
    }
    std::size_t total = 0;
    for (auto& c : G->classes()) total += c.size;
    CHECK(total == G->order());
  }
}

TEST_CASE("conjugacy classes") {
  auto G = special_linear(2, 5);
  CHECK(conjugacy_classes(*G).size() == 9);
  CHECK(brute_class_count(*G) == 9);
  CHECK(conjugacy_classes(*G, 5u).size() == 5);
  CHECK(brute_class_count(*G, 5u) == 5);
  CHECK(conjugacy_classes(*cyclic(1)).size() == 1);
  for (auto H : {symmetric(5), alternating(5), g_star(7, 2), special_linear(3, 2)}) {
    CHECK(conjugacy_classes(*H).size() == brute_class_count(*H));
    for (auto& c : H->classes())
      for (auto m : c.members) CHECK(!H->less(m, c.representative));
  }
}

TEST_CASE("normal closure and minimal normal subgroups") {
  auto S4 = symmetric(4);
  auto x = *S4->find(PermDomain(4).parse_cycles("(1 2)(3 4)"));
  CHECK(normal_closure(*S4, std::vector<Index>{x}).size() == 4);
  CHECK(normal_closure(*S4, std::vector<Index>{0}).size() == 1);
  auto A5 = alternating(5);
  for (Index y = 1; y < A5->order(); y += 7) CHECK(normal_closure(*A5, std::vector<Index>{y}).size() == 60);
  auto m = minimal_normal_subgroups(*S4);
  REQUIRE(m.size() == 1);
  CHECK(m[0].size() == 4);
  auto C6 = direct_product({cyclic(2), cyclic(3)});
  auto m6 = minimal_normal_subgroups(*C6);
  REQUIRE(m6.size() == 2);
  CHECK(m6[0].size() == 2);
  CHECK(m6[1].size() == 3);
  auto mA = minimal_normal_subgroups(*A5);
  REQUIRE(mA.size() == 1);
  CHECK(mA[0].size() == 60);
  CHECK(center(*special_linear(2, 5)).size() == 2);
  CHECK(derived_subgroup(*S4).size() == 12);
}

TEST_CASE("quotients") {
  auto S4 = symmetric(4);
  auto V4 = minimal_normal_subgroups(*S4)[0];
  auto q = quotient(S4, V4);
  CHECK(q.group->order() == 6);
  CHECK(!is_abelian(*q.group));
  CHECK(q.projection.kernel() == V4);
  CHECK(q.projection.onto());
  auto triv = quotient(S4, ElementSet::of(24, std::vector<Index>{0}));
  CHECK(triv.group->order() == 24);
  CHECK(triv.projection.kernel().size() == 1);
  auto SL = special_linear(2, 5);
  CHECK(quotient(SL, center(*SL)).group->order() == 60);
  CHECK_THROWS(quotient(S4, subgroup_closure(*S4, std::vector<Index>{S4->generator(0)})));
}

TEST_CASE("catalog constructors") {
  CHECK(g_star(7, 2)->order() == 147);
  CHECK(g_star(11, 1)->order() == 55);
  CHECK_THROWS(g_star(5, 1));
  CHECK_THROWS(g_star(3, 1));
  CHECK(g_nqm(2, 5, 2)->order() == 7200);
  CHECK(sl2_zmod(5)->order() == 15000);
  CHECK(projective_special_linear(2, 5)->order() == 60);
  CHECK(projective_special_linear(2, 4)->order() == 60);
  CHECK(projective_special_linear(3, 2)->order() == 168);
  CHECK(special_linear(2, 4)->order() == 60);
  CHECK(special_linear(3, 2)->order() == 168);
  CHECK(special_linear(2, 9)->order() == 720);
  std::size_t fact = 1;
  for (std::size_t b = 1; b <= 6; ++b) {
    fact *= b;
    CHECK(symmetric(b)->order() == fact);
    CHECK(alternating(b)->order() == (b >= 2 ? fact / 2 : 1));
  }
  CHECK(elementary_abelian(3, 2)->order() == 9);
  CHECK(direct_power(cyclic(2), 3)->order() == 8);
  auto G = sl2_zmod(5);
  CHECK(congruence_kernel(*G).size() == 125);
  CHECK(borel(*special_linear(2, 5)).size() == 20);
}

TEST_CASE("crown powers") {
  auto S4 = symmetric(4);
  auto V4 = minimal_normal_subgroups(*S4)[0];
  CHECK(crown_power(S4, V4, 1)->order() == 24);
  CHECK(crown_power(S4, V4, 2)->order() == 96);
  CHECK(crown_power(S4, V4, 3)->order() == 384);
  auto A5 = alternating(5);
  CHECK(crown_power(A5, ElementSet::all(60), 2)->order() == 3600);
  CHECK_THROWS(crown_power(S4, ElementSet::all(24), 2));
}

TEST_CASE("homomorphism search") {
  auto V = elementary_abelian(2, 2);
  auto C2 = cyclic(2), C3 = cyclic(3);
  CHECK(hom_search(V, C2, true).size() == 3);
  CHECK(hom_search(V, C2, false).size() == 4);
  CHECK(hom_search(C3, C2, false).size() == 1);
  auto S4 = symmetric(4), S3 = symmetric(3);
  auto epis = hom_search(S4, S3, true);
  CHECK(epis.size() == 6);
  for (auto& h : epis) {
    CHECK(h.onto());
    CHECK(h.kernel().size() == 4);
  }
  // trivial map, 9 involutions for kernel A3, 4 subgroups S3 times |Aut(S3)| = 6
  CHECK(hom_search(S3, S4, false).size() == 1 + 9 + 24);
}

TEST_CASE("group specification parser") {
  CHECK(parse_group("sl 2 5")->order() == 120);
  CHECK(parse_group("gstar 7 2")->order() == 147);
  CHECK(parse_group("alt 5 x cyclic 3")->order() == 180);
  CHECK(parse_group("crown sym 4 2")->order() == 96);
  CHECK(parse_group("power cyclic 2 3")->order() == 8);
  CHECK(parse_group("perm: (1 2 3); (1 2)")->order() == 6);
  CHECK(parse_group("mat GF(3): [[1,1],[0,1]]; [[0,1],[2,0]]")->order() == 24);
  CHECK(parse_group("product sl 2 3; cyclic 4")->order() == 96);
  CHECK(parse_group("product sym 3; alt 4 x cyclic 2; cyclic 5")->order() == 6 * 24 * 5);
  CHECK_THROWS_AS(parse_group("sym 9", 1000), BudgetExceeded);
  CHECK_THROWS(parse_group("foo 3"));
  auto G = parse_group("sl 2 5");
  CHECK(parse_subgroup(G, "borel").size() == 20);
  CHECK(parse_subgroup(G, "centre").size() == 2);
}
