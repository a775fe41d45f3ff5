#include <cmath>

#include "doctest.h"
#include "repgrowth/cohom/cohomology.hpp"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/groups/subgroups.hpp"

using namespace repgrowth;
using namespace repgrowth::cohom;

namespace {

std::size_t log_p(std::size_t n, unsigned p) {
  std::size_t k = 0;
  for (; n > 1; n /= p) ++k;
  return k;
}

std::vector<gmod::GModule> simples(const groups::GroupPtr& G, const fq::Field& F) {
  std::vector<gmod::GModule> out;
  for (auto& f : gmod::chop(gmod::regular_module(G, F)).factors) out.push_back(f.module);
  return out;
}

groups::ElementSet s3_in_s4(const groups::GroupPtr& G) {
  for (groups::Index a = 0; a < G->order(); ++a)
    for (groups::Index b = 0; b < G->order(); ++b) {
      if (G->element_order(a) != 3 || G->element_order(b) != 2) continue;
      std::vector<groups::Index> g{a, b};
      auto H = groups::subgroup_closure(*G, g);
      if (H.size() == 6) return H;
    }
  throw std::logic_error("no S3");
}

}  // namespace

TEST_CASE("h1 basics") {
  auto C2 = groups::cyclic(2);
  auto F2 = fq::Field::make(2);
  auto T = gmod::trivial_module(C2, F2);
  auto b = h1(T);
  CHECK(b.h1 == 1);
  CHECK(b.b1 == 0);
  CHECK(h1_bar_oracle(T) == 1);
  for (std::size_t i = 0; i < b.basis.rows(); ++i) CHECK(is_cocycle(T, b.basis.row(i)));
  CHECK(h1_dim(gmod::trivial_module(groups::cyclic(1), F2)) == 0);
}

TEST_CASE("h1 agrees with the bar complex") {
  auto S3 = groups::symmetric(3);
  for (auto& M : simples(S3, fq::Field::make(2))) CHECK(h1_dim(M) == h1_bar_oracle(M));
  auto SL = groups::special_linear(2, 5);
  for (auto& M : simples(SL, fq::Field::make(5))) {
    if (M.dim() > 8) continue;
    const auto h = h1_dim(M);
    CHECK(h == h1_bar_oracle(M));
    if (h) CHECK(M.dim() >= 3);
  }
  auto S4 = groups::symmetric(4);
  for (unsigned p : {2u, 3u})
    for (auto& M : simples(S4, fq::Field::make(p))) CHECK(h1_dim(M) == h1_bar_oracle(M));
  auto C4 = groups::cyclic(4);
  CHECK(h1_dim(gmod::regular_module(C4, fq::Field::make(2))) == h1_bar_oracle(gmod::regular_module(C4, fq::Field::make(2))));
  auto N = gmod::natural_module(groups::special_linear(2, 3));
  CHECK(h1_dim(N) == h1_bar_oracle(N));
}

TEST_CASE("h1 ignores the generating set") {
  auto S4 = groups::symmetric(4);
  auto alt = groups::as_group(S4, groups::ElementSet::all(24), {5, 7, 11, 17, 23});
  REQUIRE(alt.group->order() == 24);
  for (unsigned p : {2u, 3u})
    for (auto& M : simples(S4, fq::Field::make(p))) CHECK(h1_dim(M) == h1_dim(gmod::restrict(M, alt)));
}

TEST_CASE("Shapiro") {
  auto SL = groups::special_linear(2, 5);
  auto B = groups::as_group(SL, groups::borel(*SL));
  for (unsigned q : {2u, 4u, 5u}) {
    auto F = fq::Field::of_order(q);
    for (auto& U : simples(B.group, F)) CHECK(h1_dim(gmod::induce(U, B, SL)) == h1_dim(U));
  }
  auto one = gmod::trivial_module(B.group, fq::Field::make(2));
  CHECK(h1_dim(gmod::induce(one, B, SL)) == 1);
  CHECK(h1_dim(one) == 1);

  auto S4 = groups::symmetric(4);
  auto S3 = groups::as_group(S4, s3_in_s4(S4));
  REQUIRE(S3.group->order() == 6);
  for (unsigned p : {2u, 3u})
    for (auto& U : simples(S3.group, fq::Field::make(p))) CHECK(h1_dim(gmod::induce(U, S3, S4)) == h1_dim(U));
}

TEST_CASE("trivial coefficients") {
  for (auto G : {groups::symmetric(4), groups::elementary_abelian(2, 2), groups::alternating(5), groups::cyclic(6)})
    for (unsigned p : {2u, 3u}) {
      const auto homs = groups::hom_search(G, groups::cyclic(p), false).size();
      for (std::size_t m : {1u, 2u})
        CHECK(h1_dim(gmod::trivial_module(G, fq::Field::make(p), m)) == m * log_p(homs, p));
    }
}

TEST_CASE("second cohomology") {
  auto F2 = fq::Field::make(2);
  CHECK(h2_bar_small(gmod::trivial_module(groups::cyclic(2), F2)) == 1);
  CHECK(h2_bar_small(gmod::trivial_module(groups::cyclic(3), F2)) == 0);
  CHECK(h2_bar_small(gmod::trivial_module(groups::cyclic(1), F2, 2)) == 0);
  CHECK(h2_bar_small(gmod::trivial_module(groups::elementary_abelian(2, 2), F2)) == 3);
  CHECK_THROWS_AS(h2_bar_small(gmod::trivial_module(groups::symmetric(5), F2)), groups::BudgetExceeded);
}

TEST_CASE("complements") {
  auto S4 = groups::symmetric(4);
  auto V4 = groups::minimal_normal_subgroups(*S4).front();
  auto r = complement_exists(S4, V4);
  CHECK(r.exists);
  REQUIRE(r.complement);
  CHECK(r.complement->size() == 6);

  auto C4 = groups::cyclic(4);
  CHECK(!complement_exists(C4, groups::minimal_normal_subgroups(*C4).front()).exists);

  auto P = groups::direct_product({groups::cyclic(2), groups::symmetric(3)});
  auto A = groups::ElementSet(P->order());
  A.insert(0);
  A.insert(P->generator(0));
  CHECK(complement_exists(P, A).exists);

  auto K = groups::sl2_zmod(5);
  auto ker = groups::congruence_kernel(*K);
  CHECK(ker.size() == 125);
  auto nk = complement_exists(K, ker);
  CHECK(!nk.exists);
  CHECK(nk.assignments_tried <= nk.assignments_total);
}

TEST_CASE("AG formula") {
  auto F2 = fq::Field::make(2);
  auto V = groups::elementary_abelian(2, 2);
  auto r = ag_check(gmod::trivial_module(V, F2));
  CHECK(r.h1_G == 2);
  CHECK(r.delta == 2);
  CHECK(r.h1_image == 0);
  CHECK(r.holds());
  auto C4 = groups::cyclic(4);
  auto c4 = ag_check(gmod::trivial_module(C4, F2));
  CHECK(c4.delta == 1);
  CHECK(c4.holds());
  auto S4 = groups::symmetric(4);
  for (unsigned p : {2u, 3u})
    for (auto& M : simples(S4, fq::Field::make(p))) CHECK(ag_check(M).holds());
  CHECK_THROWS(ag_check(gmod::regular_module(C4, F2)));
}

TEST_CASE("lh1 search") {
  auto A5 = groups::alternating(5);
  auto r = lh1_search(A5, 32);
  REQUIRE(r.witness);
  CHECK(r.witness->size >= 4);
  CHECK(r.witness->size <= 32);
  CHECK(h1_bar_oracle(r.witness->module) > 0);
  for (auto& c : r.scanned)
    if (c.size < r.witness->size) CHECK(h1_bar_oracle(c.module) == 0);
  CHECK(lh1_search(A5, 32, 7).witness->size == r.witness->size);
  CHECK(!lh1_search(A5, 3).witness);
  CHECK_THROWS(lh1_search(groups::cyclic(6), 16));
  CHECK_THROWS(lh1_search(groups::direct_product({groups::symmetric(3), groups::symmetric(3)}), 16));
}
