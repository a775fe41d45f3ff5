#include <random>

#include "doctest.h"
#include "repgrowth/gmod/meataxe.hpp"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/groups/domains.hpp"

using namespace repgrowth;
using namespace repgrowth::gmod;
using fq::Elem;
using fq::Matrix;

namespace {

// Exhaustive oracle: walks every subspace in reduced echelon form and checks invariance.
bool brute_irreducible(const GModule& M) {
  const auto& F = M.field();
  const std::size_t n = M.dim(), q = F.q();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) piv.push_back(j);
    std::vector<std::pair<std::size_t, std::size_t>> freepos;
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!(mask >> j & 1u)) freepos.emplace_back(i, j);
    std::size_t count = 1;
    for (std::size_t t = 0; t < freepos.size(); ++t) count *= q;
    for (std::size_t code = 0; code < count; ++code) {
      Matrix B(F, piv.size(), n);
      for (std::size_t i = 0; i < piv.size(); ++i) B(i, piv[i]) = 1;
      std::size_t c = code;
      for (auto [i, j] : freepos) {
        B(i, j) = static_cast<Elem>(c % q);
        c /= q;
      }
      bool invariant = true;
      for (auto& a : M.actions()) {
        Matrix Y = B * a;
        Matrix both = B;
        for (std::size_t i = 0; i < Y.rows(); ++i) both.append_row(Y.row(i));
        if (fq::rank(both) != B.rows()) {
          invariant = false;
          break;
        }
      }
      if (invariant) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, unsigned>> shape(const CompositionSeries& s) {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (auto& f : s.factors)
    for (std::size_t i = 0; i < f.multiplicity; ++i) out.emplace_back(f.descriptor.dim, f.descriptor.endo_degree);
  return out;
}

double wedderburn_sum(const CompositionSeries& s) {
  double t = 0;
  for (auto& f : s.factors) t += double(f.descriptor.dim * f.descriptor.dim) / f.descriptor.endo_degree;
  return t;
}

}  // namespace

TEST_CASE("module constructions") {
  auto C3 = groups::cyclic(3);
  auto F2 = fq::Field::make(2);
  auto R = regular_module(C3, F2);
  CHECK(R.dim() == 3);
  CHECK(R.verify());
  CHECK(regular_module(groups::cyclic(1), F2).dim() == 1);
  auto SL32 = groups::special_linear(3, 2);
  CHECK(regular_module(SL32, F2).dim() == 168);
  CHECK_THROWS_AS(regular_module(groups::symmetric(7), F2), groups::BudgetExceeded);

  auto S3 = groups::symmetric(3);
  auto P = natural_module(S3);
  CHECK(P.dim() == 3);
  CHECK(P.verify());

  CHECK(fully_deleted_module(5, 5).dim() == 3);
  CHECK(fully_deleted_module(5, 2).dim() == 4);
  CHECK(fully_deleted_module(6, 3).dim() == 4);
  CHECK(fully_deleted_module(5, 5).verify());
  CHECK_THROWS(fully_deleted_module(4, 2));
  CHECK_THROWS(fully_deleted_module(5, 4));

  auto SL = groups::special_linear(2, 5);
  auto B = groups::as_group(SL, groups::borel(*SL));
  auto ind = induce(trivial_module(B.group, F2), B, SL);
  CHECK(ind.dim() == 6);
  CHECK(ind.verify());
  auto N = natural_module(SL);
  CHECK(induce(restrict(N, B), B, SL).dim() == 12);
  CHECK(restrict(N, B).verify());

  auto T = trivial_module(S3, F2);
  CHECK(dual(T).action(0).is_identity());
  CHECK(tensor(N, dual(N)).dim() == 4);
  CHECK(tensor(N, dual(N)).verify());
  CHECK(dual(N).verify());
  CHECK(direct_sum(N, N).dim() == 4);
}

TEST_CASE("kernels and fixed points") {
  auto S4 = groups::symmetric(4);
  auto F3 = fq::Field::make(3);
  CHECK(kernel_of_action(regular_module(S4, F3)).size() == 1);
  CHECK(kernel_of_action(trivial_module(S4, F3)).size() == 24);
  auto V4 = groups::minimal_normal_subgroups(*S4)[0];
  auto Q = groups::quotient(S4, V4);
  auto inflated = inflate(regular_module(Q.group, F3), Q.projection);
  CHECK(inflated.verify());
  CHECK(kernel_of_action(inflated) == V4);
  auto SL = groups::special_linear(2, 5);
  auto N = natural_module(SL);
  CHECK(fixed_points(tensor(N, dual(N))).rows() == 1);
  CHECK(fixed_points(N).rows() == 0);
}

TEST_CASE("chop small modules") {
  auto C3 = groups::cyclic(3);
  auto F2 = fq::Field::make(2);
  auto s = chop(regular_module(C3, F2));
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0].descriptor.dim == 1);
  CHECK(s.factors[0].descriptor.abs_irr);
  CHECK(s.factors[0].multiplicity == 1);
  CHECK(s.factors[1].descriptor.dim == 2);
  CHECK(s.factors[1].descriptor.endo_degree == 2);
  CHECK(!s.factors[1].descriptor.abs_irr);
  CHECK(s.total_dim() == 3);

  auto SL = groups::special_linear(2, 5);
  auto N = natural_module(SL);
  auto sn = chop(N);
  REQUIRE(sn.factors.size() == 1);
  CHECK(sn.factors[0].descriptor.dim == 2);
  CHECK(sn.factors[0].descriptor.endo_degree == 1);
  CHECK(sn.factors[0].descriptor.faithful);
  CHECK(is_irreducible(N));
  CHECK(iso_test(N, dual(N)));
  CHECK(iso_test(N, N));
  CHECK(iso_test(dual(dual(N)), N));

  auto ss = chop(direct_sum(N, N));
  REQUIRE(ss.factors.size() == 1);
  CHECK(ss.factors[0].multiplicity == 2);

  auto tt = chop(tensor(N, dual(N)));
  std::size_t trivial_mult = 0;
  for (auto& f : tt.factors)
    if (f.descriptor.dim == 1 && f.module.action(0).is_identity() && f.module.action(1).is_identity())
      trivial_mult = f.multiplicity;
  CHECK(trivial_mult == 1);

  auto F4 = fq::Field::make(2, 2);
  auto w = F4.primitive();
  GModule triv = trivial_module(C3, F4);
  GModule omega(C3, F4, 1, {Matrix::scalar(F4, 1, w)});
  CHECK(omega.verify());
  CHECK(!iso_test(triv, omega));
  CHECK_THROWS(iso_test(regular_module(C3, F4), triv));
}

TEST_CASE("descriptors") {
  auto SL = groups::special_linear(2, 5);
  auto z = groups::center(*SL).sorted()[1];
  auto N = natural_module(SL);
  auto d = describe(N, z);
  REQUIRE(d.central_character.has_value());
  CHECK(d.central_character->size() == 2);
  CHECK((*d.central_character)[1] == fq::Field::make(5).neg(1));
  CHECK(d.fingerprint.size() == 9);
  auto F4 = fq::Field::make(2, 2);
  auto SL24 = groups::special_linear(2, 4);
  auto V = natural_module(SL24);
  auto r = restrict_scalars(V);
  CHECK(r.field() == fq::Field::make(2));
  CHECK(r.dim() == 4);
  CHECK(r.verify());
  CHECK(is_irreducible(r));
  CHECK(endo_degree(r) == 2);
  CHECK(endo_degree(V) == 1);
  auto ext = extend_scalars(r, 2);
  CHECK(ext.field() == F4);
  auto se = chop(ext);
  CHECK(se.factors.size() == 2);
  for (auto& f : se.factors) CHECK(f.descriptor.abs_irr);
}

TEST_CASE("irreducibility agrees with exhaustive subspace search") {
  std::vector<GModule> mods;
  for (unsigned p : {2u, 3u}) {
    auto F = fq::Field::make(p);
    for (auto G : {groups::symmetric(3), groups::symmetric(4), groups::alternating(4), groups::cyclic(5),
                   groups::cyclic(7), groups::elementary_abelian(2, 2)}) {
      if (G->order() <= 6) mods.push_back(regular_module(G, F));
      auto s = chop(regular_module(G, F));
      for (auto& f : s.factors)
        if (f.module.dim() <= 6) mods.push_back(f.module);
    }
    auto P4 = natural_module(groups::symmetric(4));
    std::vector<Matrix> acts;
    for (auto& a : P4.actions()) {
      Matrix m(F, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = a(i, j);
      acts.push_back(m);
    }
    GModule P(P4.group_ptr(), F, 4, acts);
    mods.push_back(P);
    mods.push_back(fully_deleted_module(groups::symmetric(4), p));
    mods.push_back(fully_deleted_module(5, p));
    auto S4 = groups::symmetric(4);
    auto D = fully_deleted_module(S4, p);
    mods.push_back(direct_sum(D, trivial_module(S4, F)));
  }
  mods.push_back(natural_module(groups::special_linear(2, 3)));
  auto N32 = natural_module(groups::special_linear(3, 2));
  mods.push_back(N32);
  mods.push_back(direct_sum(N32, dual(N32)));
  std::size_t irr = 0;
  for (auto& M : mods) {
    REQUIRE(M.dim() <= 6);
    const bool b = brute_irreducible(M);
    irr += b;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) CHECK(is_irreducible(M, seed) == b);
  }
  CHECK(irr > 5);
  CHECK(irr < mods.size());
}

TEST_CASE("Wedderburn and Brauer identities") {
  struct Case {
    groups::GroupPtr G;
    unsigned q;
  };
  for (auto& [G, q] : std::vector<Case>{{groups::cyclic(3), 2},
                                        {groups::symmetric(3), 5},
                                        {groups::g_star(7, 1), 2},
                                        {groups::g_star(7, 1), 4},
                                        {groups::alternating(4), 5}}) {
    auto s = chop(regular_module(G, fq::Field::of_order(q)));
    CHECK(wedderburn_sum(s) == doctest::Approx(double(G->order())));
    CHECK(s.total_dim() == G->order());
  }
  struct BCase {
    groups::GroupPtr G;
    unsigned q;
  };
  for (auto& [G, q] : std::vector<BCase>{{groups::special_linear(2, 5), 2},
                                         {groups::special_linear(2, 5), 5},
                                         {groups::symmetric(4), 3},
                                         {groups::g_star(7, 1), 3},
                                         {groups::symmetric(4), 2}}) {
    auto F = fq::Field::of_order(q);
    auto s = chop(regular_module(G, F));
    CHECK(s.total_dim() == G->order());
    std::size_t abs_count = 0;
    for (auto& f : s.factors) {
      auto e = f.descriptor.endo_degree;
      if (e == 1) {
        ++abs_count;
        continue;
      }
      auto split = chop(extend_scalars(f.module, e));
      CHECK(split.factors.size() == e);
      for (auto& g : split.factors) CHECK(g.descriptor.abs_irr);
      abs_count += split.factors.size();
    }
    CHECK(abs_count == groups::conjugacy_classes(*G, F.p()).size());
  }
}

TEST_CASE("chop is seed independent") {
  auto G = groups::special_linear(2, 5);
  auto M = regular_module(G, fq::Field::make(2));
  auto ref = chop(M, {.seed = 1});
  CHECK(ref.total_dim() == 120);
  for (std::uint64_t seed = 2; seed <= 4; ++seed) {
    auto s = chop(M, {.seed = seed});
    REQUIRE(s.factors.size() == ref.factors.size());
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      CHECK(s.factors[i].descriptor.same_key(ref.factors[i].descriptor));
      CHECK(s.factors[i].multiplicity == ref.factors[i].multiplicity);
    }
  }
  CHECK(shape(chop(regular_module(groups::cyclic(3), fq::Field::make(2)), {.seed = 9})) ==
        std::vector<std::pair<std::size_t, unsigned>>{{1, 1}, {2, 2}});
}

TEST_CASE("Clifford restriction") {
  auto S = groups::special_linear(2, 4);
  auto P = groups::direct_product({S, S});
  auto V = natural_module(S);
  auto W = outer_tensor(V, V, P);
  CHECK(W.verify());
  std::vector<Index> gens;
  for (std::size_t s = 0; s < S->num_generators(); ++s) gens.push_back(P->generator(s));
  auto K = groups::as_group(P, groups::subgroup_closure(*P, gens), gens);
  CHECK(K.group->order() == 60);
  auto c = clifford_restriction(W, K);
  CHECK(c.constituent.dim == 2);
  CHECK(c.multiplicity == 2);
  CHECK(c.components == 1);

  auto C3 = groups::cyclic(3);
  auto s2 = chop(regular_module(C3, fq::Field::make(2)));
  auto whole = groups::as_group(C3, groups::ElementSet::all(3));
  auto c2 = clifford_restriction(s2.factors[1].module, whole);
  CHECK(c2.components * c2.multiplicity * c2.constituent.dim == 2);

  auto S4 = groups::symmetric(4);
  auto V4 = groups::as_group(S4, groups::minimal_normal_subgroups(*S4)[0]);
  auto c3 = clifford_restriction(trivial_module(S4, fq::Field::make(3)), V4);
  CHECK(c3.constituent.dim == 1);
  CHECK(c3.multiplicity == 1);
  CHECK(c3.components == 1);
  // the 3-dim sum-zero module of S4 over GF(3) restricts to three distinct characters of V4
  auto c4 = clifford_restriction(fully_deleted_module(S4, 3), V4);
  CHECK(c4.components == 3);
  CHECK(c4.multiplicity == 1);
}
