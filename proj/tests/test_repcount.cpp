#include <numeric>
#include <set>

#include "doctest.h"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/repcount/counts.hpp"

using namespace repgrowth;
using namespace repgrowth::repcount;

namespace {

// Orbits of x -> c x on nonzero vectors of F_p^n, c running over the squares.
std::size_t scaling_orbits(unsigned p, unsigned n) {
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= p;
  std::vector<char> seen(total, 0);
  std::size_t orbits = 0;
  for (std::size_t v = 1; v < total; ++v) {
    if (seen[v]) continue;
    ++orbits;
    for (unsigned a = 1; a < p; ++a) {
      const unsigned c = a * a % p;
      std::size_t w = 0, x = v, mul = 1;
      for (unsigned i = 0; i < n; ++i, x /= p, mul *= p) w += (x % p * c % p) * mul;
      seen[w] = 1;
    }
  }
  return orbits;
}

bool contains(const CountTable& t, const gmod::IrreducibleDescriptor& d) {
  for (auto& f : t.irreducibles)
    if (f.descriptor.same_key(d)) return true;
  return false;
}

}  // namespace

TEST_CASE("irreducible tables") {
  auto G = groups::g_star(7, 2);
  auto t = irr_table(G, fq::Field::make(2, 2), 49);
  CHECK(t.r_star[1] == 3);
  CHECK(t.r_star[1] == std::gcd(groups::eta(7), 3u));
  auto abs = absolute_dimensions(t);
  CHECK(abs.size() == 2);
  CHECK(abs[1] == 3);
  CHECK(abs[3] == 16);
  CHECK(abs[3] == scaling_orbits(7, 2) * 1);
  CHECK(scaling_orbits(7, 2) == 16);
  CHECK(table_consistent(t));
  CHECK(growth_shape_check(t).holds);

  auto triv = irr_table(groups::cyclic(1), fq::Field::make(3), 4);
  CHECK(triv.r == std::vector<std::uint64_t>{0, 1, 0, 0, 0});
  CHECK(triv.R == std::vector<std::uint64_t>{0, 1, 1, 1, 1});
}

TEST_CASE("tables are complete") {
  auto G = groups::symmetric(4);
  for (unsigned p : {2u, 3u}) {
    auto F = fq::Field::make(p);
    auto t = irr_table(G, F, 24);
    std::vector<gmod::GModule> aux{gmod::fully_deleted_module(G, p)};
    for (auto& f : t.irreducibles)
      for (auto& g : t.irreducibles)
        if (f.module.dim() * g.module.dim() <= 16) aux.push_back(gmod::tensor(f.module, g.module));
    for (auto& M : aux)
      for (auto& f : gmod::chop(M).factors) CHECK(contains(t, f.descriptor));
  }
}

TEST_CASE("product counts") {
  auto SL = groups::special_linear(3, 2);
  auto t = irr_table(SL, fq::Field::make(2), 8);
  CHECK(t.r_star[3] == 2);
  auto t2 = product_counts({t, t}, 8);
  CHECK(t2.r_star[3] == 4);
  CHECK(!t2.has_r);
  auto one = irr_table(groups::cyclic(1), fq::Field::make(2), 8);
  CHECK(product_counts({t, one}, 8).r_star == t.r_star);
  auto F4 = fq::Field::make(2, 2);
  auto c3 = irr_table(groups::cyclic(3), F4, 3);
  CHECK(product_counts({c3, c3}, 3).r_star[1] == 9);
  CHECK_THROWS(product_counts({c3, t}, 3));

  auto C3 = groups::cyclic(3), S3 = groups::symmetric(3);
  auto P = groups::direct_product({C3, S3});
  for (unsigned q : {2u, 3u, 4u}) {
    auto F = fq::Field::of_order(q);
    auto direct = irr_table(P, F, 4);
    auto conv = product_counts({irr_table(C3, F, 4), irr_table(S3, F, 4)}, 4);
    CHECK(direct.r_star == conv.r_star);
  }
}

TEST_CASE("central quotient counts") {
  auto SL = groups::special_linear(2, 5);
  auto z = groups::center(*SL).sorted()[1];
  auto F5 = fq::Field::make(5);
  auto t = irr_table(SL, F5, 4, {.central_element = z});
  auto q = central_quotient_counts({t, t}, 4);
  CHECK(q.r_star[2] == 0);
  // direct enumeration of pairs of degree-2 modules with trivial character product
  std::uint64_t pairs = 0;
  for (auto& a : t.irreducibles)
    for (auto& b : t.irreducibles)
      if (a.descriptor.abs_irr && b.descriptor.abs_irr && a.descriptor.dim * b.descriptor.dim == 4 &&
          F5.mul((*a.descriptor.central_character)[1], (*b.descriptor.central_character)[1]) == 1)
        ++pairs;
  CHECK(q.r_star[4] == pairs);
  CHECK(pairs == 1);
  CHECK(product_counts({t, t}, 4).r_star[2] == 2);

  auto S4 = groups::symmetric(4);
  auto ts = irr_table(S4, fq::Field::make(3), 4, {.central_element = groups::Index{0}});
  CHECK(central_quotient_counts({ts}, 4).r_star == ts.r_star);
  auto plain = irr_table(S4, fq::Field::make(3), 4);
  CHECK_THROWS(central_quotient_counts({plain}, 4));
}

TEST_CASE("minimal degrees") {
  auto SL = groups::special_linear(2, 5);
  auto md = min_degree(SL, fq::Field::make(2, 2));
  REQUIRE(md);
  CHECK(md->degree == 2);
  auto md3 = min_degree(groups::special_linear(3, 2), fq::Field::make(2));
  REQUIRE(md3);
  CHECK(md3->degree == 3);
  CHECK(!min_degree(groups::cyclic(1), fq::Field::make(2)));

  auto w = min_faithful_size(groups::alternating(5), 32);
  REQUIRE(w);
  CHECK(w->size == 16);
  CHECK(w->field.q() == 4);
  CHECK(w->dim == 2);
  CHECK(!min_faithful_size(groups::alternating(5), 15));
  auto c = min_faithful_size(groups::cyclic(5), 32);
  REQUIRE(c);
  CHECK(c->size == 11);
}

TEST_CASE("subalgebra inequalities") {
  auto S4 = groups::symmetric(4);
  auto A4 = groups::as_group(S4, groups::derived_subgroup(*S4));
  auto rep = subalgebra_inequality_check(S4, A4, fq::Field::make(2), 3);
  CHECK(rep.index == 2);
  CHECK(rep.holds());
  auto whole = groups::as_group(S4, groups::ElementSet::all(24));
  auto eq = subalgebra_inequality_check(S4, whole, fq::Field::make(2), 3);
  CHECK(eq.holds());
  for (auto& r : eq.subalgebra) CHECK(r.lhs == r.rhs);
  auto SL = groups::special_linear(2, 5);
  auto B = groups::as_group(SL, groups::borel(*SL));
  auto rb = subalgebra_inequality_check(SL, B, fq::Field::make(2, 2), 2);
  CHECK(rb.index == 6);
  CHECK(rb.holds());
}
