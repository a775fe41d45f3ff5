#include <random>

#include "doctest.h"
#include "repgrowth/fq/field.hpp"
#include "repgrowth/fq/matrix.hpp"
#include "repgrowth/fq/poly.hpp"

using namespace repgrowth::fq;

namespace {

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, F.q() - 1);
  Matrix m(F, r, c);
  for (auto& x : m.data()) x = static_cast<Elem>(d(rng));
  return m;
}

Matrix naive_mul(const Matrix& a, const Matrix& b) {
  const Field& F = a.field();
  Matrix c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = F.add(s, F.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

}  // namespace

TEST_CASE("field axioms on small fields") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u}) {
    Field F = Field::of_order(q);
    CHECK(F.q() == q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(F.add(static_cast<Elem>(a), F.neg(static_cast<Elem>(a))) == 0);
      if (a) CHECK(F.mul(static_cast<Elem>(a), F.inv(static_cast<Elem>(a))) == 1);
      for (unsigned b = 0; b < q; ++b)
        for (unsigned c = 0; c < q; c += 3) {
          Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b), z = static_cast<Elem>(c);
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
          CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        }
    }
    CHECK(F.order(F.primitive()) == q - 1);
  }
}

TEST_CASE("large field uses log tables consistently") {
  Field F = Field::make(3, 6);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> d(1, F.q() - 1);
  for (int i = 0; i < 2000; ++i) {
    Elem a = static_cast<Elem>(d(rng)), b = static_cast<Elem>(d(rng)), c = static_cast<Elem>(d(rng));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("modulus is the lexicographically least irreducible") {
  // brute force over quadratics: irreducible iff no root in the prime field
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    Field F = Field::make(p, 2);
    auto m = F.modulus();
    REQUIRE(m.size() == 3);
    REQUIRE(m[2] == 1);
    bool found = false;
    for (unsigned c0 = 0; c0 < p && !found; ++c0)
      for (unsigned c1 = 0; c1 < p && !found; ++c1) {
        bool root = false;
        for (unsigned x = 0; x < p; ++x)
          if ((x * x + c1 * x + c0) % p == 0) root = true;
        if (!root) {
          found = true;
          CHECK(m[0] == c0);
          CHECK(m[1] == c1);
        }
      }
  }
  CHECK(Field::make(5, 2).modulus() == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  Field small = Field::make(2, 2), large = Field::make(2, 4);
  Embedding e(small, large);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(e(small.mul(static_cast<Elem>(a), static_cast<Elem>(b))) ==
            large.mul(e(static_cast<Elem>(a)), e(static_cast<Elem>(b))));
      CHECK(e(small.add(static_cast<Elem>(a), static_cast<Elem>(b))) ==
            large.add(e(static_cast<Elem>(a)), e(static_cast<Elem>(b))));
    }
}

TEST_CASE("matrix multiply agrees with naive product") {
  std::mt19937_64 rng(1);
  for (unsigned q : {2u, 3u, 4u, 5u, 9u, 729u}) {
    Field F = Field::of_order(q);
    auto a = random_matrix(F, 37, 41, rng), b = random_matrix(F, 41, 29, rng);
    CHECK(a * b == naive_mul(a, b));
  }
}

TEST_CASE("bit-packed GF(2) kernel agrees with the generic kernel") {
  std::mt19937_64 rng(2);
  Field F = Field::make(2);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_matrix(F, 64, 64, rng), b = random_matrix(F, 64, 64, rng);
    CHECK((BitMatrix(a) * BitMatrix(b)).to_matrix() == naive_mul(a, b));
    BitMatrix bm(a);
    auto piv = bm.rref();
    Matrix m = a;
    std::size_t r = 0;
    std::vector<std::size_t> gp;
    for (std::size_t c = 0; c < 64 && r < 64; ++c) {
      std::size_t p = r;
      while (p < 64 && m(p, c) == 0) ++p;
      if (p == 64) continue;
      m.swap_rows(p, r);
      for (std::size_t i = 0; i < 64; ++i)
        if (i != r && m(i, c)) axpy(F, m.row(i), 1, m.row(r));
      gp.push_back(c);
      ++r;
    }
    CHECK(piv == gp);
    CHECK(bm.to_matrix() == m);
  }
}

TEST_CASE("rref, nullspace, solve and inverse") {
  std::mt19937_64 rng(3);
  for (unsigned q : {2u, 5u, 8u}) {
    Field F = Field::of_order(q);
    auto a = random_matrix(F, 12, 20, rng);
    auto ns = nullspace(a);
    CHECK(ns.rows() + rank(a) == 20);
    for (std::size_t i = 0; i < ns.rows(); ++i) {
      Vec x(ns.row(i).begin(), ns.row(i).end());
      Matrix col(F, 20, 1);
      for (std::size_t j = 0; j < 20; ++j) col(j, 0) = x[j];
      CHECK((a * col).is_zero());
    }
    auto ln = left_nullspace(a);
    CHECK(ln.rows() + rank(a) == 12);
    if (ln.rows()) CHECK((ln * a).is_zero());

    auto sq = random_matrix(F, 15, 15, rng);
    auto inv = inverse(sq);
    if (determinant(sq) != 0) {
      REQUIRE(inv);
      CHECK((sq * *inv).is_identity());
    } else {
      CHECK(!inv);
    }
    Vec b(12);
    Matrix xcol(F, 20, 1);
    for (std::size_t j = 0; j < 20; ++j) xcol(j, 0) = static_cast<Elem>(j % q);
    auto ax = a * xcol;
    for (std::size_t i = 0; i < 12; ++i) b[i] = ax(i, 0);
    auto sol = solve(a, b);
    REQUIRE(sol);
    Matrix sc(F, 20, 1);
    for (std::size_t j = 0; j < 20; ++j) sc(j, 0) = (*sol)[j];
    CHECK(a * sc == ax);
  }
}

TEST_CASE("echelon form and spin") {
  Field F = Field::make(3);
  // cyclic shift on F^4 has invariant line spanned by (1,1,1,1)
  Matrix shift(F, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) shift(i, (i + 1) % 4) = 1;
  Matrix seed(F, 1, 4);
  for (std::size_t j = 0; j < 4; ++j) seed(0, j) = 1;
  std::vector<Matrix> acts{shift};
  CHECK(spin(seed, acts).rows() == 1);
  seed(0, 0) = 0;
  CHECK(spin(seed, acts).rows() == 3);  // coordinate sum 0 mod 3
  Matrix e1(F, 1, 4);
  e1(0, 0) = 1;
  CHECK(spin(e1, acts).rows() == 4);
  EchelonForm e(F, 3);
  CHECK(e.add(Vec{1, 2, 0}));
  CHECK(e.add(Vec{0, 1, 1}));
  CHECK(!e.add(Vec{1, 0, 1}));
  CHECK(e.contains(Vec{2, 1, 0}));
  CHECK(e.rank() == 2);
}

TEST_CASE("characteristic polynomial") {
  std::mt19937_64 rng(4);
  for (unsigned q : {2u, 3u, 4u, 7u, 9u}) {
    Field F = Field::of_order(q);
    for (std::size_t n : {1u, 2u, 5u, 11u}) {
      auto a = random_matrix(F, n, n, rng);
      auto cp = poly::charpoly(a);
      REQUIRE(cp.size() == n + 1);
      CHECK(cp.back() == 1);
      CHECK(cp[n - 1] == F.neg(a.trace()));
      Elem det = determinant(a);
      CHECK(cp[0] == (n % 2 ? F.neg(det) : det));
      CHECK(poly::eval(cp, a).is_zero());
    }
  }
}

TEST_CASE("polynomial factorisation") {
  std::mt19937_64 rng(5);
  for (unsigned q : {2u, 3u, 4u, 5u, 9u, 25u}) {
    Field F = Field::of_order(q);
    std::uniform_int_distribution<unsigned> d(0, q - 1);
    for (int trial = 0; trial < 10; ++trial) {
      // product of random factors with repetition
      Poly f{1};
      for (int j = 0; j < 4; ++j) {
        Poly g(1 + trial % 4 + 1);
        for (auto& c : g) c = static_cast<Elem>(d(rng));
        g.back() = 1;
        f = poly::mul(F, f, g);
        if (j == 1) f = poly::mul(F, f, g);
      }
      auto fs = poly::factor(F, f, rng);
      Poly prod{1};
      for (auto& [g, m] : fs) {
        CHECK(g.back() == 1);
        // no roots for factors of degree 2 or 3 means irreducible
        if (g.size() == 3 || g.size() == 4)
          for (unsigned x = 0; x < q; ++x) CHECK(poly::eval(F, g, static_cast<Elem>(x)) != 0);
        for (unsigned i = 0; i < m; ++i) prod = poly::mul(F, prod, g);
      }
      CHECK(prod == poly::monic(F, f));
    }
  }
  Field F2 = Field::make(2);
  CHECK(poly::is_irreducible(F2, Poly{1, 1, 0, 0, 1}));
  CHECK(!poly::is_irreducible(F2, Poly{1, 0, 0, 0, 1}));
  CHECK(poly::is_irreducible(F2, Poly{1, 1, 1}));
}
