#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "repgrowth/repcount/counts.hpp"

namespace repgrowth::growth {

using Integer = mpz_class;
using Rational = mpq_class;

/// sum_{n <= D} a[n] X^{n-1}; a[0] is unused and kept at zero.
struct TruncatedSeries {
  std::size_t D = 0;
  std::vector<Integer> a;

  static TruncatedSeries one(std::size_t D);
  static TruncatedSeries from(std::vector<Integer> coeffs);  // coeffs[0] = a[1]
  Rational eval(const Rational& x) const;
};

TruncatedSeries series_from_counts(const repcount::CountTable& t, std::size_t D);
/// Product of truncations, truncated again to degree D.
TruncatedSeries series_product(const std::vector<TruncatedSeries>& s, std::size_t D);
/// The truncated product at x = q^{-c}.
Rational series_product_eval(const std::vector<TruncatedSeries>& s, std::size_t D, std::uint64_t q, unsigned c);

Rational power(const Rational& x, std::uint64_t e);
Integer ipow(std::uint64_t b, std::uint64_t e);
std::string str(const Rational& x);

struct SampleRow {
  std::uint64_t q = 0;
  Rational value, bound, margin;
  bool holds = false;
};

struct Sample {
  std::uint64_t q;
  TruncatedSeries series;
};

struct UniformReport {
  unsigned c = 0;
  Rational B;
  std::vector<SampleRow> rows;
  bool holds() const;
};

/// S_q(q^{-c}) <= B q^c at each sample.
UniformReport uniform_bounded_check(const std::vector<Sample>& samples, unsigned c, const Rational& B);

struct BoundCheck {
  std::string claim;
  Rational lhs, rhs;
  bool holds = false;
  bool applicable = true;
};

/// gcd(eta(p), q-1) + (p^n - 1) x^{eta(p)-1}
Rational gstar_majorant(unsigned p, unsigned n, std::uint64_t q, const Rational& x);
TruncatedSeries gstar_majorant_series(unsigned p, unsigned n, std::uint64_t q);
/// Computed S*_q(G*_{p,n})(x) against the closed form.
BoundCheck gstar_bound_check(unsigned p, unsigned n, std::uint64_t q, const Rational& x, std::uint64_t seed = 1);

/// Non-defining characteristic bound (1 + q^{n+3} x^{q^{n-1}-1})^m for G_n(q,m)
/// against the majorant built from the degree and class-count facts it rests on.
/// Not applicable for n < 5.
BoundCheck sl_bound_check(std::size_t n, std::uint64_t q, std::uint64_t m, std::uint64_t t, const Rational& x);

struct RangeCheck {
  std::string claim;
  std::string range;
  std::uint64_t checked = 0;
  std::vector<std::string> violations = {};  ///< first few failing parameters
  std::uint64_t violation_count = 0;
  bool holds() const { return violation_count == 0; }
};

struct InequalityConfig {
  std::uint64_t sqrt_n_max = 10000;
  std::uint64_t estimate_n_max = 1000;
  std::uint64_t estimate_k_max = 40;
  std::uint64_t psl_n_max = 30;
  std::uint64_t sl2_p_max = 10000;
  std::uint64_t alt_b_max = 500;
};

RangeCheck sqrt_order_inequality(std::uint64_t n_max);          // 2n^{3/2} < n^2-n-2, n >= 9
RangeCheck rough_estimate(std::uint64_t n_max, std::uint64_t k_max);  // 1-n^{-k}-kn^{3/2-k} >= 1/3
RangeCheck psl_order_bound(std::uint64_t n_max);                 // |PSL_n(q)| >= q^{n^2-n-2}
RangeCheck class_count_majorant();                               // 28 q^{n-1} <= q^{n+3}, q odd
/// Class counts of small SL_n(q) by brute force against 28 q^{n-1}.
RangeCheck class_count_fact(const std::vector<std::pair<std::size_t, std::uint64_t>>& groups);

struct Family {
  std::string name;
  std::vector<std::uint64_t> indices;
  std::function<Integer(std::uint64_t)> a;      ///< multiplicity a(n)
  std::function<Integer(std::uint64_t)> lower;  ///< lower bound for the first-cohomology length
};

Family sl2_family(std::uint64_t p_max);   // a(p) = 2^p, bound 2^{(p-1)/2}, primes 5 <= p
Family alt_family(std::uint64_t b_max);   // a(b) = b!/8, bound b^{b-2}, 5 <= b
Family constant_family(std::uint64_t n_max);

/// a(n) <= lower(n)^c over the family's indices.
RangeCheck family_pfp1_check(const Family& f, unsigned c);

std::vector<RangeCheck> inequality_suite(const InequalityConfig& cfg = {});

struct ConvolutionReport {
  std::vector<std::uint64_t> direct, convolution;
  bool holds() const { return direct == convolution; }
};
ConvolutionReport convolution_identity_check(const groups::GroupPtr& G, const groups::GroupPtr& H, const fq::Field& F,
                                             std::size_t D, std::uint64_t seed = 1);

struct FamilyMember {
  unsigned p, n, eta;
};
/// Greedy: n_i = i, p_i the least prime > p_{i-1} with p = 3 mod 4, eta(p)
/// coprime to the previous ones and p^i - 1 <= 2^{eta(p)}.
std::vector<FamilyMember> gstar_family(std::size_t count);

/// 27182818285 / 10^10, a rational strictly above e.
Rational e_majorant();

struct ProductBoundRow {
  std::uint64_t q;
  std::vector<Rational> partial;  ///< partial products of the majorants
  Rational bound;                 ///< (q-1) e_majorant
  bool holds = false;
};
struct ProductBoundReport {
  std::vector<FamilyMember> family;
  std::vector<ProductBoundRow> rows;
  bool holds() const;
};
ProductBoundReport gstar_product_bound(std::size_t count, const std::vector<std::uint64_t>& qs);

}  // namespace repgrowth::growth
