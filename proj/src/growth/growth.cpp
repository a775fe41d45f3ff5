#include "repgrowth/growth/growth.hpp"

#include <numeric>
#include <stdexcept>

#include "repgrowth/groups/construct.hpp"

namespace repgrowth::growth {

namespace {

constexpr std::size_t kMaxListed = 5;

void record(RangeCheck& r, bool ok, const std::string& where) {
  ++r.checked;
  if (ok) return;
  if (r.violations.size() < kMaxListed) r.violations.push_back(where);
  ++r.violation_count;
}

Integer factorial(std::uint64_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

TruncatedSeries TruncatedSeries::one(std::size_t D) {
  TruncatedSeries s;
  s.D = D;
  s.a.assign(D + 1, 0);
  if (D) s.a[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from(std::vector<Integer> coeffs) {
  TruncatedSeries s;
  s.D = coeffs.size();
  s.a.assign(1, 0);
  for (auto& c : coeffs) {
    if (c < 0) throw std::invalid_argument("negative series coefficient");
    s.a.push_back(std::move(c));
  }
  return s;
}

Rational TruncatedSeries::eval(const Rational& x) const {
  Rational v = 0;
  for (std::size_t n = D; n >= 1; --n) v = v * x + Rational(a[n]);
  return v;
}

Integer ipow(std::uint64_t b, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

Rational power(const Rational& x, std::uint64_t e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string str(const Rational& x) { return x.get_str(); }

TruncatedSeries series_from_counts(const repcount::CountTable& t, std::size_t D) {
  if (D > t.D) throw std::out_of_range("truncation degree beyond the count table");
  TruncatedSeries s = TruncatedSeries::one(D);
  for (std::size_t n = 1; n <= D; ++n) s.a[n] = Integer(static_cast<unsigned long>(t.r_star[n]));
  return s;
}

TruncatedSeries series_product(const std::vector<TruncatedSeries>& s, std::size_t D) {
  TruncatedSeries out = TruncatedSeries::one(D);
  for (const auto& f : s) {
    TruncatedSeries next;
    next.D = D;
    next.a.assign(D + 1, 0);
    for (std::size_t i = 1; i <= D; ++i) {
      if (out.a[i] == 0) continue;
      for (std::size_t j = 1; j <= f.D && i + j - 1 <= D; ++j) next.a[i + j - 1] += out.a[i] * f.a[j];
    }
    out = std::move(next);
  }
  return out;
}

Rational series_product_eval(const std::vector<TruncatedSeries>& s, std::size_t D, std::uint64_t q, unsigned c) {
  Rational x(1, ipow(q, c));
  x.canonicalize();
  return series_product(s, D).eval(x);
}

bool UniformReport::holds() const {
  for (auto& r : rows)
    if (!r.holds) return false;
  return true;
}

UniformReport uniform_bounded_check(const std::vector<Sample>& samples, unsigned c, const Rational& B) {
  UniformReport rep;
  rep.c = c;
  rep.B = B;
  for (const auto& s : samples) {
    SampleRow row;
    row.q = s.q;
    Rational x(1, ipow(s.q, c));
    x.canonicalize();
    row.value = s.series.eval(x);
    row.bound = B * Rational(ipow(s.q, c));
    row.margin = row.bound - row.value;
    row.holds = row.value <= row.bound;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Rational gstar_majorant(unsigned p, unsigned n, std::uint64_t q, const Rational& x) {
  const unsigned eta = groups::eta(p);
  return Rational(std::gcd<std::uint64_t>(eta, q - 1)) + Rational(ipow(p, n) - 1) * power(x, eta - 1);
}

TruncatedSeries gstar_majorant_series(unsigned p, unsigned n, std::uint64_t q) {
  const unsigned eta = groups::eta(p);
  std::vector<Integer> c(eta, 0);
  c[0] = static_cast<unsigned long>(std::gcd<std::uint64_t>(eta, q - 1));
  c[eta - 1] += ipow(p, n) - 1;
  return TruncatedSeries::from(std::move(c));
}

BoundCheck gstar_bound_check(unsigned p, unsigned n, std::uint64_t q, const Rational& x, std::uint64_t seed) {
  const unsigned eta = groups::eta(p);
  auto t = repcount::irr_table(groups::g_star(p, n), fq::Field::of_order(q), eta, {.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt});
  BoundCheck b;
  b.claim = "S*_q(G*_{p,n})(x) <= gcd(eta(p), q-1) + (p^n - 1) x^{eta(p)-1}";
  b.lhs = series_from_counts(t, eta).eval(x);
  b.rhs = gstar_majorant(p, n, q, x);
  b.holds = b.lhs <= b.rhs;
  return b;
}

BoundCheck sl_bound_check(std::size_t n, std::uint64_t q, std::uint64_t m, std::uint64_t t, const Rational& x) {
  BoundCheck b;
  b.claim = "S*_t(G_n(q,m))(x) <= (1 + q^{n+3} x^{q^{n-1}-1})^m in non-defining characteristic";
  if (n < 5 || std::gcd(q, t) != 1 || x <= 0 || x >= 1) {
    b.applicable = false;
    b.holds = true;
    return b;
  }
  const Integer qn1 = ipow(q, n - 1);
  const Integer md = (ipow(q, n) - 1) / (q - 1) - static_cast<unsigned long>(n);
  if (md < qn1) {
    b.holds = false;
    return b;
  }
  const Rational inner_l = 1 + Rational(28 * qn1) * power(x, md.get_ui() - 1);
  const Rational inner_r = 1 + Rational(ipow(q, n + 3)) * power(x, qn1.get_ui() - 1);
  b.lhs = power(inner_l, m);
  b.rhs = power(inner_r, m);
  b.holds = b.lhs <= b.rhs;
  return b;
}

RangeCheck sqrt_order_inequality(std::uint64_t n_max) {
  RangeCheck r{"2 n^{3/2} < n^2 - n - 2", "9 <= n <= " + std::to_string(n_max)};
  for (std::uint64_t n = 9; n <= n_max; ++n) {
    const Integer N(static_cast<unsigned long>(n));
    const Integer rhs = N * N - N - 2;
    record(r, rhs > 0 && 4 * N * N * N < rhs * rhs, "n=" + std::to_string(n));
  }
  return r;
}

RangeCheck rough_estimate(std::uint64_t n_max, std::uint64_t k_max) {
  RangeCheck r{"1 - n^{-k} - k n^{3/2-k} >= 1/3",
               "12 <= n <= " + std::to_string(n_max) + ", 2 <= k <= " + std::to_string(k_max)};
  // equivalent to (2 n^k - 3)^2 >= 9 k^2 n^3 with 2 n^k - 3 > 0
  for (std::uint64_t n = 12; n <= n_max; ++n) {
    const Integer n3 = ipow(n, 3);
    for (std::uint64_t k = 2; k <= k_max; ++k) {
      const Integer l = 2 * ipow(n, k) - 3;
      const Integer K(static_cast<unsigned long>(k));
      record(r, l > 0 && l * l >= 9 * K * K * n3, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return r;
}

RangeCheck psl_order_bound(std::uint64_t n_max) {
  RangeCheck r{"|PSL_n(q)| >= q^{n^2-n-2}", "2 <= n <= " + std::to_string(n_max) + ", q in {2,3,4,5,7,8,9}"};
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (std::uint64_t n = 2; n <= n_max; ++n) {
      Integer order = ipow(q, n * (n - 1) / 2);
      for (std::uint64_t i = 2; i <= n; ++i) order *= ipow(q, i) - 1;
      order /= static_cast<unsigned long>(std::gcd(n, q - 1));
      record(r, order >= ipow(q, n * n - n - 2), "n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  return r;
}

RangeCheck class_count_majorant() {
  RangeCheck r{"28 q^{n-1} <= q^{n+3}", "odd prime powers q <= 125, 2 <= n <= 20"};
  for (std::uint64_t q = 3; q <= 125; q += 2) {
    try {
      (void)fq::Field::of_order(q);
    } catch (const std::exception&) {
      continue;
    }
    for (std::uint64_t n = 2; n <= 20; ++n)
      record(r, 28 * ipow(q, n - 1) <= ipow(q, n + 3), "n=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  return r;
}

RangeCheck class_count_fact(const std::vector<std::pair<std::size_t, std::uint64_t>>& gs) {
  RangeCheck r{"#classes(SL_n(q)) < 28 q^{n-1}", {}};
  for (auto [n, q] : gs) {
    const auto k = groups::special_linear(n, q)->classes().size();
    const std::string tag = "SL_" + std::to_string(n) + "(" + std::to_string(q) + ")";
    r.range += (r.range.empty() ? "" : ", ") + tag + ": " + std::to_string(k);
    record(r, Integer(static_cast<unsigned long>(k)) < 28 * ipow(q, n - 1), tag);
  }
  return r;
}

Family sl2_family(std::uint64_t p_max) {
  Family f{"SL_2(p)^{m(p)}, m(p) = 2^p, bound 2^{(p-1)/2}", {}, [](std::uint64_t p) -> Integer { return ipow(2, p); },
           [](std::uint64_t p) -> Integer { return ipow(2, (p - 1) / 2); }};
  for (std::uint64_t p = 5; p <= p_max; ++p)
    if (fq::is_prime(p)) f.indices.push_back(p);
  return f;
}

Family alt_family(std::uint64_t b_max) {
  Family f{"Alt(b)^{b!/8}, bound b^{b-2}", {}, [](std::uint64_t b) -> Integer { return factorial(b) / 8; },
           [](std::uint64_t b) -> Integer { return ipow(b, b - 2); }};
  for (std::uint64_t b = 5; b <= b_max; ++b) f.indices.push_back(b);
  return f;
}

Family constant_family(std::uint64_t n_max) {
  Family f{"a(n) = 1", {}, [](std::uint64_t) -> Integer { return Integer(1); }, [](std::uint64_t) -> Integer { return Integer(1); }};
  for (std::uint64_t n = 1; n <= n_max; ++n) f.indices.push_back(n);
  return f;
}

RangeCheck family_pfp1_check(const Family& f, unsigned c) {
  RangeCheck r{f.name + ": a(n) <= bound(n)^" + std::to_string(c), {}};
  if (!f.indices.empty())
    r.range = std::to_string(f.indices.front()) + " <= n <= " + std::to_string(f.indices.back()) + " (" +
              std::to_string(f.indices.size()) + " indices)";
  for (auto n : f.indices) {
    Integer b;
    mpz_pow_ui(b.get_mpz_t(), f.lower(n).get_mpz_t(), c);
    record(r, f.a(n) <= b, "n=" + std::to_string(n));
  }
  return r;
}

std::vector<RangeCheck> inequality_suite(const InequalityConfig& cfg) {
  return {sqrt_order_inequality(cfg.sqrt_n_max),
          rough_estimate(cfg.estimate_n_max, cfg.estimate_k_max),
          psl_order_bound(cfg.psl_n_max),
          class_count_majorant(),
          family_pfp1_check(sl2_family(cfg.sl2_p_max), 2),
          family_pfp1_check(alt_family(cfg.alt_b_max), 2)};
}

ConvolutionReport convolution_identity_check(const groups::GroupPtr& G, const groups::GroupPtr& H, const fq::Field& F,
                                             std::size_t D, std::uint64_t seed) {
  repcount::TableOptions opts{.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt};
  ConvolutionReport r;
  r.direct = repcount::irr_table(groups::direct_product({G, H}), F, D, opts).r_star;
  r.convolution =
      repcount::product_counts({repcount::irr_table(G, F, D, opts), repcount::irr_table(H, F, D, opts)}, D).r_star;
  return r;
}

std::vector<FamilyMember> gstar_family(std::size_t count) {
  std::vector<FamilyMember> out;
  unsigned p = 3;
  for (unsigned i = 1; out.size() < count; ++i) {
    for (++p;; ++p) {
      if (p % 4 != 3 || !fq::is_prime(p)) continue;
      const unsigned eta = groups::eta(p);
      bool coprime = true;
      for (auto& m : out) coprime = coprime && std::gcd(m.eta, eta) == 1;
      if (coprime && ipow(p, i) - 1 <= ipow(2, eta)) break;
    }
    out.push_back({p, i, groups::eta(p)});
  }
  return out;
}

Rational e_majorant() {
  Rational e(Integer("27182818285"), Integer("10000000000"));
  e.canonicalize();
  return e;
}

bool ProductBoundReport::holds() const {
  for (auto& r : rows)
    if (!r.holds) return false;
  return !rows.empty();
}

ProductBoundReport gstar_product_bound(std::size_t count, const std::vector<std::uint64_t>& qs) {
  ProductBoundReport rep;
  rep.family = gstar_family(count);
  for (auto q : qs) {
    ProductBoundRow row;
    row.q = q;
    row.bound = Rational(static_cast<unsigned long>(q - 1)) * e_majorant();
    Rational x(1, ipow(q, 2));
    x.canonicalize();
    Rational prod = 1;
    row.holds = true;
    for (auto& m : rep.family) {
      prod *= gstar_majorant(m.p, m.n, q, x);
      row.partial.push_back(prod);
      row.holds = row.holds && prod <= row.bound;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace repgrowth::growth
