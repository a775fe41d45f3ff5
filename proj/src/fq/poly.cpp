#include "repgrowth/fq/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace repgrowth::fq::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly x() { return {0, 1}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const Elem li = F.inv(b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Elem c = F.mul(r.back(), li);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Field& F, const Poly& a, const Poly& m) { return divmod(F, a, m).second; }

Poly monic(const Field& F, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Elem li = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, li);
  return a;
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), a[i]);
  trim(r);
  return r;
}

Poly powmod(const Field& F, Poly a, std::uint64_t e, const Poly& m) {
  Poly r{1};
  r = mod(F, r, m);
  a = mod(F, a, m);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, a), m);
    e >>= 1;
    if (e) a = mod(F, mul(F, a, a), m);
  }
  return r;
}

Elem eval(const Field& F, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Matrix eval(const Poly& f, const Matrix& a) {
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Matrix r(F, n, n);
  for (std::size_t i = f.size(); i-- > 0;) {
    r = r * a;
    for (std::size_t j = 0; j < n; ++j) r(j, j) = F.add(r(j, j), f[i]);
  }
  return r;
}

Poly charpoly(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("charpoly of non-square matrix");
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      h.swap_rows(i, j + 1);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const Elem inv = F.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j) == 0) continue;
      const Elem t = F.mul(h(r, j), inv);
      axpy(F, h.row(r), F.neg(t), h.row(j + 1));
      for (std::size_t s = 0; s < n; ++s) h(s, j + 1) = F.add(h(s, j + 1), F.mul(t, h(s, r)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = mul(F, Poly{F.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    Elem prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, h(k - i, k - i - 1));
      if (prod == 0) break;
      const Elem c = F.mul(h(k - 1 - i, k - 1), prod);
      if (c == 0) continue;
      Poly t = p[k - 1 - i];
      for (auto& x : t) x = F.mul(x, c);
      p[k] = sub(F, p[k], t);
    }
  }
  return p[n];
}

namespace {

Poly pth_root(const Field& F, const Poly& c) {
  const unsigned p = F.p();
  const std::uint64_t e = F.q() / p;
  Poly r(c.size() / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += p) r[i / p] = F.pow(c[i], e);
  trim(r);
  return r;
}

void squarefree(const Field& F, const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  Poly c = gcd(F, f, derivative(F, f));
  Poly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly fac = divmod(F, w, y).first;
    if (degree(fac) > 0) out.emplace_back(monic(F, fac), i * mult);
    w = y;
    c = divmod(F, c, y).first;
    ++i;
  }
  if (degree(c) > 0) squarefree(F, monic(F, pth_root(F, c)), mult * F.p(), out);
}

Poly frobenius(const Field& F, const Poly& a, const Poly& m) { return powmod(F, a, F.q(), m); }

void equal_degree(const Field& F, const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(degree(g)) == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<unsigned> coef(0, F.q() - 1);
  const auto n = static_cast<std::size_t>(degree(g));
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = static_cast<Elem>(coef(rng));
    trim(a);
    if (degree(a) < 1) continue;
    Poly b;
    if (F.p() == 2) {
      Poly t = a, s = a;
      for (unsigned j = 1; j < F.k() * d; ++j) {
        t = mod(F, mul(F, t, t), g);
        s = add(F, s, t);
      }
      b = s;
    } else {
      Poly t = mod(F, a, g), prod = t;
      for (unsigned j = 1; j < d; ++j) {
        t = frobenius(F, t, g);
        prod = mod(F, mul(F, prod, t), g);
      }
      b = sub(F, powmod(F, prod, (F.q() - 1) / 2, g), Poly{1});
    }
    Poly h = gcd(F, b, g);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Field& F, const Poly& f0, std::mt19937_64& rng) {
  Poly f = monic(F, f0);
  std::vector<std::pair<Poly, unsigned>> out;
  if (degree(f) <= 0) return out;
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(F, f, 1, sqf);
  for (auto& [g0, m] : sqf) {
    Poly g = g0;
    Poly h = mod(F, x(), g);
    for (unsigned i = 1; 2 * i <= static_cast<unsigned>(std::max<long>(degree(g), 0)); ++i) {
      h = frobenius(F, h, g);
      Poly d = gcd(F, sub(F, h, x()), g);
      if (degree(d) > 0) {
        std::vector<Poly> parts;
        equal_degree(F, d, i, rng, parts);
        for (auto& p : parts) out.emplace_back(p, m);
        g = divmod(F, g, d).first;
        h = mod(F, h, g);
      }
    }
    if (degree(g) > 0) out.emplace_back(monic(F, g), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

bool is_irreducible(const Field& F, const Poly& f) {
  if (degree(f) < 1) return false;
  std::mt19937_64 rng(1);
  auto fs = factor(F, f, rng);
  return fs.size() == 1 && fs[0].second == 1 && fs[0].first.size() == f.size();
}

}  // namespace repgrowth::fq::poly
