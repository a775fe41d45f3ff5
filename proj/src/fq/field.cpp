#include "repgrowth/fq/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace repgrowth::fq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {static_cast<unsigned>(p), k};
}

namespace {

using Poly = std::vector<unsigned>;  // over GF(p), constant first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  unsigned lead_inv = 1;
  for (unsigned x = 1; x < p; ++x)
    if (x * m.back() % p == 1) lead_inv = x;
  while (a.size() > dm) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1);
      std::uint64_t x = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(unsigned p, unsigned k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1);
    std::uint64_t x = idx;
    for (unsigned i = k; i-- > 0;) {
      f[i] = static_cast<unsigned>(x % p);
      x /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

struct Field::Tables {
  unsigned p = 2, k = 1, q = 2;
  Poly modulus;
  bool small = true;
  std::vector<Elem> add, mul;  // q*q when small
  std::vector<Elem> neg, inv;
  std::vector<Elem> exp;        // 2(q-1) entries
  std::vector<std::uint32_t> log;
  Elem primitive = 1;

  std::vector<unsigned> digits(Elem a) const {
    std::vector<unsigned> d(k);
    for (unsigned i = 0; i < k; ++i) {
      d[i] = a % p;
      a = static_cast<Elem>(a / p);
    }
    return d;
  }
  Elem from_digits(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (unsigned i = k; i-- > 0;) v = v * p + (i < d.size() ? d[i] % p : 0);
    return static_cast<Elem>(v);
  }
  Elem slow_add(Elem a, Elem b) const {
    if (k == 1) return static_cast<Elem>((a + b) % p);
    if (p == 2) return static_cast<Elem>(a ^ b);
    unsigned r = 0, m = 1;
    while (a || b) {
      r += ((a % p + b % p) % p) * m;
      a = static_cast<Elem>(a / p);
      b = static_cast<Elem>(b / p);
      m *= p;
    }
    return static_cast<Elem>(r);
  }
  Elem slow_mul(Elem a, Elem b) const {
    if (k == 1) return static_cast<Elem>(static_cast<std::uint32_t>(a) * b % p);
    auto da = digits(a), db = digits(b);
    Poly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    return from_digits(poly_mod(prod, modulus, p));
  }
  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

namespace {

std::shared_ptr<const Field::Tables> build_tables(unsigned p, unsigned k) {
  auto t = std::make_shared<Field::Tables>();
  t->p = p;
  t->k = k;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (q > 65536) throw std::invalid_argument("field too large (q > 2^16)");
  t->q = static_cast<unsigned>(q);
  t->modulus = least_irreducible(p, k);
  t->small = q <= 256;

  std::vector<std::uint64_t> primes;
  {
    std::uint64_t r = q - 1;
    for (std::uint64_t d = 2; d * d <= r; ++d)
      if (r % d == 0) {
        primes.push_back(d);
        while (r % d == 0) r /= d;
      }
    if (r > 1) primes.push_back(r);
  }
  for (unsigned g = 1; g < q; ++g) {
    bool ok = true;
    for (auto r : primes)
      if (t->slow_pow(static_cast<Elem>(g), (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      t->primitive = static_cast<Elem>(g);
      break;
    }
  }
  t->exp.resize(2 * (q - 1));
  t->log.assign(q, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    t->exp[i] = t->exp[i + q - 1] = x;
    t->log[x] = static_cast<std::uint32_t>(i);
    x = t->slow_mul(x, t->primitive);
  }
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto d = t->digits(static_cast<Elem>(a));
    for (auto& c : d) c = (p - c) % p;
    t->neg[a] = t->from_digits(d);
    if (a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
  }
  if (t->small) {
    t->add.resize(q * q);
    t->mul.resize(q * q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        t->add[a * q + b] = t->slow_add(static_cast<Elem>(a), static_cast<Elem>(b));
        t->mul[a * q + b] = (a == 0 || b == 0)
                                ? 0
                                : t->exp[t->log[a] + t->log[b]];
      }
  }
  return t;
}

}  // namespace

Field::Field() : Field(make(2, 1)) {}

Field Field::make(unsigned p, unsigned k) {
  if (!is_prime(p) || k == 0) throw std::invalid_argument("invalid field GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = build_tables(p, k);
  return Field(slot);
}

Field Field::of_order(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  return make(p, k);
}

unsigned Field::p() const noexcept { return t_->p; }
unsigned Field::k() const noexcept { return t_->k; }
unsigned Field::q() const noexcept { return t_->q; }
const std::vector<unsigned>& Field::modulus() const noexcept { return t_->modulus; }

Elem Field::add(Elem a, Elem b) const noexcept {
  if (t_->k == 1) {
    unsigned s = a + b;
    return static_cast<Elem>(s >= t_->p ? s - t_->p : s);
  }
  if (t_->small) return t_->add[a * t_->q + b];
  return t_->slow_add(a, b);
}

Elem Field::neg(Elem a) const noexcept { return t_->neg[a]; }
Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, t_->neg[b]); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (t_->k == 1) return static_cast<Elem>(static_cast<std::uint32_t>(a) * b % t_->p);
  if (t_->small) return t_->mul[a * t_->q + b];
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return t_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * (e % (t_->q - 1))) % (t_->q - 1)];
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(t_->p);
  if (r < 0) r += t_->p;
  return static_cast<Elem>(r);
}

Elem Field::primitive() const noexcept { return t_->primitive; }

std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t n = t_->q - 1, l = t_->log[a];
  std::uint64_t g = n, b = l;
  while (b) {
    auto r = g % b;
    g = b;
    b = r;
  }
  return n / g;
}

std::vector<unsigned> Field::digits(Elem a) const { return t_->digits(a); }

Elem Field::from_digits(std::span<const unsigned> d) const {
  return t_->from_digits(std::vector<unsigned>(d.begin(), d.end()));
}

const Elem* Field::mul_row(Elem a) const noexcept {
  return t_->small ? t_->mul.data() + static_cast<std::size_t>(a) * t_->q : nullptr;
}

const Elem* Field::add_table() const noexcept { return t_->small ? t_->add.data() : nullptr; }

std::string Field::name() const { return "GF(" + std::to_string(q()) + ")"; }

Embedding::Embedding(Field small, Field large) : small_(small), large_(large) {
  if (small.p() != large.p() || large.k() % small.k() != 0)
    throw std::invalid_argument("no embedding " + small.name() + " -> " + large.name());
  const auto& m = small.modulus();
  Elem root = 0;
  bool found = false;
  if (small.k() == 1) {
    found = true;
  } else {
    for (unsigned a = 0; a < large.q() && !found; ++a) {
      Elem v = 0, pw = 1;
      for (unsigned c : m) {
        v = large.add(v, large.mul(large.from_int(c), pw));
        pw = large.mul(pw, static_cast<Elem>(a));
      }
      if (v == 0) {
        root = static_cast<Elem>(a);
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("modulus has no root in extension");
  map_.resize(small.q());
  back_.assign(large.q(), -1);
  for (unsigned a = 0; a < small.q(); ++a) {
    Elem img;
    if (small.k() == 1) {
      img = static_cast<Elem>(a);
    } else {
      auto d = small.digits(static_cast<Elem>(a));
      img = 0;
      Elem pw = 1;
      for (unsigned c : d) {
        img = large.add(img, large.mul(large.from_int(c), pw));
        pw = large.mul(pw, root);
      }
    }
    map_[a] = img;
    back_[img] = static_cast<int>(a);
  }
}

bool Embedding::in_image(Elem b) const { return back_[b] >= 0; }

Elem Embedding::preimage(Elem b) const {
  if (back_[b] < 0) throw std::invalid_argument("element not in subfield");
  return static_cast<Elem>(back_[b]);
}

}  // namespace repgrowth::fq
