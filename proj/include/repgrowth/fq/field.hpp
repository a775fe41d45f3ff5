#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace repgrowth::fq {

/// Element code of a finite field: coefficients over GF(p) in base p,
/// constant term least significant.
using Elem = std::uint16_t;

bool is_prime(std::uint64_t n);

/// Returns (p, k) with q = p^k, or throws std::invalid_argument.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);

/// GF(p^k) with q <= 2^16. Fields are interned: two Field objects with the
/// same (p, k) share their tables and compare equal.
class Field {
public:
  Field();  // GF(2)

  static Field make(unsigned p, unsigned k = 1);
  static Field of_order(std::uint64_t q);

  unsigned p() const noexcept;
  unsigned k() const noexcept;
  unsigned q() const noexcept;
  bool prime() const noexcept { return k() == 1; }
  bool gf2() const noexcept { return q() == 2; }

  /// Defining polynomial over GF(p), constant term first, monic, length k+1.
  const std::vector<unsigned>& modulus() const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;
  /// Least primitive element (by code).
  Elem primitive() const noexcept;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(std::span<const unsigned> d) const;

  /// Multiplication row for a, when tables are present (q <= 256).
  const Elem* mul_row(Elem a) const noexcept;
  const Elem* add_table() const noexcept;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.t_ == b.t_; }

  struct Tables;

private:
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

/// Field embedding GF(p^k) -> GF(p^{ke}) sending the generator X of the
/// small field to the least root of its modulus in the large field.
class Embedding {
public:
  Embedding(Field small, Field large);
  Elem operator()(Elem a) const { return map_[a]; }
  const Field& source() const { return small_; }
  const Field& target() const { return large_; }
  /// Inverse on the image; throws if b is not in the image.
  Elem preimage(Elem b) const;
  bool in_image(Elem b) const;

private:
  Field small_, large_;
  std::vector<Elem> map_;
  std::vector<int> back_;
};

}  // namespace repgrowth::fq
