#pragma once

#include <string_view>

#include "repgrowth/fq/matrix.hpp"
#include "repgrowth/groups/group.hpp"

namespace repgrowth::groups {

/// Permutations of {0..d-1} as image lists; the product a*b applies a first.
class PermDomain : public Domain {
public:
  explicit PermDomain(std::size_t degree) : degree_(degree) {}
  std::size_t degree() const noexcept { return degree_; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  std::string tag() const override { return "perm(" + std::to_string(degree_) + ")"; }
  std::string format(const Element& e) const override;

  /// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  Element parse_cycles(std::string_view s) const;
  Element from_images(std::vector<std::uint32_t> images) const;

private:
  std::size_t degree_;
};

/// Invertible n x n matrices over a finite field acting on row vectors.
class MatrixDomain : public Domain {
public:
  MatrixDomain(fq::Field f, std::size_t n) : f_(f), n_(n) {}
  const fq::Field& field() const noexcept { return f_; }
  std::size_t dim() const noexcept { return n_; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  std::string tag() const override { return "mat(" + f_.name() + "," + std::to_string(n_) + ")"; }
  std::string format(const Element& e) const override;

  Element from_matrix(const fq::Matrix& m) const;
  fq::Matrix to_matrix(const Element& e) const;

private:
  fq::Field f_;
  std::size_t n_;
};

/// n x n matrices over Z/NZ.
class ZmodMatrixDomain : public Domain {
public:
  ZmodMatrixDomain(std::uint32_t modulus, std::size_t n) : m_(modulus), n_(n) {}
  std::uint32_t modulus() const noexcept { return m_; }
  std::size_t dim() const noexcept { return n_; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  std::string tag() const override { return "zmod(" + std::to_string(m_) + "," + std::to_string(n_) + ")"; }
  std::string format(const Element& e) const override;
  Element from_entries(const std::vector<long long>& entries) const;

private:
  std::uint32_t m_;
  std::size_t n_;
};

/// Direct product of enumerated groups; payload holds component indices.
class ProductDomain : public Domain {
public:
  explicit ProductDomain(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {}
  const std::vector<GroupPtr>& factors() const noexcept { return factors_; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  std::string tag() const override;
  std::string format(const Element& e) const override;

private:
  std::vector<GroupPtr> factors_;
};

/// Elements of an enumerated parent group; payload is the parent index.
class SubgroupDomain : public Domain {
public:
  explicit SubgroupDomain(GroupPtr parent) : parent_(std::move(parent)) {}
  const GroupPtr& parent() const noexcept { return parent_; }
  Element identity() const override { return Element{{0}}; }
  Element multiply(const Element& a, const Element& b) const override;
  std::string tag() const override { return "sub(" + parent_->domain().tag() + ")"; }
  std::string format(const Element& e) const override;

private:
  GroupPtr parent_;
};

/// Cosets of a normal subgroup; payload is the coset number.
class QuotientDomain : public Domain {
public:
  QuotientDomain(GroupPtr parent, std::vector<Index> coset_of, std::vector<Index> reps)
      : parent_(std::move(parent)), coset_of_(std::move(coset_of)), reps_(std::move(reps)) {}
  const GroupPtr& parent() const noexcept { return parent_; }
  Index coset_of(Index x) const { return coset_of_[x]; }
  Index representative(Index c) const { return reps_[c]; }
  Element identity() const override { return Element{{coset_of_[0]}}; }
  Element multiply(const Element& a, const Element& b) const override;
  std::string tag() const override { return "quot(" + parent_->domain().tag() + ")"; }
  std::string format(const Element& e) const override;

private:
  GroupPtr parent_;
  std::vector<Index> coset_of_, reps_;
};

}  // namespace repgrowth::groups
