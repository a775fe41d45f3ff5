#pragma once

#include <vector>

#include "repgrowth/fq/matrix.hpp"
#include "repgrowth/groups/subgroups.hpp"

namespace repgrowth::gmod {

using groups::ElementSet;
using groups::GroupPtr;
using groups::Index;

inline constexpr std::size_t kDefaultChopCap = 2000;

/// Right G-module on row vectors: one action matrix per group generator,
/// with rho(gh) = rho(g) rho(h).
class GModule {
public:
  GModule() = default;
  GModule(GroupPtr group, fq::Field field, std::size_t dim, std::vector<fq::Matrix> actions);

  const groups::Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const fq::Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<fq::Matrix>& actions() const noexcept { return actions_; }
  const fq::Matrix& action(std::size_t s) const { return actions_[s]; }

  /// Matrix of an arbitrary group element, via its word.
  fq::Matrix matrix_of(Index g) const;
  /// Matrices of every element in BFS order.
  std::vector<fq::Matrix> all_matrices() const;
  /// Checks that the actions define a homomorphism into GL(dim).
  bool verify() const;

private:
  GroupPtr group_;
  fq::Field field_;
  std::size_t dim_ = 0;
  std::vector<fq::Matrix> actions_;
};

GModule trivial_module(const GroupPtr& G, const fq::Field& F, std::size_t dim = 1);
/// Regular module by left translation: basis e_x, e_x g = e_{g^-1 x}.
GModule regular_module(const GroupPtr& G, const fq::Field& F, std::size_t cap = kDefaultChopCap);
/// Permutation module from generator images on {0..d-1}.
GModule permutation_module(const GroupPtr& G, const fq::Field& F,
                           const std::vector<std::vector<std::uint32_t>>& gen_images);
/// Natural module of a permutation or matrix group.
GModule natural_module(const GroupPtr& G);
/// Module of Alt(b) (or any group with the natural action on b points):
/// sum-zero vectors modulo constants.
GModule fully_deleted_module(const GroupPtr& G, unsigned p);
/// Fully deleted module of Alt(b), b >= 5.
GModule fully_deleted_module(std::size_t b, unsigned p);
/// Permutation module on the right cosets Hx.
GModule coset_module(const GroupPtr& G, const ElementSet& H, const fq::Field& F);

GModule dual(const GModule& M);
GModule tensor(const GModule& A, const GModule& B);
GModule direct_sum(const GModule& A, const GModule& B);
/// Restriction along an embedding H -> G (the subgroup's own generators).
GModule restrict(const GModule& M, const groups::SubgroupGroup& H);
/// Induction from the subgroup to its parent; transversal scanned in BFS order.
GModule induce(const GModule& U, const groups::SubgroupGroup& H, const GroupPtr& G);
GModule extend_scalars(const GModule& M, unsigned e);
/// The same module viewed over the prime subfield (dimension times k).
GModule restrict_scalars(const GModule& M);
/// Inflation of a module of Q along a homomorphism G -> Q.
GModule inflate(const GModule& M, const groups::Homomorphism& proj);
/// Outer tensor product of modules of G1 and G2 as a module of G1 x G2,
/// where P was built by direct_product({G1, G2}).
GModule outer_tensor(const GModule& A, const GModule& B, const GroupPtr& P);

/// Invariant subspace basis (reduced echelon) -> action on it / on the quotient.
GModule submodule(const GModule& M, const fq::Matrix& basis);
GModule quotient_module(const GModule& M, const fq::Matrix& basis);

ElementSet kernel_of_action(const GModule& M);
/// Fixed points M^G.
fq::Matrix fixed_points(const GModule& M);

}  // namespace repgrowth::gmod
