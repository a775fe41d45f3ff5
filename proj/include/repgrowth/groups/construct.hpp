#pragma once

#include <string_view>

#include "repgrowth/fq/field.hpp"
#include "repgrowth/groups/subgroups.hpp"

namespace repgrowth::groups {

GroupPtr cyclic(std::size_t n);
GroupPtr elementary_abelian(unsigned p, unsigned n);
GroupPtr symmetric(std::size_t b);
GroupPtr alternating(std::size_t b);
/// SL_n(F_q) on row vectors.
GroupPtr special_linear(std::size_t n, std::uint64_t q, std::size_t cap = kDefaultEnumCap);
/// PSL_n(F_q) acting on the projective points of F_q^n.
GroupPtr projective_special_linear(std::size_t n, std::uint64_t q, std::size_t cap = kDefaultEnumCap);
/// C_p^n extended by the index-2 subgroup of Aut(C_p) acting diagonally.
GroupPtr g_star(unsigned p, unsigned n, std::size_t cap = kDefaultEnumCap);
/// SL_2(Z/p^2).
GroupPtr sl2_zmod(unsigned p, std::size_t cap = kDefaultEnumCap);
GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t cap = kDefaultEnumCap);
GroupPtr direct_power(const GroupPtr& G, std::size_t m, std::size_t cap = kDefaultEnumCap);
/// SL_n(F_q)^m modulo the diagonal copy of the centre.
GroupPtr g_nqm(std::size_t n, std::uint64_t q, std::size_t m, std::size_t cap = kDefaultEnumCap);
/// Subgroup of L^k of tuples congruent mod N^k to a diagonal element.
GroupPtr crown_power(const GroupPtr& L, const ElementSet& N, std::size_t k, std::size_t cap = kDefaultEnumCap);

/// Upper-triangular elements of a matrix group.
ElementSet borel(const Group& G);
/// Kernel of reduction mod p for a group built by sl2_zmod.
ElementSet congruence_kernel(const Group& G);

/// eta(p) = (p-1)/2, the order of the acting group in g_star.
unsigned eta(unsigned p);

/// Builds a group from a textual description, e.g. "sl 2 5", "gstar 7 2",
/// "crown sym 4 2", "alt 5 x cyclic 3", "product sl 2 3; cyclic 4",
/// "perm: (1 2 3); (1 2)". Factors of "product" are split at semicolons.
GroupPtr parse_group(std::string_view spec, std::size_t cap = kDefaultEnumCap);

/// Subgroup description relative to G: "borel", "derived", "centre",
/// "kernel", or "gens: <element list in G's notation>".
ElementSet parse_subgroup(const GroupPtr& G, std::string_view spec);

}  // namespace repgrowth::groups
