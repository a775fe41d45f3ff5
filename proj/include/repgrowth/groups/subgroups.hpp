#pragma once

#include <optional>

#include "repgrowth/groups/group.hpp"

namespace repgrowth::groups {

struct ClassSummary {
  Index representative;
  std::size_t size;
};

/// All classes, or only those of elements with order prime to p.
std::vector<ClassSummary> conjugacy_classes(const Group& G, std::optional<unsigned> p_regular = std::nullopt);

ElementSet subgroup_closure(const Group& G, std::span<const Index> gens);
/// Smallest normal subgroup containing S.
ElementSet normal_closure(const Group& G, std::span<const Index> S);
bool is_subgroup(const Group& G, const ElementSet& H);
bool is_normal(const Group& G, const ElementSet& N);
/// Greedy generating set: scans H in index order.
std::vector<Index> generators_of(const Group& G, const ElementSet& H);

std::vector<ElementSet> minimal_normal_subgroups(const Group& G);
ElementSet center(const Group& G);
ElementSet derived_subgroup(const Group& G);
/// Elements g with [x, g] in Y for every x in X (X, Y normal, Y <= X).
ElementSet centralizer_of_section(const Group& G, const ElementSet& X, const ElementSet& Y);

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
  std::vector<Index> coset_of;  ///< element of G -> element of G/N
};

/// G/N with generators the images of G's generators (in order).
Quotient quotient(const GroupPtr& G, const ElementSet& N);

struct SubgroupGroup {
  GroupPtr group;
  std::vector<Index> embedding;   ///< element of H -> element of G
  std::vector<std::int64_t> back; ///< element of G -> element of H or -1
};

/// H as a group in its own right, generated by the given generators (or a
/// greedy generating set).
SubgroupGroup as_group(const GroupPtr& G, const ElementSet& H, std::vector<Index> gens = {});

/// Every homomorphism (or epimorphism) G -> T in lexicographic order of
/// generator images. budget bounds |T|^{#gens(G)}.
std::vector<Homomorphism> hom_search(const GroupPtr& G, const GroupPtr& T, bool onto,
                                     std::uint64_t budget = 100000000ull, std::size_t limit = 0);

/// Generator indices of G that already generate G (greedy, in order).
std::vector<std::size_t> reduced_generators(const Group& G);

}  // namespace repgrowth::groups
