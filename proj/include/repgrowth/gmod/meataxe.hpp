#pragma once

#include <optional>
#include <random>

#include "repgrowth/gmod/module.hpp"

namespace repgrowth::gmod {

struct IrreducibleDescriptor {
  std::size_t dim = 0;
  fq::Field field;
  unsigned endo_degree = 1;
  bool abs_irr = true;
  /// Traces on the class representatives of the group, in class order.
  std::vector<fq::Elem> fingerprint;
  bool faithful = false;
  /// Scalars of z^0, z^1, ... for the designated central element z, when z acts as a scalar.
  std::optional<std::vector<fq::Elem>> central_character;

  /// Canonical order: (dim, e, fingerprint).
  bool operator<(const IrreducibleDescriptor& o) const;
  bool same_key(const IrreducibleDescriptor& o) const;
};

struct CompositionFactor {
  IrreducibleDescriptor descriptor;
  std::size_t multiplicity = 0;
  GModule module;  ///< one representative
};

struct CompositionSeries {
  std::vector<CompositionFactor> factors;
  std::size_t total_dim() const;
};

struct ChopOptions {
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultChopCap;
  std::optional<Index> central_element;
};

/// Proper nonzero invariant subspace (reduced echelon basis), or nullopt when M is irreducible.
/// Holt-Rees/Norton test on random algebra elements, then a deterministic fallback.
std::optional<fq::Matrix> find_submodule(const GModule& M, std::mt19937_64& rng);
bool is_irreducible(const GModule& M, std::uint64_t seed = 1);

/// Basis of Hom_G(V, W) as n x m matrices X with rho_V(g) X = X rho_W(g).
std::vector<fq::Matrix> hom_space(const GModule& V, const GModule& W);
std::size_t hom_dim(const GModule& V, const GModule& W);
/// Degree of End_G(V) over the base field; V must be irreducible.
unsigned endo_degree(const GModule& V);
/// Isomorphism test for irreducible modules; throws if either is reducible.
bool iso_test(const GModule& V, const GModule& W, std::uint64_t seed = 1);

IrreducibleDescriptor describe(const GModule& V, std::optional<Index> central_element = std::nullopt);

/// Composition factors with multiplicities, sorted canonically.
CompositionSeries chop(const GModule& M, const ChopOptions& opts = {});

struct CliffordData {
  IrreducibleDescriptor constituent;
  std::size_t multiplicity = 0;
  std::size_t components = 0;
};

/// Restriction of an irreducible W to a normal subgroup K: one constituent,
/// its multiplicity m and the number t of isotypic components.
CliffordData clifford_restriction(const GModule& W, const groups::SubgroupGroup& K, std::uint64_t seed = 1);

}  // namespace repgrowth::gmod
