#pragma once

#include <optional>

#include "repgrowth/gmod/meataxe.hpp"

namespace repgrowth::crowns {

using gmod::GModule;
using groups::ElementSet;
using groups::GroupPtr;
using groups::Index;

struct ChiefFactor {
  ElementSet upper, lower;  ///< X and Y with X/Y the factor
  std::size_t order = 0;
  bool abelian = false;
  unsigned p = 0;            ///< abelian: the prime
  std::size_t dim = 0;       ///< abelian: dimension over GF(p)
  std::optional<GModule> module;  ///< abelian: conjugation action of G on X/Y
  std::size_t simple_order = 0;   ///< non-abelian: |T|
  std::size_t copies = 0;         ///< non-abelian: X/Y = T^copies
  bool frattini = false;
};

struct ChiefSeries {
  /// G = N_0 > N_1 > ... > 1
  std::vector<ElementSet> chain;
  /// factors[i] = N_i / N_{i+1}
  std::vector<ChiefFactor> factors;
};

/// Built from the bottom by taking a minimal normal subgroup of the current
/// quotient: least order, then least encoding (greatest when reversed).
ChiefSeries chief_series(const GroupPtr& G, bool reverse_tiebreak = false);

struct DeltaR {
  std::size_t delta = 0;
  std::size_t r = 0;
  std::size_t h_prime = 0;
  unsigned endo_degree = 1;
};

/// delta_G(M), r_G(M) and h'_G(M) for an irreducible module M.
DeltaR delta_and_r(const ChiefSeries& cs, const GModule& M);
DeltaR delta_and_r(const GroupPtr& G, const GModule& M);

/// The module M viewed as a module of G/C_G(M), with that kernel.
struct ImageModule {
  GModule module;
  ElementSet kernel;
};
ImageModule faithful_image(const GModule& M);

struct Fp1Term {
  gmod::IrreducibleDescriptor descriptor;
  DeltaR data;
  std::size_t value = 0;  ///< ceil((delta + h') / r)
};

struct Fp1Result {
  std::size_t value = 0;
  std::optional<Fp1Term> attained;
  std::vector<Fp1Term> scanned;
};

/// sup of ceil((delta + h')/r) over every irreducible GF(p)-module, p dividing |G|.
Fp1Result fp1_sup(const GroupPtr& G, std::uint64_t seed = 1);

/// Order and class-size multiset filter, then an epimorphism search.
bool isomorphic(const GroupPtr& A, const GroupPtr& B);

/// Number of non-abelian chief factors A with G/C_G(A) isomorphic to T.
std::size_t rk_T(const GroupPtr& G, const GroupPtr& T);

struct EpiCensus {
  std::uint64_t epis = 0;
  std::uint64_t classes = 0;      ///< orbits under conjugation by T
  std::optional<std::uint64_t> module_size;  ///< |V| when supplied
  /// |Epi|/|T| <= classes <= |V| |Epi| / |T|
  bool lower_holds = true, upper_holds = true;
};

EpiCensus epi_census(const GroupPtr& G, const GroupPtr& T, const GModule* V = nullptr);

/// Least number of generators, or nullopt when it exceeds max_d.
std::optional<std::size_t> d_bruteforce(const GroupPtr& G, std::size_t max_d, std::uint64_t budget = 100000000ull);

}  // namespace repgrowth::crowns
