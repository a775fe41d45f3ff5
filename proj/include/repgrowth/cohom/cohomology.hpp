#pragma once

#include <optional>
#include <string>

#include "repgrowth/gmod/meataxe.hpp"

namespace repgrowth::cohom {

using gmod::GModule;
using groups::ElementSet;
using groups::GroupPtr;
using groups::Index;

/// Derivations f(gh) = f(g) h + f(h), stored by their values on the generators.
struct CocycleBasis {
  std::size_t z1 = 0, b1 = 0, h1 = 0;
  /// Rows in F^{|S| dim M}: f(s_0), f(s_1), ... concatenated.
  fq::Matrix basis;
};

/// H^1 by propagation over the element table of the module's group.
CocycleBasis h1(const GModule& M);
inline std::size_t h1_dim(const GModule& M) { return h1(M).h1; }

/// Checks that generator values extend to a derivation on all of G.
bool is_cocycle(const GModule& M, std::span<const fq::Elem> generator_values);

/// dim ker d1 - dim im d0 on the full bar complex. |G| <= 400, dim M <= 8.
std::size_t h1_bar_oracle(const GModule& M);
/// dim H^2 from the bar complex. |G| <= 60.
std::size_t h2_bar_small(const GModule& M);

struct ComplementResult {
  bool exists = false;
  std::optional<ElementSet> complement;
  std::uint64_t assignments_tried = 0;
  std::uint64_t assignments_total = 0;
};

/// Exhaustive search over lifts of generators of Ghat/A for a complement to A.
ComplementResult complement_exists(const GroupPtr& Ghat, const ElementSet& A, std::uint64_t budget = 100000000ull);

struct AgReport {
  std::size_t h1_G = 0;       ///< dim over F of H^1(G, M)
  std::size_t h1_image = 0;   ///< dim over F of H^1(G/C_G(M), M)
  std::size_t delta = 0;      ///< non-Frattini chief factors G-isomorphic to M
  unsigned endo_degree = 1;   ///< |End_G(M)| = |F|^endo_degree
  std::size_t kernel_order = 0;
  bool holds() const { return h1_G == endo_degree * delta + h1_image; }
};

/// |H^1(G,M)| = q^delta |H^1(G/C_G(M), M)| with q = |End_G(M)|, compared on exponents.
AgReport ag_check(const GModule& M);

struct Lh1Candidate {
  std::uint64_t size = 0;
  fq::Field field;          ///< minimal field of realization
  std::size_t dim = 0;      ///< dimension over that field
  std::size_t h1 = 0;       ///< dim of H^1 over that field
  gmod::IrreducibleDescriptor descriptor;  ///< over the prime field
  GModule module;           ///< prime-field module
};

struct Lh1Result {
  std::optional<Lh1Candidate> witness;
  /// Every faithful simple module within the bound, in canonical order.
  std::vector<Lh1Candidate> scanned;
};

/// Least |E|^m over faithful simple T-modules with H^1 != 0 and |E|^m <= bound.
Lh1Result lh1_search(const GroupPtr& T, std::uint64_t bound, std::uint64_t seed = 1);

}  // namespace repgrowth::cohom
