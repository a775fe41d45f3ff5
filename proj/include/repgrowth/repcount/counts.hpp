#pragma once

#include <map>
#include <optional>
#include <string>

#include "repgrowth/gmod/meataxe.hpp"

namespace repgrowth::repcount {

using groups::GroupPtr;

/// r, r* and R for dimensions 1..D (index 0 unused).
struct CountTable {
  std::string group;
  fq::Field field;
  std::size_t D = 0;
  /// False for tables synthesized from factors, where only r* is known.
  bool has_r = true;
  std::vector<std::uint64_t> r, r_star, R;
  /// Irreducibles of dimension <= D with one representative module each.
  std::vector<gmod::CompositionFactor> irreducibles;
};

struct TableOptions {
  std::uint64_t seed = 1;
  std::size_t cap = gmod::kDefaultChopCap;
  std::optional<groups::Index> central_element;
};

/// Chops the regular module; every irreducible occurs there.
CountTable irr_table(const GroupPtr& G, const fq::Field& F, std::size_t D, const TableOptions& opts = {});

/// r* of a direct product by convolution over factorizations n = d_1 ... d_m.
CountTable product_counts(const std::vector<CountTable>& tables, std::size_t D);

/// r* of the direct product modulo the diagonal of the designated central
/// elements: products of absolutely irreducibles whose central characters
/// multiply to 1. Every table must carry central characters.
CountTable central_quotient_counts(const std::vector<CountTable>& tables, std::size_t D);

/// Dimensions of absolutely irreducible constituents over the algebraic
/// closure: an irreducible of dimension n with endomorphism degree e
/// contributes e constituents of dimension n/e. dim -> count.
std::map<std::size_t, std::uint64_t> absolute_dimensions(const CountTable& t);

bool is_trivial(const gmod::IrreducibleDescriptor& d);

struct MinDegree {
  std::size_t degree;
  gmod::IrreducibleDescriptor witness;
};
/// Least dimension of a nontrivial irreducible over F.
std::optional<MinDegree> min_degree(const GroupPtr& G, const fq::Field& F, const TableOptions& opts = {});

struct FaithfulWitness {
  std::uint64_t size;  ///< |E|^m
  fq::Field field;     ///< E, the endomorphism field of the witness
  std::size_t dim;     ///< m, dimension over E
  gmod::IrreducibleDescriptor descriptor;  ///< as found over the chopped field
  gmod::GModule module;
};
/// Smallest faithful irreducible by |E|^m over all fields with |F| <= bound,
/// reported over its endomorphism field. Ties break by (size, p, k, fingerprint).
std::optional<FaithfulWitness> min_faithful_size(const GroupPtr& G, std::uint64_t bound,
                                                 const TableOptions& opts = {});

struct InequalityRow {
  std::size_t n;
  std::uint64_t lhs, rhs;
  bool holds() const { return lhs <= rhs; }
};

struct SubalgebraReport {
  std::uint64_t index;
  /// R(H,F,n) <= h R(G,F,nh)
  std::vector<InequalityRow> restriction;
  /// R(G,F,n) <= h R(H,F,n)
  std::vector<InequalityRow> subalgebra;
  bool holds() const;
};

SubalgebraReport subalgebra_inequality_check(const GroupPtr& G, const groups::SubgroupGroup& H, const fq::Field& F,
                                             std::size_t D, const TableOptions& opts = {});

/// R monotone, r <= R, r* <= r, R[n] = sum r[j].
bool table_consistent(const CountTable& t);

struct GrowthShape {
  double c;  ///< least c with r[n] <= |F|^{cn} on the table
  bool holds;  ///< R[n] <= n |F|^{cn} for all n
};
GrowthShape growth_shape_check(const CountTable& t);

}  // namespace repgrowth::repcount
