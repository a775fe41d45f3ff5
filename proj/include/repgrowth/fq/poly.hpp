#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "repgrowth/fq/matrix.hpp"

namespace repgrowth::fq {

/// Polynomial over a finite field, constant term first, no trailing zeros.
using Poly = std::vector<Elem>;

namespace poly {

void trim(Poly& f);
long degree(const Poly& f);  // -1 for zero
Poly x();
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& m);
Poly gcd(const Field& F, Poly a, Poly b);  // monic
Poly monic(const Field& F, Poly a);
Poly derivative(const Field& F, const Poly& a);
Poly powmod(const Field& F, Poly a, std::uint64_t e, const Poly& m);
Elem eval(const Field& F, const Poly& a, Elem x);
/// f(A) by Horner.
Matrix eval(const Poly& f, const Matrix& a);

/// Characteristic polynomial det(xI - A) via Hessenberg reduction.
Poly charpoly(const Matrix& a);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<Poly, unsigned>> factor(const Field& F, const Poly& f, std::mt19937_64& rng);

bool is_irreducible(const Field& F, const Poly& f);

}  // namespace poly
}  // namespace repgrowth::fq
