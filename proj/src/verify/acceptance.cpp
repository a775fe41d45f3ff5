#include "repgrowth/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "repgrowth/cohom/cohomology.hpp"
#include "repgrowth/crowns/crowns.hpp"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/growth/growth.hpp"
#include "repgrowth/repcount/counts.hpp"

namespace repgrowth::verify {

using gmod::GModule;
using groups::GroupPtr;

namespace {

struct Log {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back((ok ? "ok: " : "FAIL: ") + what);
  }
  void note(const std::string& what) { lines.push_back(what); }
};

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string field_name(const fq::Field& F) { return cat("GF(", F.q(), ")"); }

// Orbits of scaling by the subgroup of order eta in F_p^x on nonzero vectors of F_p^n.
std::uint64_t scaling_orbits(unsigned p, unsigned n, unsigned eta) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= p;
  unsigned gen = 0;
  for (unsigned g = 2; g < p && !gen; ++g) {
    unsigned x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == eta) gen = g;
  }
  if (!gen) gen = 1;
  std::vector<char> seen(total, 0);
  std::uint64_t orbits = 0;
  for (std::uint64_t v = 1; v < total; ++v) {
    if (seen[v]) continue;
    ++orbits;
    std::uint64_t w = v;
    do {
      seen[w] = 1;
      std::uint64_t y = 0, x = w, mul = 1;
      for (unsigned i = 0; i < n; ++i, x /= p, mul *= p) y += (x % p * gen % p) * mul;
      w = y;
    } while (w != v);
  }
  return orbits;
}

std::vector<GModule> simples(const GroupPtr& G, const fq::Field& F, std::uint64_t seed) {
  std::vector<GModule> out;
  for (auto& f : gmod::chop(gmod::regular_module(G, F), {.seed = seed, .cap = gmod::kDefaultChopCap,
                                                         .central_element = std::nullopt})
                     .factors)
    out.push_back(f.module);
  return out;
}

groups::ElementSet nontrivial_center_element(const groups::Group& G, groups::Index& z) {
  auto Z = groups::center(G);
  auto items = Z.sorted();
  z = items.size() > 1 ? items[1] : 0;
  return Z;
}

void c1(Log& log, std::uint64_t seed) {
  for (auto [p, n] : {std::pair{7u, 1u}, std::pair{7u, 2u}, std::pair{11u, 1u}}) {
    const unsigned eta = groups::eta(p);
    auto G = groups::g_star(p, n);
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < n; ++i) pn *= p;
    const auto orbits = scaling_orbits(p, n, eta);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      auto F = fq::Field::of_order(q);
      auto t = repcount::irr_table(G, F, G->order(), {.seed = seed, .cap = gmod::kDefaultChopCap,
                                                .central_element = std::nullopt});
      const auto g = std::gcd(eta, q - 1);
      const std::string tag = cat("G*_{", p, ",", n, "} over ", field_name(F));
      log.check(t.r_star[1] == g, cat(tag, ": r*[1] = ", t.r_star[1], ", gcd(eta, q-1) = ", g));
      auto abs = repcount::absolute_dimensions(t);
      bool dims_ok = true;
      for (auto& [d, c] : abs) dims_ok = dims_ok && (d == 1 || d == eta);
      log.check(dims_ok, cat(tag, ": every non-linear absolutely irreducible has dimension eta = ", eta));
      const auto nonlin = abs.count(eta) ? abs.at(eta) : 0;
      log.check(nonlin <= pn - 1 && nonlin == orbits && orbits == (pn - 1) / eta,
                cat(tag, ": non-linear count ", nonlin, " <= ", pn - 1, ", orbit oracle ", orbits));
    }
  }
}

void c2(Log& log, std::uint64_t seed) {
  auto SL = groups::special_linear(2, 5);
  repcount::TableOptions opts{.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt};
  auto md = repcount::min_degree(SL, fq::Field::make(2, 2), opts);
  log.check(md && md->degree == 2 && md->witness.abs_irr,
            cat("SL_2(5) over GF(4): minimal nontrivial absolutely irreducible degree ", md ? md->degree : 0,
                " = (p-1)/2 = 2"));
  for (auto& M : simples(SL, fq::Field::make(5), seed)) {
    const auto h = cohom::h1_dim(M);
    const auto bar = cohom::h1_bar_oracle(M);
    log.check(h == bar, cat("SL_2(5) over GF(5), dim ", M.dim(), ": h1 = ", h, ", bar oracle ", bar));
    if (h) log.check(M.dim() >= 3, cat("dim ", M.dim(), " module with nonzero H^1 has dim >= p-2 = 3"));
  }
}

void c3(Log& log, std::uint64_t seed) {
  auto SL = groups::special_linear(2, 5);
  auto B = groups::as_group(SL, groups::borel(*SL));
  auto F2 = fq::Field::make(2);
  auto one = gmod::trivial_module(B.group, F2);
  auto ind = gmod::induce(one, B, SL);
  const auto hi = cohom::h1_dim(ind), hb = cohom::h1_dim(one);
  log.check(hi == hb && hb == 1, cat("Shapiro: dim H^1(G, Ind_B^G 1) = ", hi, ", dim H^1(B, 1) = ", hb));
  groups::Index z = 0;
  nontrivial_center_element(*SL, z);
  bool found = false;
  for (auto& f : gmod::chop(ind, {.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt})
                     .factors) {
    const bool central_trivial = f.module.matrix_of(z).is_identity();
    const auto h = cohom::h1_dim(f.module);
    log.note(cat("factor dim ", f.module.dim(), " x", f.multiplicity, ", centre trivial ", central_trivial,
                 ", h1 ", h));
    if (f.module.dim() <= 5 && central_trivial && h > 0) found = true;
  }
  log.check(found, "irreducible GF(2)-module of dim <= 5 with trivial centre action and nonzero H^1");
}

void c4(Log& log, std::uint64_t seed) {
  auto A5 = groups::alternating(5);
  auto r = cohom::lh1_search(A5, 32, seed);
  log.check(r.witness.has_value(), "a witness exists within 32");
  if (!r.witness) return;
  const auto v = r.witness->size;
  log.check(v >= 4 && v <= 32,
            cat("value ", v, " (dim ", r.witness->dim, " over ", field_name(r.witness->field), ") in [4, 32]"));
  for (std::uint64_t s = seed + 1; s <= seed + 3; ++s) {
    auto other = cohom::lh1_search(A5, 32, s);
    log.check(other.witness && other.witness->size == v, cat("seed ", s, " gives the same value"));
  }
  std::uint64_t bar_value = 0;
  for (auto& c : r.scanned)
    if (cohom::h1_bar_oracle(c.module) > 0) {
      bar_value = c.size;
      break;
    }
  log.check(bar_value == v, cat("bar oracle over the scanned modules gives ", bar_value));
}

void c5(Log& log, std::uint64_t seed) {
  auto SL = groups::special_linear(3, 2);
  auto t = repcount::irr_table(SL, fq::Field::make(2), 8, {.seed = seed, .cap = gmod::kDefaultChopCap,
                                                            .central_element = std::nullopt});
  for (std::size_t m = 1; m <= 2; ++m) {
    std::vector<repcount::CountTable> parts(m, t);
    auto tm = m == 1 ? t : repcount::product_counts(parts, 8);
    log.check(tm.r_star[3] == 2 * m, cat("r*(SL_3(2)^", m, ", GF(2), 3) = ", tm.r_star[3], " = 2m"));
    log.check(tm.r_star[3] >= m, cat("r*_3 = ", tm.r_star[3], " >= m = ", m, " (ratio 2)"));
  }
  // the four degree-3 modules of SL_3(2)^2, built directly and pairwise non-isomorphic
  auto P = groups::direct_product({SL, SL});
  auto N = gmod::natural_module(SL);
  auto D = gmod::dual(N);
  auto T = gmod::trivial_module(SL, fq::Field::make(2));
  std::vector<GModule> mods{gmod::outer_tensor(N, T, P), gmod::outer_tensor(D, T, P), gmod::outer_tensor(T, N, P),
                            gmod::outer_tensor(T, D, P)};
  bool distinct = true, abs = true;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    abs = abs && gmod::describe(mods[i]).abs_irr;
    for (std::size_t j = 0; j < i; ++j) distinct = distinct && !gmod::iso_test(mods[i], mods[j]);
  }
  log.check(distinct && abs, "the four outer tensor products of degree 3 are absolutely irreducible and distinct");
}

void c6(Log& log, std::uint64_t seed) {
  auto SL = groups::special_linear(2, 5);
  groups::Index z = 0;
  nontrivial_center_element(*SL, z);
  auto F5 = fq::Field::make(5);
  auto t = repcount::irr_table(SL, F5, 4, {.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = z});
  auto q = repcount::central_quotient_counts({t, t}, 4);
  log.check(q.r_star[2] == 0, cat("degree-2 irreducibles of SL_2(5)^2 with trivial diagonal central character: ",
                                  q.r_star[2]));
  std::uint64_t pairs = 0;
  for (auto& a : t.irreducibles)
    for (auto& b : t.irreducibles)
      if (a.descriptor.abs_irr && b.descriptor.abs_irr && a.descriptor.dim * b.descriptor.dim == 2 &&
          F5.mul((*a.descriptor.central_character)[1], (*b.descriptor.central_character)[1]) == 1)
        ++pairs;
  log.check(pairs == 0, cat("direct pair enumeration: ", pairs));
  log.note(cat("unrestricted degree-2 count of SL_2(5)^2: ", repcount::product_counts({t, t}, 4).r_star[2]));
}

void c7(Log& log, std::uint64_t) {
  auto K = groups::sl2_zmod(5);
  auto ker = groups::congruence_kernel(*K);
  auto r = cohom::complement_exists(K, ker);
  log.check(ker.size() == 125, cat("reduction kernel order ", ker.size()));
  log.check(!r.exists, cat("no complement; lift assignments tried ", r.assignments_tried, " of ",
                           r.assignments_total));
  log.check(r.assignments_total == 125 * 125, "search space is 125^2 generator-lift pairs");
}

void c8(Log& log, std::uint64_t seed) {
  std::vector<std::pair<std::string, GModule>> pairs;
  auto F2 = fq::Field::make(2), F3 = fq::Field::make(3);
  auto V = groups::elementary_abelian(2, 2);
  pairs.emplace_back("C2^2, trivial GF(2)", gmod::trivial_module(V, F2));
  auto C4 = groups::cyclic(4);
  pairs.emplace_back("C4, trivial GF(2)", gmod::trivial_module(C4, F2));
  auto S4 = groups::symmetric(4);
  auto cs = crowns::chief_series(S4);
  pairs.emplace_back("S4, V4 module", *cs.factors.back().module);
  auto proj = groups::quotient(S4, cs.factors.back().upper);
  auto S3 = groups::symmetric(3);
  for (auto& M : simples(proj.group, F2, seed))
    if (M.dim() == 2) pairs.emplace_back("S4, 2-dim module inflated from S3", gmod::inflate(M, proj.projection));
  pairs.emplace_back("S4, trivial GF(2)", gmod::trivial_module(S4, F2));
  for (auto& M : simples(S4, F3, seed)) pairs.emplace_back(cat("S4, dim ", M.dim(), " over GF(3)"), M);
  auto A4 = groups::alternating(4);
  pairs.emplace_back("A4, V4 module", *crowns::chief_series(A4).factors.back().module);
  pairs.emplace_back("C3, trivial GF(3)", gmod::trivial_module(groups::cyclic(3), F3));
  for (auto& M : simples(S3, F3, seed)) pairs.emplace_back(cat("S3, dim ", M.dim(), " over GF(3)"), M);
  auto P = groups::direct_product({V, groups::cyclic(3)});
  pairs.emplace_back("C2^2 x C3, trivial GF(2)", gmod::trivial_module(P, F2));
  pairs.emplace_back("SL_2(3), natural GF(3)", gmod::natural_module(groups::special_linear(2, 3)));
  pairs.emplace_back("SL_2(5), natural GF(5)", gmod::natural_module(groups::special_linear(2, 5)));
  log.check(pairs.size() >= 10, cat(pairs.size(), " pairs"));
  for (auto& [name, M] : pairs) {
    auto r = cohom::ag_check(M);
    log.check(r.holds(), cat(name, ": h1 = ", r.h1_G, " = ", r.endo_degree, "*", r.delta, " + ", r.h1_image,
                             " (kernel order ", r.kernel_order, ")"));
  }
}

void c9(Log& log, std::uint64_t) {
  auto r = growth::class_count_fact({{2, 5}, {2, 7}, {2, 9}, {3, 2}});
  log.note(r.range);
  log.check(r.holds(), r.claim);
}

void c10(Log& log, std::uint64_t seed) {
  repcount::TableOptions opts{.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt};
  auto S4 = groups::symmetric(4);
  auto A4 = groups::as_group(S4, groups::derived_subgroup(*S4));
  auto SL = groups::special_linear(2, 5);
  auto B = groups::as_group(SL, groups::borel(*SL));
  for (auto& [name, G, H] : std::vector<std::tuple<std::string, GroupPtr, groups::SubgroupGroup>>{
           {"(S4, A4)", S4, A4}, {"(SL_2(5), Borel)", SL, B}})
    for (unsigned q : {2u, 4u}) {
      auto F = fq::Field::of_order(q);
      auto rep = repcount::subalgebra_inequality_check(G, H, F, 3, opts);
      for (auto& row : rep.restriction)
        log.check(row.holds(), cat(name, " over ", field_name(F), ", n = ", row.n, ": R(H) = ", row.lhs,
                                   " <= h R(G, nh) = ", row.rhs));
    }
}

void c11(Log& log, std::uint64_t) {
  auto S4 = groups::symmetric(4);
  auto N = groups::minimal_normal_subgroups(*S4).front();
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    auto L = groups::crown_power(S4, N, k);
    std::uint64_t expect = 24;
    for (std::size_t i = 1; i < k; ++i) expect *= N.size();
    log.check(L->order() == expect, cat("|L_", k, "| = ", L->order(), " = |N|^{k-1}|L| = ", expect));
    auto d = crowns::d_bruteforce(L, 4, 1000000000ull);
    log.check(d && *d >= prev, cat("d(L_", k, ") = ", d ? std::to_string(*d) : std::string(">4")));
    if (d) prev = *d;
  }
  auto F2 = fq::Field::make(2);
  for (unsigned k = 1; k <= 4; ++k) {
    auto G = groups::elementary_abelian(2, k);
    const auto delta = crowns::delta_and_r(G, gmod::trivial_module(G, F2)).delta;
    const auto fp = crowns::fp1_sup(G).value;
    log.check(delta == k && fp == k, cat("C2^", k, ": delta(trivial) = ", delta, ", fp1 sup = ", fp));
  }
}

void c12(Log& log, std::uint64_t) {
  for (auto& r : {growth::sqrt_order_inequality(10000), growth::rough_estimate(1000, 40),
                  growth::family_pfp1_check(growth::sl2_family(10000), 2),
                  growth::family_pfp1_check(growth::alt_family(500), 2)}) {
    std::string v;
    for (auto& s : r.violations) v += " " + s;
    log.check(r.holds(), cat(r.claim, " over ", r.range, ": ", r.checked, " checked, ", r.violation_count,
                             " violations", v.empty() ? "" : " (first:" + v + ")"));
  }
}

void c13(Log& log, std::uint64_t) {
  auto rep = growth::gstar_product_bound(50, {2, 3, 4, 5, 7, 8, 9});
  log.note(cat("family starts (", rep.family[0].p, ",", rep.family[0].n, "), (", rep.family[1].p, ",",
               rep.family[1].n, "), ends (", rep.family.back().p, ",", rep.family.back().n, ")"));
  for (auto& row : rep.rows)
    log.check(row.holds, cat("q = ", row.q, ": final partial product ", row.partial.back().get_d(),
                             " <= (q-1) * 2.7182818285 = ", row.bound.get_d()));
}

void c14(Log& log, std::uint64_t seed) {
  struct Case {
    GroupPtr G;
    unsigned q;
    std::string name;
  };
  std::vector<Case> cases{{groups::symmetric(4), 2, "S4"},          {groups::symmetric(4), 3, "S4"},
                          {groups::special_linear(2, 5), 2, "SL_2(5)"}, {groups::special_linear(2, 5), 4, "SL_2(5)"},
                          {groups::special_linear(2, 5), 5, "SL_2(5)"}, {groups::g_star(7, 2), 2, "G*_{7,2}"},
                          {groups::special_linear(3, 2), 2, "SL_3(2)"}, {groups::alternating(5), 3, "A5"},
                          {groups::g_star(7, 1), 4, "G*_{7,1}"},        {groups::symmetric(3), 5, "S3"},
                          {groups::alternating(4), 5, "A4"},            {groups::special_linear(2, 5), 7, "SL_2(5)"}};
  for (auto& c : cases) {
    auto F = fq::Field::of_order(c.q);
    auto M = gmod::regular_module(c.G, F);
    const std::string tag = cat(c.name, " over ", field_name(F));
    auto ref = gmod::chop(M, {.seed = seed, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt});
    log.check(ref.total_dim() == M.dim(), cat(tag, ": composition dimensions sum to ", M.dim()));
    bool same = true;
    for (std::uint64_t s = seed + 1; s < seed + 10; ++s) {
      auto other = gmod::chop(M, {.seed = s, .cap = gmod::kDefaultChopCap, .central_element = std::nullopt});
      same = same && other.factors.size() == ref.factors.size();
      for (std::size_t i = 0; same && i < ref.factors.size(); ++i)
        same = other.factors[i].descriptor.same_key(ref.factors[i].descriptor) &&
               other.factors[i].multiplicity == ref.factors[i].multiplicity;
    }
    log.check(same, cat(tag, ": identical factors over 10 seeds"));
    std::uint64_t abs = 0, wed = 0;
    for (auto& f : ref.factors) {
      abs += f.descriptor.endo_degree;
      wed += f.descriptor.dim * f.descriptor.dim / f.descriptor.endo_degree;
    }
    const auto regular = groups::conjugacy_classes(*c.G, F.p()).size();
    log.check(abs == regular, cat(tag, ": absolutely irreducible count ", abs, " = p-regular classes ", regular));
    if (c.G->order() % F.p() != 0)
      log.check(wed == c.G->order(), cat(tag, ": Wedderburn sum ", wed, " = |G|"));
  }
  auto F2 = fq::Field::make(2);
  log.check(growth::convolution_identity_check(groups::cyclic(3), groups::symmetric(3), F2, 4, seed).holds(),
            "convolution identity (C3, S3) over GF(2), D = 4");
  log.check(growth::convolution_identity_check(groups::special_linear(3, 2), groups::cyclic(3), fq::Field::make(2, 2),
                                               6, seed)
                .holds(),
            "convolution identity (SL_3(2), C3) over GF(4), D = 6");

  std::vector<GModule> small;
  for (unsigned p : {2u, 3u}) {
    auto F = fq::Field::make(p);
    for (auto G : {groups::symmetric(3), groups::symmetric(4), groups::alternating(4), groups::cyclic(7)}) {
      if (G->order() <= 6) small.push_back(gmod::regular_module(G, F));
      for (auto& M : simples(G, F, seed))
        if (M.dim() <= 6) small.push_back(M);
    }
    auto S4 = groups::symmetric(4);
    small.push_back(gmod::direct_sum(gmod::fully_deleted_module(S4, p), gmod::trivial_module(S4, F)));
    small.push_back(gmod::fully_deleted_module(5, p));
  }
  auto N32 = gmod::natural_module(groups::special_linear(3, 2));
  small.push_back(N32);
  small.push_back(gmod::direct_sum(N32, gmod::dual(N32)));
  std::size_t agree = 0;
  for (auto& M : small) agree += gmod::is_irreducible(M, seed) == exhaustive_irreducible(M);
  log.check(agree == small.size(), cat("MeatAxe agrees with exhaustive subspace search on ", agree, " of ",
                                       small.size(), " modules of dim <= 6"));
}

using Runner = void (*)(Log&, std::uint64_t);

const std::map<int, Runner>& runners() {
  static const std::map<int, Runner> r{{1, c1}, {2, c2},   {3, c3},   {4, c4},   {5, c5},   {6, c6},   {7, c7},
                                       {8, c8}, {9, c9},   {10, c10}, {11, c11}, {12, c12}, {13, c13}, {14, c14}};
  return r;
}

}  // namespace

bool exhaustive_irreducible(const GModule& M) {
  const auto& F = M.field();
  const std::size_t n = M.dim(), q = F.q();
  if (n > 8) throw groups::BudgetExceeded("exhaustive subspace search limited to dim <= 8");
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) piv.push_back(j);
    std::vector<std::pair<std::size_t, std::size_t>> freepos;
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!(mask >> j & 1u)) freepos.emplace_back(i, j);
    std::size_t count = 1;
    for (std::size_t t = 0; t < freepos.size(); ++t) count *= q;
    for (std::size_t code = 0; code < count; ++code) {
      fq::Matrix B(F, piv.size(), n);
      for (std::size_t i = 0; i < piv.size(); ++i) B(i, piv[i]) = 1;
      std::size_t c = code;
      for (auto [i, j] : freepos) {
        B(i, j) = static_cast<fq::Elem>(c % q);
        c /= q;
      }
      bool invariant = true;
      for (auto& a : M.actions()) {
        fq::Matrix both = B;
        fq::Matrix Y = B * a;
        for (std::size_t i = 0; i < Y.rows(); ++i) both.append_row(Y.row(i));
        if (fq::rank(both) != B.rows()) {
          invariant = false;
          break;
        }
      }
      if (invariant) return false;
    }
  }
  return true;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c{
      {1, "G* counting", "r*(G*_{p,n}, F, 1) = gcd(eta(p), |F|-1); non-linear degree eta(p); count (p^n-1)/eta(p)"},
      {2, "SL_2(5) minimal degrees", "minimal degree 2 over GF(4); H^1 != 0 over GF(5) forces dim >= 3"},
      {3, "induced-module witness", "irreducible GF(2)-module of SL_2(5), dim <= 5, centre trivial, H^1 != 0"},
      {4, "first-cohomology length of A5", "4 <= l^{H^1}(A5) <= 32, stable across seeds, equal to bar oracle"},
      {5, "minimal-degree count", "r*(SL_3(2)^m, GF(2), 3) = 2m for m = 1, 2"},
      {6, "central-character filtering", "no degree-2 irreducible of SL_2(5)^2 over GF(5) has trivial product "
                                          "central character"},
      {7, "non-split extension", "SL_2(Z/25) does not split over the reduction kernel"},
      {8, "AG formula", "|H^1(G,M)| = q^n |H^1(G/C_G(M), M)|"},
      {9, "class count bound", "#classes(SL_n(q)) < 28 q^{n-1}"},
      {10, "counting inequalities", "R(H,F,n) <= h R(G,F,nh)"},
      {11, "crown laws", "|L_k| = |N|^{k-1}|L|; d(L_k) non-decreasing; delta and fp1 of C2^k equal k"},
      {12, "inequality suites", "2n^{3/2} < n^2-n-2; 1-n^{-k}-kn^{3/2-k} >= 1/3; 2^p <= (2^{(p-1)/2})^2; "
                                "b!/8 <= (b^{b-2})^2"},
      {13, "G* product bound", "partial products of S*_q(G*)(q^{-2}) majorants <= (q-1) e"},
      {14, "oracle suites", "chop conservation and seed independence, Wedderburn, Brauer, convolution, "
                            "exhaustive irreducibility"}};
  return c;
}

std::vector<std::string> suite_names() {
  return {"all", "gstar", "sl2", "counting", "cohomology", "crowns", "inequalities", "oracles"};
}

std::vector<int> suite(const std::string& name) {
  static const std::map<std::string, std::vector<int>> s{{"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}},
                                                         {"gstar", {1, 13}},
                                                         {"sl2", {2, 3, 4, 6, 7}},
                                                         {"counting", {5, 6, 10}},
                                                         {"cohomology", {3, 4, 7, 8}},
                                                         {"crowns", {8, 11}},
                                                         {"inequalities", {9, 12}},
                                                         {"oracles", {14}}};
  auto it = s.find(name);
  if (it == s.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second;
}

Outcome run(int id, std::uint64_t seed) {
  auto it = runners().find(id);
  if (it == runners().end()) throw std::invalid_argument("unknown criterion: " + std::to_string(id));
  const auto& c = criteria()[id - 1];
  Outcome out;
  out.id = id;
  out.name = c.name;
  out.claim = c.claim;
  Log log;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(log, seed);
  } catch (const std::exception& e) {
    log.check(false, std::string("exception: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = log.pass;
  out.details = std::move(log.lines);
  return out;
}

}  // namespace repgrowth::verify
