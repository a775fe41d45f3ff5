#include "repgrowth/repcount/counts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace repgrowth::repcount {

using gmod::IrreducibleDescriptor;

namespace {

void fill_cumulative(CountTable& t) {
  t.R.assign(t.D + 1, 0);
  for (std::size_t n = 1; n <= t.D; ++n) t.R[n] = t.R[n - 1] + t.r[n];
}

}  // namespace

CountTable irr_table(const GroupPtr& G, const fq::Field& F, std::size_t D, const TableOptions& opts) {
  gmod::ChopOptions co;
  co.seed = opts.seed;
  co.cap = opts.cap;
  co.central_element = opts.central_element;
  auto series = gmod::chop(gmod::regular_module(G, F, opts.cap), co);
  CountTable t;
  t.group = G->label();
  t.field = F;
  t.D = D;
  t.r.assign(D + 1, 0);
  t.r_star.assign(D + 1, 0);
  for (auto& f : series.factors) {
    const auto n = f.descriptor.dim;
    if (n > D) continue;
    ++t.r[n];
    if (f.descriptor.abs_irr) ++t.r_star[n];
    t.irreducibles.push_back(std::move(f));
  }
  fill_cumulative(t);
  return t;
}

CountTable product_counts(const std::vector<CountTable>& tables, std::size_t D) {
  if (tables.empty()) throw std::invalid_argument("product of no tables");
  CountTable out;
  out.field = tables[0].field;
  out.D = D;
  out.has_r = false;
  out.r_star.assign(D + 1, 0);
  out.r_star[1] = 1;
  for (const auto& t : tables) {
    if (!(t.field == out.field)) throw std::invalid_argument("product tables over different fields");
    if (t.D < D) throw std::invalid_argument("factor table " + t.group + " does not reach dimension " + std::to_string(D));
    std::vector<std::uint64_t> next(D + 1, 0);
    for (std::size_t a = 1; a <= D; ++a) {
      if (!out.r_star[a]) continue;
      for (std::size_t b = 1; a * b <= D; ++b) next[a * b] += out.r_star[a] * t.r_star[b];
    }
    out.r_star = std::move(next);
    out.group += (out.group.empty() ? "" : " x ") + t.group;
  }
  return out;
}

CountTable central_quotient_counts(const std::vector<CountTable>& tables, std::size_t D) {
  if (tables.empty()) throw std::invalid_argument("product of no tables");
  const auto F = tables[0].field;
  // (dimension, product of central scalars) -> count
  std::map<std::pair<std::size_t, fq::Elem>, std::uint64_t> state{{{1, 1}, 1}};
  std::string label;
  for (const auto& t : tables) {
    if (!(t.field == F)) throw std::invalid_argument("product tables over different fields");
    if (t.D < D) throw std::invalid_argument("factor table " + t.group + " does not reach dimension " + std::to_string(D));
    std::map<std::pair<std::size_t, fq::Elem>, std::uint64_t> next;
    for (const auto& f : t.irreducibles) {
      const auto& d = f.descriptor;
      if (!d.abs_irr) continue;
      if (!d.central_character) throw std::invalid_argument("missing central character data for " + t.group);
      const fq::Elem w = d.central_character->size() > 1 ? (*d.central_character)[1] : 1;
      for (const auto& [key, count] : state) {
        if (key.first * d.dim > D) continue;
        next[{key.first * d.dim, F.mul(key.second, w)}] += count;
      }
    }
    state = std::move(next);
    label += (label.empty() ? "" : " x ") + t.group;
  }
  CountTable out;
  out.group = label + " / diagonal centre";
  out.field = F;
  out.D = D;
  out.has_r = false;
  out.r_star.assign(D + 1, 0);
  for (const auto& [key, count] : state)
    if (key.second == 1) out.r_star[key.first] += count;
  return out;
}

std::map<std::size_t, std::uint64_t> absolute_dimensions(const CountTable& t) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& f : t.irreducibles) out[f.descriptor.dim / f.descriptor.endo_degree] += f.descriptor.endo_degree;
  return out;
}

bool is_trivial(const IrreducibleDescriptor& d) {
  return d.dim == 1 && std::all_of(d.fingerprint.begin(), d.fingerprint.end(), [](fq::Elem x) { return x == 1; });
}

std::optional<MinDegree> min_degree(const GroupPtr& G, const fq::Field& F, const TableOptions& opts) {
  auto t = irr_table(G, F, G->order(), opts);
  std::optional<MinDegree> best;
  for (const auto& f : t.irreducibles) {
    if (is_trivial(f.descriptor)) continue;
    if (!best || f.descriptor.dim < best->degree) best = MinDegree{f.descriptor.dim, f.descriptor};
  }
  return best;
}

std::optional<FaithfulWitness> min_faithful_size(const GroupPtr& G, std::uint64_t bound, const TableOptions& opts) {
  std::optional<FaithfulWitness> best;
  auto better = [&](const FaithfulWitness& w) {
    if (!best) return true;
    if (w.size != best->size) return w.size < best->size;
    const auto& a = w.module.field();
    const auto& b = best->module.field();
    if (a.p() != b.p()) return a.p() < b.p();
    if (a.k() != b.k()) return a.k() < b.k();
    return w.descriptor.fingerprint < best->descriptor.fingerprint;
  };
  for (std::uint64_t q = 2; q <= bound; ++q) {
    unsigned p = 2;
    while (q % p) ++p;
    std::uint64_t r = q;
    unsigned k = 0;
    for (; r % p == 0; r /= p) ++k;
    if (r != 1) continue;
    std::size_t D = 0;
    for (std::uint64_t s = q; s <= bound; s *= q) ++D;
    auto F = fq::Field::make(p, k);
    auto t = irr_table(G, F, D, opts);
    for (const auto& f : t.irreducibles) {
      if (!f.descriptor.faithful) continue;
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < f.descriptor.dim; ++i) size *= q;
      const unsigned e = f.descriptor.endo_degree;
      FaithfulWitness w{size, fq::Field::make(p, k * e), f.descriptor.dim / e, f.descriptor, f.module};
      if (better(w)) best = std::move(w);
    }
  }
  return best;
}

bool SubalgebraReport::holds() const {
  return std::all_of(restriction.begin(), restriction.end(), [](auto& r) { return r.holds(); }) &&
         std::all_of(subalgebra.begin(), subalgebra.end(), [](auto& r) { return r.holds(); });
}

SubalgebraReport subalgebra_inequality_check(const GroupPtr& G, const groups::SubgroupGroup& H, const fq::Field& F,
                                             std::size_t D, const TableOptions& opts) {
  if (G->order() % H.group->order() != 0) throw std::invalid_argument("subgroup order does not divide group order");
  SubalgebraReport rep;
  rep.index = G->order() / H.group->order();
  auto tg = irr_table(G, F, D * rep.index, opts);
  auto th = irr_table(H.group, F, D, opts);
  for (std::size_t n = 1; n <= D; ++n) {
    rep.restriction.push_back({n, th.R[n], rep.index * tg.R[n * rep.index]});
    rep.subalgebra.push_back({n, tg.R[n], rep.index * th.R[n]});
  }
  return rep;
}

bool table_consistent(const CountTable& t) {
  for (std::size_t n = 1; n <= t.D; ++n) {
    if (!t.has_r) continue;
    if (t.r_star[n] > t.r[n]) return false;
    if (t.R[n] != t.R[n - 1] + t.r[n]) return false;
    if (t.r[n] > t.R[n] || t.R[n] < t.R[n - 1]) return false;
  }
  return true;
}

GrowthShape growth_shape_check(const CountTable& t) {
  const double lq = std::log(double(t.field.q()));
  GrowthShape g{0.0, true};
  for (std::size_t n = 1; n <= t.D; ++n)
    if (t.r[n] > 0) g.c = std::max(g.c, std::log(double(t.r[n])) / (double(n) * lq));
  for (std::size_t n = 1; n <= t.D; ++n)
    if (t.R[n] > 0 && std::log(double(t.R[n])) > std::log(double(n)) + g.c * double(n) * lq + 1e-9) g.holds = false;
  return g;
}

}  // namespace repgrowth::repcount
