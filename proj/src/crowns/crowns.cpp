#include "repgrowth/crowns/crowns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "repgrowth/cohom/cohomology.hpp"

namespace repgrowth::crowns {

using fq::Matrix;
using fq::Vec;

namespace {

ChiefFactor analyse(const GroupPtr& G, const ElementSet& X, const ElementSet& Y) {
  ChiefFactor f;
  f.upper = X;
  f.lower = Y;
  f.order = X.size() / Y.size();
  auto QY = groups::quotient(G, Y);
  const auto& Q = *QY.group;
  ElementSet E(Q.order());
  for (auto x : X.items()) E.insert(QY.coset_of[x]);
  const auto gens = groups::generators_of(Q, E);
  f.abelian = true;
  for (auto a : gens)
    for (auto b : gens)
      if (Q.mul(a, b) != Q.mul(b, a)) f.abelian = false;
  if (!f.abelian) {
    auto sub = groups::as_group(QY.group, E);
    auto mins = groups::minimal_normal_subgroups(*sub.group);
    f.copies = mins.size();
    f.simple_order = mins.front().size();
    return f;
  }
  unsigned p = 2;
  while (f.order % p) ++p;
  f.p = p;
  auto F = fq::Field::make(p);
  // coordinates of E as an F_p-space, basis chosen greedily in index order
  std::map<Index, Vec> coords{{Index{0}, Vec{}}};
  std::vector<Index> basis;
  for (auto e : E.sorted()) {
    if (coords.count(e)) continue;
    basis.push_back(e);
    std::map<Index, Vec> next;
    for (auto& [x, v] : coords) {
      Index y = x;
      for (unsigned c = 0; c < p; ++c, y = Q.mul(y, e)) {
        Vec w = v;
        w.push_back(static_cast<fq::Elem>(c));
        next[y] = std::move(w);
      }
    }
    coords = std::move(next);
  }
  for (auto& [x, v] : coords) v.resize(basis.size(), 0);
  f.dim = basis.size();
  std::vector<Matrix> acts;
  for (std::size_t s = 0; s < G->num_generators(); ++s) {
    Matrix m(F, f.dim, f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) {
      const auto& v = coords.at(Q.conj_gen(basis[i], s));
      for (std::size_t j = 0; j < f.dim; ++j) m(i, j) = v[j];
    }
    acts.push_back(std::move(m));
  }
  f.module = GModule(G, F, f.dim, std::move(acts));
  f.frattini = !cohom::complement_exists(QY.group, E).exists;
  return f;
}

}  // namespace

ChiefSeries chief_series(const GroupPtr& G, bool reverse_tiebreak) {
  std::vector<ElementSet> asc{ElementSet::of(G->order(), std::vector<Index>{0})};
  while (asc.back().size() < G->order()) {
    auto Q = groups::quotient(G, asc.back());
    auto mins = groups::minimal_normal_subgroups(*Q.group);
    std::vector<std::pair<std::vector<Index>, ElementSet>> cands;
    for (auto& m : mins) {
      if (m.size() != mins.front().size()) continue;
      ElementSet pre(G->order());
      for (Index g = 0; g < G->order(); ++g)
        if (m.contains(Q.coset_of[g])) pre.insert(g);
      cands.emplace_back(pre.sorted(), pre);
    }
    auto pick = std::min_element(cands.begin(), cands.end(), [&](auto& a, auto& b) {
      return reverse_tiebreak ? b.first < a.first : a.first < b.first;
    });
    asc.push_back(pick->second);
  }
  ChiefSeries cs;
  cs.chain.assign(asc.rbegin(), asc.rend());
  for (std::size_t i = 0; i + 1 < cs.chain.size(); ++i) cs.factors.push_back(analyse(G, cs.chain[i], cs.chain[i + 1]));
  return cs;
}

ImageModule faithful_image(const GModule& M) {
  auto K = gmod::kernel_of_action(M);
  auto Q = groups::quotient(M.group_ptr(), K);
  return {GModule(Q.group, M.field(), M.dim(), M.actions()), K};
}

DeltaR delta_and_r(const ChiefSeries& cs, const GModule& M) {
  DeltaR d;
  d.endo_degree = gmod::endo_degree(M);
  d.r = M.dim() / d.endo_degree;
  const GModule Mp = M.field().prime() ? M : gmod::restrict_scalars(M);
  for (const auto& f : cs.factors) {
    if (!f.abelian || f.frattini || f.p != Mp.field().p() || f.dim != Mp.dim()) continue;
    if (f.module->group_ptr() != M.group_ptr()) throw std::invalid_argument("chief series built for a different group");
    if (gmod::hom_dim(*f.module, Mp) > 0) ++d.delta;
  }
  const auto h = cohom::h1_dim(faithful_image(M).module);
  if (h % d.endo_degree) throw std::logic_error("H^1 dimension not divisible by the endomorphism degree");
  d.h_prime = h / d.endo_degree;
  return d;
}

DeltaR delta_and_r(const GroupPtr& G, const GModule& M) { return delta_and_r(chief_series(G), M); }

Fp1Result fp1_sup(const GroupPtr& G, std::uint64_t seed) {
  Fp1Result out;
  if (G->order() == 1) return out;
  auto cs = chief_series(G);
  for (unsigned p = 2; p <= G->order(); ++p) {
    if (G->order() % p || !fq::is_prime(p)) continue;
    gmod::ChopOptions opts;
    opts.seed = seed;
    auto series = gmod::chop(gmod::regular_module(G, fq::Field::make(p)), opts);
    for (auto& f : series.factors) {
      Fp1Term t{f.descriptor, delta_and_r(cs, f.module), 0};
      t.value = (t.data.delta + t.data.h_prime + t.data.r - 1) / t.data.r;
      if (!out.attained || t.value > out.value) {
        out.value = t.value;
        out.attained = t;
      }
      out.scanned.push_back(std::move(t));
    }
  }
  return out;
}

bool isomorphic(const GroupPtr& A, const GroupPtr& B) {
  if (A->order() != B->order()) return false;
  auto sizes = [](const groups::Group& G) {
    std::multiset<std::pair<std::size_t, std::size_t>> s;
    for (auto& c : G.classes()) s.insert({c.size, c.element_order});
    return s;
  };
  if (sizes(*A) != sizes(*B)) return false;
  return !groups::hom_search(A, B, true, 100000000ull, 1).empty();
}

std::size_t rk_T(const GroupPtr& G, const GroupPtr& T) {
  auto cs = chief_series(G);
  std::size_t count = 0;
  for (const auto& f : cs.factors) {
    if (f.abelian) continue;
    auto C = groups::centralizer_of_section(*G, f.upper, f.lower);
    if (isomorphic(groups::quotient(G, C).group, T)) ++count;
  }
  return count;
}

EpiCensus epi_census(const GroupPtr& G, const GroupPtr& T, const GModule* V) {
  auto epis = groups::hom_search(G, T, true);
  EpiCensus c;
  c.epis = epis.size();
  std::set<std::vector<Index>> seen;
  for (const auto& e : epis) {
    if (seen.count(e.gen_images())) continue;
    ++c.classes;
    std::vector<std::vector<Index>> queue{e.gen_images()};
    seen.insert(e.gen_images());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto t : T->generators()) {
        std::vector<Index> img;
        for (auto x : queue[i]) img.push_back(T->conj(x, t));
        if (seen.insert(img).second) queue.push_back(std::move(img));
      }
  }
  const std::uint64_t order = T->order();
  c.lower_holds = c.epis <= order * c.classes;
  if (V) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < V->dim(); ++i) size *= V->field().q();
    c.module_size = size;
    c.upper_holds = c.classes * order <= size * c.epis;
  }
  return c;
}

std::optional<std::size_t> d_bruteforce(const GroupPtr& G, std::size_t max_d, std::uint64_t budget) {
  const std::size_t n = G->order();
  if (n == 1) return 0;
  if (n <= 4096) G->build_table();
  const auto& classes = G->classes();
  // closure with reused buffers; a subgroup of more than half the elements is everything
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<Index> members;
  members.reserve(n);
  std::uint32_t round = 0;
  auto generates = [&](const std::vector<Index>& gens) {
    ++round;
    members.assign(1, 0);
    stamp[0] = round;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto g : gens) {
        const Index y = G->mul(members[i], g);
        if (stamp[y] == round) continue;
        stamp[y] = round;
        members.push_back(y);
        if (2 * members.size() > n) return true;
      }
    return members.size() == n;
  };
  // larger element orders first: generating tuples are found sooner
  std::vector<Index> reps, by_order;
  for (auto& c : classes)
    if (c.representative != 0) reps.push_back(c.representative);
  for (Index x = 1; x < n; ++x) by_order.push_back(x);
  auto larger = [&](Index a, Index b) { return G->element_order(a) > G->element_order(b); };
  std::stable_sort(reps.begin(), reps.end(), larger);
  std::stable_sort(by_order.begin(), by_order.end(), larger);
  for (std::size_t d = 1; d <= max_d; ++d) {
    std::uint64_t work = classes.size();
    for (std::size_t i = 1; i < d; ++i) {
      if (work > budget / n) throw groups::BudgetExceeded("generator search exceeds budget");
      work *= n;
    }
    std::vector<Index> tuple(d);
    std::function<bool(std::size_t)> rec = [&](std::size_t level) -> bool {
      if (level == d) return generates(tuple);
      if (level == 0) {
        for (auto c : reps) {
          tuple[0] = c;
          if (rec(1)) return true;
        }
        return false;
      }
      // elements of the subgroup generated so far add nothing
      const auto prefix = groups::subgroup_closure(*G, std::span<const Index>(tuple.data(), level));
      for (auto x : by_order) {
        if (prefix.contains(x)) continue;
        tuple[level] = x;
        if (rec(level + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return d;
  }
  return std::nullopt;
}

}  // namespace repgrowth::crowns
