#include "repgrowth/groups/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "repgrowth/groups/domains.hpp"

namespace repgrowth::groups {

std::vector<ClassSummary> conjugacy_classes(const Group& G, std::optional<unsigned> p_regular) {
  std::vector<ClassSummary> out;
  for (const auto& c : G.classes()) {
    if (p_regular && c.element_order % *p_regular == 0) continue;
    out.push_back({c.representative, c.size});
  }
  return out;
}

ElementSet subgroup_closure(const Group& G, std::span<const Index> gens) {
  std::vector<Index> g;
  for (auto x : gens)
    if (x != 0 && std::find(g.begin(), g.end(), x) == g.end()) g.push_back(x);
  ElementSet H(G.order());
  H.insert(0);
  for (std::size_t i = 0; i < H.items().size(); ++i) {
    const Index x = H.items()[i];
    for (auto s : g) H.insert(G.mul(x, s));
  }
  return H;
}

ElementSet normal_closure(const Group& G, std::span<const Index> S) {
  std::vector<Index> gens;
  ElementSet H(G.order());
  H.insert(0);
  for (auto x : S) {
    if (H.contains(x)) continue;
    for (auto y : G.classes()[G.class_of(x)].members) {
      if (H.contains(y)) continue;
      gens.push_back(y);
      H = subgroup_closure(G, gens);
    }
  }
  return H;
}

std::vector<Index> generators_of(const Group& G, const ElementSet& H) {
  std::vector<Index> gens;
  ElementSet cur(G.order());
  cur.insert(0);
  for (auto x : H.sorted()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_closure(G, gens);
    if (cur.size() == H.size()) break;
  }
  return gens;
}

bool is_subgroup(const Group& G, const ElementSet& H) {
  if (!H.contains(0)) return false;
  for (auto x : H.items())
    for (auto y : H.items())
      if (!H.contains(G.mul(x, y))) return false;
  return true;
}

bool is_normal(const Group& G, const ElementSet& N) {
  for (auto x : generators_of(G, N))
    for (std::size_t s = 0; s < G.num_generators(); ++s)
      if (!N.contains(G.conj_gen(x, s))) return false;
  return true;
}

std::vector<ElementSet> minimal_normal_subgroups(const Group& G) {
  std::vector<ElementSet> cands;
  for (const auto& c : G.classes()) {
    if (c.representative == 0) continue;
    Index r = c.representative;
    auto N = normal_closure(G, std::span<const Index>(&r, 1));
    if (std::find(cands.begin(), cands.end(), N) == cands.end()) cands.push_back(std::move(N));
  }
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size() && minimal; ++j)
      if (j != i && cands[j].size() < cands[i].size() && cands[j].subset_of(cands[i])) minimal = false;
    if (minimal) out.push_back(cands[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

ElementSet center(const Group& G) {
  ElementSet Z(G.order());
  for (Index x = 0; x < G.order(); ++x) {
    bool central = true;
    for (std::size_t s = 0; s < G.num_generators() && central; ++s) central = G.conj_gen(x, s) == x;
    if (central) Z.insert(x);
  }
  return Z;
}

ElementSet derived_subgroup(const Group& G) {
  std::vector<Index> comms;
  const auto& g = G.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) comms.push_back(G.commutator(g[i], g[j]));
  return normal_closure(G, comms);
}

ElementSet centralizer_of_section(const Group& G, const ElementSet& X, const ElementSet& Y) {
  auto gx = generators_of(G, X);
  ElementSet C(G.order());
  for (Index g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto x : gx)
      if (!Y.contains(G.commutator(x, g))) {
        ok = false;
        break;
      }
    if (ok) C.insert(g);
  }
  return C;
}

Quotient quotient(const GroupPtr& G, const ElementSet& N) {
  if (!is_normal(*G, N)) throw std::invalid_argument("subgroup is not normal");
  const std::size_t n = G->order();
  constexpr Index none = ~Index{0};
  std::vector<Index> coset(n, none), reps;
  for (Index x = 0; x < n; ++x) {
    if (coset[x] != none) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto m : N.items()) coset[G->mul(x, m)] = c;
  }
  auto dom = std::make_shared<QuotientDomain>(G, coset, reps);
  std::vector<Element> gens;
  for (auto s : G->generators()) gens.push_back(Element{{coset[s]}});
  auto Q = Group::enumerate(dom, gens, kDefaultEnumCap * 10, G->label().empty() ? "" : G->label() + "/N");
  std::vector<Index> cmap(n);
  std::vector<Index> c2q(reps.size());
  for (Index c = 0; c < reps.size(); ++c) c2q[c] = *Q->find(Element{{c}});
  for (Index x = 0; x < n; ++x) cmap[x] = c2q[coset[x]];
  std::vector<Index> gimg;
  for (std::size_t s = 0; s < G->num_generators(); ++s) gimg.push_back(Q->generator(s));
  auto proj = Homomorphism::create(G, Q, gimg);
  if (!proj) throw std::logic_error("quotient projection failed verification");
  return Quotient{Q, *proj, std::move(cmap)};
}

SubgroupGroup as_group(const GroupPtr& G, const ElementSet& H, std::vector<Index> gens) {
  if (gens.empty()) gens = generators_of(*G, H);
  auto dom = std::make_shared<SubgroupDomain>(G);
  std::vector<Element> els;
  for (auto g : gens) els.push_back(Element{{g}});
  auto S = Group::enumerate(dom, els, kDefaultEnumCap * 10);
  SubgroupGroup out{S, {}, std::vector<std::int64_t>(G->order(), -1)};
  out.embedding.resize(S->order());
  for (Index h = 0; h < S->order(); ++h) {
    out.embedding[h] = S->element(h).data[0];
    out.back[out.embedding[h]] = h;
  }
  return out;
}

std::vector<std::size_t> reduced_generators(const Group& G) {
  std::vector<std::size_t> keep;
  std::vector<Index> gens;
  ElementSet cur(G.order());
  cur.insert(0);
  for (std::size_t s = 0; s < G.num_generators() && cur.size() < G.order(); ++s) {
    if (cur.contains(G.generator(s))) continue;
    keep.push_back(s);
    gens.push_back(G.generator(s));
    cur = subgroup_closure(G, gens);
  }
  return keep;
}

namespace {

struct HomSearch {
  const GroupPtr& G;
  const GroupPtr& T;
  bool onto;
  std::size_t limit;
  std::size_t S;
  std::vector<std::vector<Index>> cands;
  std::vector<Index> assign;
  std::vector<std::vector<std::int64_t>> level_img;
  std::vector<Homomorphism> out;

  // Propagates images over <s_0..s_j>; false on inconsistency.
  bool propagate(std::size_t j) {
    auto& img = level_img[j];
    std::fill(img.begin(), img.end(), -1);
    img[0] = 0;
    std::vector<Index> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Index x = queue[qi];
      for (std::size_t i = 0; i <= j; ++i) {
        const Index y = G->mul_gen(x, i);
        const auto v = static_cast<std::int64_t>(T->mul(static_cast<Index>(img[x]), assign[i]));
        if (img[y] < 0) {
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool run(std::size_t j) {
    if (j == S) {
      auto h = Homomorphism::create(G, T, assign);
      if (h && (!onto || h->onto())) {
        out.push_back(std::move(*h));
        if (limit && out.size() >= limit) return true;
      }
      return false;
    }
    // a generator already inside <s_0..s_{j-1}> has a forced image
    if (j > 0 && level_img[j - 1][G->generator(j)] >= 0) {
      assign[j] = static_cast<Index>(level_img[j - 1][G->generator(j)]);
      std::copy(level_img[j - 1].begin(), level_img[j - 1].end(), level_img[j].begin());
      return run(j + 1);
    }
    for (auto t : cands[j]) {
      assign[j] = t;
      if (propagate(j) && run(j + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Homomorphism> hom_search(const GroupPtr& G, const GroupPtr& T, bool onto, std::uint64_t budget,
                                     std::size_t limit) {
  const std::size_t S = G->num_generators();
  long double work = 1;
  for (std::size_t s = 0; s < S; ++s) work *= static_cast<long double>(T->order());
  if (work > static_cast<long double>(budget))
    throw BudgetExceeded("hom_search budget exceeded: |T|^gens = " + std::to_string(static_cast<double>(work)));
  T->build_table();
  HomSearch hs{G, T, onto, limit, S, {}, std::vector<Index>(S, 0), {}, {}};
  for (std::size_t s = 0; s < S; ++s) {
    const std::size_t o = G->element_order(G->generator(s));
    std::vector<Index> c;
    for (Index t = 0; t < T->order(); ++t)
      if (o % T->element_order(t) == 0) c.push_back(t);
    hs.cands.push_back(std::move(c));
  }
  hs.level_img.assign(S, std::vector<std::int64_t>(G->order(), -1));
  if (S == 0) {
    auto h = Homomorphism::create(G, T, {});
    if (h && (!onto || h->onto())) hs.out.push_back(std::move(*h));
    return hs.out;
  }
  hs.run(0);
  return hs.out;
}

}  // namespace repgrowth::groups
