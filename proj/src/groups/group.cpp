#include "repgrowth/groups/group.hpp"

#include <algorithm>
#include <bit>

namespace repgrowth::groups {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : e.data) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Domain::format(const Element& e) const {
  std::string s = "[";
  for (std::size_t i = 0; i < e.data.size(); ++i) s += (i ? "," : "") + std::to_string(e.data[i]);
  return s + "]";
}

GroupPtr Group::enumerate(std::shared_ptr<const Domain> domain, std::vector<Element> generators,
                          std::size_t cap, std::string label) {
  std::shared_ptr<Group> g(new Group());
  g->domain_ = std::move(domain);
  g->label_ = std::move(label);
  const std::size_t S = generators.size();
  g->elements_.push_back(g->domain_->identity());
  g->index_.emplace(g->elements_[0], 0);
  g->parent_.push_back(0);
  g->pgen_.push_back(0);
  for (std::size_t x = 0; x < g->elements_.size(); ++x) {
    for (std::size_t s = 0; s < S; ++s) {
      Element y = g->domain_->multiply(g->elements_[x], generators[s]);
      auto it = g->index_.find(y);
      Index yi;
      if (it == g->index_.end()) {
        if (g->elements_.size() >= cap)
          throw BudgetExceeded("enumeration cap " + std::to_string(cap) + " exceeded (" +
                               std::to_string(g->elements_.size()) + " elements found)");
        yi = static_cast<Index>(g->elements_.size());
        g->index_.emplace(y, yi);
        g->elements_.push_back(std::move(y));
        g->parent_.push_back(static_cast<Index>(x));
        g->pgen_.push_back(static_cast<std::uint32_t>(s));
      } else {
        yi = it->second;
      }
      g->rmul_.push_back(yi);
    }
  }
  const std::size_t n = g->elements_.size();
  for (auto& e : generators) g->gens_.push_back(g->index_.at(e));

  g->linv_.assign(n * S, 0);
  for (std::size_t s = 0; s < S; ++s) {
    Index y = 0, prev = 0;
    do {
      prev = y;
      y = g->rmul_[y * S + s];
    } while (y != 0);
    g->linv_[s] = prev;  // sinv * identity
    for (Index x = 1; x < n; ++x)
      g->linv_[x * S + s] = g->rmul_[g->linv_[g->parent_[x] * S + s] * S + g->pgen_[x]];
  }
  g->inv_.assign(n, 0);
  for (Index x = 1; x < n; ++x) g->inv_[x] = g->linv_[g->inv_[g->parent_[x]] * S + g->pgen_[x]];
  return g;
}

std::optional<Index> Group::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Group::mul(Index a, Index b) const {
  if (has_table_.load(std::memory_order_acquire)) return table_[static_cast<std::size_t>(a) * order() + b];
  std::uint32_t buf[256];
  std::vector<std::uint32_t> big;
  std::size_t len = 0;
  const std::size_t S = gens_.size();
  for (Index y = b; y != 0; y = parent_[y]) {
    if (len < 256) {
      buf[len++] = pgen_[y];
    } else {
      if (big.empty()) big.assign(buf, buf + 256);
      big.push_back(pgen_[y]);
      ++len;
    }
  }
  const std::uint32_t* path = big.empty() ? buf : big.data();
  Index x = a;
  for (std::size_t i = len; i-- > 0;) x = rmul_[x * S + path[i]];
  return x;
}

Index Group::power(Index x, std::uint64_t e) const {
  Index r = 0, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::vector<std::size_t> Group::word(Index x) const {
  std::vector<std::size_t> w;
  for (Index y = x; y != 0; y = parent_[y]) w.push_back(pgen_[y]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::size_t Group::element_order(Index x) const {
  std::call_once(orders_once_, [&] { orders_.assign(order(), 0); });
  if (orders_[x]) return orders_[x];
  std::size_t k = 1;
  for (Index y = x; y != 0; y = mul(y, x)) ++k;
  orders_[x] = static_cast<std::uint32_t>(k);
  return orders_[x];
}

const std::vector<ConjugacyClass>& Group::classes() const {
  std::call_once(classes_once_, [&] {
    const std::size_t n = order(), S = gens_.size();
    constexpr std::uint32_t none = ~0u;
    std::vector<std::uint32_t> cls(n, none);
    std::vector<ConjugacyClass> out;
    for (Index x = 0; x < n; ++x) {
      if (cls[x] != none) continue;
      ConjugacyClass c{x, 0, 0, {x}};
      const auto id = static_cast<std::uint32_t>(out.size());
      cls[x] = id;
      for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t s = 0; s < S; ++s) {
          Index y = conj_gen(c.members[i], s);
          if (cls[y] == none) {
            cls[y] = id;
            c.members.push_back(y);
          }
        }
      c.size = c.members.size();
      c.representative = *std::min_element(c.members.begin(), c.members.end(),
                                           [&](Index a, Index b) { return less(a, b); });
      std::sort(c.members.begin(), c.members.end());
      out.push_back(std::move(c));
    }
    std::vector<std::size_t> perm(out.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return less(out[a].representative, out[b].representative); });
    std::vector<std::uint32_t> rank(out.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      classes_.push_back(std::move(out[perm[i]]));
      rank[perm[i]] = static_cast<std::uint32_t>(i);
    }
    class_of_.resize(n);
    for (Index x = 0; x < n; ++x) class_of_[x] = rank[cls[x]];
    for (auto& c : classes_) c.element_order = element_order(c.representative);
  });
  return classes_;
}

std::size_t Group::class_of(Index x) const {
  classes();
  return class_of_[x];
}

void Group::build_table() const {
  if (order() > 4096) return;
  std::call_once(table_once_, [&] {
    const std::size_t n = order(), S = gens_.size();
    std::vector<Index> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      Index* row = t.data() + a * n;
      row[0] = static_cast<Index>(a);
      for (Index x = 1; x < n; ++x) row[x] = rmul_[row[parent_[x]] * S + pgen_[x]];
    }
    table_ = std::move(t);
    has_table_.store(true, std::memory_order_release);
  });
}

ElementSet ElementSet::all(std::size_t universe) {
  ElementSet s(universe);
  for (Index i = 0; i < universe; ++i) s.insert(i);
  return s;
}

ElementSet ElementSet::of(std::size_t universe, std::span<const Index> members) {
  ElementSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

bool ElementSet::insert(Index x) {
  auto& w = bits_[x / 64];
  const auto bit = std::uint64_t{1} << (x % 64);
  if (w & bit) return false;
  w |= bit;
  items_.push_back(x);
  return true;
}

std::vector<Index> ElementSet::sorted() const {
  auto v = items_;
  std::sort(v.begin(), v.end());
  return v;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : bits_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::optional<Homomorphism> Homomorphism::create(GroupPtr source, GroupPtr target, std::vector<Index> gen_images) {
  if (gen_images.size() != source->num_generators())
    throw std::invalid_argument("generator image count mismatch");
  const std::size_t n = source->order(), S = source->num_generators();
  std::vector<Index> img(n, 0);
  for (Index x = 1; x < n; ++x)
    img[x] = target->mul(img[source->parent(x)], gen_images[source->parent_generator(x)]);
  for (Index x = 0; x < n; ++x)
    for (std::size_t s = 0; s < S; ++s)
      if (img[source->mul_gen(x, s)] != target->mul(img[x], gen_images[s])) return std::nullopt;
  Homomorphism h;
  h.src_ = std::move(source);
  h.tgt_ = std::move(target);
  h.gimg_ = std::move(gen_images);
  h.img_ = std::move(img);
  return h;
}

ElementSet Homomorphism::kernel() const {
  ElementSet k(src_->order());
  for (Index x = 0; x < img_.size(); ++x)
    if (img_[x] == 0) k.insert(x);
  return k;
}

ElementSet Homomorphism::image() const {
  ElementSet s(tgt_->order());
  for (auto y : img_) s.insert(y);
  return s;
}

bool Homomorphism::onto() const { return image().size() == tgt_->order(); }

}  // namespace repgrowth::groups
