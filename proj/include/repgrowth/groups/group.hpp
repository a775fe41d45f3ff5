#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace repgrowth::groups {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultEnumCap = 100000;

/// Thrown when a cap or search budget is exceeded.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Payload of a group element; its interpretation belongs to a Domain.
/// Comparison is lexicographic on the payload, which is the canonical
/// encoding order within one domain.
struct Element {
  std::vector<std::uint32_t> data;
  auto operator<=>(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

/// Multiplication rule shared by the elements of one group.
class Domain {
public:
  virtual ~Domain() = default;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  /// Short description, e.g. "perm(5)" or "mat(GF(5),2)".
  virtual std::string tag() const = 0;
  virtual std::string format(const Element& e) const;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct ConjugacyClass {
  Index representative;
  std::size_t size;
  std::size_t element_order;
  std::vector<Index> members;
};

/// A finite group given by generators, with every element enumerated in BFS
/// order from the identity (index 0). Immutable after construction.
class Group {
public:
  static GroupPtr enumerate(std::shared_ptr<const Domain> domain, std::vector<Element> generators,
                            std::size_t cap = kDefaultEnumCap, std::string label = {});

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  Index generator(std::size_t s) const { return gens_[s]; }
  const std::vector<Index>& generators() const noexcept { return gens_; }
  static constexpr Index identity() noexcept { return 0; }

  const Element& element(Index i) const { return elements_[i]; }
  std::optional<Index> find(const Element& e) const;
  const Domain& domain() const noexcept { return *domain_; }
  std::shared_ptr<const Domain> domain_ptr() const noexcept { return domain_; }
  const std::string& label() const noexcept { return label_; }

  Index mul_gen(Index x, std::size_t s) const { return rmul_[x * gens_.size() + s]; }
  /// gen_s^{-1} * x
  Index lmul_gen_inv(Index x, std::size_t s) const { return linv_[x * gens_.size() + s]; }
  Index conj_gen(Index x, std::size_t s) const { return mul_gen(lmul_gen_inv(x, s), s); }
  Index mul(Index a, Index b) const;
  Index inverse(Index a) const { return inv_[a]; }
  /// g^{-1} x g
  Index conj(Index x, Index g) const { return mul(mul(inv_[g], x), g); }
  Index commutator(Index a, Index b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  Index power(Index x, std::uint64_t e) const;

  Index parent(Index x) const { return parent_[x]; }
  std::size_t parent_generator(Index x) const { return pgen_[x]; }
  /// Generator indices spelling x from the identity.
  std::vector<std::size_t> word(Index x) const;

  std::size_t element_order(Index x) const;
  bool less(Index a, Index b) const { return elements_[a] < elements_[b]; }

  /// Classes sorted by representative encoding; representative is the
  /// least encoding in its class.
  const std::vector<ConjugacyClass>& classes() const;
  std::size_t class_of(Index x) const;

  /// Builds the dense multiplication table (only when order <= 4096).
  void build_table() const;

private:
  Group() = default;

  std::shared_ptr<const Domain> domain_;
  std::string label_;
  std::vector<Element> elements_;
  std::unordered_map<Element, Index, ElementHash> index_;
  std::vector<Index> gens_;
  std::vector<Index> rmul_, linv_, inv_, parent_;
  std::vector<std::uint32_t> pgen_;

  mutable std::once_flag orders_once_, classes_once_, table_once_;
  mutable std::vector<std::uint32_t> orders_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<std::uint32_t> class_of_;
  mutable std::vector<Index> table_;
  mutable std::atomic<bool> has_table_{false};
};

/// Set of element indices of a fixed group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_((universe + 63) / 64, 0), universe_(universe) {}
  static ElementSet all(std::size_t universe);
  static ElementSet of(std::size_t universe, std::span<const Index> members);

  bool contains(Index x) const { return (bits_[x / 64] >> (x % 64)) & 1u; }
  bool insert(Index x);
  std::size_t size() const noexcept { return items_.size(); }
  std::size_t universe() const noexcept { return universe_; }
  /// Members in insertion order.
  const std::vector<Index>& items() const noexcept { return items_; }
  std::vector<Index> sorted() const;
  bool subset_of(const ElementSet& o) const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

private:
  std::vector<std::uint64_t> bits_;
  std::vector<Index> items_;
  std::size_t universe_ = 0;
};

/// A homomorphism determined by generator images, verified on construction.
class Homomorphism {
public:
  /// Returns nullopt when the assignment does not extend to a homomorphism.
  static std::optional<Homomorphism> create(GroupPtr source, GroupPtr target, std::vector<Index> gen_images);

  const GroupPtr& source() const noexcept { return src_; }
  const GroupPtr& target() const noexcept { return tgt_; }
  const std::vector<Index>& gen_images() const noexcept { return gimg_; }
  Index operator()(Index x) const { return img_[x]; }
  const std::vector<Index>& images() const noexcept { return img_; }
  ElementSet kernel() const;
  ElementSet image() const;
  bool onto() const;

private:
  GroupPtr src_, tgt_;
  std::vector<Index> gimg_, img_;
};

}  // namespace repgrowth::groups
