#include "repgrowth/gmod/meataxe.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "repgrowth/fq/poly.hpp"

namespace repgrowth::gmod {

using fq::Elem;
using fq::Matrix;
using fq::Vec;

bool IrreducibleDescriptor::operator<(const IrreducibleDescriptor& o) const {
  if (dim != o.dim) return dim < o.dim;
  if (endo_degree != o.endo_degree) return endo_degree < o.endo_degree;
  return fingerprint < o.fingerprint;
}

bool IrreducibleDescriptor::same_key(const IrreducibleDescriptor& o) const {
  return dim == o.dim && endo_degree == o.endo_degree && fingerprint == o.fingerprint;
}

std::size_t CompositionSeries::total_dim() const {
  std::size_t d = 0;
  for (auto& f : factors) d += f.multiplicity * f.descriptor.dim;
  return d;
}

namespace {

constexpr int kRandomAttempts = 200;
constexpr std::size_t kMaxWordLength = 12;
constexpr std::size_t kExhaustiveVectors = 65536;

Vec random_vector(const fq::Field& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, F.q() - 1);
  Vec v(n);
  for (auto& x : v) x = static_cast<Elem>(d(rng));
  return v;
}

// Nonzero random combination of the rows of a nonempty basis.
Vec random_combination(const Matrix& basis, std::mt19937_64& rng) {
  const auto& F = basis.field();
  for (;;) {
    auto c = random_vector(F, basis.rows(), rng);
    Vec v(basis.cols(), 0);
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (c[i]) fq::axpy(F, v, c[i], basis.row(i));
    if (std::any_of(v.begin(), v.end(), [](Elem x) { return x != 0; })) return v;
  }
}

class Splitter {
public:
  Splitter(const GModule& M, std::mt19937_64& rng) : M_(M), F_(M.field()), n_(M.dim()), rng_(rng) {}

  std::optional<Matrix> run() {
    if (n_ <= 1) return std::nullopt;
    for (std::size_t s = 0; s < M_.actions().size(); ++s) {
      pool_.push_back(M_.action(s));
      len_.push_back(1);
    }
    if (pool_.empty()) return spin_vec(unit(0));  // no generators: every line is invariant
    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
      Matrix theta = random_element();
      if (n_ > 64) {
        Matrix N = fq::left_nullspace(theta);
        if (N.rows() > 0)
          if (auto r = spin_vec(random_combination(N, rng_))) return r;
        if (attempt < 10) continue;
      }
      std::optional<Matrix> found;
      if (norton(theta, found)) return found;
    }
    return fallback();
  }

private:
  Vec unit(std::size_t i) const {
    Vec v(n_, 0);
    v[i] = 1;
    return v;
  }

  Matrix random_element() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    const std::size_t i = pick(rng_), j = pick(rng_);
    Matrix P = pool_[i] * pool_[j];
    if (len_[i] + len_[j] <= kMaxWordLength) {
      if (pool_.size() < 16) {
        pool_.push_back(P);
        len_.push_back(len_[i] + len_[j]);
      } else {
        const std::size_t k = M_.actions().size() + pick(rng_) % (pool_.size() - M_.actions().size());
        pool_[k] = P;
        len_[k] = len_[i] + len_[j];
      }
    }
    std::uniform_int_distribution<unsigned> coef(0, F_.q() - 1);
    for (int t = 0; t < 2; ++t) {
      const Elem c = static_cast<Elem>(coef(rng_));
      if (c) P = P + pool_[pick(rng_)].scaled(c);
    }
    return P;
  }

  std::optional<Matrix> spin_vec(const Vec& v) const {
    Matrix S = fq::spin(Matrix::from_rows(F_, {v}), M_.actions());
    if (S.rows() < n_) return S;
    return std::nullopt;
  }

  std::optional<Matrix> spin_dual(const Vec& w) {
    if (transposed_.empty())
      for (auto& a : M_.actions()) transposed_.push_back(a.transpose());
    Matrix S = fq::spin(Matrix::from_rows(F_, {w}), transposed_);
    if (S.rows() < n_) return fq::rref(fq::left_nullspace(S.transpose())).reduced;
    return std::nullopt;
  }

  // Returns true when the test is conclusive: `found` holds a submodule or
  // stays empty for a proof of irreducibility.
  bool norton(const Matrix& theta, std::optional<Matrix>& found) {
    auto facs = fq::poly::factor(F_, fq::poly::charpoly(theta), rng_);
    std::stable_sort(facs.begin(), facs.end(),
                     [](auto& a, auto& b) { return a.first.size() < b.first.size(); });
    for (auto& [f, mult] : facs) {
      const std::size_t deg = f.size() - 1;
      if (deg > 12 && deg < n_) break;
      Matrix ft = fq::poly::eval(f, theta);
      Matrix N = fq::left_nullspace(ft);
      if (N.rows() == 0) continue;
      if ((found = spin_vec(Vec(N.row(0).begin(), N.row(0).end())))) return true;
      if (N.rows() == deg) {
        Matrix Nt = fq::nullspace(ft);
        found = spin_dual(Vec(Nt.row(0).begin(), Nt.row(0).end()));
        return true;
      }
      for (int t = 0; t < 2; ++t)
        if ((found = spin_vec(random_combination(N, rng_)))) return true;
    }
    return false;
  }

  std::optional<Matrix> fallback() {
    // Exhaustive: every proper submodule contains a line whose spin is proper.
    std::size_t lines = 1;
    bool small = true;
    for (std::size_t i = 1; i < n_ && small; ++i) {
      lines = lines * F_.q() + 1;
      small = lines <= kExhaustiveVectors;
    }
    if (small) {
      for (std::size_t lead = 0; lead < n_; ++lead) {
        const std::size_t tail = n_ - lead - 1;
        std::size_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= F_.q();
        for (std::size_t code = 0; code < count; ++code) {
          Vec v(n_, 0);
          v[lead] = 1;
          std::size_t c = code;
          for (std::size_t i = 0; i < tail; ++i, c /= F_.q()) v[lead + 1 + i] = static_cast<Elem>(c % F_.q());
          if (auto r = spin_vec(v)) return r;
        }
      }
      return std::nullopt;
    }
    // Deterministic sweep over two-term algebra elements.
    const auto& G = M_.group();
    std::vector<Matrix> mats;
    const std::size_t limit = std::min<std::size_t>(G.order(), 64);
    for (Index g = 0; g < limit; ++g) mats.push_back(M_.matrix_of(g));
    for (std::size_t a = 1; a < mats.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        for (unsigned c = 1; c < F_.q(); ++c) {
          std::optional<Matrix> found;
          if (norton(mats[a] + mats[b].scaled(static_cast<Elem>(c)), found)) return found;
        }
    throw std::runtime_error("irreducibility test inconclusive for a module of dimension " + std::to_string(n_));
  }

  const GModule& M_;
  fq::Field F_;
  std::size_t n_;
  std::mt19937_64& rng_;
  std::vector<Matrix> pool_;
  std::vector<std::size_t> len_;
  std::vector<Matrix> transposed_;
};

// Basis v A_{s1} A_{s2} ... obtained by spinning v, with the tree of
// (parent, generator) steps.
struct StandardBasis {
  Matrix basis;
  std::vector<std::pair<std::size_t, std::size_t>> tree;
};

std::optional<StandardBasis> standard_basis(const GModule& V, const Vec& v) {
  const std::size_t n = V.dim();
  fq::EchelonForm ech(V.field(), n);
  StandardBasis sb{Matrix(V.field(), 0, n), {}};
  if (!ech.add(v)) return std::nullopt;
  sb.basis.append_row(v);
  sb.tree.emplace_back(0, 0);
  for (std::size_t i = 0; i < sb.basis.rows() && sb.basis.rows() < n; ++i)
    for (std::size_t s = 0; s < V.actions().size() && sb.basis.rows() < n; ++s) {
      Vec y = fq::vec_mul(sb.basis.row(i), V.action(s));
      if (ech.add(y)) {
        sb.basis.append_row(y);
        sb.tree.emplace_back(i, s);
      }
    }
  if (sb.basis.rows() < n) return std::nullopt;
  return sb;
}

std::vector<Matrix> hom_direct(const GModule& V, const GModule& W) {
  const std::size_t n = V.dim(), m = W.dim(), vars = n * m;
  if (vars > 4096) throw groups::BudgetExceeded("intertwiner system too large");
  const auto& F = V.field();
  Matrix E(F, 0, vars);
  for (std::size_t s = 0; s < V.actions().size(); ++s) {
    const Matrix& A = V.action(s);
    const Matrix& B = W.action(s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec row(vars, 0);
        for (std::size_t k = 0; k < n; ++k) row[k * m + j] = F.add(row[k * m + j], A(i, k));
        for (std::size_t k = 0; k < m; ++k) row[i * m + k] = F.sub(row[i * m + k], B(k, j));
        E.append_row(row);
      }
  }
  Matrix N = fq::nullspace(E);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < N.rows(); ++r) {
    Matrix X(F, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) X(i, j) = N(r, i * m + j);
    out.push_back(std::move(X));
  }
  return out;
}

std::vector<Matrix> hom_cyclic(const GModule& V, const GModule& W, const StandardBasis& sb) {
  const auto& F = V.field();
  const std::size_t n = V.dim(), m = W.dim(), S = V.actions().size();
  auto sb_inv = fq::inverse(sb.basis);
  if (!sb_inv) throw std::logic_error("standard basis is singular");
  std::vector<Matrix> U(n);
  U[0] = Matrix::identity(F, m);
  for (std::size_t i = 1; i < n; ++i) U[i] = U[sb.tree[i].first] * W.action(sb.tree[i].second);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.insert(sb.tree[i]);
  Matrix big(F, m, 0);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < S; ++s) {
      if (edges.count({i, s})) continue;
      Vec c = fq::vec_mul(fq::vec_mul(sb.basis.row(i), V.action(s)), *sb_inv);
      Matrix E = U[i] * W.action(s);
      for (std::size_t j = 0; j < n; ++j)
        if (c[j]) E = E - U[j].scaled(c[j]);
      blocks.push_back(std::move(E));
    }
  Matrix stacked(F, m, m * blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) stacked(i, b * m + j) = blocks[b](i, j);
  Matrix sols = blocks.empty() ? Matrix::identity(F, m) : fq::left_nullspace(stacked);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < sols.rows(); ++r) {
    Matrix Y(F, n, m);
    for (std::size_t i = 0; i < n; ++i) {
      auto y = fq::vec_mul(sols.row(r), U[i]);
      std::copy(y.begin(), y.end(), Y.row(i).begin());
    }
    out.push_back(*sb_inv * Y);
  }
  return out;
}

}  // namespace

std::optional<Matrix> find_submodule(const GModule& M, std::mt19937_64& rng) { return Splitter(M, rng).run(); }

bool is_irreducible(const GModule& M, std::uint64_t seed) {
  if (M.dim() == 0) return false;
  std::mt19937_64 rng(seed);
  return !find_submodule(M, rng).has_value();
}

std::vector<Matrix> hom_space(const GModule& V, const GModule& W) {
  if (V.group_ptr() != W.group_ptr() || !(V.field() == W.field()))
    throw std::invalid_argument("hom space of unrelated modules");
  if (V.dim() == 0 || W.dim() == 0) return {};
  std::mt19937_64 rng(V.dim() * 7919 + W.dim());
  for (int t = 0; t < 6; ++t) {
    Vec v = t == 0 ? Vec(V.dim(), 0) : random_vector(V.field(), V.dim(), rng);
    if (t == 0) v[0] = 1;
    if (auto sb = standard_basis(V, v)) return hom_cyclic(V, W, *sb);
  }
  return hom_direct(V, W);
}

std::size_t hom_dim(const GModule& V, const GModule& W) { return hom_space(V, W).size(); }

unsigned endo_degree(const GModule& V) { return static_cast<unsigned>(hom_dim(V, V)); }

bool iso_test(const GModule& V, const GModule& W, std::uint64_t seed) {
  if (!is_irreducible(V, seed) || !is_irreducible(W, seed)) throw std::invalid_argument("iso_test needs irreducible modules");
  if (V.dim() != W.dim()) return false;
  return hom_dim(V, W) > 0;
}

namespace {

std::vector<Elem> class_fingerprint(const GModule& V, bool& faithful) {
  const auto& G = V.group();
  std::vector<Elem> fp;
  faithful = true;
  for (const auto& c : G.classes()) {
    Matrix g = V.matrix_of(c.representative);
    fp.push_back(g.trace());
    if (c.representative != G.identity() && g.is_identity()) faithful = false;
  }
  return fp;
}

std::optional<std::vector<Elem>> central_character(const GModule& V, std::optional<Index> z) {
  if (!z) return std::nullopt;
  auto s = V.matrix_of(*z).scalar_value();
  if (!s) return std::nullopt;
  const auto ord = V.group().element_order(*z);
  std::vector<Elem> ch;
  for (std::size_t i = 0; i < ord; ++i) ch.push_back(V.field().pow(*s, i));
  return ch;
}

}  // namespace

IrreducibleDescriptor describe(const GModule& V, std::optional<Index> central_element) {
  IrreducibleDescriptor d;
  d.dim = V.dim();
  d.field = V.field();
  d.endo_degree = endo_degree(V);
  d.abs_irr = d.endo_degree == 1;
  d.fingerprint = class_fingerprint(V, d.faithful);
  d.central_character = central_character(V, central_element);
  return d;
}

CompositionSeries chop(const GModule& M, const ChopOptions& opts) {
  if (M.dim() > opts.cap)
    throw groups::BudgetExceeded("module dimension " + std::to_string(M.dim()) + " exceeds chop cap " +
                                 std::to_string(opts.cap));
  std::mt19937_64 rng(opts.seed);
  std::vector<GModule> stack{M}, irr;
  while (!stack.empty()) {
    GModule X = std::move(stack.back());
    stack.pop_back();
    if (X.dim() == 0) continue;
    auto sub = find_submodule(X, rng);
    if (!sub) {
      irr.push_back(std::move(X));
      continue;
    }
    stack.push_back(quotient_module(X, *sub));
    stack.push_back(submodule(X, *sub));
  }
  CompositionSeries out;
  for (auto& X : irr) {
    bool faithful = false;
    auto fp = class_fingerprint(X, faithful);
    bool merged = false;
    for (auto& f : out.factors)
      if (f.descriptor.dim == X.dim() && f.descriptor.fingerprint == fp && hom_dim(f.module, X) > 0) {
        ++f.multiplicity;
        merged = true;
        break;
      }
    if (merged) continue;
    IrreducibleDescriptor d;
    d.dim = X.dim();
    d.field = X.field();
    d.endo_degree = endo_degree(X);
    d.abs_irr = d.endo_degree == 1;
    d.fingerprint = std::move(fp);
    d.faithful = faithful;
    d.central_character = central_character(X, opts.central_element);
    out.factors.push_back({std::move(d), 1, std::move(X)});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const CompositionFactor& a, const CompositionFactor& b) { return a.descriptor < b.descriptor; });
  return out;
}

CliffordData clifford_restriction(const GModule& W, const groups::SubgroupGroup& K, std::uint64_t seed) {
  if (!is_irreducible(W, seed)) throw std::invalid_argument("clifford_restriction needs an irreducible module");
  const auto& G = W.group();
  ElementSet Kset = ElementSet::of(G.order(), K.embedding);
  if (!groups::is_normal(G, Kset)) throw std::invalid_argument("clifford_restriction needs a normal subgroup");
  ChopOptions opts;
  opts.seed = seed;
  auto series = chop(restrict(W, K), opts);
  const auto& first = series.factors.front();
  CliffordData out{first.descriptor, first.multiplicity, series.factors.size()};
  for (auto& f : series.factors)
    if (f.multiplicity != out.multiplicity || f.descriptor.dim != out.constituent.dim)
      throw std::logic_error("restriction to a normal subgroup is not homogeneous across components");
  if (W.dim() != out.components * out.multiplicity * out.constituent.dim)
    throw std::logic_error("Clifford dimension count failed");

  // class permutations of K induced by conjugation with the generators of G
  const auto& Kg = *K.group;
  const auto& kcl = Kg.classes();
  std::vector<std::vector<std::size_t>> perms;
  for (auto g : G.generators()) {
    std::vector<std::size_t> p(kcl.size());
    for (std::size_t c = 0; c < kcl.size(); ++c) {
      const auto back = K.back[G.conj(K.embedding[kcl[c].representative], g)];
      p[c] = Kg.class_of(static_cast<Index>(back));
    }
    perms.push_back(std::move(p));
  }
  std::set<std::vector<Elem>> orbit{out.constituent.fingerprint};
  std::vector<std::vector<Elem>> queue{out.constituent.fingerprint};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto& p : perms) {
      std::vector<Elem> y(p.size());
      for (std::size_t c = 0; c < p.size(); ++c) y[c] = queue[i][p[c]];
      if (orbit.insert(y).second) queue.push_back(std::move(y));
    }
  for (auto& f : series.factors)
    if (!orbit.count(f.descriptor.fingerprint)) throw std::logic_error("constituents are not conjugate");
  return out;
}

}  // namespace repgrowth::gmod
