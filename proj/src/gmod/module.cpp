#include "repgrowth/gmod/module.hpp"

#include <stdexcept>

#include "repgrowth/groups/construct.hpp"
#include "repgrowth/groups/domains.hpp"

namespace repgrowth::gmod {

using fq::Matrix;

GModule::GModule(GroupPtr group, fq::Field field, std::size_t dim, std::vector<Matrix> actions)
    : group_(std::move(group)), field_(field), dim_(dim), actions_(std::move(actions)) {
  if (actions_.size() != group_->num_generators()) throw std::invalid_argument("one action per generator required");
  for (auto& a : actions_)
    if (a.rows() != dim_ || a.cols() != dim_ || !(a.field() == field_))
      throw std::invalid_argument("action matrix shape or field mismatch");
}

Matrix GModule::matrix_of(Index g) const {
  Matrix m = Matrix::identity(field_, dim_);
  for (auto s : group_->word(g)) m = m * actions_[s];
  return m;
}

std::vector<Matrix> GModule::all_matrices() const {
  std::vector<Matrix> ms(group_->order());
  ms[0] = Matrix::identity(field_, dim_);
  for (Index x = 1; x < group_->order(); ++x) ms[x] = ms[group_->parent(x)] * actions_[group_->parent_generator(x)];
  return ms;
}

bool GModule::verify() const {
  auto ms = all_matrices();
  for (Index x = 0; x < group_->order(); ++x)
    for (std::size_t s = 0; s < actions_.size(); ++s)
      if (!(ms[x] * actions_[s] == ms[group_->mul_gen(x, s)])) return false;
  return true;
}

GModule trivial_module(const GroupPtr& G, const fq::Field& F, std::size_t dim) {
  return GModule(G, F, dim, std::vector<Matrix>(G->num_generators(), Matrix::identity(F, dim)));
}

GModule permutation_module(const GroupPtr& G, const fq::Field& F,
                           const std::vector<std::vector<std::uint32_t>>& gen_images) {
  if (gen_images.size() != G->num_generators()) throw std::invalid_argument("one permutation per generator required");
  const std::size_t d = gen_images.empty() ? 1 : gen_images[0].size();
  std::vector<Matrix> acts;
  for (auto& img : gen_images) {
    Matrix m(F, d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, img[i]) = 1;
    acts.push_back(std::move(m));
  }
  return GModule(G, F, d, std::move(acts));
}

GModule regular_module(const GroupPtr& G, const fq::Field& F, std::size_t cap) {
  if (G->order() > cap)
    throw groups::BudgetExceeded("regular module of order " + std::to_string(G->order()) + " exceeds chop cap");
  std::vector<std::vector<std::uint32_t>> imgs(G->num_generators(), std::vector<std::uint32_t>(G->order()));
  for (Index x = 0; x < G->order(); ++x)
    for (std::size_t s = 0; s < G->num_generators(); ++s) imgs[s][x] = G->lmul_gen_inv(x, s);
  if (G->num_generators() == 0) return trivial_module(G, F, 1);
  return permutation_module(G, F, imgs);
}

GModule natural_module(const GroupPtr& G) {
  if (auto* pd = dynamic_cast<const groups::PermDomain*>(&G->domain())) {
    std::vector<std::vector<std::uint32_t>> imgs;
    for (auto g : G->generators()) imgs.push_back(G->element(g).data);
    if (imgs.empty()) return trivial_module(G, fq::Field::make(2), pd->degree());
    return permutation_module(G, fq::Field::make(2), imgs);
  }
  if (auto* md = dynamic_cast<const groups::MatrixDomain*>(&G->domain())) {
    std::vector<Matrix> acts;
    for (auto g : G->generators()) acts.push_back(md->to_matrix(G->element(g)));
    return GModule(G, md->field(), md->dim(), std::move(acts));
  }
  throw std::invalid_argument("natural module needs a permutation or matrix group");
}

GModule fully_deleted_module(const GroupPtr& G, unsigned p) {
  auto* pd = dynamic_cast<const groups::PermDomain*>(&G->domain());
  if (!pd) throw std::invalid_argument("fully deleted module needs a permutation group");
  if (!fq::is_prime(p)) throw std::invalid_argument("fully deleted module needs a prime");
  const std::size_t b = pd->degree();
  if (b < 3) throw std::invalid_argument("fully deleted module needs degree >= 3");
  auto F = fq::Field::make(p);
  std::vector<std::vector<std::uint32_t>> imgs;
  for (auto g : G->generators()) imgs.push_back(G->element(g).data);
  GModule P = imgs.empty() ? trivial_module(G, F, b) : permutation_module(G, F, imgs);
  Matrix S(F, b - 1, b);
  for (std::size_t i = 0; i + 1 < b; ++i) {
    S(i, i) = 1;
    S(i, b - 1) = F.neg(1);
  }
  GModule sum_zero = submodule(P, S);
  if (b % p != 0) return sum_zero;
  Matrix ones(F, 1, b - 1);
  for (std::size_t i = 0; i + 1 < b; ++i) ones(0, i) = 1;
  return quotient_module(sum_zero, ones);
}

GModule fully_deleted_module(std::size_t b, unsigned p) {
  if (b < 5) throw std::invalid_argument("fully deleted module needs b >= 5");
  return fully_deleted_module(groups::alternating(b), p);
}

namespace {

// Right cosets Hx labelled in BFS order of their first element.
std::pair<std::vector<Index>, std::vector<Index>> right_cosets(const groups::Group& G, const std::vector<Index>& H) {
  constexpr Index none = ~Index{0};
  std::vector<Index> label(G.order(), none), reps;
  for (Index x = 0; x < G.order(); ++x) {
    if (label[x] != none) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto h : H) label[G.mul(h, x)] = c;
  }
  return {label, reps};
}

}  // namespace

GModule coset_module(const GroupPtr& G, const ElementSet& H, const fq::Field& F) {
  auto [label, reps] = right_cosets(*G, H.items());
  std::vector<std::vector<std::uint32_t>> imgs(G->num_generators(), std::vector<std::uint32_t>(reps.size()));
  for (std::size_t s = 0; s < G->num_generators(); ++s)
    for (std::size_t c = 0; c < reps.size(); ++c) imgs[s][c] = label[G->mul_gen(reps[c], s)];
  if (imgs.empty()) return trivial_module(G, F, reps.size());
  return permutation_module(G, F, imgs);
}

GModule dual(const GModule& M) {
  std::vector<Matrix> acts;
  for (auto& a : M.actions()) {
    auto inv = fq::inverse(a);
    if (!inv) throw std::invalid_argument("singular action matrix");
    acts.push_back(inv->transpose());
  }
  return GModule(M.group_ptr(), M.field(), M.dim(), std::move(acts));
}

GModule tensor(const GModule& A, const GModule& B) {
  if (A.group_ptr() != B.group_ptr() || !(A.field() == B.field())) throw std::invalid_argument("tensor of unrelated modules");
  std::vector<Matrix> acts;
  for (std::size_t s = 0; s < A.actions().size(); ++s) acts.push_back(fq::kron(A.action(s), B.action(s)));
  return GModule(A.group_ptr(), A.field(), A.dim() * B.dim(), std::move(acts));
}

GModule direct_sum(const GModule& A, const GModule& B) {
  if (A.group_ptr() != B.group_ptr() || !(A.field() == B.field())) throw std::invalid_argument("sum of unrelated modules");
  std::vector<Matrix> acts;
  for (std::size_t s = 0; s < A.actions().size(); ++s) acts.push_back(fq::block_diagonal(A.action(s), B.action(s)));
  return GModule(A.group_ptr(), A.field(), A.dim() + B.dim(), std::move(acts));
}

GModule restrict(const GModule& M, const groups::SubgroupGroup& H) {
  std::vector<Matrix> acts;
  for (auto g : H.group->generators()) acts.push_back(M.matrix_of(H.embedding[g]));
  return GModule(H.group, M.field(), M.dim(), std::move(acts));
}

GModule induce(const GModule& U, const groups::SubgroupGroup& H, const GroupPtr& G) {
  const auto [label, reps] = right_cosets(*G, H.embedding);
  const std::size_t m = reps.size(), d = U.dim();
  std::vector<Matrix> acts;
  for (std::size_t s = 0; s < G->num_generators(); ++s) {
    Matrix A(U.field(), m * d, m * d);
    for (std::size_t i = 0; i < m; ++i) {
      const Index ts = G->mul_gen(reps[i], s);
      const Index j = label[ts];
      const Index h = G->mul(ts, G->inverse(reps[j]));
      if (H.back[h] < 0) throw std::logic_error("transversal bookkeeping failed");
      Matrix B = U.matrix_of(static_cast<Index>(H.back[h]));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) A(i * d + a, j * d + b) = B(a, b);
    }
    acts.push_back(std::move(A));
  }
  return GModule(G, U.field(), m * d, std::move(acts));
}

GModule extend_scalars(const GModule& M, unsigned e) {
  auto big = fq::Field::make(M.field().p(), M.field().k() * e);
  fq::Embedding emb(M.field(), big);
  std::vector<Matrix> acts;
  for (auto& a : M.actions()) acts.push_back(fq::embed(a, emb));
  return GModule(M.group_ptr(), big, M.dim(), std::move(acts));
}

GModule restrict_scalars(const GModule& M) {
  const auto& F = M.field();
  if (F.prime()) return M;
  auto P = fq::Field::make(F.p());
  const std::size_t k = F.k(), n = M.dim();
  std::vector<Matrix> acts;
  for (auto& a : M.actions()) {
    Matrix B(P, n * k, n * k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const fq::Elem x = a(i, j);
        if (!x) continue;
        fq::Elem basis = 1;
        for (std::size_t r = 0; r < k; ++r) {
          auto dg = F.digits(F.mul(basis, x));
          for (std::size_t c = 0; c < k; ++c) B(i * k + r, j * k + c) = static_cast<fq::Elem>(dg[c]);
          basis = static_cast<fq::Elem>(basis * F.p());
        }
      }
    acts.push_back(std::move(B));
  }
  return GModule(M.group_ptr(), P, n * k, std::move(acts));
}

GModule inflate(const GModule& M, const groups::Homomorphism& proj) {
  if (proj.target() != M.group_ptr()) throw std::invalid_argument("inflation target mismatch");
  std::vector<Matrix> acts;
  for (auto q : proj.gen_images()) acts.push_back(M.matrix_of(q));
  return GModule(proj.source(), M.field(), M.dim(), std::move(acts));
}

GModule outer_tensor(const GModule& A, const GModule& B, const GroupPtr& P) {
  if (P->num_generators() != A.actions().size() + B.actions().size())
    throw std::invalid_argument("product generator count mismatch");
  std::vector<Matrix> acts;
  auto IA = Matrix::identity(A.field(), A.dim()), IB = Matrix::identity(B.field(), B.dim());
  for (auto& a : A.actions()) acts.push_back(fq::kron(a, IB));
  for (auto& b : B.actions()) acts.push_back(fq::kron(IA, b));
  return GModule(P, A.field(), A.dim() * B.dim(), std::move(acts));
}

namespace {

std::vector<std::size_t> row_pivots(const Matrix& basis) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && basis(i, c) == 0) ++c;
    if (c == basis.cols() || basis(i, c) != 1) throw std::invalid_argument("basis not in echelon form");
    piv.push_back(c);
  }
  return piv;
}

}  // namespace

GModule submodule(const GModule& M, const Matrix& basis0) {
  Matrix basis = fq::rref(basis0).reduced;
  const auto piv = row_pivots(basis);
  const std::size_t k = basis.rows();
  std::vector<Matrix> acts;
  for (auto& a : M.actions()) {
    Matrix Y = basis * a;
    Matrix B(M.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) B(i, j) = Y(i, piv[j]);
    acts.push_back(std::move(B));
  }
  return GModule(M.group_ptr(), M.field(), k, std::move(acts));
}

GModule quotient_module(const GModule& M, const Matrix& basis0) {
  Matrix basis = fq::rref(basis0).reduced;
  const auto piv = row_pivots(basis);
  std::vector<char> is_piv(M.dim(), 0);
  for (auto p : piv) is_piv[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < M.dim(); ++c)
    if (!is_piv[c]) free.push_back(c);
  const auto& F = M.field();
  const std::size_t m = free.size(), k = piv.size();
  std::vector<Matrix> acts;
  for (auto& a : M.actions()) {
    // rows of a at free coordinates, reduced modulo the submodule
    Matrix Yf(F, m, m), Yp(F, m, k);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) Yf(i, j) = a(free[i], free[j]);
      for (std::size_t j = 0; j < k; ++j) Yp(i, j) = a(free[i], piv[j]);
    }
    Matrix Bf(F, k, m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) Bf(i, j) = basis(i, free[j]);
    acts.push_back(k ? Yf - Yp * Bf : Yf);
  }
  return GModule(M.group_ptr(), F, m, std::move(acts));
}

ElementSet kernel_of_action(const GModule& M) {
  const auto& G = M.group();
  ElementSet K(G.order());
  for (const auto& c : G.classes())
    if (M.matrix_of(c.representative).is_identity())
      for (auto x : c.members) K.insert(x);
  return K;
}

Matrix fixed_points(const GModule& M) {
  const std::size_t n = M.dim(), S = M.actions().size();
  if (S == 0) return Matrix::identity(M.field(), n);
  Matrix big(M.field(), n, n * S);
  auto I = Matrix::identity(M.field(), n);
  for (std::size_t s = 0; s < S; ++s) {
    Matrix d = M.action(s) - I;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) big(i, s * n + j) = d(i, j);
  }
  return fq::left_nullspace(big);
}

}  // namespace repgrowth::gmod
