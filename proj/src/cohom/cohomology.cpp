#include "repgrowth/cohom/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "repgrowth/groups/subgroups.hpp"

namespace repgrowth::cohom {

using fq::Elem;
using fq::Matrix;
using fq::Vec;

CocycleBasis h1(const GModule& M) {
  const auto& G = M.group();
  const auto& F = M.field();
  const std::size_t S = G.num_generators(), n = M.dim(), N = S * n;
  CocycleBasis out;
  out.b1 = n - fixed_points(M).rows();
  if (N == 0) {
    out.basis = Matrix(F, 0, N);
    return out;
  }
  // f(g) = x L_g for the unknown generator values x in F^N
  std::vector<Matrix> L(G.order());
  L[0] = Matrix(F, N, n);
  fq::EchelonForm constraints(F, N);
  auto step = [&](Index x, std::size_t s) {
    Matrix m = L[x] * M.action(s);
    for (std::size_t i = 0; i < n; ++i) m(s * n + i, i) = F.add(m(s * n + i, i), 1);
    return m;
  };
  for (Index x = 0; x < G.order() && constraints.rank() < N; ++x)
    for (std::size_t s = 0; s < S; ++s) {
      const Index y = G.mul_gen(x, s);
      if (y != 0 && G.parent(y) == x && G.parent_generator(y) == s) {
        L[y] = step(x, s);
        continue;
      }
      Matrix c = step(x, s) - L[y];
      for (std::size_t j = 0; j < n; ++j) {
        Vec col(N);
        for (std::size_t i = 0; i < N; ++i) col[i] = c(i, j);
        constraints.add(col);
      }
    }
  out.basis = constraints.rank() ? fq::nullspace(constraints.basis()) : Matrix::identity(F, N);
  out.z1 = out.basis.rows();
  out.h1 = out.z1 - out.b1;
  return out;
}

bool is_cocycle(const GModule& M, std::span<const Elem> values) {
  const auto& G = M.group();
  const auto& F = M.field();
  const std::size_t S = G.num_generators(), n = M.dim();
  if (values.size() != S * n) throw std::invalid_argument("cocycle value length mismatch");
  std::vector<Vec> f(G.order());
  f[0] = Vec(n, 0);
  auto step = [&](Index x, std::size_t s) {
    Vec y = fq::vec_mul(f[x], M.action(s));
    for (std::size_t i = 0; i < n; ++i) y[i] = F.add(y[i], values[s * n + i]);
    return y;
  };
  for (Index x = 0; x < G.order(); ++x)
    for (std::size_t s = 0; s < S; ++s) {
      const Index y = G.mul_gen(x, s);
      if (y != 0 && G.parent(y) == x && G.parent_generator(y) == s) {
        f[y] = step(x, s);
      } else if (step(x, s) != f[y]) {
        return false;
      }
    }
  return true;
}

namespace {

// Right module as a left module of the opposite group: a * m = m a, a o b = ba.
struct Bar {
  const GModule& M;
  const groups::Group& G;
  const fq::Field& F;
  std::size_t g, n;
  std::vector<Matrix> mats;

  explicit Bar(const GModule& m) : M(m), G(m.group()), F(m.field()), g(G.order()), n(m.dim()) {
    G.build_table();
    mats = M.all_matrices();
  }

  std::size_t rank_d0() const {
    Matrix d0(F, n, g * n);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d0(i, a * n + j) = F.sub(mats[a](i, j), i == j ? 1 : 0);
    return fq::rank(d0);
  }

  // (d1 f)(a,b) = f(b) a - f(ba) + f(a), one functional per (a, b, j).
  std::size_t rank_d1() const {
    fq::EchelonForm ech(F, g * n);
    for (Index a = 0; a < g && ech.rank() < g * n; ++a)
      for (Index b = 0; b < g && ech.rank() < g * n; ++b) {
        const Index ba = G.mul(b, a);
        for (std::size_t j = 0; j < n; ++j) {
          Vec row(g * n, 0);
          for (std::size_t i = 0; i < n; ++i) row[b * n + i] = F.add(row[b * n + i], mats[a](i, j));
          row[ba * n + j] = F.sub(row[ba * n + j], 1);
          row[a * n + j] = F.add(row[a * n + j], 1);
          ech.add(row);
        }
      }
    return ech.rank();
  }

  // (d2 f)(a,b,c) = f(b,c) a - f(ba,c) + f(a,cb) - f(a,b).
  std::size_t rank_d2() const {
    const std::size_t dim = g * g * n;
    auto idx = [&](Index x, Index y, std::size_t i) { return (static_cast<std::size_t>(x) * g + y) * n + i; };
    fq::EchelonForm ech(F, dim);
    for (Index a = 0; a < g && ech.rank() < dim; ++a)
      for (Index b = 0; b < g; ++b)
        for (Index c = 0; c < g; ++c) {
          const Index ba = G.mul(b, a), cb = G.mul(c, b);
          for (std::size_t j = 0; j < n; ++j) {
            Vec row(dim, 0);
            for (std::size_t i = 0; i < n; ++i) row[idx(b, c, i)] = F.add(row[idx(b, c, i)], mats[a](i, j));
            row[idx(ba, c, j)] = F.sub(row[idx(ba, c, j)], 1);
            row[idx(a, cb, j)] = F.add(row[idx(a, cb, j)], 1);
            row[idx(a, b, j)] = F.sub(row[idx(a, b, j)], 1);
            ech.add(row);
          }
        }
    return ech.rank();
  }
};

}  // namespace

std::size_t h1_bar_oracle(const GModule& M) {
  if (M.group().order() > 400 || M.dim() > 8) throw groups::BudgetExceeded("bar complex limited to |G| <= 400, dim <= 8");
  Bar bar(M);
  return bar.g * bar.n - bar.rank_d1() - bar.rank_d0();
}

std::size_t h2_bar_small(const GModule& M) {
  if (M.group().order() > 60) throw groups::BudgetExceeded("bar H^2 limited to |G| <= 60");
  Bar bar(M);
  return bar.g * bar.g * bar.n - bar.rank_d2() - bar.rank_d1();
}

ComplementResult complement_exists(const GroupPtr& Ghat, const ElementSet& A, std::uint64_t budget) {
  auto Q = groups::quotient(Ghat, A);
  const auto& Qg = *Q.group;
  const auto gens = groups::reduced_generators(Qg);
  ComplementResult out;
  out.assignments_total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (out.assignments_total > budget / std::max<std::size_t>(A.size(), 1))
      throw groups::BudgetExceeded("lift search exceeds budget");
    out.assignments_total *= A.size();
  }
  // lift candidates per generator, pruned by element order
  std::vector<std::vector<Index>> cands;
  for (auto s : gens) {
    const Index lift = Ghat->generator(s);
    const auto ord = Qg.element_order(Qg.generator(s));
    std::vector<Index> c;
    for (auto a : A.items()) {
      const Index x = Ghat->mul(lift, a);
      if (Ghat->element_order(x) == ord) c.push_back(x);
    }
    cands.push_back(std::move(c));
  }
  std::vector<Index> choice(gens.size());
  std::vector<Index> img(Qg.order());
  std::vector<char> seen(Qg.order());
  auto consistent = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Index> queue{0};
    img[0] = 0;
    seen[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Index x = queue[qi];
      for (std::size_t t = 0; t < gens.size(); ++t) {
        const Index y = Qg.mul_gen(x, gens[t]);
        const Index v = Ghat->mul(img[x], choice[t]);
        if (!seen[y]) {
          seen[y] = 1;
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          return false;
        }
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t level) {
    if (level == gens.size()) {
      ++out.assignments_tried;
      return consistent();
    }
    for (auto c : cands[level]) {
      choice[level] = c;
      if (search(level + 1)) return true;
    }
    return false;
  };
  if (search(0)) {
    ElementSet C(Ghat->order());
    for (auto x : img) C.insert(x);
    for (auto a : A.items())
      if (a != 0 && C.contains(a)) throw std::logic_error("complement meets the normal subgroup");
    if (C.size() * A.size() != Ghat->order()) throw std::logic_error("complement has the wrong order");
    out.exists = true;
    out.complement = std::move(C);
  }
  return out;
}

Lh1Result lh1_search(const GroupPtr& T, std::uint64_t bound, std::uint64_t seed) {
  if (groups::center(*T).size() != 1) throw std::invalid_argument("lh1_search needs a group with trivial centre");
  if (groups::minimal_normal_subgroups(*T).size() != 1) throw std::invalid_argument("lh1_search needs a monolithic group");
  Lh1Result out;
  for (unsigned p = 2; p <= bound; ++p) {
    if (!fq::is_prime(p)) continue;
    std::size_t D = 0;
    for (std::uint64_t s = p; s <= bound; s *= p) ++D;
    gmod::ChopOptions opts;
    opts.seed = seed;
    auto series = gmod::chop(gmod::regular_module(T, fq::Field::make(p)), opts);
    for (auto& f : series.factors) {
      const auto& d = f.descriptor;
      if (d.dim > D || !d.faithful) continue;
      const std::size_t h = h1_dim(f.module);
      if (h % d.endo_degree != 0) throw std::logic_error("H^1 dimension not divisible by the endomorphism degree");
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < d.dim; ++i) size *= p;
      out.scanned.push_back({size, fq::Field::make(p, d.endo_degree), d.dim / d.endo_degree, h / d.endo_degree, d,
                             f.module});
    }
  }
  std::sort(out.scanned.begin(), out.scanned.end(), [](const Lh1Candidate& a, const Lh1Candidate& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.field.p() != b.field.p()) return a.field.p() < b.field.p();
    if (a.field.k() != b.field.k()) return a.field.k() < b.field.k();
    return a.descriptor.fingerprint < b.descriptor.fingerprint;
  });
  for (auto& c : out.scanned)
    if (c.h1 > 0) {
      out.witness = c;
      break;
    }
  return out;
}

}  // namespace repgrowth::cohom
