#include "repgrowth/fq/matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace repgrowth::fq {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), r_(rows), c_(cols), d_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) { return scalar(f, n, 1); }

Matrix Matrix::scalar(Field f, std::size_t n, Elem c) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  if (v.size() != c_) throw std::invalid_argument("row length mismatch");
  d_.insert(d_.end(), v.begin(), v.end());
  ++r_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(d_.begin() + a * c_, d_.begin() + (a + 1) * c_, d_.begin() + b * c_);
}

void axpy(const Field& f, std::span<Elem> dst, Elem c, std::span<const Elem> src) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  if (f.k() == 1) {
    if (f.p() == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
      return;
    }
    const std::uint32_t p = f.p();
    for (std::size_t i = 0; i < n; ++i)
      dst[i] = static_cast<Elem>((dst[i] + static_cast<std::uint32_t>(c) * src[i]) % p);
    return;
  }
  if (const Elem* mr = f.mul_row(c)) {
    if (f.p() == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= mr[src[i]];
    } else {
      const Elem* at = f.add_table();
      const std::size_t q = f.q();
      for (std::size_t i = 0; i < n; ++i) dst[i] = at[dst[i] * q + mr[src[i]]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

void scale(const Field& f, std::span<Elem> v, Elem c) {
  if (c == 1) return;
  for (auto& x : v) x = f.mul(x, c);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
  if (!(f_ == o.f_)) throw std::invalid_argument("matrix field mismatch");
  Matrix out(f_, r_, o.c_);
  if (f_.gf2() && r_ * c_ * o.c_ >= 32768) return (BitMatrix(*this) * BitMatrix(o)).to_matrix();
  if (f_.prime() && f_.p() > 2) {
    const std::uint64_t p = f_.p();
    std::vector<std::uint64_t> acc(o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < c_; ++k) {
        const std::uint64_t a = d_[i * c_ + k];
        if (!a) continue;
        const Elem* br = o.d_.data() + k * o.c_;
        for (std::size_t j = 0; j < o.c_; ++j) acc[j] += a * br[j];
      }
      Elem* orow = out.d_.data() + i * o.c_;
      for (std::size_t j = 0; j < o.c_; ++j) orow[j] = static_cast<Elem>(acc[j] % p);
    }
    return out;
  }
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Elem a = d_[i * c_ + k];
      if (a) axpy(f_, out.row(i), a, o.row(k));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = f_.add(d_[i], o.d_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = f_.sub(d_[i], o.d_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  for (auto& x : out.d_) x = f_.mul(x, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out.d_[j * r_ + i] = d_[i * c_ + j];
  return out;
}

Matrix Matrix::power(std::uint64_t e) const {
  Matrix r = identity(f_, r_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Elem Matrix::trace() const {
  Elem t = 0;
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t = f_.add(t, (*this)(i, i));
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::is_identity() const {
  auto s = scalar_value();
  return s && *s == 1;
}

std::optional<Elem> Matrix::scalar_value() const {
  if (r_ != c_) return std::nullopt;
  if (r_ == 0) return Elem{1};
  const Elem c = d_[0];
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (d_[i * c_ + j] != (i == j ? c : 0)) return std::nullopt;
  return c;
}

Vec vec_mul(std::span<const Elem> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector length mismatch");
  const Field& f = m.field();
  Vec out(m.cols(), 0);
  if (f.prime() && f.p() > 2) {
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::uint64_t a = v[k];
      if (!a) continue;
      auto r = m.row(k);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += a * r[j];
    }
    for (std::size_t j = 0; j < acc.size(); ++j) out[j] = static_cast<Elem>(acc[j] % f.p());
    return out;
  }
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) axpy(f, out, v[k], m.row(k));
  return out;
}

Rref rref(const Matrix& a) {
  const Field& f = a.field();
  Rref res;
  if (f.gf2() && a.rows() * a.cols() >= 1024) {
    BitMatrix b(a);
    res.pivots = b.rref();
    Matrix full = b.to_matrix();
    res.reduced = Matrix(f, res.pivots.size(), a.cols());
    for (std::size_t i = 0; i < res.pivots.size(); ++i)
      std::copy(full.row(i).begin(), full.row(i).end(), res.reduced.row(i).begin());
    return res;
  }
  Matrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    scale(f, m.row(r), f.inv(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c)) axpy(f, m.row(i), f.neg(m(i, c)), m.row(r));
    res.pivots.push_back(c);
    ++r;
  }
  res.reduced = Matrix(f, r, m.cols());
  std::copy(m.data().begin(), m.data().begin() + r * m.cols(), res.reduced.data().begin());
  return res;
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

Elem determinant(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = a.field();
  Matrix m = a;
  Elem det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Elem inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i)
      if (m(i, c)) axpy(f, m.row(i), f.neg(f.mul(m(i, c), inv)), m.row(c));
  }
  return det;
}

Matrix nullspace(const Matrix& a) {
  const Field& f = a.field();
  Rref r = rref(a);
  std::vector<char> is_piv(a.cols(), 0);
  for (auto p : r.pivots) is_piv[p] = 1;
  Matrix out(f, 0, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_piv[j]) continue;
    Vec x(a.cols(), 0);
    x[j] = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) x[r.pivots[i]] = f.neg(r.reduced(i, j));
    out.append_row(x);
  }
  return out;
}

Matrix left_nullspace(const Matrix& a) { return nullspace(a.transpose()); }

std::optional<Vec> solve(const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(aug);
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) return std::nullopt;
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(r.reduced.row(i).begin() + n, r.reduced.row(i).end(), out.row(i).begin());
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
  for (std::size_t i = 0; i < b.rows(); ++i)
    std::copy(b.row(i).begin(), b.row(i).end(), out.row(a.rows() + i).begin() + a.cols());
  return out;
}

Matrix embed(const Matrix& a, const Embedding& e) {
  Matrix out(e.target(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = e(a.data()[i]);
  return out;
}

EchelonForm::EchelonForm(Field f, std::size_t dim) : f_(f), n_(dim), row_of_col_(dim, -1) {}

void EchelonForm::reduce(std::span<Elem> v) const {
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    const int r = row_of_col_[c];
    if (r >= 0) axpy(f_, v, f_.neg(v[c]), rows_[r]);
  }
}

bool EchelonForm::add(std::span<const Elem> v) {
  Vec w(v.begin(), v.end());
  reduce(w);
  std::size_t c = 0;
  while (c < n_ && w[c] == 0) ++c;
  if (c == n_) return false;
  scale(f_, w, f_.inv(w[c]));
  for (auto& row : rows_)
    if (row[c]) axpy(f_, row, f_.neg(row[c]), w);
  row_of_col_[c] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(w));
  piv_.push_back(c);
  return true;
}

bool EchelonForm::contains(std::span<const Elem> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

std::vector<std::size_t> EchelonForm::pivots() const {
  auto p = piv_;
  std::sort(p.begin(), p.end());
  return p;
}

Matrix EchelonForm::basis() const {
  Matrix out(f_, 0, n_);
  for (std::size_t c : pivots()) out.append_row(rows_[row_of_col_[c]]);
  return out;
}

namespace {

Matrix spin_gf2(const Matrix& seeds, std::span<const Matrix> actions) {
  const std::size_t n = seeds.cols(), W = (n + 63) / 64;
  std::vector<BitMatrix> acts;
  for (const auto& a : actions) acts.emplace_back(a);
  std::vector<std::vector<std::uint64_t>> rows, queue;
  std::vector<std::size_t> piv;
  auto add = [&](std::vector<std::uint64_t> v) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((v[piv[i] / 64] >> (piv[i] % 64)) & 1u)
        for (std::size_t w = piv[i] / 64; w < W; ++w) v[w] ^= rows[i][w];
    for (std::size_t w = 0; w < W; ++w)
      if (v[w]) {
        piv.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(v[w])));
        rows.push_back(v);
        queue.push_back(std::move(v));
        return;
      }
  };
  for (std::size_t i = 0; i < seeds.rows(); ++i) {
    std::vector<std::uint64_t> v(W, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (seeds(i, j)) v[j / 64] |= std::uint64_t{1} << (j % 64);
    add(std::move(v));
  }
  for (std::size_t qi = 0; qi < queue.size() && rows.size() < n; ++qi)
    for (const auto& a : acts) {
      std::vector<std::uint64_t> y(W, 0);
      const auto& v = queue[qi];
      for (std::size_t w = 0; w < W; ++w)
        for (std::uint64_t bits = v[w]; bits; bits &= bits - 1) {
          const std::uint64_t* src = a.row_words(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          for (std::size_t t = 0; t < W; ++t) y[t] ^= src[t];
        }
      add(std::move(y));
    }
  BitMatrix b(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), b.row_words(i));
  b.rref();
  return b.to_matrix();
}

}  // namespace

Matrix spin(const Matrix& seeds, std::span<const Matrix> actions) {
  if (seeds.field().gf2() && seeds.cols() >= 128) return spin_gf2(seeds, actions);
  EchelonForm ech(seeds.field(), seeds.cols());
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i)
    if (ech.add(seeds.row(i))) queue.emplace_back(seeds.row(i).begin(), seeds.row(i).end());
  for (std::size_t qi = 0; qi < queue.size() && ech.rank() < ech.dim(); ++qi)
    for (const auto& a : actions) {
      Vec y = vec_mul(queue[qi], a);
      if (ech.add(y)) queue.push_back(std::move(y));
    }
  return ech.basis();
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : r_(rows), c_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

BitMatrix::BitMatrix(const Matrix& m) : BitMatrix(m.rows(), m.cols()) {
  if (!m.field().gf2()) throw std::invalid_argument("BitMatrix requires GF(2)");
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (m(i, j)) w_[i * wpr_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

Matrix BitMatrix::to_matrix() const {
  Matrix m(Field::make(2), r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = get(i, j) ? 1 : 0;
  return m;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
  auto& w = w_[i * wpr_ + j / 64];
  const auto bit = std::uint64_t{1} << (j % 64);
  w = v ? (w | bit) : (w & ~bit);
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
  BitMatrix out(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    std::uint64_t* dst = out.w_.data() + i * out.wpr_;
    for (std::size_t k = 0; k < c_; ++k) {
      if (!get(i, k)) continue;
      const std::uint64_t* src = o.w_.data() + k * o.wpr_;
      for (std::size_t w = 0; w < out.wpr_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::vector<std::size_t> BitMatrix::rref() {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < c_ && r < r_; ++c) {
    std::size_t p = r;
    while (p < r_ && !get(p, c)) ++p;
    if (p == r_) continue;
    if (p != r)
      std::swap_ranges(w_.begin() + p * wpr_, w_.begin() + (p + 1) * wpr_, w_.begin() + r * wpr_);
    const std::uint64_t* src = w_.data() + r * wpr_;
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == r || !get(i, c)) continue;
      std::uint64_t* dst = w_.data() + i * wpr_;
      for (std::size_t w = c / 64; w < wpr_; ++w) dst[w] ^= src[w];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace repgrowth::fq
