#include "repgrowth/groups/domains.hpp"

#include <cctype>
#include <sstream>

namespace repgrowth::groups {

Element PermDomain::identity() const {
  Element e;
  e.data.resize(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) e.data[i] = i;
  return e;
}

Element PermDomain::multiply(const Element& a, const Element& b) const {
  Element c;
  c.data.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) c.data[i] = b.data[a.data[i]];
  return c;
}

std::string PermDomain::format(const Element& e) const {
  std::string out;
  std::vector<char> seen(degree_, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || e.data[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = e.data[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Element PermDomain::from_images(std::vector<std::uint32_t> images) const {
  if (images.size() != degree_) throw std::invalid_argument("permutation degree mismatch");
  std::vector<char> hit(degree_, 0);
  for (auto v : images) {
    if (v >= degree_ || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = 1;
  }
  return Element{std::move(images)};
}

Element PermDomain::parse_cycles(std::string_view s) const {
  Element e = identity();
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::invalid_argument("bad cycle notation: " + std::string(s));
    ++i;
    std::vector<std::uint32_t> cyc;
    while (i < s.size() && s[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad cycle notation: " + std::string(s));
      auto pt = std::stoul(std::string(s.substr(i, j - i)));
      if (pt == 0 || pt > degree_) throw std::invalid_argument("point out of range in " + std::string(s));
      cyc.push_back(static_cast<std::uint32_t>(pt - 1));
      i = j;
    }
    if (i == s.size()) throw std::invalid_argument("unclosed cycle: " + std::string(s));
    ++i;
    Element c = identity();
    for (std::size_t k = 0; k < cyc.size(); ++k) c.data[cyc[k]] = cyc[(k + 1) % cyc.size()];
    e = multiply(e, from_images(c.data));
  }
  return e;
}

Element MatrixDomain::identity() const { return from_matrix(fq::Matrix::identity(f_, n_)); }

Element MatrixDomain::multiply(const Element& a, const Element& b) const {
  Element c;
  c.data.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto x = static_cast<fq::Elem>(a.data[i * n_ + k]);
      if (!x) continue;
      for (std::size_t j = 0; j < n_; ++j)
        c.data[i * n_ + j] = f_.add(static_cast<fq::Elem>(c.data[i * n_ + j]),
                                    f_.mul(x, static_cast<fq::Elem>(b.data[k * n_ + j])));
    }
  return c;
}

Element MatrixDomain::from_matrix(const fq::Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_ || !(m.field() == f_)) throw std::invalid_argument("matrix shape mismatch");
  return Element{{m.data().begin(), m.data().end()}};
}

fq::Matrix MatrixDomain::to_matrix(const Element& e) const {
  fq::Matrix m(f_, n_, n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) m.data()[i] = static_cast<fq::Elem>(e.data[i]);
  return m;
}

std::string MatrixDomain::format(const Element& e) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << e.data[i * n_ + j];
    os << "]";
  }
  os << "]";
  return os.str();
}

Element ZmodMatrixDomain::identity() const {
  Element e;
  e.data.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) e.data[i * n_ + i] = 1 % m_;
  return e;
}

Element ZmodMatrixDomain::multiply(const Element& a, const Element& b) const {
  Element c;
  c.data.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n_; ++k) s += static_cast<std::uint64_t>(a.data[i * n_ + k]) * b.data[k * n_ + j];
      c.data[i * n_ + j] = static_cast<std::uint32_t>(s % m_);
    }
  return c;
}

Element ZmodMatrixDomain::from_entries(const std::vector<long long>& entries) const {
  if (entries.size() != n_ * n_) throw std::invalid_argument("entry count mismatch");
  Element e;
  for (auto v : entries) {
    long long r = v % static_cast<long long>(m_);
    if (r < 0) r += m_;
    e.data.push_back(static_cast<std::uint32_t>(r));
  }
  return e;
}

std::string ZmodMatrixDomain::format(const Element& e) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << e.data[i * n_ + j];
    os << "]";
  }
  os << "] mod " << m_;
  return os.str();
}

Element ProductDomain::identity() const { return Element{std::vector<std::uint32_t>(factors_.size(), 0)}; }

Element ProductDomain::multiply(const Element& a, const Element& b) const {
  Element c;
  c.data.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c.data[i] = factors_[i]->mul(a.data[i], b.data[i]);
  return c;
}

std::string ProductDomain::tag() const {
  std::string s = "prod(";
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "," : "") + factors_[i]->domain().tag();
  return s + ")";
}

std::string ProductDomain::format(const Element& e) const {
  std::string s = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i)
    s += (i ? ", " : "") + factors_[i]->domain().format(factors_[i]->element(e.data[i]));
  return s + ")";
}

Element SubgroupDomain::multiply(const Element& a, const Element& b) const {
  return Element{{parent_->mul(a.data[0], b.data[0])}};
}

std::string SubgroupDomain::format(const Element& e) const {
  return parent_->domain().format(parent_->element(e.data[0]));
}

Element QuotientDomain::multiply(const Element& a, const Element& b) const {
  return Element{{coset_of_[parent_->mul(reps_[a.data[0]], reps_[b.data[0]])]}};
}

std::string QuotientDomain::format(const Element& e) const {
  return parent_->domain().format(parent_->element(reps_[e.data[0]])) + "N";
}

}  // namespace repgrowth::groups
