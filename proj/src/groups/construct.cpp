#include "repgrowth/groups/construct.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "repgrowth/groups/domains.hpp"

namespace repgrowth::groups {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t sl_order(std::size_t n, std::uint64_t q) {
  std::uint64_t o = ipow(q, static_cast<unsigned>(n * (n - 1) / 2));
  for (std::size_t i = 2; i <= n; ++i) o *= ipow(q, static_cast<unsigned>(i)) - 1;
  return o;
}

void expect_order(const GroupPtr& G, std::uint64_t o, const std::string& what) {
  if (G->order() != o)
    throw std::logic_error(what + ": enumerated order " + std::to_string(G->order()) + ", expected " +
                           std::to_string(o));
}

std::vector<fq::Matrix> sl_generators(std::size_t n, const fq::Field& F) {
  std::vector<fq::Matrix> gens;
  if (n < 2) return gens;
  fq::Matrix t = fq::Matrix::identity(F, n);
  t(0, 1) = 1;
  gens.push_back(t);
  fq::Matrix w(F, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) w(i, i + 1) = 1;
  w(n - 1, 0) = (n % 2 == 0) ? F.neg(1) : 1;
  gens.push_back(w);
  if (!F.prime()) {
    fq::Matrix d = fq::Matrix::identity(F, n);
    d(0, 0) = F.primitive();
    d(1, 1) = F.inv(F.primitive());
    gens.push_back(d);
  }
  return gens;
}

}  // namespace

unsigned eta(unsigned p) { return (p - 1) / 2; }

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  auto dom = std::make_shared<PermDomain>(n);
  std::vector<Element> gens;
  if (n > 1) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens.push_back(dom->from_images(img));
  }
  return Group::enumerate(dom, gens, kDefaultEnumCap, "C" + std::to_string(n));
}

GroupPtr elementary_abelian(unsigned p, unsigned n) {
  if (!fq::is_prime(p)) throw std::invalid_argument("elementary abelian group needs a prime");
  const std::size_t deg = std::max<std::size_t>(1, static_cast<std::size_t>(p) * n);
  auto dom = std::make_shared<PermDomain>(deg);
  std::vector<Element> gens;
  for (unsigned i = 0; i < n; ++i) {
    auto e = dom->identity();
    for (unsigned j = 0; j < p; ++j) e.data[i * p + j] = i * p + (j + 1) % p;
    gens.push_back(e);
  }
  auto G = Group::enumerate(dom, gens, kDefaultEnumCap, "C" + std::to_string(p) + "^" + std::to_string(n));
  return G;
}

GroupPtr symmetric(std::size_t b) {
  if (b == 0) throw std::invalid_argument("symmetric group of degree 0");
  auto dom = std::make_shared<PermDomain>(b);
  std::vector<Element> gens;
  if (b >= 2) {
    gens.push_back(dom->parse_cycles("(1 2)"));
    if (b >= 3) {
      std::vector<std::uint32_t> img(b);
      for (std::size_t i = 0; i < b; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % b);
      gens.push_back(dom->from_images(img));
    }
  }
  return Group::enumerate(dom, gens, kDefaultEnumCap, "Sym(" + std::to_string(b) + ")");
}

GroupPtr alternating(std::size_t b) {
  if (b == 0) throw std::invalid_argument("alternating group of degree 0");
  auto dom = std::make_shared<PermDomain>(b);
  std::vector<Element> gens;
  if (b >= 3) {
    gens.push_back(dom->parse_cycles("(1 2 3)"));
    if (b >= 4) {
      std::vector<std::uint32_t> img(b);
      for (std::size_t i = 0; i < b; ++i) img[i] = static_cast<std::uint32_t>(i);
      const std::size_t start = (b % 2 == 1) ? 0 : 1;
      for (std::size_t i = start; i < b; ++i) img[i] = static_cast<std::uint32_t>(i + 1 < b ? i + 1 : start);
      gens.push_back(dom->from_images(img));
    }
  }
  return Group::enumerate(dom, gens, kDefaultEnumCap, "Alt(" + std::to_string(b) + ")");
}

GroupPtr special_linear(std::size_t n, std::uint64_t q, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("SL_0");
  auto F = fq::Field::of_order(q);
  auto dom = std::make_shared<MatrixDomain>(F, n);
  std::vector<Element> gens;
  for (auto& m : sl_generators(n, F)) gens.push_back(dom->from_matrix(m));
  auto G = Group::enumerate(dom, gens, cap, "SL(" + std::to_string(n) + "," + std::to_string(q) + ")");
  expect_order(G, sl_order(n, q), "SL");
  return G;
}

GroupPtr projective_special_linear(std::size_t n, std::uint64_t q, std::size_t cap) {
  if (n < 2) throw std::invalid_argument("PSL needs n >= 2");
  auto F = fq::Field::of_order(q);
  // normalised points: first nonzero coordinate 1
  std::vector<fq::Vec> pts;
  const std::uint64_t total = ipow(q, static_cast<unsigned>(n));
  std::map<fq::Vec, std::uint32_t> index;
  for (std::uint64_t code = 1; code < total; ++code) {
    fq::Vec v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<fq::Elem>(c % q);
      c /= q;
    }
    std::size_t f = 0;
    while (v[f] == 0) ++f;
    if (v[f] != 1) continue;
    index.emplace(v, static_cast<std::uint32_t>(pts.size()));
    pts.push_back(v);
  }
  auto dom = std::make_shared<PermDomain>(pts.size());
  std::vector<Element> gens;
  for (auto& m : sl_generators(n, F)) {
    std::vector<std::uint32_t> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto w = fq::vec_mul(pts[i], m);
      std::size_t f = 0;
      while (w[f] == 0) ++f;
      fq::scale(F, w, F.inv(w[f]));
      img[i] = index.at(w);
    }
    gens.push_back(dom->from_images(img));
  }
  auto G = Group::enumerate(dom, gens, cap, "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")");
  expect_order(G, sl_order(n, q) / std::gcd<std::uint64_t>(n, q - 1), "PSL");
  return G;
}

GroupPtr g_star(unsigned p, unsigned n, std::size_t cap) {
  if (!fq::is_prime(p) || p % 4 != 3 || p <= 3)
    throw std::invalid_argument("g_star needs a prime p = 3 mod 4 with p > 3");
  const std::uint64_t npts = ipow(p, n);
  if (npts > (1u << 24)) throw BudgetExceeded("g_star point set too large");
  auto dom = std::make_shared<PermDomain>(npts);
  auto F = fq::Field::make(p);
  const unsigned a = F.mul(F.primitive(), F.primitive());
  std::vector<Element> gens;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint32_t> img(npts);
    const std::uint64_t pi = ipow(p, i);
    for (std::uint64_t x = 0; x < npts; ++x) {
      const std::uint64_t digit = (x / pi) % p;
      img[x] = static_cast<std::uint32_t>(x - digit * pi + ((digit + 1) % p) * pi);
    }
    gens.push_back(dom->from_images(img));
  }
  {
    std::vector<std::uint32_t> img(npts);
    for (std::uint64_t x = 0; x < npts; ++x) {
      std::uint64_t y = 0, pi = 1, c = x;
      for (unsigned i = 0; i < n; ++i) {
        y += ((c % p) * a % p) * pi;
        c /= p;
        pi *= p;
      }
      img[x] = static_cast<std::uint32_t>(y);
    }
    gens.push_back(dom->from_images(img));
  }
  auto G = Group::enumerate(dom, gens, cap, "G*(" + std::to_string(p) + "," + std::to_string(n) + ")");
  expect_order(G, npts * eta(p), "g_star");
  return G;
}

GroupPtr sl2_zmod(unsigned p, std::size_t cap) {
  if (!fq::is_prime(p)) throw std::invalid_argument("sl2_zmod needs a prime");
  auto dom = std::make_shared<ZmodMatrixDomain>(p * p, 2);
  std::vector<Element> gens{dom->from_entries({1, 1, 0, 1}), dom->from_entries({0, 1, -1, 0})};
  auto G = Group::enumerate(dom, gens, cap, "SL(2,Z/" + std::to_string(p * p) + ")");
  expect_order(G, static_cast<std::uint64_t>(p) * p * p * sl_order(2, p), "sl2_zmod");
  return G;
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t cap) {
  auto dom = std::make_shared<ProductDomain>(factors);
  std::vector<Element> gens;
  std::string label;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    label += (i ? " x " : "") + factors[i]->label();
    for (auto g : factors[i]->generators()) {
      Element e = dom->identity();
      e.data[i] = g;
      gens.push_back(e);
    }
  }
  return Group::enumerate(dom, gens, cap, label);
}

GroupPtr direct_power(const GroupPtr& G, std::size_t m, std::size_t cap) {
  auto P = direct_product(std::vector<GroupPtr>(m, G), cap);
  return P;
}

GroupPtr g_nqm(std::size_t n, std::uint64_t q, std::size_t m, std::size_t cap) {
  auto S = special_linear(n, q, cap);
  auto P = direct_power(S, m, cap);
  auto Z = center(*S);
  ElementSet diag(P->order());
  for (auto z : Z.items()) diag.insert(*P->find(Element{std::vector<std::uint32_t>(m, z)}));
  auto Q = quotient(P, diag).group;
  return Q;
}

GroupPtr crown_power(const GroupPtr& L, const ElementSet& N, std::size_t k, std::size_t cap) {
  if (k == 0) throw std::invalid_argument("crown power needs k >= 1");
  auto mins = minimal_normal_subgroups(*L);
  if (std::find(mins.begin(), mins.end(), N) == mins.end())
    throw std::invalid_argument("subgroup is not minimal normal");
  long double order = L->order();
  for (std::size_t i = 1; i < k; ++i) order *= N.size();
  if (order > cap) throw BudgetExceeded("crown power exceeds the enumeration cap");
  auto dom = std::make_shared<ProductDomain>(std::vector<GroupPtr>(k, L));
  std::vector<Element> gens;
  for (auto g : L->generators()) gens.push_back(Element{std::vector<std::uint32_t>(k, g)});
  const Index n0 = N.sorted().at(1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Element e = dom->identity();
    e.data[i] = n0;
    gens.push_back(e);
  }
  return Group::enumerate(dom, gens, cap, "crown(" + L->label() + "," + std::to_string(k) + ")");
}

ElementSet borel(const Group& G) {
  std::size_t n = 0;
  if (auto* md = dynamic_cast<const MatrixDomain*>(&G.domain()))
    n = md->dim();
  else if (auto* zd = dynamic_cast<const ZmodMatrixDomain*>(&G.domain()))
    n = zd->dim();
  else
    throw std::invalid_argument("borel subgroup needs a matrix group");
  ElementSet B(G.order());
  for (Index x = 0; x < G.order(); ++x) {
    const auto& d = G.element(x).data;
    bool upper = true;
    for (std::size_t i = 1; i < n && upper; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (d[i * n + j] != 0) upper = false;
    if (upper) B.insert(x);
  }
  return B;
}

ElementSet congruence_kernel(const Group& G) {
  auto* zd = dynamic_cast<const ZmodMatrixDomain*>(&G.domain());
  if (!zd) throw std::invalid_argument("congruence kernel needs a Z/N matrix group");
  std::uint32_t p = 2;
  while (zd->modulus() % p) ++p;
  const std::size_t n = zd->dim();
  ElementSet K(G.order());
  for (Index x = 0; x < G.order(); ++x) {
    const auto& d = G.element(x).data;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = d[i * n + j] % p == (i == j ? 1 : 0);
    if (ok) K.insert(x);
  }
  return K;
}

namespace {

class Parser {
public:
  Parser(std::string_view s, std::size_t cap) : cap_(cap) {
    std::string cur;
    std::string str(s);
    // inline generator lists take the remainder verbatim
    for (std::size_t i = 0; i < str.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(str[i]))) {
        if (!cur.empty()) toks_.push_back(std::move(cur)), cur.clear();
        continue;
      }
      cur += str[i];
      if (cur == "perm:" || cur == "mat") {
        if (!cur.empty()) toks_.push_back(cur);
        cur.clear();
        rest_ = str.substr(i + 1);
        inline_at_ = toks_.size();
        break;
      }
    }
    if (!cur.empty()) toks_.push_back(cur);
  }

  GroupPtr parse() {
    std::vector<GroupPtr> factors{factor()};
    while (pos_ < toks_.size() && toks_[pos_] == "x") {
      ++pos_;
      factors.push_back(factor());
    }
    if (pos_ != toks_.size()) throw std::invalid_argument("trailing input in group spec: " + toks_[pos_]);
    return factors.size() == 1 ? factors[0] : direct_product(factors, cap_);
  }

private:
  std::string next() {
    if (pos_ >= toks_.size()) throw std::invalid_argument("unexpected end of group spec");
    return toks_[pos_++];
  }
  std::uint64_t num() {
    auto t = next();
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("expected a number in group spec, got '" + t + "'");
    return std::stoull(t);
  }

  GroupPtr factor() {
    auto w = next();
    if (w == "cyclic" || w == "C") return cyclic(num());
    if (w == "elem") {
      auto p = num();
      return elementary_abelian(static_cast<unsigned>(p), static_cast<unsigned>(num()));
    }
    if (w == "sym") return symmetric(num());
    if (w == "alt") return alternating(num());
    if (w == "sl") {
      auto n = num();
      return special_linear(n, num(), cap_);
    }
    if (w == "psl") {
      auto n = num();
      return projective_special_linear(n, num(), cap_);
    }
    if (w == "gstar") {
      auto p = num();
      return g_star(static_cast<unsigned>(p), static_cast<unsigned>(num()), cap_);
    }
    if (w == "sl2zmod") return sl2_zmod(static_cast<unsigned>(num()), cap_);
    if (w == "gnqm") {
      auto n = num();
      auto q = num();
      return g_nqm(n, q, num(), cap_);
    }
    if (w == "power") {
      auto G = factor();
      return direct_power(G, num(), cap_);
    }
    if (w == "crown") {
      auto L = factor();
      auto k = num();
      auto mins = minimal_normal_subgroups(*L);
      if (mins.size() != 1) throw std::invalid_argument("crown base must have a unique minimal normal subgroup");
      return crown_power(L, mins[0], k, cap_);
    }
    if (w == "perm:" && pos_ == inline_at_) return inline_perm();
    if (w == "mat" && pos_ == inline_at_) return inline_mat();
    throw std::invalid_argument("unknown group family '" + w + "'");
  }

  GroupPtr inline_perm() {
    std::vector<std::string> parts;
    std::stringstream ss(rest_);
    std::string part;
    std::size_t deg = 1;
    while (std::getline(ss, part, ';')) {
      parts.push_back(part);
      std::string num;
      for (char c : part + " ") {
        if (std::isdigit(static_cast<unsigned char>(c)))
          num += c;
        else if (!num.empty())
          deg = std::max<std::size_t>(deg, std::stoul(num)), num.clear();
      }
    }
    auto dom = std::make_shared<PermDomain>(deg);
    std::vector<Element> gens;
    for (auto& p : parts) gens.push_back(dom->parse_cycles(p));
    return Group::enumerate(dom, gens, cap_, "perm");
  }

  GroupPtr inline_mat() {
    // form: GF(q): [[a,b],[c,d]]; [[...]]
    auto open = rest_.find("GF(");
    auto close = rest_.find("):", open);
    if (open == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("matrix generators need 'mat GF(q): ...'");
    auto F = fq::Field::of_order(std::stoull(rest_.substr(open + 3, close - open - 3)));
    std::stringstream ss(rest_.substr(close + 2));
    std::string part;
    std::vector<fq::Matrix> mats;
    while (std::getline(ss, part, ';')) {
      std::vector<fq::Vec> rows;
      int depth = 0;
      fq::Vec row;
      std::string num;
      for (char c : part) {
        if (c == '[') {
          ++depth;
          row.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          num += c;
        } else if (c == ',' || c == ']') {
          if (!num.empty()) {
            auto v = std::stoul(num);
            if (v >= F.q()) throw std::invalid_argument("matrix entry out of range");
            row.push_back(static_cast<fq::Elem>(v));
            num.clear();
          }
          if (c == ']') {
            if (depth == 2) rows.push_back(row);
            --depth;
          }
        }
      }
      if (!rows.empty()) mats.push_back(fq::Matrix::from_rows(F, rows));
    }
    if (mats.empty()) throw std::invalid_argument("no matrix generators given");
    auto dom = std::make_shared<MatrixDomain>(F, mats[0].rows());
    std::vector<Element> gens;
    for (auto& m : mats) {
      if (!m.square() || fq::determinant(m) == 0) throw std::invalid_argument("generator is not invertible");
      gens.push_back(dom->from_matrix(m));
    }
    return Group::enumerate(dom, gens, cap_, "mat");
  }

  std::size_t cap_;
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
  std::string rest_;
  std::size_t inline_at_ = ~std::size_t{0};
};

}  // namespace

GroupPtr parse_group(std::string_view spec, std::size_t cap) {
  std::string str(spec);
  const auto first = str.find_first_not_of(" \t");
  GroupPtr G;
  if (first != std::string::npos && str.compare(first, 8, "product ") == 0) {
    std::vector<GroupPtr> factors;
    std::stringstream ss(str.substr(first + 8));
    std::string part;
    while (std::getline(ss, part, ';'))
      if (part.find_first_not_of(" \t") != std::string::npos) factors.push_back(parse_group(part, cap));
    if (factors.empty()) throw std::invalid_argument("empty product");
    G = factors.size() == 1 ? factors[0] : direct_product(factors, cap);
  } else {
    Parser p(spec, cap);
    G = p.parse();
  }
  if (G->order() > cap)
    throw BudgetExceeded("enumeration cap " + std::to_string(cap) + " exceeded (" + std::to_string(G->order()) + ")");
  return G;
}

ElementSet parse_subgroup(const GroupPtr& G, std::string_view spec) {
  std::string s(spec);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s == "borel") return borel(*G);
  if (s == "derived") return derived_subgroup(*G);
  if (s == "centre" || s == "center") return center(*G);
  if (s == "kernel") return congruence_kernel(*G);
  if (s == "trivial") return ElementSet::of(G->order(), std::vector<Index>{0});
  if (s == "whole") return ElementSet::all(G->order());
  if (s == "minimal") {
    auto mins = minimal_normal_subgroups(*G);
    return mins.at(0);
  }
  if (s.rfind("gens:", 0) == 0) {
    std::stringstream ss(s.substr(5));
    std::vector<Index> gens;
    std::string t;
    while (ss >> t) {
      auto v = std::stoul(t);
      if (v >= G->order()) throw std::invalid_argument("element index out of range");
      gens.push_back(static_cast<Index>(v));
    }
    return subgroup_closure(*G, gens);
  }
  throw std::invalid_argument("unknown subgroup spec '" + s + "'");
}

}  // namespace repgrowth::groups
