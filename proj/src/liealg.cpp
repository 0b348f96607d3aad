#include "g2aa/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "g2aa/error.hpp"

namespace g2aa {

AlmostAbelianAlgebra::AlmostAbelianAlgebra(Matrix ad) : ad_(std::move(ad)) {
  if (!ad_.is_square() || ad_.rows() == 0) throw DimensionError("ad matrix must be square and nonempty");
}

Vector AlmostAbelianAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector length mismatch");
  // [x, y] = x_n ad(y_u) - y_n ad(x_u)
  Vector xu(x.begin(), x.end() - 1), yu(y.begin(), y.end() - 1);
  Vector out(n);
  if (!x[n - 1].is_zero()) {
    const Vector a = ad_.apply(yu);
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] += x[n - 1] * a[i];
  }
  if (!y[n - 1].is_zero()) {
    const Vector a = ad_.apply(xu);
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] -= y[n - 1] * a[i];
  }
  return out;
}

Vector AlmostAbelianAlgebra::bracket(int i, int j) const {
  const std::size_t n = dim();
  Vector x(n), y(n);
  x.at(static_cast<std::size_t>(i - 1)) = 1;
  y.at(static_cast<std::size_t>(j - 1)) = 1;
  return bracket(x, y);
}

KForm restrict_to_ideal(const KForm& a) {
  const std::size_t n = a.dim();
  Matrix P(n, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) P(i, i) = 1;
  return pullback(a, P);
}

KForm extend_from_ideal(const KForm& a) {
  const std::size_t m = a.dim();
  Matrix P(m, m + 1);
  for (std::size_t i = 0; i < m; ++i) P(i, i) = 1;
  return pullback(a, P);
}

KForm differential(const AlmostAbelianAlgebra& g, const KForm& a) {
  const std::size_t n = g.dim();
  if (a.dim() != n) throw DimensionError("differential: form dimension does not match the algebra");
  const KForm rho = restrict_to_ideal(a);
  const KForm moved = gl_action(g.ad(), rho);
  return wedge(KForm::basis(n, {static_cast<int>(n)}), extend_from_ideal(moved));
}

namespace {

KForm as_ideal_form(const AlmostAbelianAlgebra& g, const KForm& a) {
  if (a.dim() + 1 == g.dim()) return a;
  if (a.dim() != g.dim()) throw DimensionError("form dimension matches neither the algebra nor its ideal");
  const Mask last = Mask{1} << (g.dim() - 1);
  for (const auto& [m, c] : a.raw())
    if (m & last) throw DomainError("form has a component along the complement direction");
  return restrict_to_ideal(a);
}

}  // namespace

bool is_closed(const AlmostAbelianAlgebra& g, const KForm& a) {
  return differential(g, extend_from_ideal(as_ideal_form(g, a))).is_zero();
}

bool is_stabilized(const AlmostAbelianAlgebra& g, const KForm& a) {
  return gl_action(g.ad(), as_ideal_form(g, a)).is_zero();
}

int SegrePartition::total() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string SegrePartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

SegrePartition make_partition(std::vector<int> parts) {
  for (int p : parts)
    if (p <= 0) throw DomainError("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return SegrePartition{std::move(parts)};
}

std::vector<SegrePartition> partitions_of(int n) {
  std::vector<SegrePartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(SegrePartition{cur});
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

SegrePartition segre_partition(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("segre_partition: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n};
  Matrix p = Matrix::identity(n);
  for (std::size_t j = 1; j <= n; ++j) {
    p = p * m;
    ranks.push_back(rank(p));
  }
  if (ranks.back() != 0) throw DomainError("segre_partition: matrix is not nilpotent");
  // at_least[j] = number of blocks of size >= j
  std::vector<int> parts;
  for (std::size_t j = n; j >= 1; --j) {
    const long ge_j = static_cast<long>(ranks[j - 1]) - static_cast<long>(ranks[j]);
    const long ge_j1 = j < n ? static_cast<long>(ranks[j]) - static_cast<long>(ranks[j + 1]) : 0;
    for (long c = 0; c < ge_j - ge_j1; ++c) parts.push_back(static_cast<int>(j));
  }
  return SegrePartition{parts};
}

Matrix jordan_matrix(const SegrePartition& p) {
  const auto n = static_cast<std::size_t>(p.total());
  Matrix m(n, n);
  std::size_t offset = 0;
  for (int size : p.parts) {
    for (int k = 1; k < size; ++k) m(offset + static_cast<std::size_t>(k), offset + static_cast<std::size_t>(k) - 1) = 1;
    offset += static_cast<std::size_t>(size);
  }
  return m;
}

const std::vector<NilpotentCatalogEntry>& nilpotent_catalog() {
  static const std::vector<NilpotentCatalogEntry> catalog = {
      {"n_{7,1}", {{2, 2, 2}}, {"e^{47}", "e^{57}", "e^{67}", "0", "0", "0", "0"}},
      {"n_{7,2}", {{3, 3}}, {"e^{27}", "e^{37}", "0", "e^{57}", "e^{67}", "0", "0"}},
      {"n_{7,3}", {{4, 2}}, {"e^{27}", "e^{37}", "e^{47}", "0", "e^{67}", "0", "0"}},
      {"n_{7,4}", {{6}}, {"e^{27}", "e^{37}", "e^{47}", "e^{57}", "e^{67}", "0", "0"}},
      {"n_{6,1}⊕R", {{3, 2, 1}}, {"0", "0", "e^{12}", "e^{13}", "0", "e^{15}", "0"}},
      {"n_{6,2}⊕R", {{5, 1}}, {"0", "0", "e^{12}", "e^{13}", "e^{14}", "e^{15}", "0"}},
      {"A_{5,1}⊕R^2", {{2, 2, 1, 1}}, {"e^{35}", "e^{45}", "0", "0", "0", "0", "0"}},
      {"A_{5,2}⊕R^2", {{4, 1, 1}}, {"e^{25}", "e^{35}", "e^{45}", "0", "0", "0", "0"}},
      {"A_{4,1}⊕R^3", {{3, 1, 1, 1}}, {"e^{24}", "e^{34}", "0", "0", "0", "0", "0"}},
      {"h_3⊕R^4", {{2, 1, 1, 1, 1}}, {"e^{23}", "0", "0", "0", "0", "0", "0"}},
      {"R^7", {{1, 1, 1, 1, 1, 1}}, {"0", "0", "0", "0", "0", "0", "0"}},
  };
  return catalog;
}

namespace {

std::string normalize_name(std::string_view name) {
  std::string s(name);
  const std::pair<std::string, std::string> rewrites[] = {
      {"⊕", "+"}, {"\\oplus", "+"}, {"\\mathfrak", ""}, {"\\bR", "R"}, {"\\h", "h"}};
  for (const auto& [from, to] : rewrites)
    for (std::size_t p; (p = s.find(from)) != std::string::npos;) s.replace(p, from.size(), to);
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '{' || c == '}' || c == ',' || c == '^' || c == ' ' || c == '\\') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

const NilpotentCatalogEntry& catalog_entry(std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& e : nilpotent_catalog())
    if (normalize_name(e.name) == key) return e;
  throw DomainError("unknown nilpotent almost Abelian Lie algebra '" + std::string(name) + "'");
}

const NilpotentCatalogEntry& catalog_entry(const SegrePartition& p) {
  for (const auto& e : nilpotent_catalog())
    if (e.partition == p) return e;
  throw DomainError("no catalog entry with partition " + p.to_string());
}

NilpotentCatalogEntry identify_nilpotent(const AlmostAbelianAlgebra& g) {
  if (g.dim() != 7) throw DimensionError("identify_nilpotent: only seven-dimensional algebras are catalogued");
  return catalog_entry(segre_partition(g.ad()));
}

AlmostAbelianAlgebra catalog_algebra(const NilpotentCatalogEntry& e) {
  return AlmostAbelianAlgebra(jordan_matrix(e.partition));
}

}  // namespace g2aa
