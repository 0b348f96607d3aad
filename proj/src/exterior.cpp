#include "g2aa/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "g2aa/error.hpp"

namespace g2aa {

namespace {

int popcount(Mask m) { return std::popcount(m); }

Mask below(int bit) { return bit <= 0 ? 0u : ((Mask{1} << bit) - 1u); }

// Sign of e^a ^ e^b relative to the sorted product, a and b disjoint.
int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += popcount(a & ~below(j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

// Position of bit j among the set bits of m.
int position(Mask m, int j) { return popcount(m & below(j)); }

bool lex_less(Mask a, Mask b) {
  for (;;) {
    if (a == 0 || b == 0) return a == 0 && b != 0;
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
}

void check_dim(const KForm& a, const KForm& b, const char* what) {
  if (a.dim() != b.dim()) throw DimensionError(std::string(what) + ": ambient dimension mismatch");
}

}  // namespace

Mask mask_of(const Indices& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << (i - 1);
  return m;
}

Indices indices_of(Mask m) {
  Indices out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<Mask> masks_of_degree(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (static_cast<std::size_t>(popcount(m)) == k) out.push_back(m);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

KForm::KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (dim > 31) throw DimensionError("KForm: dimension above 31 is not supported");
}

KForm KForm::constant(std::size_t dim, const Scalar& c) {
  KForm f(dim, 0);
  f.add_term(0, c);
  return f;
}

KForm KForm::basis(std::size_t dim, const Indices& idx, const Scalar& c) {
  KForm f(dim, idx.size());
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || static_cast<std::size_t>(idx[i]) > dim)
      throw DimensionError("KForm::basis: index " + std::to_string(idx[i]) + " out of range");
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return f;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  f.add_term(mask_of(idx), sign > 0 ? c : -c);
  return f;
}

KForm KForm::from_terms(std::size_t dim, std::size_t degree,
                        const std::vector<std::pair<Indices, Scalar>>& terms) {
  KForm f(dim, degree);
  for (const auto& [idx, c] : terms) {
    if (idx.size() != degree) throw DimensionError("KForm::from_terms: term of wrong degree");
    f += basis(dim, idx, c);
  }
  return f;
}

KForm KForm::parse(std::size_t dim, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "0") throw ParseError("KForm::parse: empty form needs an explicit degree");

  std::vector<std::pair<Indices, Scalar>> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    Scalar coef(1);
    if (pos < s.size() && s[pos] == '(') {
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw ParseError("KForm::parse: unbalanced parenthesis");
      coef = Scalar::parse(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      if (pos < s.size() && s[pos] == '*') ++pos;
    } else if (pos < s.size() && !std::isalpha(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && s[end] != '*' && !std::isalpha(static_cast<unsigned char>(s[end]))) ++end;
      coef = Scalar::parse(s.substr(pos, end - pos));
      pos = end;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      throw ParseError("KForm::parse: expected a coframe letter in '" + s + "'");
    ++pos;
    if (pos < s.size() && s[pos] == '^') ++pos;
    const bool braced = pos < s.size() && s[pos] == '{';
    if (braced) ++pos;
    std::string digits;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == ',')) digits += s[pos++];
    if (braced) {
      if (pos >= s.size() || s[pos] != '}') throw ParseError("KForm::parse: missing '}'");
      ++pos;
    }
    if (digits.empty()) throw ParseError("KForm::parse: missing indices in '" + s + "'");
    Indices idx;
    if (digits.find(',') != std::string::npos) {
      std::istringstream is(digits);
      std::string part;
      while (std::getline(is, part, ',')) idx.push_back(std::stoi(part));
    } else {
      for (char c : digits) idx.push_back(c - '0');
    }
    terms.emplace_back(idx, sign > 0 ? coef : -coef);
  }
  const std::size_t degree = terms.front().first.size();
  return from_terms(dim, degree, terms);
}

Scalar KForm::coefficient(Mask m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

Scalar KForm::coefficient(const Indices& idx) const {
  const KForm b = basis(dim_, idx, 1);
  if (b.is_zero()) return Scalar(0);
  const auto& [m, sign] = *b.raw().begin();
  return coefficient(m) * sign;
}

void KForm::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<std::size_t>(popcount(m)) != degree_) throw DimensionError("KForm::add_term: wrong degree");
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

std::vector<std::pair<Indices, Scalar>> KForm::terms() const {
  std::vector<std::pair<Mask, Scalar>> items(coeffs_.begin(), coeffs_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::vector<std::pair<Indices, Scalar>> out;
  out.reserve(items.size());
  for (auto& [m, c] : items) out.emplace_back(indices_of(m), c);
  return out;
}

KForm& KForm::operator+=(const KForm& o) {
  check_dim(*this, o, "KForm sum");
  if (o.is_zero()) return *this;
  if (degree_ != o.degree_) throw DimensionError("KForm sum: degree mismatch");
  for (const auto& [m, c] : o.coeffs_) add_term(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm& KForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, c] : coeffs_) c *= s;
  return *this;
}

KForm KForm::operator-() const {
  KForm f = *this;
  for (auto& [m, c] : f.coeffs_) c = -c;
  return f;
}

std::string KForm::to_string(char letter) const {
  if (degree_ == 0) return coefficient(Mask{0}).to_string();
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms()) {
    Scalar coef = c;
    const bool negative = coef.sign() < 0;
    if (negative) coef = -coef;
    out += negative ? "-" : (out.empty() ? "" : "+");
    if (!coef.is_one()) {
      out += coef.is_rational() ? coef.to_string() : "(" + coef.to_string() + ")";
      out += "*";
    }
    out += letter;
    out += "^{";
    const bool sep = dim_ > 9;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (sep && k) out += ',';
      out += std::to_string(idx[k]);
    }
    out += "}";
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  check_dim(a, b, "wedge");
  KForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.raw())
    for (const auto& [mb, cb] : b.raw()) {
      if (ma & mb) continue;
      const Scalar c = ca * cb;
      r.add_term(ma | mb, wedge_sign(ma, mb) > 0 ? c : -c);
    }
  return r;
}

KForm interior(int i, const KForm& a) {
  if (a.degree() == 0) throw DomainError("interior product of a degree-0 form");
  if (i < 1 || static_cast<std::size_t>(i) > a.dim()) throw DimensionError("interior: index out of range");
  const Mask bit = Mask{1} << (i - 1);
  KForm r(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.raw()) {
    if (!(m & bit)) continue;
    r.add_term(m & ~bit, (position(m, i - 1) & 1) ? -c : c);
  }
  return r;
}

KForm interior(const Vector& v, const KForm& a) {
  if (v.size() != a.dim()) throw DimensionError("interior: vector length mismatch");
  if (a.degree() == 0) throw DomainError("interior product of a degree-0 form");
  KForm r(a.dim(), a.degree() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r += v[i] * interior(static_cast<int>(i + 1), a);
  return r;
}

KForm gl_action(const Matrix& A, const KForm& a) {
  const std::size_t n = a.dim();
  if (A.rows() != n || A.cols() != n) throw DimensionError("gl_action: matrix size does not match the form");
  KForm r(n, a.degree());
  for (const auto& [m, c] : a.raw()) {
    for (Mask rest = m; rest; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      const Mask without = m & ~(Mask{1} << j);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& ajk = A(static_cast<std::size_t>(j), k);
        if (ajk.is_zero()) continue;
        const Mask kb = Mask{1} << k;
        if (without & kb) continue;
        const Mask nm = without | kb;
        const int parity = position(m, j) + position(nm, static_cast<int>(k));
        const Scalar t = ajk * c;
        r.add_term(nm, (parity & 1) ? t : -t);
      }
    }
  }
  return r;
}

Matrix action_matrix(const KForm& a) {
  const std::size_t n = a.dim();
  const auto masks = masks_of_degree(n, a.degree());
  std::map<Mask, std::size_t> row_of;
  for (std::size_t r = 0; r < masks.size(); ++r) row_of[masks[r]] = r;
  Matrix M(masks.size(), n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix E(n, n);
      E(j, k) = 1;
      const KForm image = gl_action(E, a);
      for (const auto& [m, c] : image.raw()) M(row_of.at(m), j * n + k) = c;
    }
  return M;
}

namespace {

Scalar minor_det(const Matrix& g, Mask rows, Mask cols) {
  const Indices ri = indices_of(rows), ci = indices_of(cols);
  Matrix sub(ri.size(), ci.size());
  for (std::size_t a = 0; a < ri.size(); ++a)
    for (std::size_t b = 0; b < ci.size(); ++b)
      sub(a, b) = g(static_cast<std::size_t>(ri[a] - 1), static_cast<std::size_t>(ci[b] - 1));
  return determinant(sub);
}

Scalar pairing_with_inverse(const KForm& a, const KForm& b, const Matrix& ginv) {
  Scalar s;
  for (const auto& [ma, ca] : a.raw())
    for (const auto& [mb, cb] : b.raw()) {
      const Scalar d = minor_det(ginv, ma, mb);
      if (!d.is_zero()) s += ca * cb * d;
    }
  return s;
}

Matrix checked_inverse(const Matrix& g, std::size_t n) {
  if (g.rows() != n || g.cols() != n) throw DimensionError("metric size does not match the form");
  if (!g.is_symmetric()) throw DomainError("metric is not symmetric");
  if (determinant(g).is_zero()) throw DegenerateMetricError("metric is degenerate");
  return inverse(g);
}

}  // namespace

Scalar inner_product(const KForm& a, const KForm& b, const Matrix& g) {
  check_dim(a, b, "inner_product");
  if (a.degree() != b.degree()) return Scalar(0);
  return pairing_with_inverse(a, b, checked_inverse(g, a.dim()));
}

KForm hodge_star(const KForm& b, const Matrix& g, const KForm& vol) {
  const std::size_t n = b.dim();
  if (vol.dim() != n || vol.degree() != n || vol.is_zero())
    throw DomainError("hodge_star: orientation form must be a nonzero top form");
  const Matrix ginv = checked_inverse(g, n);
  const Scalar v = vol.coefficient(mask_of([&] {
    Indices all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i + 1);
    return all;
  }()));
  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1u);
  KForm r(n, n - b.degree());
  for (Mask I : masks_of_degree(n, b.degree())) {
    Scalar ip;
    for (const auto& [J, c] : b.raw()) {
      const Scalar d = minor_det(ginv, I, J);
      if (!d.is_zero()) ip += c * d;
    }
    if (ip.is_zero()) continue;
    const Mask Ic = full & ~I;
    const Scalar t = ip * v;
    r.add_term(Ic, wedge_sign(I, Ic) > 0 ? t : -t);
  }
  return r;
}

KForm pullback(const KForm& a, const Matrix& P) {
  if (P.rows() != a.dim()) throw DimensionError("pullback: matrix rows must match the form dimension");
  const std::size_t m = P.cols();
  KForm r(m, a.degree());
  const auto targets = masks_of_degree(m, a.degree());
  for (const auto& [J, c] : a.raw())
    for (Mask I : targets) {
      const Scalar d = minor_det(P, J, I);
      if (!d.is_zero()) r.add_term(I, c * d);
    }
  return r;
}

KForm volume_form(std::size_t dim, const Scalar& c) {
  KForm f(dim, dim);
  f.add_term(dim == 32 ? ~Mask{0} : ((Mask{1} << dim) - 1u), c);
  return f;
}

}  // namespace g2aa
