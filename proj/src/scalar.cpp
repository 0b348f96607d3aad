#include "g2aa/scalar.hpp"

#include <cmath>
#include <ostream>

#include "g2aa/error.hpp"

namespace g2aa {

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational in scalar literal");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

// Continued-fraction reconstruction of a small rational from a double.
bool recover_rational(double x, mpq_class& out) {
  if (!std::isfinite(x)) return false;
  const double target = x;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 40; ++iter) {
    const double approx = mpq_class(h, k).get_d();
    if (std::abs(approx - target) <= 1e-11 * std::max(1.0, std::abs(target))) {
      out = mpq_class(h, k);
      out.canonicalize();
      return true;
    }
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    const long a = static_cast<long>(std::floor(x));
    frac = x - std::floor(x);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (k > 100000000) break;
  }
  return false;
}

Scalar ipow(Scalar base, unsigned k) {
  Scalar r(1);
  while (k > 0) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

bool exact_rational_root(const mpq_class& q, unsigned k, mpq_class& out) {
  // k is odd, so negative inputs have a unique real root.
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
  out = mpq_class(rn, rd);
  if (sgn(q) < 0) out = -out;
  out.canonicalize();
  return true;
}

double real_odd_root(double x, unsigned k) {
  const double r = std::pow(std::abs(x), 1.0 / k);
  return x < 0 ? -r : r;
}

}  // namespace

Scalar::Scalar(mpq_class rat, mpq_class root2) : rat_(std::move(rat)), root2_(std::move(root2)) {
  rat_.canonicalize();
  root2_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DomainError("Scalar::fraction: zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar literal");

  const std::string tag = "sqrt2";
  const auto root_pos = s.find(tag);
  if (root_pos == std::string::npos) return Scalar(parse_rational(s));
  if (root_pos + tag.size() != s.size()) throw ParseError("trailing characters after sqrt2 in '" + s + "'");

  std::string head = s.substr(0, root_pos);
  if (!head.empty() && head.back() == '*') head.pop_back();

  // Split "p/q+r/s" at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  mpq_class rat = 0;
  std::string coef = head;
  if (split != std::string::npos) {
    rat = parse_rational(head.substr(0, split));
    coef = head.substr(split);
  }
  mpq_class root;
  if (coef.empty() || coef == "+")
    root = 1;
  else if (coef == "-")
    root = -1;
  else
    root = parse_rational(coef);
  return Scalar(rat, root);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rat_.get_str();
  std::string root = root2_.get_str() + "*sqrt2";
  if (sgn(rat_) == 0) return root;
  return rat_.get_str() + (sgn(root2_) > 0 ? "+" : "") + root;
}

int Scalar::sign() const {
  const int a = sgn(rat_);
  const int b = sgn(root2_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare a^2 with 2 b^2.
  const int c = cmp(rat_ * rat_, 2 * root2_ * root2_);
  return a > 0 ? c : -c;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(sqrt2)");
  if (is_rational()) return Scalar(1 / rat_);
  const mpq_class n = norm();
  return Scalar(rat_ / n, -root2_ / n);
}

double Scalar::to_double() const { return rat_.get_d() + root2_.get_d() * std::sqrt(2.0); }

Scalar& Scalar::operator+=(const Scalar& o) {
  rat_ += o.rat_;
  if (sgn(o.root2_) != 0) root2_ += o.root2_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  rat_ -= o.rat_;
  if (sgn(o.root2_) != 0) root2_ -= o.root2_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    rat_ *= o.rat_;
    return *this;
  }
  mpq_class r = rat_ * o.rat_ + 2 * root2_ * o.root2_;
  mpq_class s = rat_ * o.root2_ + root2_ * o.rat_;
  rat_ = std::move(r);
  root2_ = std::move(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(sqrt2)");
  if (o.is_rational()) {
    rat_ /= o.rat_;
    if (sgn(root2_) != 0) root2_ /= o.rat_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool exact_odd_root(const Scalar& s, unsigned k, Scalar& root) {
  if (k % 2 == 0) throw DomainError("exact_odd_root: even degree");
  if (s.is_zero()) {
    root = Scalar(0);
    return true;
  }
  if (s.is_rational()) {
    mpq_class q;
    if (!exact_rational_root(s.rat_part(), k, q)) return false;
    root = Scalar(q);
    return true;
  }
  // Real roots of s and of its conjugate are the two embeddings of the
  // candidate root; recover its coordinates and verify exactly.
  const double x = real_odd_root(s.to_double(), k);
  const double xc = real_odd_root(s.conjugate().to_double(), k);
  mpq_class a, b;
  if (!recover_rational((x + xc) / 2.0, a)) return false;
  if (!recover_rational((x - xc) / (2.0 * std::sqrt(2.0)), b)) return false;
  Scalar candidate(a, b);
  if (ipow(candidate, k) != s) return false;
  root = candidate;
  return true;
}

}  // namespace g2aa
