#include "g2aa/geometry.hpp"

#include "g2aa/error.hpp"

namespace g2aa {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

Scalar pair(const Matrix& g, const Vector& x, const Vector& y) {
  Scalar s;
  const Vector gy = g.apply(y);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * gy[i];
  return s;
}

}  // namespace

Matrix ConnectionTable::along(const Vector& x) const {
  const std::size_t n = dim();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) out += nabla[i] * x[i];
  return out;
}

ConnectionTable levi_civita(const AlmostAbelianAlgebra& g, const Matrix& metric) {
  const std::size_t n = g.dim();
  if (metric.rows() != n || metric.cols() != n) throw DimensionError("metric size does not match the algebra");
  if (!metric.is_symmetric()) throw DomainError("metric is not symmetric");
  if (determinant(metric).is_zero()) throw DegenerateMetricError("Levi-Civita connection of a degenerate metric");
  const Matrix ginv = inverse(metric);

  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br[i][j] = g.bracket(static_cast<int>(i + 1), static_cast<int>(j + 1));

  ConnectionTable conn;
  conn.metric = metric;
  const Scalar half = Scalar::fraction(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      // 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
      Vector low(n);
      for (std::size_t k = 0; k < n; ++k)
        low[k] = half * (pair(metric, br[i][j], unit(n, k)) - pair(metric, br[j][k], unit(n, i)) +
                         pair(metric, br[k][i], unit(n, j)));
      const Vector col = ginv.apply(low);
      for (std::size_t k = 0; k < n; ++k) L(k, j) = col[k];
    }
    conn.nabla.push_back(std::move(L));
  }
  return conn;
}

std::size_t CurvatureReport::dim() const { return ricci.rows(); }

Matrix CurvatureReport::curvature(int i, int j) const {
  if (i == j) return Matrix(dim(), dim());
  if (i < j) return R.at({i, j});
  return -R.at({j, i});
}

Matrix CurvatureReport::curvature(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      out += curvature(static_cast<int>(i + 1), static_cast<int>(j + 1)) * (x[i] * y[j]);
    }
  }
  return out;
}

CurvatureReport curvature(const ConnectionTable& conn, const AlmostAbelianAlgebra& g) {
  const std::size_t n = conn.dim();
  if (g.dim() != n) throw DimensionError("connection and algebra dimensions differ");
  CurvatureReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r = commutator(conn.nabla[i], conn.nabla[j]);
      r -= conn.along(g.bracket(static_cast<int>(i + 1), static_cast<int>(j + 1)));
      rep.R.emplace(std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1)), std::move(r));
    }
  rep.ricci = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar s;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        const Scalar& v = i < j ? rep.R.at({static_cast<int>(i + 1), static_cast<int>(j + 1)})(i, k)
                                : rep.R.at({static_cast<int>(j + 1), static_cast<int>(i + 1)})(i, k);
        if (v.is_zero()) continue;
        if (i < j)
          s += v;
        else
          s -= v;
      }
      rep.ricci(j, k) = s;
    }
  rep.is_ricci_flat = rep.ricci.is_zero();
  rep.is_flat = true;
  for (const auto& [ij, r] : rep.R) rep.is_flat = rep.is_flat && r.is_zero();
  return rep;
}

Matrix nabla_endomorphism(const ConnectionTable& conn, int z, const Matrix& E) {
  return commutator(conn.nabla.at(static_cast<std::size_t>(z - 1)), E);
}

Matrix nabla_R(const ConnectionTable& conn, const CurvatureReport& rep, int z, int x, int y) {
  const Matrix& L = conn.nabla.at(static_cast<std::size_t>(z - 1));
  Matrix out = commutator(L, rep.curvature(x, y));
  const std::size_t n = conn.dim();
  out -= rep.curvature(L.column(static_cast<std::size_t>(x - 1)), unit(n, static_cast<std::size_t>(y - 1)));
  out -= rep.curvature(unit(n, static_cast<std::size_t>(x - 1)), L.column(static_cast<std::size_t>(y - 1)));
  return out;
}

bool is_locally_symmetric(const ConnectionTable& conn, const CurvatureReport& rep) {
  const int n = static_cast<int>(conn.dim());
  for (int z = 1; z <= n; ++z)
    for (int x = 1; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y)
        if (!nabla_R(conn, rep, z, x, y).is_zero()) return false;
  return true;
}

HolonomyResult holonomy_algebra(const ConnectionTable& conn, const CurvatureReport& rep) {
  const std::size_t n = conn.dim();
  SpanBuilder span(n * n);
  for (const auto& [ij, r] : rep.R) span.add(r.flat());
  HolonomyResult out;
  std::size_t processed = 0;
  const std::size_t cap = n * n;
  while (processed < span.dim()) {
    if (++out.rounds > cap) throw Error("holonomy iteration did not stabilize");
    const std::size_t end = span.dim();
    for (std::size_t k = processed; k < end; ++k) {
      const Matrix E = Matrix::from_flat(span.generators()[k], n, n);
      for (std::size_t z = 0; z < n; ++z) span.add(commutator(conn.nabla[z], E).flat());
    }
    processed = end;
  }
  for (const auto& v : span.generators()) out.basis.push_back(Matrix::from_flat(v, n, n));
  return out;
}

bool annihilates(const KForm& phi, const std::vector<Matrix>& h) {
  for (const auto& A : h)
    if (!gl_action(A, phi).is_zero()) return false;
  return true;
}

bool is_abelian(const std::vector<Matrix>& h) {
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (!commutator(h[a], h[b]).is_zero()) return false;
  return true;
}

bool is_subalgebra(const std::vector<Matrix>& h) {
  if (h.empty()) return true;
  const std::size_t n = h.front().rows();
  SpanBuilder span(n * n);
  for (const auto& A : h) span.add(A.flat());
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (!span.contains(commutator(h[a], h[b]).flat())) return false;
  return true;
}

CurvatureReport analyze(const AlmostAbelianAlgebra& g, const Matrix& metric, const std::optional<KForm>& phi) {
  const ConnectionTable conn = levi_civita(g, metric);
  CurvatureReport rep = curvature(conn, g);
  rep.is_locally_symmetric = rep.is_flat || is_locally_symmetric(conn, rep);
  rep.hol_basis = holonomy_algebra(conn, rep).basis;
  rep.hol_abelian = is_abelian(rep.hol_basis);
  if (phi) rep.hol_annihilates_phi = annihilates(*phi, rep.hol_basis);
  return rep;
}

Matrix elementary_endo(std::size_t n, int i, int j, const Scalar& c) {
  Matrix m(n, n);
  m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = c;
  return m;
}

std::string endo_to_string(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      const Scalar& c = m(j, i);
      if (c.is_zero()) continue;
      const std::string term = "f^" + std::to_string(i + 1) + "⊗f_" + std::to_string(j + 1);
      if (c.is_one()) {
        out += (out.empty() ? "" : "+") + term;
      } else if ((-c).is_one()) {
        out += "-" + term;
      } else {
        std::string cs = c.to_string();
        if (!c.is_rational()) cs = "(" + cs + ")";
        if (!out.empty() && cs.front() != '-') out += "+";
        out += cs + "*" + term;
      }
    }
  return out.empty() ? "0" : out;
}

}  // namespace g2aa
