#include "g2aa/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "g2aa/error.hpp"
#include "g2aa/g2.hpp"
#include "g2aa/geometry.hpp"

namespace g2aa {

namespace {

struct Complex {
  Scalar re, im;
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// Complex 3 x 3 matrix as its real 6 x 6 image under z -> (Re z, Im z).
Matrix realify(const std::vector<std::vector<Complex>>& m) {
  const std::size_t n = m.size();
  Matrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Complex& z = m[r][c];
      out(2 * r, 2 * c) = z.re;
      out(2 * r, 2 * c + 1) = -z.im;
      out(2 * r + 1, 2 * c) = z.im;
      out(2 * r + 1, 2 * c + 1) = z.re;
    }
  return out;
}

std::vector<std::vector<Complex>> complex_matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::vector<std::vector<Complex>> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    out.set_block(off, off, b);
    off += b.rows();
  }
  return out;
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw DimensionError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

Instance finish(Matrix ad, KForm phi, std::string family) {
  Instance inst{AlmostAbelianAlgebra(std::move(ad)), std::move(phi), std::move(family)};
  const G2EpsStructure s = certify_g2(inst.phi);
  if (!differential(inst.algebra, inst.phi).is_zero()) throw DomainError(inst.family + ": structure is not closed");
  if (!differential(inst.algebra, s.star_phi()).is_zero()) throw DomainError(inst.family + ": structure is not coclosed");
  return inst;
}

/// Basis change of the (3,3) family: the model pair (rho_1, -1/2 omega_{-1}^2)
/// has stabilizer diag(A, -A^t) in the frame e1+-e2, e3+-e4, e5+-e6, and the
/// adapted phi_1 restricts to a pair of that type on span(f_2..f_7).
Matrix split_null_frame() {
  Matrix N(6, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    N(k, 2 * k) = 1;
    N(k, 2 * k + 1) = 1;
    N(k + 3, 2 * k) = 1;
    N(k + 3, 2 * k + 1) = -1;
  }
  return N;
}

Matrix hyperplane_frame() {
  Matrix Q(6, 6);
  Q(0, 5) = -1;
  Q(1, 0) = 1;
  Q(2, 3) = 1;
  Q(3, 1) = 1;
  Q(4, 4) = -1;
  Q(5, 2) = 1;
  return Q;
}

/// Moves f_1 to the last slot so that u = span(f_2..f_7) becomes the ideal.
Matrix cyclic_shift() {
  Matrix P(7, 7);
  P(0, 6) = 1;
  for (std::size_t k = 1; k < 7; ++k) P(k, k - 1) = 1;
  return P;
}

Instance build(const G2Su3Params& p) {
  const Matrix ad = block_diag({rotation_block(0, p.a), rotation_block(0, p.b), rotation_block(0, -p.a - p.b)});
  return finish(ad, model_phi(-1), "g2_su3");
}

Instance build(const G2Star24Params& p) {
  using C = Complex;
  const Scalar z(0), o(1);
  Matrix shape, P;
  switch (p.shape) {
    case 1:
      if (p.a.is_zero()) throw DomainError("g2star_24 shape 1 requires a != 0");
      shape = block_diag({rotation_block(p.a, p.b), rotation_block(-p.a, p.b), rotation_block(0, Scalar(-2) * p.b)});
      P = realify(complex_matrix({{C{o, z}, C{o, z}, C{z, z}}, {C{z, z}, C{z, z}, C{o, z}}, {C{o, z}, C{-o, z}, C{z, z}}}));
      break;
    case 2:
      shape = block_diag({rotation_block(0, p.a), rotation_block(0, p.b), rotation_block(0, -p.a - p.b)});
      P = Matrix::identity(6);
      break;
    case 3: {
      shape = Matrix(6, 6);
      shape.set_block(0, 0, rotation_block(0, p.a));
      shape.set_block(0, 2, Matrix::identity(2));
      shape.set_block(2, 2, rotation_block(0, p.a));
      shape.set_block(4, 4, rotation_block(0, Scalar(-2) * p.a));
      P = realify(complex_matrix({{C{o, z}, C{z, o}, C{z, z}}, {C{z, z}, C{z, z}, C{o, z}}, {C{o, z}, C{z, z}, C{z, z}}}));
      break;
    }
    case 4:
      shape = Matrix(6, 6);
      shape.set_block(0, 2, Matrix::identity(2));
      shape.set_block(2, 4, Matrix::identity(2));
      P = realify(complex_matrix({{C{o, z}, C{z, z}, C{z, z}}, {C{z, z}, C{o, z}, C{z, z}}, {C{o, z}, C{z, z}, C{o, z}}}));
      break;
    default:
      throw DomainError("g2star_24 shape must be 1, 2, 3 or 4");
  }
  return finish(P * shape * inverse(P), model_phi(1), "g2star_24");
}

Instance build(const G2Star33Params& p) {
  require_square(p.A, 3, "g2star_33 A");
  if (!p.A.trace().is_zero()) throw DomainError("g2star_33 A must be trace-free");
  const Matrix core = block_diag({p.A, -p.A.transpose()});
  const Matrix T = split_null_frame() * hyperplane_frame();
  return finish(inverse(T) * core * T, pullback(model_phi(1), cyclic_shift()), "g2star_33");
}

Instance build(const G2StarDegParams& p) {
  return finish(witt_parallel_matrix(p.A, p.B, p.v, p.w), witt_phi(), "g2star_deg");
}

Instance build(const NilpotentParallelParams& p) {
  return finish(nilpotent_parallel_matrix(p), witt_phi(), "g2star_deg_nilpotent");
}

// ---- eigen-data decisions ----

/// A Jordan block of the real matrix: a real eigenvalue, or a conjugate pair
/// (im > 0) standing for two complex blocks.
struct Atom {
  Scalar re, im;
  int size;
  bool pair() const { return !im.is_zero(); }
  int dim() const { return pair() ? 2 * size : size; }
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    if (auto c = a.im <=> b.im; c != 0) return c;
    return a.size <=> b.size;
  }
};

std::vector<Atom> atoms_of(const std::vector<EigenBlock>& blocks) {
  std::vector<Atom> out;
  for (const auto& b : blocks) {
    if (b.size < 1) throw DomainError("eigen block size must be positive");
    out.push_back(Atom{b.re, b.im.abs(), b.size});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int total_dim(const std::vector<Atom>& atoms) {
  int n = 0;
  for (const auto& a : atoms) n += a.dim();
  return n;
}

/// One complex Jordan block.
struct CBlock {
  Scalar re, im;
  int size;
  friend auto operator<=>(const CBlock&, const CBlock&) = default;
  friend bool operator==(const CBlock&, const CBlock&) = default;
};

/// All ways to choose a half H of the complex Jordan form with J(M) = H u conj(H).
std::vector<std::vector<CBlock>> conjugate_halves(const std::vector<Atom>& atoms) {
  std::map<std::pair<Scalar, int>, int> real_count;
  std::vector<Atom> pairs;
  for (const auto& a : atoms) {
    if (a.pair())
      pairs.push_back(a);
    else
      ++real_count[{a.re, a.size}];
  }
  std::vector<CBlock> base;
  for (const auto& [key, count] : real_count) {
    if (count % 2 != 0) return {};
    for (int k = 0; k < count / 2; ++k) base.push_back(CBlock{key.first, Scalar(0), key.second});
  }
  std::vector<std::vector<CBlock>> out;
  const std::size_t m = pairs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<CBlock> h = base;
    for (std::size_t k = 0; k < m; ++k) h.push_back(CBlock{pairs[k].re, (mask >> k) & 1u ? -pairs[k].im : pairs[k].im, pairs[k].size});
    std::sort(h.begin(), h.end());
    out.push_back(std::move(h));
  }
  return out;
}

Complex trace_of(const std::vector<CBlock>& h) {
  Complex t;
  for (const auto& b : h) {
    t.re += b.re * Scalar(b.size);
    t.im += b.im * Scalar(b.size);
  }
  return t;
}

/// Real-closed sub-multisets of atoms: every subset, with its complement.
void for_each_split(const std::vector<Atom>& atoms, const std::function<void(const std::vector<Atom>&, const std::vector<Atom>&)>& f) {
  const std::size_t m = atoms.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Atom> s, c;
    for (std::size_t k = 0; k < m; ++k) ((mask >> k) & 1u ? s : c).push_back(atoms[k]);
    f(s, c);
  }
}

Scalar real_trace(const std::vector<Atom>& atoms) {
  Scalar t;
  for (const auto& a : atoms) t += a.re * Scalar(a.dim());
  return t;
}

std::vector<Atom> shifted(std::vector<Atom> atoms, const Scalar& by, bool negate) {
  for (auto& a : atoms) a.re = negate ? -a.re : a.re + by;
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<Atom> semisimple(const std::vector<Atom>& atoms) {
  std::vector<Atom> out;
  for (const auto& a : atoms)
    for (int k = 0; k < a.size; ++k) out.push_back(Atom{a.re, a.im, 1});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_su3_half(const std::vector<CBlock>& h) {
  for (const auto& b : h)
    if (b.size != 1 || !b.re.is_zero()) return false;
  const Complex t = trace_of(h);
  return t.re.is_zero() && t.im.is_zero();
}

/// Complex Jordan types of the four (2,4) shapes.
bool is_su12_half(const std::vector<CBlock>& h) {
  if (is_su3_half(h)) return true;
  if (h.size() == 1) return h[0].size == 3 && h[0].re.is_zero() && h[0].im.is_zero();
  if (h.size() == 2) {
    for (int k = 0; k < 2; ++k) {
      const CBlock& big = h[k];
      const CBlock& small = h[1 - k];
      if (big.size == 2 && small.size == 1 && big.re.is_zero() && small.re.is_zero() && small.im == Scalar(-2) * big.im)
        return true;
    }
    return false;
  }
  std::vector<std::size_t> idx = {0, 1, 2};
  for (const auto& b : h)
    if (b.size != 1) return false;
  do {
    const CBlock& x = h[idx[0]];
    const CBlock& y = h[idx[1]];
    const CBlock& z = h[idx[2]];
    if (!x.re.is_zero() && y.re == -x.re && y.im == x.im && z.re.is_zero() && z.im == Scalar(-2) * x.im) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

DecisionResult from_eigen(Decision d, std::string detail) { return DecisionResult{d, "eigen-data", std::move(detail)}; }

DecisionResult calibrated_from_eigen(const std::vector<Atom>& atoms, Mode mode) {
  switch (mode) {
    case Mode::g2:
    case Mode::g2star_24: {
      for (const auto& h : conjugate_halves(atoms)) {
        const Complex t = trace_of(h);
        if (t.re.is_zero() && t.im.is_zero()) return from_eigen(Decision::yes, "Jordan form splits as J and its conjugate with tr J = 0");
      }
      return from_eigen(Decision::no, "no splitting into a trace-free complex Jordan form and its conjugate");
    }
    case Mode::g2star_33: {
      bool found = false;
      for_each_split(atoms, [&](const std::vector<Atom>& s, const std::vector<Atom>& c) {
        if (!found && total_dim(s) == 3 && real_trace(s).is_zero() && real_trace(c).is_zero()) found = true;
      });
      if (found) return from_eigen(Decision::yes, "Jordan form splits into two real trace-free three-dimensional parts");
      return from_eigen(Decision::no, "no splitting into two real trace-free three-dimensional parts");
    }
    case Mode::g2star_deg: {
      bool block_split = false, value_split = false;
      const std::vector<Atom> values = semisimple(atoms);
      for_each_split(atoms, [&](const std::vector<Atom>& s, const std::vector<Atom>& c) {
        if (block_split || total_dim(s) != 3) return;
        if (shifted(s, -real_trace(s), false) == c) block_split = true;
      });
      if (block_split) return from_eigen(Decision::yes, "Jordan form is J(A) together with J(A - tr(A) I)");
      for_each_split(values, [&](const std::vector<Atom>& s, const std::vector<Atom>& c) {
        if (value_split || total_dim(s) != 3) return;
        if (shifted(s, -real_trace(s), false) == c) value_split = true;
      });
      if (!value_split) return from_eigen(Decision::no, "spectrum is not of the form S together with S - tr(S)");
      return DecisionResult{Decision::undecidable, "eigen-data", "spectrum admits a splitting but the Jordan structure requires a non-zero B"};
    }
  }
  return {};
}

DecisionResult parallel_from_eigen(const std::vector<Atom>& atoms, Mode mode) {
  switch (mode) {
    case Mode::g2:
      for (const auto& h : conjugate_halves(atoms))
        if (is_su3_half(h)) return from_eigen(Decision::yes, "Jordan form of an element of su(3)");
      return from_eigen(Decision::no, "not the Jordan form of an element of su(3)");
    case Mode::g2star_24:
      for (const auto& h : conjugate_halves(atoms))
        if (is_su12_half(h)) return from_eigen(Decision::yes, "Jordan form of one of the four su(1,2) shapes");
      return from_eigen(Decision::no, "not the Jordan form of one of the four su(1,2) shapes");
    case Mode::g2star_33: {
      bool found = false;
      for_each_split(atoms, [&](const std::vector<Atom>& s, const std::vector<Atom>& c) {
        if (!found && total_dim(s) == 3 && real_trace(s).is_zero() && shifted(s, Scalar(0), true) == c) found = true;
      });
      if (found) return from_eigen(Decision::yes, "Jordan form is J(A) together with J(-A), tr A = 0");
      return from_eigen(Decision::no, "Jordan form is not J(A) together with J(-A)");
    }
    case Mode::g2star_deg:
      throw DomainError("parallel decision with degenerate ideal is not a non-degenerate mode");
  }
  return {};
}

bool all_even_multiplicity(const SegrePartition& p) {
  std::map<int, int> count;
  for (int k : p.parts) ++count[k];
  for (const auto& [k, c] : count)
    if (c % 2 != 0) return false;
  return true;
}

bool splits_into_threes(const SegrePartition& p) {
  const std::size_t m = p.parts.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    int s = 0;
    for (std::size_t k = 0; k < m; ++k)
      if ((mask >> k) & 1u) s += p.parts[k];
    if (s == 3) return true;
  }
  return false;
}

struct ModelPair {
  KForm rho, sigma;
};

KForm calibrated_model(Mode mode) {
  switch (mode) {
    case Mode::g2:
    case Mode::g2star_24:
      return model_rho(-1);
    case Mode::g2star_33:
      return model_rho(1);
    case Mode::g2star_deg:
      return model_rho0();
  }
  return model_rho0();
}

ModelPair parallel_model(Mode mode) {
  switch (mode) {
    case Mode::g2:
      return {model_rho(-1), model_half_omega_squared(-1)};
    case Mode::g2star_24:
      return {model_rho(-1), model_half_omega_squared(1)};
    case Mode::g2star_33:
      return {model_rho(1), model_half_omega_squared(-1) * Scalar(-1)};
    case Mode::g2star_deg:
      break;
  }
  throw DomainError("parallel decision with degenerate ideal is not a non-degenerate mode");
}

std::optional<Matrix> transported(const Matrix& ad, const DecisionInput& in) {
  if (!in.basis) return std::nullopt;
  require_square(*in.basis, 6, "basis change");
  if (determinant(*in.basis).is_zero()) throw DomainError("basis change is singular");
  return inverse(*in.basis) * ad * *in.basis;
}

void check_input(const AlmostAbelianAlgebra& g) {
  if (g.dim() != 7) throw DimensionError("decisions are for seven-dimensional algebras");
}

std::string nilpotent_detail(const SegrePartition& p) { return "Jordan type " + p.to_string(); }

Scalar parameter(std::mt19937_64& rng, int lo, int hi) { return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng)); }

std::string join_dims(const std::set<std::size_t>& dims) {
  if (dims.empty()) return "-";
  std::string out;
  for (auto d : dims) {
    if (!out.empty()) out += ", ";
    out += std::to_string(d);
  }
  return out;
}

std::string bracket_string(const NilpotentCatalogEntry& e) {
  std::string out = "(";
  for (std::size_t k = 0; k < e.dual_brackets.size(); ++k) {
    if (k) out += ",";
    out += e.dual_brackets[k];
  }
  return out + ")";
}

}  // namespace

Matrix rotation_block(const Scalar& a, const Scalar& b) { return Matrix{{a, b}, {-b, a}}; }

Matrix witt_parallel_matrix(const Matrix& A, const Matrix& B, const Vector& v, const Vector& w) {
  require_square(A, 2, "A");
  require_square(B, 2, "B");
  if (v.size() != 2 || w.size() != 2) throw DimensionError("v and w must have two entries");
  const Scalar trA = A.trace();
  Matrix m(6, 6);
  m(0, 0) = -trA;
  m(0, 1) = -B.trace();
  m(0, 2) = v[0];
  m(0, 3) = v[1];
  m(0, 4) = w[0];
  m(0, 5) = w[1];
  m(1, 4) = v[0];
  m(1, 5) = v[1];
  m(2, 1) = v[1];
  m(3, 1) = -v[0];
  m.set_block(2, 2, A - Matrix::identity(2) * trA);
  m.set_block(2, 4, B);
  m.set_block(4, 4, A);
  return m;
}

Matrix nilpotent_parallel_matrix(const NilpotentParallelParams& p) {
  if (p.delta < -1 || p.delta > 1) throw DomainError("delta must be -1, 0 or 1");
  Matrix N(2, 2);
  N(0, 1) = p.delta;
  return witt_parallel_matrix(N, p.B, p.v, p.w);
}

std::optional<G2StarDegParams> is_parallel_witt(const Matrix& m) {
  require_square(m, 6, "ad");
  G2StarDegParams p{m.block(4, 4, 2, 2), m.block(2, 4, 2, 2), Vector{m(0, 2), m(0, 3)}, Vector{m(0, 4), m(0, 5)}};
  if (witt_parallel_matrix(p.A, p.B, p.v, p.w) != m) return std::nullopt;
  return p;
}

Instance build_instance(const FamilyParams& p) {
  return std::visit([](const auto& q) { return build(q); }, p);
}

Mode parse_mode(std::string_view s) {
  if (s == "g2") return Mode::g2;
  if (s == "g2star_24") return Mode::g2star_24;
  if (s == "g2star_33") return Mode::g2star_33;
  if (s == "g2star_deg") return Mode::g2star_deg;
  throw ParseError("unknown mode '" + std::string(s) + "'");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::g2:
      return "g2";
    case Mode::g2star_24:
      return "g2star_24";
    case Mode::g2star_33:
      return "g2star_33";
    case Mode::g2star_deg:
      return "g2star_deg";
  }
  return "";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "true";
    case Decision::no:
      return "false";
    case Decision::undecidable:
      return "undecidable";
  }
  return "";
}

bool eigen_data_matches(const Matrix& m, const std::vector<EigenBlock>& blocks) {
  const std::size_t n = m.rows();
  const std::vector<Atom> atoms = atoms_of(blocks);
  if (total_dim(atoms) != static_cast<int>(n)) return false;
  std::set<std::pair<Scalar, Scalar>> eigenvalues;
  for (const auto& a : atoms) eigenvalues.insert({a.re, a.im});
  const Matrix I = Matrix::identity(n);
  for (const auto& [re, im] : eigenvalues) {
    const Matrix shifted_m = m - I * re;
    const Matrix q = im.is_zero() ? shifted_m : shifted_m * shifted_m + I * (im * im);
    const int weight = im.is_zero() ? 1 : 2;
    Matrix power = q;
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t nullity = 0;
      for (const auto& a : atoms)
        if (a.re == re && a.im == im) nullity += static_cast<std::size_t>(weight * std::min<int>(a.size, static_cast<int>(k)));
      if (rank(power) != n - nullity) return false;
      power = power * q;
    }
  }
  return true;
}

DecisionResult calibrated_decision(const AlmostAbelianAlgebra& g, Mode mode, const DecisionInput& in) {
  check_input(g);
  const Matrix& ad = g.ad();
  if (g.is_nilpotent()) {
    const SegrePartition p = segre_partition(ad);
    bool ok = false;
    switch (mode) {
      case Mode::g2:
      case Mode::g2star_24:
        ok = all_even_multiplicity(p);
        break;
      case Mode::g2star_33:
        ok = splits_into_threes(p);
        break;
      case Mode::g2star_deg:
        ok = p != make_partition({3, 1, 1, 1});
        break;
    }
    return DecisionResult{ok ? Decision::yes : Decision::no, "nilpotent", nilpotent_detail(p)};
  }
  const KForm rho = calibrated_model(mode);
  if (in_stabilizer(ad, rho)) return DecisionResult{Decision::yes, "certificate", "ad lies in the stabilizer of the model form"};
  if (const auto moved = transported(ad, in); moved && in_stabilizer(*moved, rho))
    return DecisionResult{Decision::yes, "certificate", "P^{-1} ad P lies in the stabilizer of the model form"};
  if (in.eigen) {
    if (!eigen_data_matches(ad, *in.eigen)) throw DomainError("supplied eigen-data is not the Jordan form of ad");
    return calibrated_from_eigen(atoms_of(*in.eigen), mode);
  }
  return DecisionResult{Decision::undecidable, "none", "non-nilpotent input needs eigen-data or a basis certificate"};
}

DecisionResult parallel_nondeg_decision(const AlmostAbelianAlgebra& g, Mode mode, const DecisionInput& in) {
  check_input(g);
  const ModelPair model = parallel_model(mode);
  const Matrix& ad = g.ad();
  if (g.is_nilpotent()) {
    const SegrePartition p = segre_partition(ad);
    bool ok = p == make_partition({1, 1, 1, 1, 1, 1});
    if (mode != Mode::g2) ok = ok || p == make_partition({2, 2, 1, 1}) || p == make_partition({3, 3});
    return DecisionResult{ok ? Decision::yes : Decision::no, "nilpotent", nilpotent_detail(p)};
  }
  const auto certified = [&](const Matrix& m) { return in_stabilizer(m, model.rho) && in_stabilizer(m, model.sigma); };
  if (certified(ad)) return DecisionResult{Decision::yes, "certificate", "ad lies in the joint stabilizer of the model pair"};
  if (const auto moved = transported(ad, in); moved && certified(*moved))
    return DecisionResult{Decision::yes, "certificate", "P^{-1} ad P lies in the joint stabilizer of the model pair"};
  if (in.eigen) {
    if (!eigen_data_matches(ad, *in.eigen)) throw DomainError("supplied eigen-data is not the Jordan form of ad");
    return parallel_from_eigen(atoms_of(*in.eigen), mode);
  }
  return DecisionResult{Decision::undecidable, "none", "non-nilpotent input needs eigen-data or a basis certificate"};
}

Matrix NilpotentWitness::assembled() const {
  return Matrix::from_blocks({{A, Matrix(3, 3)}, {B, A - Matrix::identity(3) * A.trace()}});
}

std::optional<NilpotentWitness> nilpotent_witnesses(const SegrePartition& p) {
  if (p.total() != 6) throw DomainError("witnesses are for partitions of 6");
  Matrix J2(3, 3), J3(3, 3);
  J2(0, 1) = 1;
  J3(0, 1) = 1;
  J3(1, 2) = 1;
  const auto col = [](std::initializer_list<std::tuple<int, int, int>> entries) {
    Matrix B(3, 3);
    for (const auto& [r, c, v] : entries) B(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
    return B;
  };
  const Matrix zero(3, 3);
  const std::vector<int>& k = p.parts;
  using V = std::vector<int>;
  if (k == V{1, 1, 1, 1, 1, 1}) return NilpotentWitness{zero, zero};
  if (k == V{2, 1, 1, 1, 1}) return NilpotentWitness{zero, col({{1, 0, 1}})};
  if (k == V{2, 2, 1, 1}) return NilpotentWitness{zero, col({{1, 0, 1}, {2, 1, 1}})};
  if (k == V{2, 2, 2}) return NilpotentWitness{zero, col({{0, 0, 1}, {1, 1, 1}, {2, 2, -2}})};
  if (k == V{3, 2, 1}) return NilpotentWitness{J2, col({{2, 0, 1}})};
  if (k == V{4, 1, 1}) return NilpotentWitness{J2, col({{1, 0, 1}})};
  if (k == V{4, 2}) return NilpotentWitness{J2, col({{1, 0, 1}, {1, 1, -1}, {2, 2, 1}})};
  if (k == V{3, 3}) return NilpotentWitness{J3, zero};
  if (k == V{5, 1}) return NilpotentWitness{J3, col({{1, 0, 1}})};
  if (k == V{6}) return NilpotentWitness{J3, col({{2, 0, 1}})};
  return std::nullopt;
}

NilpotentReport nilpotent_parallel_report(const NilpotentParallelParams& p) {
  NilpotentReport r;
  r.params = p;
  const Scalar& b11 = p.B(0, 0);
  const Scalar& b12 = p.B(0, 1);
  const Scalar& b21 = p.B(1, 0);
  const Scalar& b22 = p.B(1, 1);
  const Scalar& v1 = p.v[0];
  const Scalar& v2 = p.v[1];
  const Scalar& w1 = p.w[0];
  const Scalar& w2 = p.w[1];
  const Scalar trB = p.B.trace();
  const Scalar delta(p.delta);

  if (p.delta == 0)
    r.hol_dim = 0;
  else if (!b21.is_zero())
    r.hol_dim = 2;
  else if (b11 != b22)
    r.hol_dim = 1;
  else
    r.hol_dim = 0;
  r.flat = r.hol_dim == 0;
  r.locally_symmetric = p.delta == 0 || b21.is_zero();

  if (p.delta != 0) {
    if (!v1.is_zero())
      r.algebra = "n_{7,4}";
    else if (!b21.is_zero())
      r.algebra = trB != -delta * v2 * v2 ? "n_{7,3}" : "A_{5,2}⊕R^2";
    else if (w1 != delta * b11 * v2 || trB != -delta * v2 * v2)
      r.algebra = "n_{6,1}⊕R";
    else
      r.algebra = "A_{5,1}⊕R^2";
  } else if (!v1.is_zero() || !v2.is_zero()) {
    const Matrix m{{-trB, v1, v2, w1, w2}, {0, 0, 0, v1, v2}, {v2, 0, 0, b11, b12}, {-v1, 0, 0, b21, b22}};
    r.algebra = rank(m) == 4 ? "n_{7,2}" : "n_{6,1}⊕R";
  } else {
    const Matrix m{{-trB, w1, w2}, {0, b11, b12}, {0, b21, b22}};
    static const char* names[] = {"R^7", "h_3⊕R^4", "A_{5,1}⊕R^2", "n_{7,1}"};
    r.algebra = names[rank(m)];
  }
  return r;
}

NilpotentReport nilpotent_pipeline_report(const NilpotentParallelParams& p) {
  const Instance inst = build_instance(p);
  const G2EpsStructure s = certify_g2(inst.phi);
  const CurvatureReport rep = analyze(inst.algebra, s.exact_metric(), inst.phi);
  NilpotentReport r;
  r.params = p;
  r.algebra = identify_nilpotent(inst.algebra).name;
  r.hol_dim = rep.hol_dim();
  r.flat = rep.is_flat;
  r.locally_symmetric = rep.is_locally_symmetric;
  return r;
}

std::vector<NilpotentParallelParams> nilpotent_grid(int bound) {
  std::vector<NilpotentParallelParams> out;
  const int span = 2 * bound + 1;
  long total = 1;
  for (int k = 0; k < 8; ++k) total *= span;
  for (int delta = -1; delta <= 1; ++delta)
    for (long code = 0; code < total; ++code) {
      int e[8];
      long c = code;
      for (int k = 0; k < 8; ++k) {
        e[k] = static_cast<int>(c % span) - bound;
        c /= span;
      }
      NilpotentParallelParams p;
      p.delta = delta;
      p.B = Matrix{{e[0], e[1]}, {e[2], e[3]}};
      p.v = Vector{e[4], e[5]};
      p.w = Vector{e[6], e[7]};
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<std::pair<std::string, NilpotentParallelParams>> delta_zero_witnesses() {
  const auto make = [](Matrix B, Vector v, Vector w) {
    NilpotentParallelParams p;
    p.B = std::move(B);
    p.v = std::move(v);
    p.w = std::move(w);
    return p;
  };
  return {
      {"n_{7,2}", make(Matrix{{1, 0}, {0, 0}}, Vector{1, 1}, Vector{0, 0})},
      {"n_{6,1}⊕R", make(Matrix(2, 2), Vector{1, 1}, Vector{0, 0})},
      {"n_{7,1}", make(Matrix{{1, 0}, {0, 1}}, Vector{0, 0}, Vector{0, 0})},
      {"A_{5,1}⊕R^2", make(Matrix{{1, 0}, {0, -1}}, Vector{0, 0}, Vector{0, 0})},
      {"h_3⊕R^4", make(Matrix(2, 2), Vector{0, 0}, Vector{1, 0})},
      {"R^7", make(Matrix(2, 2), Vector{0, 0}, Vector{0, 0})},
  };
}

std::vector<NilpotentParallelParams> nilpotent_sample(int bound, std::size_t count, std::uint64_t seed) {
  std::vector<NilpotentParallelParams> out;
  for (auto& [name, p] : delta_zero_witnesses()) out.push_back(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-bound, bound), delta(-1, 1);
  while (out.size() < count) {
    NilpotentParallelParams p;
    p.delta = delta(rng);
    // Bias towards vanishing entries so that every case of the rules occurs.
    const auto draw = [&] { return std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? 0 : entry(rng); };
    p.B = Matrix{{draw(), draw()}, {draw(), draw()}};
    p.v = Vector{draw(), draw()};
    p.w = Vector{draw(), draw()};
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Table1Row> regenerate_table1(int bound) {
  std::map<std::string, std::set<std::size_t>> dims;
  std::map<std::string, bool> nonflat_sym;
  for (const auto& p : nilpotent_grid(bound)) {
    const NilpotentReport r = nilpotent_parallel_report(p);
    dims[r.algebra].insert(r.hol_dim);
    if (!r.flat && r.locally_symmetric) nonflat_sym[r.algebra] = true;
  }
  std::vector<Table1Row> rows;
  for (const auto& e : nilpotent_catalog()) {
    const AlmostAbelianAlgebra g = catalog_algebra(e);
    std::set<std::size_t> d = dims[e.name];
    // Non-degenerate parallel structures are flat.
    for (Mode m : {Mode::g2star_24, Mode::g2star_33})
      if (parallel_nondeg_decision(g, m).decision == Decision::yes) d.insert(0);
    rows.push_back(Table1Row{e.name, bracket_string(e), d.empty() ? "no" : "yes", join_dims(d),
                             nonflat_sym[e.name] ? "yes" : "no"});
  }
  return rows;
}

std::vector<Table1Row> expected_table1() {
  struct Reference {
    const char* name;
    const char* parallel;
    const char* dims;
    const char* sym;
  };
  static const Reference table[] = {
      {"n_{7,1}", "yes", "0", "no"},         {"n_{7,2}", "yes", "0", "no"},       {"n_{7,3}", "yes", "2", "no"},
      {"n_{7,4}", "yes", "0, 1, 2", "yes"},  {"n_{6,1}⊕R", "yes", "0, 1", "yes"}, {"n_{6,2}⊕R", "no", "-", "no"},
      {"A_{5,1}⊕R^2", "yes", "0, 1", "yes"}, {"A_{5,2}⊕R^2", "yes", "2", "no"},   {"A_{4,1}⊕R^3", "no", "-", "no"},
      {"h_3⊕R^4", "yes", "0", "no"},         {"R^7", "yes", "0", "no"},
  };
  std::vector<Table1Row> rows;
  for (const auto& t : table) rows.push_back(Table1Row{t.name, bracket_string(catalog_entry(t.name)), t.parallel, t.dims, t.sym});
  return rows;
}

std::vector<std::string> calibrated_nilpotent_list(Mode mode) {
  std::vector<std::string> out;
  for (const auto& e : nilpotent_catalog())
    if (calibrated_decision(catalog_algebra(e), mode).decision == Decision::yes) out.push_back(e.name);
  return out;
}

std::vector<std::string> parallel_nondeg_nilpotent_list(Mode mode) {
  std::vector<std::string> out;
  for (const auto& e : nilpotent_catalog())
    if (parallel_nondeg_decision(catalog_algebra(e), mode).decision == Decision::yes) out.push_back(e.name);
  return out;
}

FamilyParams random_nondeg_params(int family, std::mt19937_64& rng) {
  switch (family) {
    case 0:
      return G2Su3Params{parameter(rng, -3, 3), parameter(rng, -3, 3)};
    case 1: {
      G2Star24Params p;
      p.shape = std::uniform_int_distribution<int>(1, 4)(rng);
      p.a = parameter(rng, -3, 3);
      p.b = parameter(rng, -3, 3);
      if (p.shape == 1 && p.a.is_zero()) p.a = 1;
      return p;
    }
    case 2: {
      Matrix A(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) A(r, c) = parameter(rng, -2, 2);
      A(2, 2) = -A(0, 0) - A(1, 1);
      return G2Star33Params{A};
    }
    default:
      throw DomainError("family index must be 0, 1 or 2");
  }
}

}  // namespace g2aa
