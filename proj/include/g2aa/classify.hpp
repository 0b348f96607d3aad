#ifndef G2AA_CLASSIFY_HPP
#define G2AA_CLASSIFY_HPP

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "g2aa/exterior.hpp"
#include "g2aa/liealg.hpp"
#include "g2aa/matrix.hpp"

namespace g2aa {

/// M_{a,b} = [[a, b], [-b, a]].
Matrix rotation_block(const Scalar& a, const Scalar& b);

/// Parallel G2: ad = diag(M_{0,a}, M_{0,b}, M_{0,-a-b}) with phi_{-1}.
struct G2Su3Params {
  Scalar a, b;
};

/// Parallel G2* with u of signature (2,4). shape 1: diag(M_{a,b}, M_{-a,b},
/// M_{0,-2b}) with a != 0; shape 2: diag(M_{0,a}, M_{0,b}, M_{0,-(a+b)});
/// shape 3: [[M_{0,a}, I, 0], [0, M_{0,a}, 0], [0, 0, M_{0,-2a}]]; shape 4:
/// the nilpotent [[0, I, 0], [0, 0, I], [0, 0, 0]] (a, b unused).
struct G2Star24Params {
  int shape = 2;
  Scalar a, b;
};

/// Parallel G2* with u of signature (3,3): ad has complex Jordan form
/// J(A) together with J(A) with negated diagonal, for trace-free real A.
struct G2Star33Params {
  Matrix A;
};

/// Parallel G2* with degenerate u, in a Witt basis.
struct G2StarDegParams {
  Matrix A, B;  ///< 2 x 2
  Vector v, w;  ///< length 2
};

/// Nilpotent degenerate case: A = N = [[0, delta], [0, 0]].
struct NilpotentParallelParams {
  int delta = 0;
  Matrix B = Matrix(2, 2);
  Vector v = Vector(2);
  Vector w = Vector(2);
};

using FamilyParams = std::variant<G2Su3Params, G2Star24Params, G2Star33Params, G2StarDegParams, NilpotentParallelParams>;

struct Instance {
  AlmostAbelianAlgebra algebra;
  KForm phi;
  std::string family;
};

/// Builds the algebra and structure of a parallel family and verifies
/// d phi = 0 and d star phi = 0; throws DomainError on invalid parameters.
Instance build_instance(const FamilyParams& p);

/// The ad matrix of a parallel G2* structure with degenerate ideal in a
/// Witt basis, from (A, B, v, w).
Matrix witt_parallel_matrix(const Matrix& A, const Matrix& B, const Vector& v, const Vector& w);
Matrix nilpotent_parallel_matrix(const NilpotentParallelParams& p);

/// Pattern match of a 6 x 6 matrix against the Witt-basis parallel shape.
std::optional<G2StarDegParams> is_parallel_witt(const Matrix& m);

enum class Mode { g2, g2star_24, g2star_33, g2star_deg };
Mode parse_mode(std::string_view s);
std::string to_string(Mode m);

enum class Decision { yes, no, undecidable };
std::string to_string(Decision d);

/// One complex Jordan block re + i*im of the given size. A block with
/// im != 0 stands for itself and its conjugate block.
struct EigenBlock {
  Scalar re, im;
  int size = 1;
};

struct DecisionInput {
  std::optional<std::vector<EigenBlock>> eigen;
  /// Basis change P: the certificate is checked on P^{-1} ad P.
  std::optional<Matrix> basis;
};

struct DecisionResult {
  Decision decision = Decision::undecidable;
  std::string method;  ///< nilpotent, certificate, eigen-data or none
  std::string detail;
};

/// Existence of a calibrated structure of the given kind.
DecisionResult calibrated_decision(const AlmostAbelianAlgebra& g, Mode mode, const DecisionInput& in = {});
/// Existence of a parallel structure with non-degenerate ideal.
DecisionResult parallel_nondeg_decision(const AlmostAbelianAlgebra& g, Mode mode, const DecisionInput& in = {});

/// Whether the eigen-data is exactly the complex Jordan form of m.
bool eigen_data_matches(const Matrix& m, const std::vector<EigenBlock>& blocks);

struct NilpotentWitness {
  Matrix A, B;  ///< 3 x 3, B trace-free
  Matrix assembled() const;  ///< [[A, 0], [B, A - tr(A) I]]
};

/// Witness pair realizing the partition inside the stabilizer of rho_0;
/// none exists for (3,1,1,1).
std::optional<NilpotentWitness> nilpotent_witnesses(const SegrePartition& p);

struct NilpotentReport {
  std::string algebra;
  std::size_t hol_dim = 0;
  bool locally_symmetric = false;
  bool flat = false;
  NilpotentParallelParams params;

  bool same_outcome(const NilpotentReport& o) const {
    return algebra == o.algebra && hol_dim == o.hol_dim && locally_symmetric == o.locally_symmetric && flat == o.flat;
  }
};

/// Closed-form holonomy and algebra type of the nilpotent degenerate family.
NilpotentReport nilpotent_parallel_report(const NilpotentParallelParams& p);
/// Same quantities computed through certification, curvature and holonomy.
NilpotentReport nilpotent_pipeline_report(const NilpotentParallelParams& p);

/// All parameter points with entries in {-bound..bound} (delta in {-1,0,1}).
std::vector<NilpotentParallelParams> nilpotent_grid(int bound);
/// Deterministic subsample of the grid with at least `count` points, always
/// including the witness parameters of the delta = 0 case.
std::vector<NilpotentParallelParams> nilpotent_sample(int bound, std::size_t count, std::uint64_t seed);
/// Parameters realizing each of the six delta = 0 algebras.
std::vector<std::pair<std::string, NilpotentParallelParams>> delta_zero_witnesses();

struct Table1Row {
  std::string algebra;
  std::string lie_bracket;
  std::string parallel;         ///< yes / no
  std::string hol_dims;         ///< "0, 1, 2" or "-"
  std::string nonflat_loc_sym;  ///< yes / no
  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// Rows regenerated from closed-form sweeps over the degenerate family with
/// entries in {-bound..bound} and the flatness of non-degenerate parallel structures.
std::vector<Table1Row> regenerate_table1(int bound = 1);
/// The reference table, used only as a diff target.
std::vector<Table1Row> expected_table1();

/// Lists of nilpotent algebras admitting the structure, from the decisions.
std::vector<std::string> calibrated_nilpotent_list(Mode mode);
std::vector<std::string> parallel_nondeg_nilpotent_list(Mode mode);

/// Random parameters of the non-degenerate families (0: G2, 1: (2,4), 2: (3,3)).
FamilyParams random_nondeg_params(int family, std::mt19937_64& rng);

}  // namespace g2aa

#endif  // G2AA_CLASSIFY_HPP
