#ifndef G2AA_JSON_IO_HPP
#define G2AA_JSON_IO_HPP

#include <json.hpp>

#include "g2aa/classify.hpp"
#include "g2aa/exterior.hpp"
#include "g2aa/g2.hpp"
#include "g2aa/geometry.hpp"
#include "g2aa/liealg.hpp"
#include "g2aa/matrix.hpp"

namespace g2aa {

using Json = nlohmann::ordered_json;

/// Scalars are written as strings ("-1/2+3*sqrt2"); integers are accepted on input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"dim":7,"degree":3,"terms":[{"idx":[1,2,7],"coef":"-1/2"},...]}; on
/// input {"dim":7,"expr":"-e156-e236+..."} is accepted as well.
Json form_to_json(const KForm& a);
KForm form_from_json(const Json& j);

/// {"n":7,"ad":[[...6 x 6...]]}
Json algebra_to_json(const AlmostAbelianAlgebra& g);
AlmostAbelianAlgebra algebra_from_json(const Json& j);

/// Curvature endomorphisms keyed by "i,j".
Json curvature_to_json(const CurvatureReport& r);
CurvatureReport curvature_from_json(const Json& j);

Json certificate_to_json(const G2EpsStructure& s);
G2EpsStructure certificate_from_json(const Json& j);

Json nilpotent_params_to_json(const NilpotentParallelParams& p);
NilpotentParallelParams nilpotent_params_from_json(const Json& j);
Json nilpotent_report_to_json(const NilpotentReport& r);
NilpotentReport nilpotent_report_from_json(const Json& j);

Json decision_to_json(const DecisionResult& d);
DecisionResult decision_from_json(const Json& j);
/// [{"re":"0","im":"1","size":2},...]
std::vector<EigenBlock> eigen_from_json(const Json& j);

/// Parses a file; throws ParseError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace g2aa

#endif  // G2AA_JSON_IO_HPP
