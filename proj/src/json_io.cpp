#include "g2aa/json_io.hpp"

#include <fstream>

#include "g2aa/error.hpp"

namespace g2aa {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vector out;
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

Json signature_to_json(const Signature& s) { return Json::array({s.p, s.q, s.z}); }

Signature signature_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("signature must be [p,q,z]");
  return Signature{j[0].get<std::size_t>(), j[1].get<std::size_t>(), j[2].get<std::size_t>()};
}

FrameKind frame_kind_from_string(const std::string& s) {
  if (s == "adapted") return FrameKind::adapted;
  if (s == "witt") return FrameKind::witt;
  if (s == "generic") return FrameKind::generic;
  throw ParseError("unknown frame kind '" + s + "'");
}

Decision decision_from_string(const std::string& s) {
  if (s == "true") return Decision::yes;
  if (s == "false") return Decision::no;
  if (s == "undecidable") return Decision::undecidable;
  throw ParseError("unknown decision '" + s + "'");
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r]);
    if (row.size() != cols) throw ParseError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json form_to_json(const KForm& a) {
  Json terms = Json::array();
  for (const auto& [idx, c] : a.terms()) terms.push_back(Json{{"idx", idx}, {"coef", scalar_to_json(c)}});
  return Json{{"dim", a.dim()}, {"degree", a.degree()}, {"terms", terms}};
}

KForm form_from_json(const Json& j) {
  const auto dim = get_as<std::size_t>(j, "dim");
  if (j.contains("expr")) {
    const KForm a = KForm::parse(dim, get_as<std::string>(j, "expr"));
    if (j.contains("degree") && get_as<std::size_t>(j, "degree") != a.degree()) throw ParseError("degree does not match the expression");
    return a;
  }
  const auto degree = get_as<std::size_t>(j, "degree");
  std::vector<std::pair<Indices, Scalar>> terms;
  for (const auto& t : field(j, "terms")) {
    const auto idx = get_as<Indices>(t, "idx");
    if (idx.size() != degree) throw ParseError("term index list does not match the degree");
    terms.emplace_back(idx, scalar_from_json(field(t, "coef")));
  }
  return KForm::from_terms(dim, degree, terms);
}

Json algebra_to_json(const AlmostAbelianAlgebra& g) { return Json{{"n", g.dim()}, {"ad", matrix_to_json(g.ad())}}; }

AlmostAbelianAlgebra algebra_from_json(const Json& j) {
  const auto n = get_as<std::size_t>(j, "n");
  const Matrix ad = matrix_from_json(field(j, "ad"));
  if (ad.rows() + 1 != n || ad.cols() + 1 != n) throw DimensionError("ad must be (n-1) x (n-1)");
  return AlmostAbelianAlgebra(ad);
}

Json curvature_to_json(const CurvatureReport& r) {
  Json R = Json::object();
  for (const auto& [ij, m] : r.R) R[std::to_string(ij.first) + "," + std::to_string(ij.second)] = matrix_to_json(m);
  Json hol = Json::array();
  for (const auto& h : r.hol_basis) hol.push_back(matrix_to_json(h));
  Json out{{"dim", r.dim()},
           {"R", R},
           {"ricci", matrix_to_json(r.ricci)},
           {"hol_dim", r.hol_dim()},
           {"hol_basis", hol},
           {"flat", r.is_flat},
           {"ricci_flat", r.is_ricci_flat},
           {"locally_symmetric", r.is_locally_symmetric},
           {"hol_abelian", r.hol_abelian}};
  out["hol_annihilates_phi"] = r.hol_annihilates_phi ? Json(*r.hol_annihilates_phi) : Json(nullptr);
  return out;
}

CurvatureReport curvature_from_json(const Json& j) {
  CurvatureReport r;
  for (const auto& [key, value] : field(j, "R").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("curvature key must be 'i,j'");
    const int i = std::stoi(key.substr(0, comma));
    const int k = std::stoi(key.substr(comma + 1));
    r.R.emplace(std::make_pair(i, k), matrix_from_json(value));
  }
  r.ricci = matrix_from_json(field(j, "ricci"));
  for (const auto& h : field(j, "hol_basis")) r.hol_basis.push_back(matrix_from_json(h));
  r.is_flat = get_as<bool>(j, "flat");
  r.is_ricci_flat = get_as<bool>(j, "ricci_flat");
  r.is_locally_symmetric = get_as<bool>(j, "locally_symmetric");
  r.hol_abelian = get_as<bool>(j, "hol_abelian");
  const Json& ann = field(j, "hol_annihilates_phi");
  if (!ann.is_null()) r.hol_annihilates_phi = ann.get<bool>();
  if (get_as<std::size_t>(j, "hol_dim") != r.hol_dim()) throw ParseError("hol_dim does not match hol_basis");
  return r;
}

Json certificate_to_json(const G2EpsStructure& s) {
  Json out{{"structure", s.eps < 0 ? "G2" : "G2*"},
           {"eps", s.eps},
           {"phi", form_to_json(s.phi)},
           {"signature", signature_to_json(s.signature)},
           {"stabilizer_dim", s.stabilizer_dim},
           {"frame_kind", to_string(s.frame_kind)},
           {"bilinear", matrix_to_json(s.bilinear)},
           {"exact", s.exact()}};
  out["metric"] = s.metric ? matrix_to_json(*s.metric) : Json(nullptr);
  out["vol"] = s.vol ? form_to_json(*s.vol) : Json(nullptr);
  out["metric_approx"] = s.metric_approx;
  out["vol_approx"] = s.vol_approx;
  out["fallback_residual"] = s.fallback_residual;
  out["fallback_tolerance"] = kFallbackTolerance;
  return out;
}

G2EpsStructure certificate_from_json(const Json& j) {
  G2EpsStructure s;
  s.phi = form_from_json(field(j, "phi"));
  s.eps = get_as<int>(j, "eps");
  s.signature = signature_from_json(field(j, "signature"));
  s.stabilizer_dim = get_as<std::size_t>(j, "stabilizer_dim");
  s.frame_kind = frame_kind_from_string(get_as<std::string>(j, "frame_kind"));
  s.bilinear = matrix_from_json(field(j, "bilinear"));
  if (!field(j, "metric").is_null()) s.metric = matrix_from_json(j.at("metric"));
  if (!field(j, "vol").is_null()) s.vol = form_from_json(j.at("vol"));
  s.metric_approx = get_as<std::vector<double>>(j, "metric_approx");
  s.vol_approx = get_as<double>(j, "vol_approx");
  s.fallback_residual = get_as<double>(j, "fallback_residual");
  return s;
}

Json nilpotent_params_to_json(const NilpotentParallelParams& p) {
  return Json{{"delta", p.delta}, {"B", matrix_to_json(p.B)}, {"v", vector_to_json(p.v)}, {"w", vector_to_json(p.w)}};
}

NilpotentParallelParams nilpotent_params_from_json(const Json& j) {
  NilpotentParallelParams p;
  p.delta = get_as<int>(j, "delta");
  p.B = matrix_from_json(field(j, "B"));
  p.v = vector_from_json(field(j, "v"));
  p.w = vector_from_json(field(j, "w"));
  if (p.B.rows() != 2 || p.B.cols() != 2 || p.v.size() != 2 || p.w.size() != 2)
    throw DimensionError("B must be 2 x 2 and v, w must have two entries");
  return p;
}

Json nilpotent_report_to_json(const NilpotentReport& r) {
  return Json{{"algebra", r.algebra},
              {"hol_dim", r.hol_dim},
              {"locally_symmetric", r.locally_symmetric},
              {"flat", r.flat},
              {"params", nilpotent_params_to_json(r.params)}};
}

NilpotentReport nilpotent_report_from_json(const Json& j) {
  NilpotentReport r;
  r.algebra = get_as<std::string>(j, "algebra");
  r.hol_dim = get_as<std::size_t>(j, "hol_dim");
  r.locally_symmetric = get_as<bool>(j, "locally_symmetric");
  r.flat = get_as<bool>(j, "flat");
  r.params = nilpotent_params_from_json(field(j, "params"));
  return r;
}

Json decision_to_json(const DecisionResult& d) {
  return Json{{"decision", to_string(d.decision)}, {"method", d.method}, {"detail", d.detail}};
}

DecisionResult decision_from_json(const Json& j) {
  return DecisionResult{decision_from_string(get_as<std::string>(j, "decision")), get_as<std::string>(j, "method"),
                        get_as<std::string>(j, "detail")};
}

std::vector<EigenBlock> eigen_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("eigen-data must be an array of blocks");
  std::vector<EigenBlock> out;
  for (const auto& b : j) {
    EigenBlock e;
    e.re = scalar_from_json(field(b, "re"));
    e.im = b.contains("im") ? scalar_from_json(b.at("im")) : Scalar(0);
    e.size = b.contains("size") ? b.at("size").get<int>() : 1;
    out.push_back(e);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace g2aa
