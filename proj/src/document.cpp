#include "hompois/document.hpp"

#include <json.hpp>
#include <utility>

#include "hompois/errors.hpp"

namespace hompois {

namespace {

using nlohmann::json;

std::string path_join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

Rational parse_scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long>(j.get<long long>()));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const parse_error& e) {
      throw parse_error(path + ": " + e.what());
    }
  }
  throw parse_error(path + ": expected a rational literal");
}

const json& field(const json& j, const std::string& key,
                  const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw parse_error(path_join(path, key) + ": missing field");
  }
  return j.at(key);
}

std::size_t parse_dim(const json& j, const std::string& key,
                      const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_unsigned()) {
    throw parse_error(path_join(path, key) + ": expected a count");
  }
  return v.get<std::size_t>();
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                    const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    throw parse_error(path + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw parse_error(path + "[" + std::to_string(i) + "]: expected " +
                        std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m.at(i, k) = parse_scalar(row.at(k),
                                path + "[" + std::to_string(i) + "][" +
                                    std::to_string(k) + "]");
    }
  }
  return m;
}

Tensor3 parse_tensor(const json& j, std::size_t d0, std::size_t d1,
                     std::size_t d2, const std::string& path) {
  if (!j.is_array() || j.size() != d0) {
    throw parse_error(path + ": expected " + std::to_string(d0) + " slices");
  }
  Tensor3 t(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i) {
    Matrix m = parse_matrix(j.at(i), d1, d2, path + "[" + std::to_string(i) + "]");
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t b = 0; b < d2; ++b) t.at(i, a, b) = m.at(a, b);
    }
  }
  return t;
}

HomAlgebra parse_algebra(const json& j, const std::string& path) {
  const std::size_t n = parse_dim(j, "dim", path);
  Tensor3 product =
      parse_tensor(field(j, "product", path), n, n, n, path_join(path, "product"));
  Matrix alpha =
      parse_matrix(field(j, "alpha", path), n, n, path_join(path, "alpha"));
  return HomAlgebra(n, std::move(product), std::move(alpha));
}

Representation parse_representation(const json& j, const std::string& path) {
  HomAlgebra algebra = parse_algebra(field(j, "algebra", path),
                                     path_join(path, "algebra"));
  const std::size_t n = algebra.dim;
  const std::size_t m = parse_dim(j, "dimv", path);
  Tensor3 rho =
      parse_tensor(field(j, "rho", path), n, m, m, path_join(path, "rho"));
  Tensor3 mu =
      parse_tensor(field(j, "mu", path), n, m, m, path_join(path, "mu"));
  Matrix beta =
      parse_matrix(field(j, "beta", path), m, m, path_join(path, "beta"));
  return Representation(std::move(algebra), m, std::move(rho), std::move(mu),
                        std::move(beta));
}

json scalar_json(const Rational& x) { return json(x.str()); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json tensor_json(const Tensor3& t) {
  json slices = json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    json slice = json::array();
    for (std::size_t a = 0; a < t.dim1(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < t.dim2(); ++b) {
        row.push_back(scalar_json(t.at(i, a, b)));
      }
      slice.push_back(std::move(row));
    }
    slices.push_back(std::move(slice));
  }
  return slices;
}

json algebra_json(const HomAlgebra& a) {
  json j;
  j["dim"] = a.dim;
  j["product"] = tensor_json(a.product);
  j["alpha"] = matrix_json(a.alpha);
  return j;
}

json representation_json(const Representation& r) {
  json j;
  j["algebra"] = algebra_json(r.algebra);
  j["dimv"] = r.dim_v;
  j["rho"] = tensor_json(r.rho);
  j["mu"] = tensor_json(r.mu);
  j["beta"] = matrix_json(r.beta);
  return j;
}

}  // namespace

std::string kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::algebra: return "algebra";
    case DocKind::polarized: return "polarized";
    case DocKind::representation: return "representation";
    case DocKind::matched_pair: return "matched-pair";
    case DocKind::coproduct: return "coproduct";
    case DocKind::r_matrix: return "r-matrix";
    case DocKind::pre_poisson: return "pre-poisson";
    case DocKind::o_operator: return "o-operator";
    case DocKind::form: return "form";
  }
  return "unknown";
}

namespace {

template <typename T>
Document make_doc(DocKind kind, T payload, std::optional<std::string> name) {
  Document d;
  d.kind = kind;
  d.name = std::move(name);
  d.payload = std::move(payload);
  return d;
}

}  // namespace

Document make_document(HomAlgebra a, std::optional<std::string> name) {
  return make_doc(DocKind::algebra, std::move(a), std::move(name));
}
Document make_document(PolarizedAlgebra p, std::optional<std::string> name) {
  return make_doc(DocKind::polarized, std::move(p), std::move(name));
}
Document make_document(Representation r, std::optional<std::string> name) {
  return make_doc(DocKind::representation, std::move(r), std::move(name));
}
Document make_document(MatchedPairData m, std::optional<std::string> name) {
  return make_doc(DocKind::matched_pair, std::move(m), std::move(name));
}
Document make_document(CoproductDoc c, std::optional<std::string> name) {
  return make_doc(DocKind::coproduct, std::move(c), std::move(name));
}
Document make_document(TensorElement r, std::optional<std::string> name) {
  return make_doc(DocKind::r_matrix, std::move(r), std::move(name));
}
Document make_document(PrePoissonStructure p, std::optional<std::string> name) {
  return make_doc(DocKind::pre_poisson, std::move(p), std::move(name));
}
Document make_document(OOperatorData d, std::optional<std::string> name) {
  return make_doc(DocKind::o_operator, std::move(d), std::move(name));
}
Document make_document(BilinearForm b, std::optional<std::string> name) {
  return make_doc(DocKind::form, std::move(b), std::move(name));
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("document must be a JSON object");
  const json& kind_field = field(j, "kind", "");
  if (!kind_field.is_string()) throw parse_error("kind: expected a string");
  const std::string kind = kind_field.get<std::string>();

  Document doc;
  if (j.contains("name") && j.at("name").is_string()) {
    doc.name = j.at("name").get<std::string>();
  }
  if (j.contains("notes") && j.at("notes").is_string()) {
    doc.notes = j.at("notes").get<std::string>();
  }

  if (kind == "algebra") {
    doc.kind = DocKind::algebra;
    doc.payload = parse_algebra(j, "");
  } else if (kind == "polarized") {
    doc.kind = DocKind::polarized;
    const std::size_t n = parse_dim(j, "dim", "");
    Tensor3 bracket = parse_tensor(field(j, "bracket", ""), n, n, n, "bracket");
    Tensor3 circ = parse_tensor(field(j, "circ", ""), n, n, n, "circ");
    Matrix alpha = parse_matrix(field(j, "alpha", ""), n, n, "alpha");
    doc.payload = PolarizedAlgebra(n, std::move(bracket), std::move(circ),
                                   std::move(alpha));
  } else if (kind == "representation") {
    doc.kind = DocKind::representation;
    doc.payload = parse_representation(j, "");
  } else if (kind == "matched-pair") {
    doc.kind = DocKind::matched_pair;
    HomAlgebra a1 = parse_algebra(field(j, "a1", ""), "a1");
    HomAlgebra a2 = parse_algebra(field(j, "a2", ""), "a2");
    const std::size_t n1 = a1.dim, n2 = a2.dim;
    Tensor3 rho1 = parse_tensor(field(j, "rho1", ""), n1, n2, n2, "rho1");
    Tensor3 mu1 = parse_tensor(field(j, "mu1", ""), n1, n2, n2, "mu1");
    Tensor3 rho2 = parse_tensor(field(j, "rho2", ""), n2, n1, n1, "rho2");
    Tensor3 mu2 = parse_tensor(field(j, "mu2", ""), n2, n1, n1, "mu2");
    doc.payload = MatchedPairData(std::move(a1), std::move(a2), std::move(rho1),
                                  std::move(mu1), std::move(rho2),
                                  std::move(mu2));
  } else if (kind == "coproduct") {
    doc.kind = DocKind::coproduct;
    const std::size_t n = parse_dim(j, "dim", "");
    Tensor3 delta = parse_tensor(field(j, "delta", ""), n, n, n, "delta");
    Matrix alpha = parse_matrix(field(j, "alpha", ""), n, n, "alpha");
    doc.payload =
        CoproductDoc{Coproduct(n, std::move(delta)), std::move(alpha)};
  } else if (kind == "r-matrix") {
    doc.kind = DocKind::r_matrix;
    const std::size_t n = parse_dim(j, "dim", "");
    Matrix coeffs = parse_matrix(field(j, "coeffs", ""), n, n, "coeffs");
    doc.payload = TensorElement(n, std::move(coeffs));
  } else if (kind == "pre-poisson") {
    doc.kind = DocKind::pre_poisson;
    const std::size_t n = parse_dim(j, "dim", "");
    Tensor3 prec = parse_tensor(field(j, "prec", ""), n, n, n, "prec");
    Tensor3 succ = parse_tensor(field(j, "succ", ""), n, n, n, "succ");
    Matrix alpha = parse_matrix(field(j, "alpha", ""), n, n, "alpha");
    doc.payload = PrePoissonStructure(n, std::move(prec), std::move(succ),
                                      std::move(alpha));
  } else if (kind == "o-operator") {
    doc.kind = DocKind::o_operator;
    const json& rep_field = field(j, "representation", "");
    Representation rep;
    if (rep_field.is_string() && rep_field.get<std::string>() == "adjoint") {
      HomAlgebra a = parse_algebra(field(j, "algebra", ""), "algebra");
      rep = adjoint_representation(a);
    } else {
      rep = parse_representation(rep_field, "representation");
    }
    const std::size_t n = rep.algebra.dim, m = rep.dim_v;
    Matrix t = parse_matrix(field(j, "t", ""), n, m, "t");
    doc.payload = OOperatorData(std::move(rep), std::move(t));
  } else if (kind == "form") {
    doc.kind = DocKind::form;
    const std::size_t n = parse_dim(j, "dim", "");
    Matrix gram = parse_matrix(field(j, "gram", ""), n, n, "gram");
    doc.payload = BilinearForm(n, std::move(gram));
  } else {
    throw parse_error("unknown document kind '" + kind + "'");
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json j;
  j["kind"] = kind_name(doc.kind);
  if (doc.name) j["name"] = *doc.name;
  if (doc.notes) j["notes"] = *doc.notes;
  switch (doc.kind) {
    case DocKind::algebra: {
      const auto& a = std::get<HomAlgebra>(doc.payload);
      json inner = algebra_json(a);
      j.update(inner);
      break;
    }
    case DocKind::polarized: {
      const auto& p = std::get<PolarizedAlgebra>(doc.payload);
      j["dim"] = p.dim;
      j["bracket"] = tensor_json(p.bracket);
      j["circ"] = tensor_json(p.circ);
      j["alpha"] = matrix_json(p.alpha);
      break;
    }
    case DocKind::representation: {
      j.update(representation_json(std::get<Representation>(doc.payload)));
      break;
    }
    case DocKind::matched_pair: {
      const auto& m = std::get<MatchedPairData>(doc.payload);
      j["a1"] = algebra_json(m.a1);
      j["a2"] = algebra_json(m.a2);
      j["rho1"] = tensor_json(m.rho1);
      j["mu1"] = tensor_json(m.mu1);
      j["rho2"] = tensor_json(m.rho2);
      j["mu2"] = tensor_json(m.mu2);
      break;
    }
    case DocKind::coproduct: {
      const auto& c = std::get<CoproductDoc>(doc.payload);
      j["dim"] = c.coproduct.dim;
      j["delta"] = tensor_json(c.coproduct.delta);
      j["alpha"] = matrix_json(c.alpha);
      break;
    }
    case DocKind::r_matrix: {
      const auto& r = std::get<TensorElement>(doc.payload);
      j["dim"] = r.dim;
      j["coeffs"] = matrix_json(r.coeffs);
      break;
    }
    case DocKind::pre_poisson: {
      const auto& p = std::get<PrePoissonStructure>(doc.payload);
      j["dim"] = p.dim;
      j["prec"] = tensor_json(p.prec);
      j["succ"] = tensor_json(p.succ);
      j["alpha"] = matrix_json(p.alpha);
      break;
    }
    case DocKind::o_operator: {
      const auto& d = std::get<OOperatorData>(doc.payload);
      j["representation"] = representation_json(d.rep);
      j["t"] = matrix_json(d.t);
      break;
    }
    case DocKind::form: {
      const auto& b = std::get<BilinearForm>(doc.payload);
      j["dim"] = b.dim;
      j["gram"] = matrix_json(b.gram);
      break;
    }
  }
  return j.dump(1) + "\n";
}

}  // namespace hompois
