#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hompois/algebra.hpp"
#include "hompois/bialgebra.hpp"
#include "hompois/matched.hpp"
#include "hompois/prepoisson.hpp"
#include "hompois/representation.hpp"

namespace hompois {

enum class DocKind {
  algebra,
  polarized,
  representation,
  matched_pair,
  coproduct,
  r_matrix,
  pre_poisson,
  o_operator,
  form,
};

std::string kind_name(DocKind kind);

/// Coproduct bundled with the twist it is checked against.
struct CoproductDoc {
  Coproduct coproduct;
  Matrix alpha;
};

/// One self-describing input or output value. The payload alternative is
/// determined by `kind`. Scalars in the text format are exact rational
/// literals ("p" or "p/q"); tensors are nested arrays in the index order
/// documented on Tensor3.
struct Document {
  DocKind kind = DocKind::algebra;
  std::optional<std::string> name;
  std::optional<std::string> notes;
  std::variant<HomAlgebra, PolarizedAlgebra, Representation, MatchedPairData,
               CoproductDoc, TensorElement, PrePoissonStructure, OOperatorData,
               BilinearForm>
      payload;
};

Document make_document(HomAlgebra a, std::optional<std::string> name = {});
Document make_document(PolarizedAlgebra p, std::optional<std::string> name = {});
Document make_document(Representation r, std::optional<std::string> name = {});
Document make_document(MatchedPairData m, std::optional<std::string> name = {});
Document make_document(CoproductDoc c, std::optional<std::string> name = {});
Document make_document(TensorElement r, std::optional<std::string> name = {});
Document make_document(PrePoissonStructure p,
                       std::optional<std::string> name = {});
Document make_document(OOperatorData d, std::optional<std::string> name = {});
Document make_document(BilinearForm b, std::optional<std::string> name = {});

/// Parses the JSON text format; throws parse_error with a field locus on
/// malformed input, bad rationals, or shape violations.
Document parse_document(const std::string& text);

/// Canonical serialization; parse(serialize(d)) is semantically identical.
std::string serialize_document(const Document& doc);

}  // namespace hompois
