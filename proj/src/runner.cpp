#include "hompois/runner.hpp"

#include <json.hpp>
#include <utility>

#include "hompois/bialgebra.hpp"
#include "hompois/errors.hpp"
#include "hompois/prepoisson.hpp"

namespace hompois {

namespace {

using nlohmann::json;

template <typename T>
const T& expect(const std::vector<Document>& docs, std::size_t index,
                DocKind kind, const std::string& command) {
  if (index >= docs.size()) {
    throw parse_error(command + ": expected a " + kind_name(kind) +
                      " document at position " + std::to_string(index + 1));
  }
  if (docs[index].kind != kind) {
    throw parse_error(command + ": document " + std::to_string(index + 1) +
                      " must have kind '" + kind_name(kind) + "', got '" +
                      kind_name(docs[index].kind) + "'");
  }
  return std::get<T>(docs[index].payload);
}

void expect_count(const std::vector<Document>& docs, std::size_t count,
                  const std::string& command) {
  if (docs.size() != count) {
    throw parse_error(command + ": expected " + std::to_string(count) +
                      " document(s), got " + std::to_string(docs.size()));
  }
}

json report_json(const CheckReport& r) {
  json j;
  j["axiom"] = r.axiom;
  j["passed"] = r.passed;
  if (r.witness) j["witness"] = *r.witness;
  if (r.residual) {
    json res = json::array();
    for (const auto& x : *r.residual) res.push_back(x.str());
    j["residual"] = std::move(res);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.details.empty()) {
    json det = json::array();
    for (const auto& d : r.details) det.push_back(report_json(d));
    j["details"] = std::move(det);
  }
  return j;
}

}  // namespace

RunReport run_command(const std::string& action, const std::string& what,
                      const std::vector<Document>& docs,
                      const RunOptions& opts) {
  RunReport out;
  out.command = action + " " + what;
  const std::string& cmd = out.command;

  if (action == "check") {
    if (what == "admissible") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(
          check_admissible(expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd)));
    } else if (what == "hom-poisson") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_hom_poisson(
          expect<PolarizedAlgebra>(docs, 0, DocKind::polarized, cmd)));
    } else if (what == "multiplicative") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_multiplicative(
          expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd)));
    } else if (what == "representation") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_representation(
          expect<Representation>(docs, 0, DocKind::representation, cmd)));
    } else if (what == "matched-pair") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_matched_pair(
          expect<MatchedPairData>(docs, 0, DocKind::matched_pair, cmd)));
    } else if (what == "coalgebra") {
      expect_count(docs, 1, cmd);
      const auto& c = expect<CoproductDoc>(docs, 0, DocKind::coproduct, cmd);
      out.verdicts.push_back(check_coalgebra(c.coproduct, c.alpha));
    } else if (what == "bialgebra") {
      expect_count(docs, 2, cmd);
      const auto& a = expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd);
      const auto& c = expect<CoproductDoc>(docs, 1, DocKind::coproduct, cmd);
      out.verdicts.push_back(check_bialgebra({a, c.coproduct}));
    } else if (what == "r-conditions") {
      expect_count(docs, 2, cmd);
      const auto& a = expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd);
      const auto& r = expect<TensorElement>(docs, 1, DocKind::r_matrix, cmd);
      out.verdicts.push_back(
          check_r_conditions(a, r, opts.allow_r_violation));
    } else if (what == "pre-poisson") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_admissible_pre_poisson(
          expect<PrePoissonStructure>(docs, 0, DocKind::pre_poisson, cmd)));
    } else if (what == "hom-pre-poisson") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_hom_pre_poisson(
          expect<PrePoissonStructure>(docs, 0, DocKind::pre_poisson, cmd)));
    } else if (what == "o-operator") {
      expect_count(docs, 1, cmd);
      out.verdicts.push_back(check_o_operator(
          expect<OOperatorData>(docs, 0, DocKind::o_operator, cmd)));
    } else if (what == "rota-baxter") {
      expect_count(docs, 2, cmd);
      const auto& a = expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd);
      const auto& op = expect<BilinearForm>(docs, 1, DocKind::form, cmd);
      out.verdicts.push_back(check_rota_baxter(a, op.gram));
    } else if (what == "form-invariance") {
      expect_count(docs, 2, cmd);
      const auto& a = expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd);
      const auto& b = expect<BilinearForm>(docs, 1, DocKind::form, cmd);
      out.verdicts.push_back(check_form_invariance(a, b, opts.mode));
    } else {
      throw parse_error("unknown check '" + what + "'");
    }
  } else if (action == "construct") {
    if (what == "polarize") {
      expect_count(docs, 1, cmd);
      PolarizedAlgebra p =
          polarize(expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd));
      out.verdicts.push_back(check_hom_poisson(p));
      out.constructed.push_back(make_document(std::move(p)));
    } else if (what == "depolarize") {
      expect_count(docs, 1, cmd);
      HomAlgebra a =
          depolarize(expect<PolarizedAlgebra>(docs, 0, DocKind::polarized, cmd));
      out.verdicts.push_back(check_admissible(a));
      out.constructed.push_back(make_document(std::move(a)));
    } else if (what == "twist") {
      expect_count(docs, 2, cmd);
      const auto& a = expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd);
      const auto& phi = expect<BilinearForm>(docs, 1, DocKind::form, cmd);
      HomAlgebra t = yau_twist(a, phi.gram);
      out.verdicts.push_back(check_admissible(t));
      out.constructed.push_back(make_document(std::move(t)));
    } else if (what == "untwist") {
      expect_count(docs, 1, cmd);
      HomAlgebra u =
          untwist(expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd));
      out.verdicts.push_back(check_admissible(u));
      out.constructed.push_back(make_document(std::move(u)));
    } else if (what == "semidirect") {
      expect_count(docs, 1, cmd);
      HomAlgebra s = semidirect_product(
          expect<Representation>(docs, 0, DocKind::representation, cmd));
      out.verdicts.push_back(check_admissible(s));
      out.constructed.push_back(make_document(std::move(s)));
    } else if (what == "double") {
      expect_count(docs, 1, cmd);
      HomAlgebra d = double_algebra(
          expect<MatchedPairData>(docs, 0, DocKind::matched_pair, cmd));
      out.verdicts.push_back(check_admissible(d));
      out.constructed.push_back(make_document(std::move(d)));
    } else if (what == "dual-rep") {
      expect_count(docs, 1, cmd);
      Representation d = dual_representation(
          expect<Representation>(docs, 0, DocKind::representation, cmd));
      out.verdicts.push_back(check_representation(d));
      out.constructed.push_back(make_document(std::move(d)));
    } else if (what == "adjoint") {
      expect_count(docs, 1, cmd);
      Representation r = adjoint_representation(
          expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd));
      out.verdicts.push_back(check_representation(r));
      out.constructed.push_back(make_document(std::move(r)));
    } else if (what == "coadjoint") {
      expect_count(docs, 1, cmd);
      Representation r = coadjoint_representation(
          expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd));
      out.verdicts.push_back(check_representation(r));
      out.constructed.push_back(make_document(std::move(r)));
    } else if (what == "coboundary") {
      expect_count(docs, 2, cmd);
      const auto& a = expect<HomAlgebra>(docs, 0, DocKind::algebra, cmd);
      const auto& r = expect<TensorElement>(docs, 1, DocKind::r_matrix, cmd);
      Coproduct c = coboundary_coproduct(a, r);
      out.verdicts.push_back(check_coalgebra(c, a.alpha));
      out.constructed.push_back(
          make_document(CoproductDoc{std::move(c), a.alpha}));
    } else if (what == "subadjacent") {
      expect_count(docs, 1, cmd);
      HomAlgebra s = subadjacent(
          expect<PrePoissonStructure>(docs, 0, DocKind::pre_poisson, cmd));
      out.verdicts.push_back(check_admissible(s));
      out.constructed.push_back(make_document(std::move(s)));
    } else if (what == "induced-pre-poisson") {
      expect_count(docs, 1, cmd);
      PrePoissonStructure p = induced_pre_poisson(
          expect<OOperatorData>(docs, 0, DocKind::o_operator, cmd));
      out.verdicts.push_back(check_admissible_pre_poisson(p));
      out.constructed.push_back(make_document(std::move(p)));
    } else if (what == "split") {
      expect_count(docs, 1, cmd);
      if (docs[0].kind == DocKind::pre_poisson) {
        PrePoissonStructure s = pre_poisson_split(
            std::get<PrePoissonStructure>(docs[0].payload));
        out.verdicts.push_back(check_hom_pre_poisson(s));
        out.constructed.push_back(make_document(std::move(s)));
      } else if (docs[0].kind == DocKind::coproduct) {
        const auto& c = std::get<CoproductDoc>(docs[0].payload);
        auto [anti, sym] = coproduct_split(c.coproduct);
        out.constructed.push_back(make_document(
            CoproductDoc{std::move(anti), c.alpha}, "antisymmetric-part"));
        out.constructed.push_back(make_document(
            CoproductDoc{std::move(sym), c.alpha}, "symmetric-part"));
      } else {
        throw parse_error(
            cmd + ": expected a pre-poisson or coproduct document");
      }
    } else if (what == "dual-algebra") {
      expect_count(docs, 1, cmd);
      const auto& c = expect<CoproductDoc>(docs, 0, DocKind::coproduct, cmd);
      HomAlgebra d = dual_algebra(c.coproduct, c.alpha);
      out.verdicts.push_back(check_admissible(d));
      out.constructed.push_back(make_document(std::move(d)));
    } else {
      throw parse_error("unknown construction '" + what + "'");
    }
  } else {
    throw parse_error("unknown action '" + action +
                      "' (expected check or construct)");
  }

  out.status = RunStatus::pass;
  for (const auto& v : out.verdicts) {
    if (!v.passed) out.status = RunStatus::fail;
  }
  return out;
}

std::string render_run_report(const RunReport& report) {
  std::string text = "command: " + report.command + "\n";
  text += "status: ";
  switch (report.status) {
    case RunStatus::pass: text += "pass"; break;
    case RunStatus::fail: text += "fail"; break;
    case RunStatus::error: text += "error"; break;
  }
  text += "\n";
  for (const auto& err : report.errors) text += "error: " + err + "\n";
  for (const auto& v : report.verdicts) text += render_text(v, 0);
  for (const auto& d : report.constructed) {
    text += "constructed: " + kind_name(d.kind);
    if (d.name) text += " (" + *d.name + ")";
    text += "\n";
  }

  json j;
  j["command"] = report.command;
  switch (report.status) {
    case RunStatus::pass: j["status"] = "pass"; break;
    case RunStatus::fail: j["status"] = "fail"; break;
    case RunStatus::error: j["status"] = "error"; break;
  }
  if (!report.errors.empty()) j["errors"] = report.errors;
  json verdicts = json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(report_json(v));
  j["verdicts"] = std::move(verdicts);
  json constructed = json::array();
  for (const auto& d : report.constructed) {
    constructed.push_back(json::parse(serialize_document(d)));
  }
  j["constructed"] = std::move(constructed);

  text += "---\n";
  text += j.dump() + "\n";
  return text;
}

int exit_code(const RunReport& report) {
  switch (report.status) {
    case RunStatus::pass: return 0;
    case RunStatus::fail: return 1;
    case RunStatus::error: return 2;
  }
  return 2;
}

}  // namespace hompois
