#include "hompois/report.hpp"

namespace hompois {

CheckReport CheckReport::pass(std::string axiom) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.passed = true;
  return r;
}

CheckReport CheckReport::fail(std::string axiom,
                              std::vector<std::size_t> witness, Vec residual) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.passed = false;
  r.witness = std::move(witness);
  r.residual = std::move(residual);
  return r;
}

CheckReport CheckReport::all_of(std::string axiom,
                                std::vector<CheckReport> parts) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.passed = true;
  for (auto& p : parts) {
    if (!p.passed && r.passed) {
      r.passed = false;
      r.witness = p.witness;
      r.residual = p.residual;
    }
    r.details.push_back(std::move(p));
  }
  return r;
}

void CheckReport::add_informational(CheckReport part) {
  part.notes.push_back("informational: not part of the verdict");
  details.push_back(std::move(part));
}

const CheckReport* CheckReport::first_failure() const {
  if (passed) return nullptr;
  for (const auto& d : details) {
    if (const CheckReport* f = d.first_failure()) return f;
  }
  return this;
}

std::string witness_str(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  s += ")";
  return s;
}

std::string render_text(const CheckReport& report, int indent) {
  std::string line(static_cast<std::size_t>(indent) * 2, ' ');
  line += report.axiom;
  line += report.passed ? ": PASS" : ": FAIL";
  if (!report.passed && report.witness) {
    line += " at " + witness_str(*report.witness);
    if (report.residual) line += " residual " + vec_str(*report.residual);
  }
  line += "\n";
  for (const auto& note : report.notes) {
    line += std::string(static_cast<std::size_t>(indent) * 2 + 2, ' ');
    line += "note: " + note + "\n";
  }
  for (const auto& d : report.details) line += render_text(d, indent + 1);
  return line;
}

}  // namespace hompois
