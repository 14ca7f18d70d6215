#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hompois/errors.hpp"
#include "hompois/parallel.hpp"
#include "hompois/runner.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw hompois::parse_error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int configure_workers() {
  const char* env = std::getenv("HOMPOIS_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || n < 1 || n > 64) {
    std::cerr << "error: HOMPOIS_WORKERS must be an integer in [1, 64]\n";
    return 2;
  }
  hompois::set_worker_count(static_cast<unsigned>(n));
  return 0;
}

int emit_error(const std::string& command, const std::string& message,
               int code) {
  hompois::RunReport report;
  report.command = command;
  report.status = hompois::RunStatus::error;
  report.errors.push_back(message);
  std::cout << hompois::render_run_report(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hompois: exact checks and constructions for twisted Poisson-type "
      "structures"};
  app.footer(
      "Inputs are JSON documents with a top-level \"kind\"; scalars are "
      "exact rationals (\"p\" or \"p/q\"). Use '-' to read one document "
      "from stdin.\n"
      "Exit codes: 0 pass, 1 check failed, 2 input/usage error, "
      "3 precondition error.\n"
      "HOMPOIS_WORKERS selects the number of scan workers (default 1).");

  std::string action, what, mode = "associative", out_path;
  std::vector<std::string> files;
  bool allow_r_violation = false;
  app.add_option("action", action, "check | construct")->required();
  app.add_option("what", what, "what to check or construct")->required();
  app.add_option("files", files, "input documents (JSON; '-' for stdin)");
  app.add_option("--mode", mode,
                 "invariance mode: associative | hom-associative");
  app.add_flag("--allow-r-violation", allow_r_violation,
               "downgrade a failing twist-invariance of r to a warning");
  app.add_option("--out", out_path,
                 "write the first constructed document to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (int code = configure_workers(); code != 0) return code;

  const std::string command = action + " " + what;
  hompois::RunOptions opts;
  opts.allow_r_violation = allow_r_violation;
  if (mode == "associative") {
    opts.mode = hompois::InvarianceMode::associative;
  } else if (mode == "hom-associative") {
    opts.mode = hompois::InvarianceMode::hom_associative;
  } else {
    return emit_error(command, "unknown invariance mode '" + mode + "'", 2);
  }

  try {
    std::vector<hompois::Document> docs;
    for (const auto& f : files) {
      docs.push_back(hompois::parse_document(read_input(f)));
    }
    hompois::RunReport report = hompois::run_command(action, what, docs, opts);
    std::cout << hompois::render_run_report(report);
    if (!out_path.empty() && !report.constructed.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        return emit_error(command, "cannot write '" + out_path + "'", 2);
      }
      out << hompois::serialize_document(report.constructed.front());
    }
    return hompois::exit_code(report);
  } catch (const hompois::singular_error& e) {
    return emit_error(command, std::string("precondition: ") + e.what(), 3);
  } catch (const hompois::morphism_error& e) {
    return emit_error(command,
                      std::string("precondition: ") + e.what() + " at (" +
                          std::to_string(e.i) + "," + std::to_string(e.j) + ")",
                      3);
  } catch (const hompois::precondition_error& e) {
    return emit_error(command, std::string("precondition: ") + e.what(), 3);
  } catch (const hompois::symmetry_error& e) {
    return emit_error(command, std::string("precondition: ") + e.what(), 3);
  } catch (const hompois::mode_error& e) {
    return emit_error(command, e.what(), 2);
  } catch (const hompois::internal_error& e) {
    return emit_error(command, std::string("internal: ") + e.what(), 2);
  } catch (const hompois::error& e) {
    return emit_error(command, e.what(), 2);
  }
}
