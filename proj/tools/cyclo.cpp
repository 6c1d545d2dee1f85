#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cyclo/corpus_data.hpp"
#include "cyclo/harness.hpp"

using namespace cyclo;

namespace {

Workspace open_workspace(const std::string& path) {
  return path.empty() ? parse_workspace(bundled_corpus_json()) : load_workspace(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild, cyclic, dihedral, Lie and Leibniz homology over Q with measuring-induced maps"};
  app.require_subcommand(1);
  std::string workspace;
  app.add_option("--workspace", workspace, "workspace JSON (default: bundled corpus)");

  auto* validate = app.add_subcommand("validate", "load and validate a workspace file");
  std::string file;
  validate->add_option("file", file)->required();

  auto* compute = app.add_subcommand("compute", "print a homology table");
  ComputeRequest req;
  compute->add_option("kind", req.kind)->required()->check(CLI::IsMember({"hh", "hc", "hd", "lambda", "lie", "leibniz", "forms"}));
  compute->add_option("--algebra", req.algebra)->required();
  compute->add_option("--measuring", req.measuring);
  compute->add_option("--max-degree", req.max_degree)->check(CLI::PositiveNumber);
  compute->add_option("--r", req.r)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  VerifyOptions vopt;
  std::size_t vdeg = 0;
  verify->add_option("--suite", vopt.suite)->required();
  verify->add_option("--measuring", vopt.measuring);
  verify->add_option("--max-degree", vdeg)->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "run every suite and write a full report");
  std::string format = "md", out;
  report->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));
  report->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      Workspace ws = load_workspace(file);
      std::cout << "ok: " << ws.algebras.size() << " algebras, " << ws.coalgebras.size() << " coalgebras, "
                << ws.measurings.size() << " measurings, " << ws.tasks.size() << " tasks\n";
      return 0;
    }
    Workspace ws = open_workspace(workspace);
    if (*compute) {
      Lab lab(ws.caps);
      for (const auto& t : run_compute(ws, lab, req)) write_table_md(std::cout, t);
      return 0;
    }
    if (*verify) {
      Caps caps = ws.caps;
      if (vdeg) caps.max_degree = vdeg;
      Lab lab(caps);
      Report rep = run_verify(ws, lab, vopt);
      write_report_md(std::cout, rep);
      return rep.ok() ? 0 : 2;
    }
    if (*report) {
      Lab lab(ws.caps);
      Report rep = run_verify(ws, lab, {});
      std::vector<Table> tables = standard_tables(ws, lab);
      std::ofstream os(out, std::ios::binary);
      if (!os) throw ValidationError("cannot write '" + out + "'");
      if (format == "md")
        write_report_md(os, rep, tables);
      else
        write_report_csv(os, rep, tables);
      std::cout << "wrote " << out << ": pass " << rep.count(Status::Pass) << ", fail " << rep.count(Status::Fail)
                << ", skipped-by-truncation " << rep.count(Status::Skipped) << "\n";
      return rep.ok() ? 0 : 2;
    }
  } catch (const TruncationTooLarge& e) {
    std::cerr << "truncation cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
