// symspec: exact spectra, diagrams and eigenfunction verification for compact
// Riemannian symmetric spaces. Exit codes: 0 success, 1 usage error,
// 2 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symspec/charts.hpp"
#include "symspec/lie_diff.hpp"
#include "symspec/reporting.hpp"

namespace {

using namespace symspec;

OutputFormat resolve_format(const std::string& flag_value) {
  if (!flag_value.empty()) return format_from_name(flag_value);
  if (const char* env = std::getenv("SYMSPEC_FORMAT")) return format_from_name(env);
  return OutputFormat::Human;
}

SymmetricSpaceDescriptor resolve_space(const std::string& id, int n, const std::string& catalog_file) {
  if (!catalog_file.empty()) {
    std::ifstream in(catalog_file);
    if (!in) throw std::invalid_argument("cannot open catalog file '" + catalog_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    SymmetricSpaceDescriptor d = load_descriptor(buf.str());
    if (d.id != id)
      throw std::invalid_argument("catalog file describes '" + d.id + "', not '" + id + "'");
    if (n != 0 && d.n != n)
      throw std::invalid_argument("catalog file has n = " + std::to_string(d.n));
    return d;
  }
  return lookup(id, n);
}

void emit(const json& payload, OutputFormat format, const std::string& command) {
  switch (format) {
    case OutputFormat::Json:
      std::cout << payload.dump(2) << "\n";
      return;
    case OutputFormat::Csv:
      if (command == "spectrum") {
        std::cout << render_spectrum_csv(payload);
      } else if (command == "splitting") {
        std::cout << render_splitting_csv(payload);
      } else if (command == "verify") {
        std::cout << render_verify_csv(payload);
      } else {
        std::cout << payload.dump(2) << "\n";  // diagrams have no tabular form
      }
      return;
    case OutputFormat::Human:
      if (command == "spectrum") {
        std::cout << render_spectrum_human(payload);
      } else if (command == "splitting") {
        std::cout << render_splitting_human(payload);
      } else if (command == "verify") {
        std::cout << render_verify_human(payload);
      } else {
        std::cout << render_diagram_human(payload);
      }
      return;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra and eigenfunctions of compact symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough(true);  // let subcommands hand --format back to the parent

  std::string format_flag;
  app.add_option("--format", format_flag, "output format: human (default), json, csv");

  // spectrum <space> [--n N] --k-max K [--catalog FILE]
  auto* spectrum_cmd = app.add_subcommand("spectrum", "energy levels, eigenvalues, multiplicities");
  std::string sp_space;
  int sp_n = 0;
  long sp_kmax = 0;
  std::string sp_catalog;
  spectrum_cmd->add_option("space", sp_space, "space id, e.g. CP^n, HP^n, S^n, CaP2")->required();
  spectrum_cmd->add_option("--n", sp_n, "family parameter n");
  spectrum_cmd->add_option("--k-max", sp_kmax, "largest level to print")->required();
  spectrum_cmd->add_option("--catalog", sp_catalog, "descriptor file overriding the embedded catalog");

  // splitting <Q>
  auto* splitting_cmd = app.add_subcommand("splitting", "SU(3)/SO(3) eigenspace splitting for x^2-xy+y^2=Q");
  long Q = 0;
  splitting_cmd->add_option("Q", Q, "quadratic form value")->required();

  // verify <space> [--n N] [--k K | --p P --q Q] [--seed S] [--emit FILE]
  auto* verify_cmd = app.add_subcommand("verify", "eigenfunction family verification");
  std::string vf_space;
  int vf_n = 0;
  long vf_k = 1, vf_p = -1, vf_q = -1;
  uint64_t vf_seed = 1;
  std::string vf_catalog, vf_emit;
  verify_cmd->add_option("space", vf_space, "space id")->required();
  verify_cmd->add_option("--n", vf_n, "family parameter n");
  verify_cmd->add_option("--k", vf_k, "level (rank-one spaces)");
  verify_cmd->add_option("--p", vf_p, "power of phi_a (SU3/SO3)");
  verify_cmd->add_option("--q", vf_q, "power of phi~_b (SU3/SO3)");
  verify_cmd->add_option("--seed", vf_seed, "sampling seed");
  verify_cmd->add_option("--catalog", vf_catalog, "descriptor file overriding the embedded catalog");
  verify_cmd->add_option("--emit", vf_emit, "write the generator polynomials (canonical form) to FILE");

  // diagram <space|grassmannian> [--n N | --p P --q Q]
  auto* diagram_cmd = app.add_subcommand("diagram", "Satake and painted Dynkin diagrams, b2");
  std::string dg_target;
  int dg_n = 0, dg_p = 0, dg_q = 0;
  std::string dg_catalog;
  diagram_cmd->add_option("target", dg_target, "space id or 'grassmannian'")->required();
  diagram_cmd->add_option("--n", dg_n, "family parameter n");
  diagram_cmd->add_option("--p", dg_p, "grassmannian p");
  diagram_cmd->add_option("--q", dg_q, "grassmannian q");
  diagram_cmd->add_option("--catalog", dg_catalog, "descriptor file overriding the embedded catalog");

  // descriptor <space> [--n N]
  auto* descriptor_cmd = app.add_subcommand("descriptor", "print a catalog descriptor document");
  std::string dc_space;
  int dc_n = 0;
  descriptor_cmd->add_option("space", dc_space, "space id")->required();
  descriptor_cmd->add_option("--n", dc_n, "family parameter n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    OutputFormat format = resolve_format(format_flag);

    if (*spectrum_cmd) {
      auto space = resolve_space(sp_space, sp_n, sp_catalog);
      emit(spectrum_payload(space, sp_kmax), format, "spectrum");
      return 0;
    }
    if (*splitting_cmd) {
      emit(splitting_payload(Q), format, "splitting");
      return 0;
    }
    if (*verify_cmd) {
      auto space = resolve_space(vf_space, vf_n, vf_catalog);
      VerificationReport report;
      if (space.id == "SU3/SO3") {
        if (vf_p < 0 || vf_q < 0)
          throw std::invalid_argument("verify SU3/SO3 requires --p and --q");
        report = verify_family_su3(space, vf_p, vf_q, vf_seed);
      } else {
        report = verify_family(space, vf_k, vf_seed);
      }
      if (!vf_emit.empty()) {
        std::ofstream out(vf_emit);
        if (!out) throw std::invalid_argument("cannot open '" + vf_emit + "' for writing");
        if (space.id == "SU3/SO3") {
          for (const auto& f : sun_family_samples(3, vf_p, vf_q, 8, vf_seed)) out << f.str() << "\n";
        } else if (space.id == "CP^n") {
          for (const auto& f : cpn_restricted_family(space.n, vf_k, 8, vf_seed)) out << f.str() << "\n";
        } else {
          for (const auto& f : hpn_restricted_family(space.n, vf_k, 8, vf_seed)) out << f.str() << "\n";
        }
      }
      emit(verify_payload(report), format, "verify");
      return report.all_passed() ? 0 : 2;
    }
    if (*diagram_cmd) {
      if (dg_target == "grassmannian") {
        if (dg_p < 1 || dg_q < 1) throw std::invalid_argument("diagram grassmannian requires --p and --q");
        auto sd = grassmannian_satake(dg_p, dg_q);
        std::ostringstream name;
        name << "grassmannian(" << dg_p << "," << dg_q << ")";
        emit(diagram_payload(name.str(), sd), format, "diagram");
      } else {
        auto space = resolve_space(dg_target, dg_n, dg_catalog);
        emit(diagram_payload(space.id, space.satake), format, "diagram");
      }
      return 0;
    }
    if (*descriptor_cmd) {
      auto space = lookup(dc_space, dc_n);
      std::cout << serialize(space);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
