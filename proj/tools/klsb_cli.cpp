#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "klsb/cells.hpp"
#include "klsb/char_ring.hpp"
#include "klsb/char_table.hpp"
#include "klsb/emit.hpp"
#include "klsb/fixtures.hpp"
#include "klsb/hecke.hpp"
#include "klsb/kl.hpp"
#include "klsb/kls_basis.hpp"
#include "klsb/mw.hpp"
#include "klsb/root_system.hpp"
#include "klsb/weyl_group.hpp"

namespace {

using namespace klsb;

// Exit codes: 0 success, 1 fixture diff, 2 usage or missing/malformed
// fixture, 3 internal error.
constexpr int kOk = 0;
constexpr int kDiff = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2",
                                         "B3", "B4", "C3", "D4", "G2"};

bool known_type(const std::string& s) {
  for (const std::string& t : kTypes)
    if (s == t) return true;
  return false;
}

std::string lower(std::string s) {
  for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Everything the commands need, built in dependency order at a stable
// address (several members hold pointers into earlier ones).
struct Session {
  RootSystem rs;
  WeylGroup W;
  KLTable kl;
  BasisChange canon;
  CellData cd;
  CharCaches cc;
  KLSBasis B;

  Session(const std::string& label, bool with_basis)
      : rs(build_root_system(label[0], label[1] - '0')),
        W(build_weyl_group(rs)),
        kl(kl_table(W)),
        canon(canonical_basis_change(kl)),
        cd(cells(W, kl)),
        cc(rs) {
    if (with_basis) B = build_kls_basis(rs, W, canon, cd, cc);
  }

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;
};

std::unique_ptr<Session> open_session(const std::string& label, bool with_basis) {
  return std::make_unique<Session>(label, with_basis);
}

int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file " << out_path << "\n";
    return kInternal;
  }
  out << text;
  return out ? kOk : kInternal;
}

int require_type(const std::string& type) {
  if (known_type(type)) return kOk;
  std::cerr << "unknown type " << type << "; expected one of";
  for (const std::string& t : kTypes) std::cerr << " " << t;
  std::cerr << "\n";
  return kUsage;
}

int cmd_table(const std::string& type, const std::string& format, const std::string& out) {
  if (int rc = require_type(type)) return rc;
  auto s = open_session(type, true);
  MwAll all = compute_mw_all(s->B);
  MwTable tab = mw_table(s->B, all);
  std::string text;
  if (format == "json") text = table_json(type, s->W, tab);
  else if (format == "tsv") text = table_tsv(s->W, tab);
  else text = table_latex(type, s->W, tab);
  return write_out(text, out);
}

int cmd_cells(const std::string& type, const std::string& out) {
  if (int rc = require_type(type)) return rc;
  auto s = open_session(type, false);
  return write_out(cells_json(type, s->W, s->cd), out);
}

int cmd_klpoly(const std::string& type, const std::string& out) {
  if (int rc = require_type(type)) return rc;
  auto s = open_session(type, false);
  return write_out(klpoly_json(type, s->W, s->kl), out);
}

int cmd_gamma(const std::string& type, const std::string& out) {
  if (int rc = require_type(type)) return rc;
  auto s = open_session(type, false);
  std::vector<JCellAlgebra> algebras;
  for (size_t c = 0; c < s->cd.two_cells.size(); ++c)
    algebras.push_back(j_cell_algebra(s->W, s->kl, s->cd, int(c)));
  return write_out(gamma_json(type, s->W, s->cd, algebras), out);
}

int cmd_cwchi(const std::string& type, const std::string& out) {
  if (int rc = require_type(type)) return rc;
  auto s = open_session(type, false);
  CharTable T = character_table(s->W);
  std::vector<CwChi> per_cell;
  for (size_t c = 0; c < s->cd.two_cells.size(); ++c) {
    JCellAlgebra J = j_cell_algebra(s->W, s->kl, s->cd, int(c));
    CellModuleMatrices mod = cell_module_cprime(s->W, s->kl, s->cd, int(c));
    per_cell.push_back(cw_chi(s->W, s->cd, J, mod, T));
  }
  return write_out(cwchi_json(type, s->W, s->cd, T, per_cell), out);
}

int cmd_dims(const std::string& type, const std::string& fixture, const std::string& out) {
  if (!fixture.empty()) {
    DimsFixture fx;
    try {
      fx = load_dims_fixture(fixture);
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
    if (!type.empty() && type != fx.type_label) {
      std::cerr << "fixture is for type " << fx.type_label << ", not " << type << "\n";
      return kUsage;
    }
    if (int rc = require_type(fx.type_label)) return rc;
    auto s = open_session(fx.type_label, true);
    FixtureDiff diff = compare_dims_fixture(s->B, fx);
    for (const std::string& line : diff.lines) std::cout << "diff " << fx.type_label << " " << line << "\n";
    if (diff.ok()) std::cout << "ok " << fx.type_label << " dims (" << fx.rows.size() << " rows)\n";
    return diff.ok() ? kOk : kDiff;
  }
  if (type.empty()) {
    std::cerr << "dims requires --type or --fixture\n";
    return kUsage;
  }
  if (int rc = require_type(type)) return rc;
  auto s = open_session(type, true);
  MwAll all = compute_mw_all(s->B);
  return write_out(dims_json(type, s->W, all), out);
}

struct VerifyPlan {
  std::vector<std::string> table_types;  // types whose mw_<type>.json to check
  bool dims = false;
  bool positivity = false;
};

int cmd_verify(const std::string& dir, const std::string& only_type) {
  VerifyPlan plan;
  if (only_type.empty()) {
    plan.table_types = {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4"};
    plan.dims = true;
    plan.positivity = true;
  } else {
    if (int rc = require_type(only_type)) return rc;
    plan.table_types = {only_type};
    plan.dims = (only_type == "A4");
    plan.positivity = (only_type == "B3" || only_type == "A4");
  }

  // Load everything first so a missing or malformed fixture is reported
  // before any engine time is spent.
  std::vector<TableFixture> tables;
  for (const std::string& t : plan.table_types) {
    std::string path = dir + "/mw_" + lower(t) + ".json";
    try {
      tables.push_back(load_table_fixture(path));
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
  }
  DimsFixture dims;
  if (plan.dims) {
    try {
      dims = load_dims_fixture(dir + "/dims_a4.json");
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
  }
  std::vector<PositivityFixture> positivity;
  if (plan.positivity) {
    try {
      positivity = load_positivity_fixtures(dir + "/positivity.json");
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
  }

  bool any_diff = false;
  for (const TableFixture& fx : tables) {
    if (!known_type(fx.type_label)) {
      std::cerr << "fixture type_label " << fx.type_label << " is not a supported type\n";
      return kUsage;
    }
    auto s = open_session(fx.type_label, true);
    MwAll all = compute_mw_all(s->B);
    MwTable tab = mw_table(s->B, all);
    FixtureDiff diff = compare_table_fixture(s->W, tab, fx);
    for (const std::string& line : diff.lines)
      std::cout << "diff " << fx.type_label << " " << line << "\n";
    if (diff.ok())
      std::cout << "ok " << fx.type_label << " table (" << fx.rows.size() << " rows)\n";
    any_diff = any_diff || !diff.ok();

    if (plan.dims && fx.type_label == dims.type_label) {
      FixtureDiff d = compare_dims_fixture(s->B, dims);
      for (const std::string& line : d.lines)
        std::cout << "diff " << dims.type_label << " " << line << "\n";
      if (d.ok()) std::cout << "ok " << dims.type_label << " dims (" << dims.rows.size() << " rows)\n";
      any_diff = any_diff || !d.ok();
    }
    for (const PositivityFixture& pf : positivity) {
      if (pf.type_label != fx.type_label) continue;
      FixtureDiff d = compare_positivity_fixture(s->B, pf);
      for (const std::string& line : d.lines)
        std::cout << "diff " << pf.type_label << " " << line << "\n";
      if (d.ok()) std::cout << "ok " << pf.type_label << " positivity M_" << pf.w << "\n";
      any_diff = any_diff || !d.ok();
    }
  }
  return any_diff ? kDiff : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cell-data engine: canonical bases, Weyl character tables, trace data"};
  app.require_subcommand(1);

  std::string type, format = "json", out, fixdir, fixture, only_type;

  CLI::App* c_table = app.add_subcommand("table", "virtual-character table over {w ~L w^-1}");
  c_table->add_option("--type", type, "type label, e.g. B3")->required();
  c_table->add_option("--format", format, "json, tsv or latex")
      ->check(CLI::IsMember({"json", "tsv", "latex"}));
  c_table->add_option("--out", out, "output file (default stdout)");

  CLI::App* c_verify = app.add_subcommand("verify", "compare computed tables against fixtures");
  c_verify->add_option("--fixtures", fixdir, "fixture directory")->required();
  c_verify->add_option("--type", only_type, "restrict to one type label");

  CLI::App* c_cells = app.add_subcommand("cells", "left/right/two-sided cell partition");
  c_cells->add_option("--type", type, "type label")->required();
  c_cells->add_option("--out", out, "output file (default stdout)");

  CLI::App* c_klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial table");
  c_klpoly->add_option("--type", type, "type label")->required();
  c_klpoly->add_option("--out", out, "output file (default stdout)");

  CLI::App* c_gamma = app.add_subcommand("gamma", "based-ring structure constants per cell");
  c_gamma->add_option("--type", type, "type label")->required();
  c_gamma->add_option("--out", out, "output file (default stdout)");

  CLI::App* c_dims = app.add_subcommand("dims", "dimension polynomials");
  c_dims->add_option("--type", type, "type label");
  c_dims->add_option("--fixture", fixture, "dims fixture to compare against");
  c_dims->add_option("--out", out, "output file (default stdout)");

  CLI::App* c_cwchi = app.add_subcommand("cwchi", "trace coefficients c_{w,chi} per cell");
  c_cwchi->add_option("--type", type, "type label")->required();
  c_cwchi->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_table->parsed()) return cmd_table(type, format, out);
    if (c_verify->parsed()) return cmd_verify(fixdir, only_type);
    if (c_cells->parsed()) return cmd_cells(type, out);
    if (c_klpoly->parsed()) return cmd_klpoly(type, out);
    if (c_gamma->parsed()) return cmd_gamma(type, out);
    if (c_dims->parsed()) return cmd_dims(type, fixture, out);
    if (c_cwchi->parsed()) return cmd_cwchi(type, out);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
