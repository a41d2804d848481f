#include "qiso/report.hpp"
#include "qiso/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct GroupArgs {
  std::string type;
  int rank = 0;
  std::string lattice = "ad";
  int characteristic = 0;
};

void add_group_options(CLI::App* cmd, GroupArgs& args) {
  cmd->add_option("--type", args.type, "Cartan type: a family letter with --rank, or e.g. E6, A1xB2")->required();
  cmd->add_option("--rank", args.rank, "Rank when --type is a single family letter");
  cmd->add_option("--lattice", args.lattice, "sc, ad, or generators such as z1,zn; z1[2] names a component, z1[1]*z1[2] a product")
      ->capture_default_str();
  cmd->add_option("--char", args.characteristic, "Characteristic: 0 or a prime")->capture_default_str();
}

qiso::CartanType parse_type(const GroupArgs& args) {
  const bool letter_only = args.type.size() == 1 && std::isalpha(static_cast<unsigned char>(args.type[0]));
  if (letter_only) {
    if (args.rank <= 0) throw std::invalid_argument("--type " + args.type + " needs --rank");
    return qiso::CartanType::parse(args.type, args.rank);
  }
  auto t = qiso::CartanType::parse(args.type);
  if (args.rank > 0 && args.rank != t.rank()) {
    throw std::invalid_argument("--rank " + std::to_string(args.rank) + " contradicts --type " + args.type);
  }
  return t;
}

qiso::CocharLattice build_lattice(const GroupArgs& args) {
  qiso::check_characteristic(args.characteristic);
  auto d = std::make_shared<const qiso::AffineDiagram>(qiso::build_root_system(parse_type(args)));
  return qiso::make_lattice(d, args.lattice);
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_file);
  if (!f) throw std::runtime_error("cannot write " + out_file);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-isolated semisimple classes of semisimple groups"};
  app.require_subcommand(1);

  GroupArgs classify_args;
  std::string format = "table";
  std::string classify_out;
  auto* classify_cmd = app.add_subcommand("classify", "List the quasi-isolated classes");
  add_group_options(classify_cmd, classify_args);
  classify_cmd->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  classify_cmd->add_option("--out", classify_out, "Write to FILE instead of stdout");

  GroupArgs verify_args;
  std::optional<int> max_den;
  std::uint64_t oracle_cap = qiso::default_weyl_cap;
  std::uint64_t point_cap = 2'000'000;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Check the classification against a brute-force search over the Weyl group (E8 exceeds the default cap)");
  add_group_options(verify_cmd, verify_args);
  verify_cmd->add_option("--max-den", max_den, "Denominator of the search grid (default: 2 x lcm of the orders)");
  verify_cmd->add_option("--oracle-cap", oracle_cap, "Largest Weyl group to enumerate")->capture_default_str();
  verify_cmd->add_option("--point-cap", point_cap, "Largest search grid")->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "Write the report to FILE instead of stdout");

  std::string which = "all";
  int table_rank = 4;
  std::string tables_out;
  auto* tables_cmd = app.add_subcommand("tables", "Print the affine diagram table and the adjoint classification tables");
  tables_cmd->add_option("--which", which, "I, II, III or all")
      ->check(CLI::IsMember({"I", "II", "III", "all"}))
      ->capture_default_str();
  tables_cmd->add_option("--rank", table_rank, "Rank for the classical families")->capture_default_str();
  tables_cmd->add_option("--out", tables_out, "Write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*classify_cmd) {
      const auto c = qiso::classify(build_lattice(classify_args), classify_args.characteristic);
      if (format == "json") {
        emit(qiso::to_json(qiso::to_record(c)).dump(2) + "\n", classify_out);
      } else {
        emit(qiso::render_table(c), classify_out);
      }
      return exit_ok;
    }
    if (*verify_cmd) {
      const auto L = build_lattice(verify_args);
      qiso::VerifyOptions options;
      options.max_den = max_den;
      options.weyl_cap = oracle_cap;
      options.point_cap = point_cap;
      const auto r = qiso::verify(L, verify_args.characteristic, options);
      std::string text = L.diagram().base().type().to_string() + ", lattice " + L.spec() + ", characteristic " +
                         std::to_string(verify_args.characteristic) + "\n";
      text += "|W| = " + std::to_string(r.weyl_order) + ", grid denominator " + std::to_string(r.max_den) + ", " +
              std::to_string(r.points) + " points, " + std::to_string(r.quasi_isolated_points) + " quasi-isolated\n";
      text += std::to_string(r.classes) + " classes, " + std::to_string(r.oracle_orbits) + " oracle orbits\n";
      for (const auto& line : r.lines) text += "  " + line + "\n";
      for (const auto& m : r.mismatches) text += "MISMATCH " + m + "\n";
      text += r.pass ? "PASS\n" : "FAIL\n";
      emit(text, verify_out);
      return r.pass ? exit_ok : exit_mismatch;
    }
    if (*tables_cmd) {
      std::string text;
      if (which == "I" || which == "all") {
        std::vector<qiso::CartanType> types;
        for (auto f : {qiso::Family::A, qiso::Family::B, qiso::Family::C, qiso::Family::D}) {
          if (qiso::is_legal({f, table_rank})) types.emplace_back(f, table_rank);
        }
        if (qiso::is_legal({qiso::Family::D, table_rank + 1})) types.emplace_back(qiso::Family::D, table_rank + 1);
        for (auto t : {"E6", "E7", "E8", "F4", "G2"}) types.push_back(qiso::CartanType::parse(t));
        text += qiso::render_affine_table(types) + "\n";
      }
      if (which == "II" || which == "all") text += qiso::render_classical_tables(table_rank);
      if (which == "III" || which == "all") text += qiso::render_exceptional_tables();
      emit(text, tables_out);
      return exit_ok;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
