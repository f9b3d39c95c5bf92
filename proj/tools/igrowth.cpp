#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "igrowth/alt_product.hpp"
#include "igrowth/errors.hpp"
#include "igrowth/group_io.hpp"
#include "igrowth/intersection_growth.hpp"
#include "igrowth/verify_suite.hpp"

namespace {

using namespace igrowth;

struct CommonOpts {
  bool serial = false;
  std::string strategy = "auto";
  std::uint64_t lattice_cap = 2000;
  int search_cap = 7;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_flag("--serial", opts.serial, "run the enumeration kernels single threaded");
  sub->add_option("--strategy", opts.strategy, "enumeration strategy")
      ->check(CLI::IsMember({"auto", "lattice", "search"}))
      ->capture_default_str();
  sub->add_option("--lattice-cap", opts.lattice_cap, "largest group order enumerated in full")
      ->capture_default_str();
  sub->add_option("--search-cap", opts.search_cap, "largest index the coset search accepts")
      ->capture_default_str();
}

EnumOptions to_enum_options(const CommonOpts& opts) {
  EnumOptions result;
  result.exec = opts.serial ? ExecMode::Serial : ExecMode::Parallel;
  if (opts.strategy == "lattice") result.strategy = EnumStrategy::Lattice;
  if (opts.strategy == "search") result.strategy = EnumStrategy::CosetSearch;
  result.lattice_order_cap = opts.lattice_cap;
  result.search_index_cap = opts.search_cap;
  return result;
}

SubgroupClass class_from_flag(const std::string& text) {
  auto parsed = subgroup_class_from_string(text);
  if (!parsed) throw std::invalid_argument("unknown subgroup class: " + text);
  return *parsed;
}

GrowthTable only_jumps(const GrowthTable& table) {
  GrowthTable filtered;
  filtered.group = table.group;
  filtered.cls = table.cls;
  BigNat previous = 1;
  for (const GrowthRow& row : table.rows) {
    if (row.index > previous) filtered.rows.push_back(row);
    previous = row.index;
  }
  return filtered;
}

void print_table(const GrowthTable& table, const std::string& format) {
  if (format == "json")
    std::cout << to_json_string(table);
  else
    std::cout << to_csv(table);
}

int run_analyze(const std::string& group_file, const std::string& cls, int n_max,
                const std::string& format, const std::string& path, bool jumps,
                const CommonOpts& common) {
  PermGroup g = read_group_file(group_file);
  TablePath table_path = (path == "scratch") ? TablePath::FromScratch : TablePath::Incremental;
  GrowthTable table =
      growth_table(g, n_max, class_from_flag(cls), to_enum_options(common), table_path);
  if (jumps) table = only_jumps(table);
  print_table(table, format);
  return 0;
}

int run_alt_product(const std::string& seq_file, const std::string& cls, int n_max,
                    const std::string& format) {
  AltSequence seq(read_sequence_file(seq_file));
  SubgroupClass c = class_from_flag(cls);
  GrowthTable table;
  table.group = path_stem(seq_file);
  table.cls = c;
  for (int n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    row.index = closed_form_growth(seq, BigNat(n), c);
    row.lambda_order = closed_form_lambda_order(seq, BigNat(n), c);
    table.rows.push_back(std::move(row));
  }
  print_table(table, format);
  return 0;
}

int run_build_seq(const std::string& f_spec, int count, bool literal_min) {
  auto f = GrowthFunction::parse(f_spec);
  if (!f) {
    std::cerr << "error: cannot parse growth function '" << f_spec << "'\n";
    return 2;
  }
  AltSequence seq = build_sequence(*f, count);
  for (const BigNat& term : seq.terms()) std::cout << term.str() << "\n";

  SequenceReport report =
      literal_min ? literal_min_checks(seq, *f) : verify_sequence_against(seq, *f);
  for (const SequenceCheck& check : report.checks)
    if (!check.passed)
      std::cerr << "check failed at step " << check.k << ": " << check.what << " ("
                << check.detail << ")\n";
  return report.all_passed ? 0 : 1;
}

int run_verify(const std::string& level, const std::string& format, bool inject_failure,
               const CommonOpts& common) {
  VerifyLevel lvl = (level == "full") ? VerifyLevel::Full : VerifyLevel::Quick;
  VerifyReport report = run_verification(lvl, inject_failure, to_enum_options(common));
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["level"] = level;
    doc["all_passed"] = report.all_passed;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const VerifyCheck& check : report.checks) {
      nlohmann::ordered_json entry;
      entry["name"] = check.name;
      entry["passed"] = check.passed;
      entry["detail"] = check.detail;
      doc["checks"].push_back(std::move(entry));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const VerifyCheck& check : report.checks) {
      std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name;
      if (!check.passed && !check.detail.empty()) std::cout << "  [" << check.detail << "]";
      std::cout << "\n";
    }
    std::cout << (report.all_passed ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection growth of finite permutation groups"};
  app.require_subcommand(1);

  std::string group_file, seq_file, f_spec;
  std::string cls = "all", format = "csv", table_path = "incremental";
  std::string level = "quick", verify_format = "text";
  int n_max = 1, count = 1;
  bool jumps = false, literal_min = false, inject_failure = false;
  CommonOpts analyze_common, verify_common;

  CLI::App* analyze = app.add_subcommand("analyze", "growth table of a group file");
  analyze->add_option("--group", group_file, "group file")->required();
  analyze->add_option("--class", cls, "subgroup class")
      ->check(CLI::IsMember({"all", "normal", "maxnormal"}))
      ->capture_default_str();
  analyze->add_option("--n-max", n_max, "largest argument")->required()->check(CLI::PositiveNumber);
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  analyze->add_option("--path", table_path, "table construction path")
      ->check(CLI::IsMember({"incremental", "scratch"}))
      ->capture_default_str();
  analyze->add_flag("--jumps", jumps, "print only the rows where the value increases");
  add_common(analyze, analyze_common);

  CLI::App* alt = app.add_subcommand("alt-product", "closed-form growth table of a sequence file");
  alt->add_option("--seq", seq_file, "sequence file")->required();
  alt->add_option("--class", cls, "subgroup class")
      ->check(CLI::IsMember({"all", "normal", "maxnormal"}))
      ->capture_default_str();
  alt->add_option("--n-max", n_max, "largest argument")->required()->check(CLI::PositiveNumber);
  alt->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CLI::App* build = app.add_subcommand("build-seq", "build a sequence for a target function");
  build->add_option("--f", f_spec, "target: identity | poly:c0,c1,... | exp:b")->required();
  build->add_option("--k", count, "number of terms")->required()->check(CLI::PositiveNumber);
  build->add_flag("--literal-min", literal_min,
                  "check the stricter literal bound instead of the usable one");

  CLI::App* verify = app.add_subcommand("verify", "run the built-in cross-checks");
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_flag("--inject-failure", inject_failure)->group("");
  add_common(verify, verify_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze)
      return run_analyze(group_file, cls, n_max, format, table_path, jumps, analyze_common);
    if (*alt) return run_alt_product(seq_file, cls, n_max, format);
    if (*build) return run_build_seq(f_spec, count, literal_min);
    if (*verify) return run_verify(level, verify_format, inject_failure, verify_common);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
