// Command-line front end: ordinarization trees, depth counts, family
// formulas, quasipolynomial fits, verification sweeps, and lattice counts.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsemi/commands.hpp"

namespace {

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoll(cur));
  if (out.empty()) throw nsemi::EmptyInput("expected a comma-separated integer list");
  return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int emit(const nsemi::RunReport& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.text();
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinarization invariants of numerical semigroups"};
  app.require_subcommand(1);

  int threads = 1;
  int64_t node_cap = 100'000'000;
  std::string format = "json";
  std::string out_path;
  bool json_report = false;
  app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
  app.add_option("--node-cap", node_cap, "enumeration node cap")->capture_default_str();
  app.add_option("--format", format, "tree export format: dot | json")->capture_default_str();
  app.add_option("--out", out_path, "write export to this file instead of stdout");
  app.add_flag("--json", json_report, "print the run report as JSON");

  int64_t tree_genus = 7;
  CLI::App* tree = app.add_subcommand("tree", "build and export an ordinarization tree");
  tree->add_option("genus", tree_genus, "genus of the tree")->required();

  int64_t count_genus = 7;
  int64_t count_depth = -1;
  std::string count_method = "both";
  CLI::App* count = app.add_subcommand("count", "count semigroups by ordinarization number");
  count->add_option("genus", count_genus, "genus")->required();
  count->add_option("--depth", count_depth, "single ordinarization number (default: all)");
  count->add_option("--method", count_method, "brute | formula | both")->capture_default_str();

  std::string ord_gens;
  CLI::App* ordc = app.add_subcommand("ord", "invariants of one semigroup");
  ordc->add_option("generators", ord_gens, "comma-separated generators")->required();

  std::string family_kind;
  std::vector<std::string> family_params;
  CLI::App* family = app.add_subcommand("family", "family formulas with oracles");
  family->add_option("kind", family_kind, "twogen | supersym | interval")->required();
  family->add_option("params", family_params, "twogen A B | supersym A,B,C,... | interval A X");

  std::string fit_family;
  int64_t fit_a = 0, fit_lo = 0, fit_hi = 0;
  CLI::App* fit = app.add_subcommand("fit", "fit quasipolynomials from exact samples");
  fit->add_option("family", fit_family, "ng1 | ng2 | qa")->required();
  fit->add_option("--a", fit_a, "fixed smaller generator (qa only)");
  fit->add_option("--from", fit_lo, "smallest sample genus");
  fit->add_option("--to", fit_hi, "largest sample genus");

  int64_t verify_max_genus = 10;
  std::string verify_suites;
  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--max-genus", verify_max_genus, "enumeration cap")->capture_default_str();
  verify->add_option("--suites", verify_suites, "comma-separated suite names (default: all)");

  std::string sys_path;
  int64_t sys_g = 0;
  CLI::App* csys = app.add_subcommand("count-system", "count lattice points of a system file");
  csys->add_option("file", sys_path, "system description file")->required();
  csys->add_option("-g,--g", sys_g, "grading value")->required();

  int64_t bench_genus = 14;
  CLI::App* bench = app.add_subcommand("bench", "time the heavy operations");
  bench->add_option("genus", bench_genus, "genus for enumeration timings")
      ->capture_default_str();

  // global flags (--threads, --out, ...) may appear after the subcommand
  for (CLI::App* sub : {tree, count, ordc, family, fit, verify, csys, bench})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  nsemi::ord::EnumOptions opts;
  opts.threads = threads;
  opts.node_cap = node_cap;

  try {
    if (*tree) return emit(nsemi::cmd_tree(tree_genus, format, out_path, opts), json_report);
    if (*count) {
      std::optional<int64_t> depth;
      if (count_depth >= 0) depth = count_depth;
      return emit(nsemi::cmd_count(count_genus, depth, count_method, opts), json_report);
    }
    if (*ordc) return emit(nsemi::cmd_ord(parse_int_list(ord_gens)), json_report);
    if (*family) {
      if (family_kind == "twogen") {
        if (family_params.size() != 2)
          throw nsemi::BadRange("family twogen needs two parameters: a b");
        return emit(nsemi::cmd_family_twogen(std::stoll(family_params[0]),
                                             std::stoll(family_params[1])),
                    json_report);
      }
      if (family_kind == "supersym") {
        if (family_params.size() != 1)
          throw nsemi::BadRange("family supersym needs one parameter: a1,a2,...");
        return emit(nsemi::cmd_family_supersym(parse_int_list(family_params[0])), json_report);
      }
      if (family_kind == "interval") {
        if (family_params.size() != 2)
          throw nsemi::BadRange("family interval needs two parameters: a x");
        return emit(nsemi::cmd_family_interval(std::stoll(family_params[0]),
                                               std::stoll(family_params[1])),
                    json_report);
      }
      throw nsemi::BadRange("family kind must be twogen, supersym or interval");
    }
    if (*fit) return emit(nsemi::cmd_fit(fit_family, fit_a, fit_lo, fit_hi), json_report);
    if (*verify)
      return emit(nsemi::cmd_verify(verify_max_genus, parse_name_list(verify_suites), opts),
                  json_report);
    if (*csys) return emit(nsemi::cmd_count_system(sys_path, sys_g), json_report);
    if (*bench) return emit(nsemi::cmd_bench(bench_genus, opts), json_report);
  } catch (const nsemi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
