// Line-oriented command-line front end: enumerate object families, map them
// through the bijections, dump statistics, render paths, and run the
// exhaustive verification suite.  Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dyckstat/bijections.hpp"
#include "dyckstat/dyck_path.hpp"
#include "dyckstat/enumeration.hpp"
#include "dyckstat/motzkin.hpp"
#include "dyckstat/permutation.hpp"
#include "dyckstat/render.hpp"
#include "dyckstat/statistics.hpp"
#include "dyckstat/verify.hpp"

namespace {

using namespace dyckstat;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// Applies `transform` to each stdin line; stops at the first bad line with a
// message naming it.
int for_each_line(const std::function<std::string(const std::string&)>& transform) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(std::cin, line)) {
    ++line_number;
    try {
      std::cout << transform(line) << '\n';
    } catch (const std::exception& e) {
      std::cerr << "line " << line_number << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitPass;
}

int run_enumerate(const std::string& kind, int n) {
  if (kind == "dyck") {
    DyckPathStream stream(n);
    while (auto p = stream.next()) std::cout << format_dyck(*p) << '\n';
  } else if (kind == "motzkin") {
    MotzkinStream stream(n);
    while (auto p = stream.next()) std::cout << format_motzkin(*p) << '\n';
  } else if (kind == "riordan") {
    RiordanStream stream(n);
    while (auto p = stream.next()) std::cout << format_motzkin(*p) << '\n';
  } else if (kind == "bicoloured-motzkin") {
    BicolouredMotzkinStream stream(n);
    while (auto p = stream.next()) std::cout << format_motzkin(*p) << '\n';
  } else if (kind == "av321") {
    Av321Stream stream(n);
    while (auto p = stream.next()) std::cout << format_permutation(*p) << '\n';
  } else {
    std::cerr << "unknown kind '" << kind << "'\n";
    return kExitUsage;
  }
  return kExitPass;
}

int run_map(const std::string& bijection, const std::string& direction) {
  const bool forward = direction == "forward";
  if (bijection == "bjs") {
    if (forward)
      return for_each_line(
          [](const std::string& line) { return format_permutation(bjs_forward(parse_dyck(line))); });
    return for_each_line(
        [](const std::string& line) { return format_dyck(bjs_inverse(parse_permutation(line))); });
  }
  if (forward)
    return for_each_line(
        [](const std::string& line) { return format_motzkin(fz_forward(parse_permutation(line))); });
  return for_each_line(
      [](const std::string& line) { return format_permutation(fz_inverse(parse_motzkin(line))); });
}

int run_stats(const std::string& statistic) {
  std::function<std::string(const std::string&)> value;
  if (statistic == "D") {
    value = [](const std::string& line) {
      return format_index_set(set_D(area_profile(parse_dyck(line))));
    };
  } else if (statistic == "F") {
    value = [](const std::string& line) {
      return format_index_set(set_F(area_profile(parse_dyck(line))));
    };
  } else if (statistic == "N") {
    value = [](const std::string& line) { return format_index_set(set_N(parse_dyck(line))); };
  } else if (statistic == "double-deficiencies") {
    value = [](const std::string& line) {
      return std::to_string(statistic_double_deficiencies(parse_permutation(line)));
    };
  } else if (statistic == "gorenstein") {
    value = [](const std::string& line) {
      return std::string(gorenstein_predicate(parse_dyck(line)) ? "1" : "0");
    };
  } else {
    value = [](const std::string& line) {
      return std::string(double_centraliser_predicate(parse_dyck(line)) ? "1" : "0");
    };
  }
  return for_each_line(
      [&value](const std::string& line) { return line + " => " + value(line); });
}

int run_render(bool crosses) {
  return for_each_line([crosses](const std::string& line) {
    const DyckPath path = parse_dyck(line);
    std::vector<CellMark> marks;
    if (crosses) {
      const Permutation pi = bjs_forward(path);
      for (int k = 1; k <= pi.size(); ++k) marks.push_back(CellMark{k, pi(k)});
    }
    return render_ascii(path, marks);
  });
}

int run_verify(const std::string& target, int max_n, int jobs, const std::string& report_path) {
  VerificationReport report;
  if (target == "lemmas")
    report = verify_lemmas(max_n, jobs);
  else if (target == "conjecture1")
    report = verify_conjecture1(max_n, jobs);
  else if (target == "conjecture2")
    report = verify_conjecture2(max_n, jobs);
  else
    report = verify_all(max_n, jobs);

  std::cout << report.summary();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report to '" << report_path << "'\n";
      return kExitUsage;
    }
    out << report.to_jsonl();
  }
  return report.all_pass() ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck-path statistics, bijections, and exhaustive verification"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "stream all objects of one family");
  std::string kind;
  int n = 0;
  enumerate->add_option("--kind", kind, "dyck | motzkin | riordan | bicoloured-motzkin | av321")
      ->required()
      ->check(CLI::IsMember({"dyck", "motzkin", "riordan", "bicoloured-motzkin", "av321"}));
  enumerate->add_option("--n", n, "object size")->required()->check(CLI::NonNegativeNumber);

  auto* map = app.add_subcommand("map", "map stdin objects through a bijection");
  std::string bijection;
  std::string direction = "forward";
  map->add_option("--bijection", bijection, "bjs | fz")
      ->required()
      ->check(CLI::IsMember({"bjs", "fz"}));
  map->add_option("--direction", direction, "forward | inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));

  auto* stats = app.add_subcommand("stats", "print 'object => value' for stdin objects");
  std::string statistic;
  stats
      ->add_option("--statistic", statistic,
                   "D | F | N | double-deficiencies | gorenstein | double-centraliser")
      ->required()
      ->check(CLI::IsMember(
          {"D", "F", "N", "double-deficiencies", "gorenstein", "double-centraliser"}));

  auto* verify = app.add_subcommand("verify", "exhaustively check the implemented identities");
  std::string target = "all";
  int max_n = 10;
  int jobs = 1;
  std::string report_path;
  verify->add_option("--target", target, "lemmas | conjecture1 | conjecture2 | all")
      ->check(CLI::IsMember({"lemmas", "conjecture1", "conjecture2", "all"}));
  verify->add_option("--max-n", max_n, "largest semilength checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "write a JSON-lines report here");

  auto* render = app.add_subcommand("render", "ASCII pictures of stdin Dyck words");
  bool crosses = false;
  render->add_flag("--crosses", crosses, "overlay the BJS permutation matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(kind, n);
    if (map->parsed()) return run_map(bijection, direction);
    if (stats->parsed()) return run_stats(statistic);
    if (verify->parsed()) return run_verify(target, max_n, jobs, report_path);
    return run_render(crosses);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
}
