#include "dyckstat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dyckstat/bijections.hpp"
#include "dyckstat/enumeration.hpp"
#include "dyckstat/statistics.hpp"

namespace dyckstat {

namespace {

// Everything the per-path checks look at, computed once per path.
struct PathFacts {
  DyckPath path;
  std::string word;
  AreaProfile profile;
  std::vector<Valley> vls;
  std::vector<int> D, F, N, ND;
  Permutation pi;
  Permutation pi_inv;
  IndexClassification cls;
  BicolouredMotzkinPath image;  // fz(bjs(path))
};

PathFacts make_facts(DyckPath path) {
  PathFacts f{.path = std::move(path)};
  f.word = format_dyck(f.path);
  f.profile = area_profile(f.path);
  f.vls = valleys(f.path);
  f.D = set_D(f.profile);
  f.F = set_F(f.profile);
  f.N = set_N(f.path);
  f.ND = set_intersection(f.N, f.D);
  f.pi = bjs_forward(f.path);
  f.pi_inv = inverse(f.pi);
  f.cls = classify(f.pi);
  f.image = fz_forward(f.pi);
  return f;
}

int count_steps(const BicolouredMotzkinPath& m, MotzkinStep step) {
  return static_cast<int>(std::count(m.steps().begin(), m.steps().end(), step));
}

bool check_valleys_are_excedances(const PathFacts& f) {
  std::vector<bool> valley_column(static_cast<std::size_t>(f.path.semilength()) + 1, false);
  for (const Valley& v : f.vls) {
    if (f.pi(v.east_index) != v.north_index) return false;
    valley_column[static_cast<std::size_t>(v.east_index)] = true;
  }
  for (int k = 1; k <= f.path.semilength(); ++k)
    if (!valley_column[static_cast<std::size_t>(k)] && f.pi(k) > k) return false;
  return true;
}

bool check_fixpoints_avoid_straddling_valleys(const PathFacts& f) {
  for (int k = 1; k <= f.path.semilength(); ++k) {
    bool straddled = false;
    for (const Valley& v : f.vls)
      if (v.east_index <= k && v.north_index >= k) {
        straddled = true;
        break;
      }
    if ((f.pi(k) == k) == straddled) return false;
  }
  return true;
}

bool check_set_D(const PathFacts& f) { return f.D == f.cls.weak_deficiencies(); }

bool check_set_F(const PathFacts& f) { return f.F == f.cls.fixpoints(); }

bool check_set_N(const PathFacts& f) {
  // k in N exactly when value k sits at position >= k.
  std::vector<int> expected;
  for (int k = 1; k <= f.path.semilength(); ++k)
    if (f.pi_inv(k) >= k) expected.push_back(k);
  return f.N == expected;
}

bool check_nd_minus_f(const PathFacts& f) {
  return set_difference(f.ND, f.F) == f.cls.double_deficiencies();
}

bool check_f_minus_nd_literal(const PathFacts& f) {
  return set_difference(f.F, f.ND) == f.cls.double_deficiencies();
}

bool check_gorenstein_iff_no_red(const PathFacts& f) {
  return is_subset(f.ND, f.F) == (count_steps(f.image, MotzkinStep::LevelRed) == 0);
}

bool check_double_centraliser_iff_no_red_no_ground_level(const PathFacts& f) {
  const bool plain = count_steps(f.image, MotzkinStep::LevelRed) == 0 &&
                     count_steps(f.image, MotzkinStep::LevelZero) == 0;
  return f.ND.empty() == plain;
}

bool check_gorenstein_iff_no_double_deficiencies(const PathFacts& f) {
  return is_subset(f.ND, f.F) == f.cls.double_deficiencies().empty();
}

bool check_f_contained_in_n_and_d(const PathFacts& f) {
  return is_subset(f.F, f.N) && is_subset(f.F, f.D);
}

bool check_bjs_round_trip(const PathFacts& f) { return bjs_inverse(f.pi) == f.path; }

bool check_bjs_image_is_321_avoiding(const PathFacts& f) { return is_321_avoiding(f.pi); }

bool check_fz_round_trip(const PathFacts& f) { return fz_inverse(f.image) == f.pi; }

bool check_fz_step_counts(const PathFacts& f) {
  int plain_excedances = 0, fixpoints = 0, double_exc = 0, double_def = 0;
  for (int k = 1; k <= f.pi.size(); ++k) {
    if (f.cls.kind(k) == IndexKind::Fixpoint) ++fixpoints;
    if (f.cls.double_excedance(k)) ++double_exc;
    if (f.cls.double_deficiency(k)) ++double_def;
    if (f.cls.kind(k) == IndexKind::Excedance && !f.cls.double_excedance(k)) ++plain_excedances;
  }
  return count_steps(f.image, MotzkinStep::Up) == plain_excedances &&
         count_steps(f.image, MotzkinStep::Down) == plain_excedances &&
         count_steps(f.image, MotzkinStep::LevelZero) == fixpoints &&
         count_steps(f.image, MotzkinStep::LevelBlue) == double_exc &&
         count_steps(f.image, MotzkinStep::LevelRed) == double_def;
}

struct PathProperty {
  const char* name;
  bool informational;
  bool (*check)(const PathFacts&);
};

constexpr PathProperty kLemmaProperties[] = {
    {"bjs_valleys_are_excedances", false, check_valleys_are_excedances},
    {"bjs_fixpoints_avoid_straddling_valleys", false, check_fixpoints_avoid_straddling_valleys},
    {"set_D_matches_bjs_weak_deficiencies", false, check_set_D},
    {"set_F_matches_bjs_fixpoints", false, check_set_F},
    {"set_N_matches_bjs_value_positions", false, check_set_N},
};

constexpr PathProperty kRefinementProperties[] = {
    {"nd_minus_f_matches_double_deficiencies", false, check_nd_minus_f},
    {"f_minus_nd_matches_double_deficiencies_literal", true, check_f_minus_nd_literal},
};

constexpr PathProperty kCountingMechanismProperties[] = {
    {"gorenstein_iff_no_red_steps", false, check_gorenstein_iff_no_red},
    {"double_centraliser_iff_no_red_no_ground_level", false,
     check_double_centraliser_iff_no_red_no_ground_level},
};

constexpr PathProperty kCrossCheckProperties[] = {
    {"f_contained_in_n_and_d", false, check_f_contained_in_n_and_d},
    {"gorenstein_iff_no_double_deficiencies", false, check_gorenstein_iff_no_double_deficiencies},
    {"bjs_round_trip", false, check_bjs_round_trip},
    {"bjs_image_is_321_avoiding", false, check_bjs_image_is_321_avoiding},
    {"fz_round_trip", false, check_fz_round_trip},
    {"fz_step_counts_match_classification", false, check_fz_step_counts},
};

struct Options {
  std::string target;
  int max_n = 10;
  int jobs = 1;
  bool lemmas = false;
  bool refinement = false;   // the two set-difference readings
  bool counting = false;     // predicate counts vs Motzkin/Riordan numbers
  bool cross_checks = false; // bijection round trips and family counts
};

struct FailureRecord {
  std::int64_t rank;
  std::string word;
};

struct WorkerResult {
  std::int64_t dyck = 0;
  std::int64_t gorenstein = 0;
  std::int64_t double_centraliser = 0;
  std::vector<std::optional<FailureRecord>> failures;
};

void sweep_block(const std::vector<PathProperty>& properties, int n, std::int64_t lo,
                 std::int64_t hi, WorkerResult& out) {
  out.failures.assign(properties.size(), std::nullopt);
  DyckPathStream stream(n, lo, hi);
  std::int64_t rank = lo;
  while (auto path = stream.next()) {
    const PathFacts facts = make_facts(std::move(*path));
    ++out.dyck;
    if (is_subset(facts.ND, facts.F)) ++out.gorenstein;
    if (facts.ND.empty()) ++out.double_centraliser;
    for (std::size_t p = 0; p < properties.size(); ++p) {
      if (out.failures[p]) continue;
      if (!properties[p].check(facts)) out.failures[p] = FailureRecord{rank, facts.word};
    }
    ++rank;
  }
}

VerificationReport run(const Options& opt) {
  VerificationReport report;
  report.target = opt.target;
  report.max_n = opt.max_n;

  std::vector<PathProperty> path_properties;
  if (opt.lemmas)
    path_properties.insert(path_properties.end(), std::begin(kLemmaProperties),
                           std::end(kLemmaProperties));
  if (opt.refinement)
    path_properties.insert(path_properties.end(), std::begin(kRefinementProperties),
                           std::end(kRefinementProperties));
  if (opt.counting)
    path_properties.insert(path_properties.end(), std::begin(kCountingMechanismProperties),
                           std::end(kCountingMechanismProperties));
  if (opt.cross_checks)
    path_properties.insert(path_properties.end(), std::begin(kCrossCheckProperties),
                           std::end(kCrossCheckProperties));

  std::vector<PropertyResult> results(path_properties.size());
  for (std::size_t p = 0; p < path_properties.size(); ++p) {
    results[p].name = path_properties[p].name;
    results[p].max_n = opt.max_n;
    results[p].informational = path_properties[p].informational;
  }

  // Filled on demand by the family sweeps below.
  PropertyResult bicoloured_count{.name = "bicoloured_stream_count_matches_dyck_count",
                                  .max_n = opt.max_n};
  PropertyResult fz_family_round_trip{.name = "fz_round_trip_on_bicoloured_stream",
                                      .max_n = opt.max_n};
  PropertyResult motzkin_count{.name = "motzkin_stream_count_matches_recurrence",
                               .max_n = opt.max_n};
  PropertyResult riordan_count{.name = "riordan_stream_count_matches_recurrence",
                               .max_n = opt.max_n};

  for (int n = 0; n <= opt.max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t total = catalan(n);

    const int jobs = std::max(1, opt.jobs);
    std::vector<WorkerResult> partials(static_cast<std::size_t>(jobs));
    {
      std::vector<std::thread> workers;
      const std::int64_t quotient = total / jobs;
      const std::int64_t remainder = total % jobs;
      std::int64_t lo = 0;
      for (int b = 0; b < jobs; ++b) {
        const std::int64_t hi = lo + quotient + (b < remainder ? 1 : 0);
        if (jobs == 1) {
          sweep_block(path_properties, n, lo, hi, partials[0]);
        } else {
          workers.emplace_back(sweep_block, std::cref(path_properties), n, lo, hi,
                               std::ref(partials[static_cast<std::size_t>(b)]));
        }
        lo = hi;
      }
      for (auto& w : workers) w.join();
    }

    CountRow row{.n = n,
                 .expected_motzkin = motzkin_number(n),
                 .expected_riordan = riordan_number(n)};
    for (const WorkerResult& part : partials) {
      row.dyck_count += part.dyck;
      row.gorenstein_count += part.gorenstein;
      row.double_centraliser_count += part.double_centraliser;
      for (std::size_t p = 0; p < path_properties.size(); ++p) {
        if (!part.failures.empty() && part.failures[p] && results[p].pass) {
          results[p].pass = false;
          results[p].counterexample = part.failures[p]->word;
          results[p].counterexample_n = n;
        }
      }
    }

    if (opt.cross_checks) {
      // The bicoloured family is counted against the Dyck sweep, not against
      // a closed formula, and the inverse map is exercised on every member.
      std::int64_t bicoloured = 0;
      BicolouredMotzkinStream bstream(n);
      while (auto m = bstream.next()) {
        ++bicoloured;
        if (fz_family_round_trip.pass && !(fz_forward(fz_inverse(*m)) == *m)) {
          fz_family_round_trip.pass = false;
          fz_family_round_trip.counterexample = format_motzkin(*m);
          fz_family_round_trip.counterexample_n = n;
        }
      }
      if (bicoloured_count.pass && bicoloured != row.dyck_count) {
        bicoloured_count.pass = false;
        bicoloured_count.counterexample = "n=" + std::to_string(n) + ": counted " +
                                          std::to_string(bicoloured) + ", dyck count " +
                                          std::to_string(row.dyck_count);
        bicoloured_count.counterexample_n = n;
      }

      std::int64_t motzkin = 0;
      MotzkinStream mstream(n);
      while (mstream.next()) ++motzkin;
      if (motzkin_count.pass && motzkin != row.expected_motzkin) {
        motzkin_count.pass = false;
        motzkin_count.counterexample = "n=" + std::to_string(n) + ": counted " +
                                       std::to_string(motzkin) + ", expected " +
                                       std::to_string(row.expected_motzkin);
        motzkin_count.counterexample_n = n;
      }

      std::int64_t riordan = 0;
      RiordanStream rstream(n);
      while (rstream.next()) ++riordan;
      if (riordan_count.pass && riordan != row.expected_riordan) {
        riordan_count.pass = false;
        riordan_count.counterexample = "n=" + std::to_string(n) + ": counted " +
                                       std::to_string(riordan) + ", expected " +
                                       std::to_string(row.expected_riordan);
        riordan_count.counterexample_n = n;
      }
    }

    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    report.counts.push_back(row);
  }

  for (auto& r : results) report.properties.push_back(std::move(r));

  if (opt.counting) {
    PropertyResult gorenstein{.name = "gorenstein_counts_match_motzkin_numbers",
                              .max_n = opt.max_n};
    PropertyResult centraliser{.name = "double_centraliser_counts_match_riordan_numbers",
                               .max_n = opt.max_n};
    for (const CountRow& row : report.counts) {
      if (gorenstein.pass && row.gorenstein_count != row.expected_motzkin) {
        gorenstein.pass = false;
        gorenstein.counterexample = "n=" + std::to_string(row.n) + ": counted " +
                                    std::to_string(row.gorenstein_count) + ", expected " +
                                    std::to_string(row.expected_motzkin);
        gorenstein.counterexample_n = row.n;
      }
      if (centraliser.pass && row.double_centraliser_count != row.expected_riordan) {
        centraliser.pass = false;
        centraliser.counterexample = "n=" + std::to_string(row.n) + ": counted " +
                                     std::to_string(row.double_centraliser_count) +
                                     ", expected " + std::to_string(row.expected_riordan);
        centraliser.counterexample_n = row.n;
      }
    }
    report.properties.push_back(std::move(gorenstein));
    report.properties.push_back(std::move(centraliser));
  }

  if (opt.cross_checks) {
    report.properties.push_back(std::move(bicoloured_count));
    report.properties.push_back(std::move(fz_family_round_trip));
    report.properties.push_back(std::move(motzkin_count));
    report.properties.push_back(std::move(riordan_count));

    PropertyResult convolution{.name = "motzkin_number_is_sum_of_riordan_pair",
                               .max_n = std::max(opt.max_n, 30)};
    for (int n = 0; n <= convolution.max_n; ++n) {
      if (motzkin_number(n) != riordan_number(n) + riordan_number(n + 1)) {
        convolution.pass = false;
        convolution.counterexample = "n=" + std::to_string(n);
        convolution.counterexample_n = n;
        break;
      }
    }
    report.properties.push_back(std::move(convolution));
  }

  return report;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const PropertyResult& p : properties)
    if (!p.informational && !p.pass) return false;
  return true;
}

std::string VerificationReport::to_jsonl() const {
  using nlohmann::json;
  std::string out;
  out += json{{"type", "meta"}, {"target", target}, {"max_n", max_n}}.dump();
  out += '\n';
  for (const CountRow& row : counts) {
    out += json{{"type", "counts"},
                {"n", row.n},
                {"dyck", row.dyck_count},
                {"gorenstein", row.gorenstein_count},
                {"double_centraliser", row.double_centraliser_count},
                {"expected_motzkin", row.expected_motzkin},
                {"expected_riordan", row.expected_riordan},
                {"elapsed_ms", row.elapsed_ms}}
               .dump();
    out += '\n';
  }
  for (const PropertyResult& p : properties) {
    json entry{{"type", "property"},
               {"name", p.name},
               {"max_n", p.max_n},
               {"pass", p.pass},
               {"informational", p.informational}};
    entry["counterexample"] = p.counterexample ? json(*p.counterexample) : json(nullptr);
    entry["counterexample_n"] = p.counterexample_n ? json(*p.counterexample_n) : json(nullptr);
    out += entry.dump();
    out += '\n';
  }
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << "verification target '" << target << "', semilengths 0.." << max_n << "\n\n";
  out << "   n        dyck  gorenstein     motzkin  dbl-centr     riordan        ms\n";
  for (const CountRow& row : counts) {
    out << std::setw(4) << row.n << std::setw(12) << row.dyck_count << std::setw(12)
        << row.gorenstein_count << std::setw(12) << row.expected_motzkin << std::setw(11)
        << row.double_centraliser_count << std::setw(12) << row.expected_riordan << std::setw(10)
        << std::fixed << std::setprecision(1) << row.elapsed_ms << "\n";
  }
  out << "\n";
  for (const PropertyResult& p : properties) {
    const char* tag = p.informational ? (p.pass ? "info" : "INFO") : (p.pass ? "pass" : "FAIL");
    out << "  [" << tag << "] " << p.name << " (n <= " << p.max_n << ")";
    if (!p.pass && p.counterexample)
      out << "  first counterexample at n=" << (p.counterexample_n ? *p.counterexample_n : -1)
          << ": " << *p.counterexample;
    out << "\n";
  }
  out << "\nresult: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

VerificationReport verify_lemmas(int max_n, int jobs) {
  return run({.target = "lemmas", .max_n = max_n, .jobs = jobs, .lemmas = true});
}

VerificationReport verify_conjecture1(int max_n, int jobs) {
  return run({.target = "conjecture1", .max_n = max_n, .jobs = jobs, .counting = true});
}

VerificationReport verify_conjecture2(int max_n, int jobs) {
  return run({.target = "conjecture2", .max_n = max_n, .jobs = jobs, .refinement = true});
}

VerificationReport verify_all(int max_n, int jobs) {
  return run({.target = "all",
              .max_n = max_n,
              .jobs = jobs,
              .lemmas = true,
              .refinement = true,
              .counting = true,
              .cross_checks = true});
}

}  // namespace dyckstat
