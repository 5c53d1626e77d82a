#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dyckstat {

// Per-semilength tallies from the exhaustive sweep, next to the counts the
// recurrences predict.
struct CountRow {
  int n = 0;
  std::int64_t dyck_count = 0;
  std::int64_t gorenstein_count = 0;          // N ∩ D ⊆ F
  std::int64_t double_centraliser_count = 0;  // N ∩ D = ∅
  std::int64_t expected_motzkin = 0;
  std::int64_t expected_riordan = 0;
  double elapsed_ms = 0.0;  // timing only; excluded from determinism claims
};

struct PropertyResult {
  std::string name;
  int max_n = 0;
  bool pass = true;
  // Informational checks are recorded but never fail the run.
  bool informational = false;
  std::optional<std::string> counterexample;
  std::optional<int> counterexample_n;
};

struct VerificationReport {
  std::string target;
  int max_n = 0;
  std::vector<CountRow> counts;
  std::vector<PropertyResult> properties;

  bool all_pass() const;
  // One JSON object per line; identical across runs and worker counts apart
  // from the elapsed_ms fields.
  std::string to_jsonl() const;
  // Human-readable table.
  std::string summary() const;
};

// Exhaustive checks over every Dyck path of semilength 0..max_n (and the
// permutation / Motzkin families the targets need).  `jobs` splits each
// semilength into contiguous lexicographic rank blocks; results do not
// depend on the worker count.
VerificationReport verify_lemmas(int max_n, int jobs = 1);
VerificationReport verify_conjecture1(int max_n, int jobs = 1);
VerificationReport verify_conjecture2(int max_n, int jobs = 1);
VerificationReport verify_all(int max_n, int jobs = 1);

}  // namespace dyckstat
