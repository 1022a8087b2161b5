#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goursat/closed_form.hpp"
#include "goursat/natural.hpp"
#include "goursat/recurrence.hpp"
#include "goursat/word.hpp"

namespace goursat {

/// The big growth vector in length r, constant across all classes:
/// (2, 3, ..., r+2).
std::vector<int> big_growth_vector(int r);

/// Everything the library knows about one class. `derived` is computed both
/// by the recurrence and by the closed form; construction fails loudly if the
/// two disagree.
struct ClassReport {
  ClassCode code;
  ClassParams params;
  DerivedVector derived;
  SmallGrowthVector sgrv;
  Natural degree;
  int codim = 0;
  std::vector<int> big_growth;
};

/// Throws OracleDivergence if the two derivations disagree (a bug, never an
/// admissible-input condition).
ClassReport class_report(const ClassCode& code);

struct EquivalenceSummary {
  int r_max = 0;
  std::vector<std::uint64_t> classes_per_length;  // index 0 holds r = 2
  std::uint64_t total = 0;
  std::uint64_t divergences = 0;
  std::string first_divergence;  // lexicographically first word, "" if none
};

/// Compares the closed form against the recurrence on every admissible word
/// of each length up to r_max. Divergences are data, not errors.
EquivalenceSummary verify_equivalence(int r_max, int jobs = 1);

struct SpectrumReport {
  int r = 0;
  std::uint64_t classes = 0;
  std::vector<Natural> realized;  // ascending distinct degrees
  Natural min_degree;
  Natural max_degree;
  std::vector<Natural> missing;  // ascending, truncated at the cap
  Natural missing_total;         // exact count of unrealized interval values
  bool missing_truncated = false;
};

/// Nonholonomy degrees over all classes of length r; `missing` is the
/// realized-interval complement, listed up to missing_cap values.
SpectrumReport degree_spectrum(int r, int jobs = 1,
                               std::size_t missing_cap = 1000);

struct DistinctnessReport {
  int r = 0;
  std::uint64_t classes = 0;
  bool all_distinct = false;
  /// Pairs of words sharing a derived vector (first hit listed first);
  /// capped, empty when all_distinct.
  std::vector<std::pair<std::string, std::string>> collisions;
};

/// Whether the derived vectors of all classes of length r are pairwise
/// distinct. Keys are canonical decimal serializations, so no truncation.
DistinctnessReport distinctness(int r, int jobs = 1);

struct ExtremalReport {
  int r = 0;
  Natural min_degree;
  Natural max_degree;
  std::vector<std::string> min_classes;  // capped at 32
  std::vector<std::string> max_classes;  // capped at 32
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
};

/// All classes attaining the minimal and maximal nonholonomy degree in
/// length r.
ExtremalReport extremal_classes(int r, int jobs = 1);

}  // namespace goursat
