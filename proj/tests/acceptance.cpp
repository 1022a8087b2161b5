// Acceptance suite. Runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion; exit code is the number of
// failures. argv[1] must be the path to the gsv binary (CLI-level criteria
// shell out to it).

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "goursat/analysis.hpp"
#include "goursat/closed_form.hpp"
#include "goursat/io.hpp"
#include "goursat/recurrence.hpp"
#include "goursat/word.hpp"
#include "helpers.hpp"

using namespace goursat;
using testutil::run_cmd;

namespace {

std::string g_gsv;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
};

void expect(Outcome& out, bool ok, const std::string& what) {
  if (!ok) {
    out.pass = false;
    out.details.push_back(what);
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

const std::uint64_t kCounts[] = {1,   2,    5,    13,   34,  89,
                                 233, 610,  1597, 4181, 10946};  // r = 2..12

std::string fib_word(int r) {
  return "GG" + std::string(static_cast<std::size_t>(r - 2), 'S');
}

// ---- criterion 1: worked-example reproduction over the CLI ----
Outcome criterion_example() {
  Outcome out;
  const char* kTrace =
      "G 1\n"
      "G 1 1\n"
      "S 1 1 2\n"
      "T 1 1 1 3\n"
      "S 1 1 2 2 5\n"
      "G 1 1 1 2 2 5\n"
      "S 1 1 2 2 4 4 10\n";
  for (const char* method : {"recurrence", "closed"}) {
    auto start = std::chrono::steady_clock::now();
    auto res = run_cmd(g_gsv + " derive GGSTSGS --method " + method +
                       " 2>/dev/null");
    double elapsed = seconds_since(start);
    expect(out, res.exit_code == 0,
           std::string("derive --method ") + method + " exited nonzero");
    expect(out,
           res.out.find("derived: 1 1 2 2 4 4 10\n") != std::string::npos,
           std::string("derive --method ") + method + " wrong vector");
    expect(out, elapsed < 0.1,
           std::string("derive --method ") + method + " took " +
               std::to_string(elapsed) + " s (budget 0.1)");
  }
  auto start = std::chrono::steady_clock::now();
  auto trace = run_cmd(g_gsv + " trace GGSTSGS 2>/dev/null");
  double elapsed = seconds_since(start);
  expect(out, trace.exit_code == 0, "trace exited nonzero");
  expect(out, trace.out == kTrace, "trace output differs from the table");
  expect(out, elapsed < 0.1,
         "trace took " + std::to_string(elapsed) + " s (budget 0.1)");
  return out;
}

// ---- criterion 2: operation demos ----
Outcome criterion_ops() {
  Outcome out;
  auto dv = [](std::initializer_list<std::uint64_t> xs) {
    return testutil::dv(xs);
  };
  expect(out,
         op_s(dv({1, 1, 2, 3}), dv({1, 1, 1, 2, 3})) == dv({1, 1, 2, 2, 4, 6}),
         "S((1,1,2,3),(1,1,1,2,3)) != (1,1,2,2,4,6)");
  expect(out, op_t(dv({1, 1, 2}), dv({1, 1, 2, 3})) == dv({1, 1, 1, 3, 4}),
         "T((1,1,2),(1,1,2,3)) != (1,1,1,3,4)");
  return out;
}

// ---- criterion 3: enumeration counts are F_{2r-3} ----
Outcome criterion_counts() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  for (int r = 2; r <= 12; ++r) {
    std::uint64_t count = 0;
    for_each_admissible(r, [&](const std::vector<Letter>&) { ++count; });
    expect(out, count == kCounts[r - 2],
           "enumeration count at r=" + std::to_string(r) + " is " +
               std::to_string(count) + ", want " +
               std::to_string(kCounts[r - 2]));
    expect(out, count_admissible(r).to_uint64() == kCounts[r - 2],
           "closed-form count at r=" + std::to_string(r) + " differs");
  }
  double elapsed = seconds_since(start);
  expect(out, elapsed < 5.0,
         "counting took " + std::to_string(elapsed) + " s (budget 5)");
  return out;
}

// ---- criterion 4: oracle equivalence on all words up to length 12 ----
Outcome criterion_equivalence() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  EquivalenceSummary s = verify_equivalence(12, /*jobs=*/1);
  double elapsed = seconds_since(start);
  expect(out, s.total == 17711,
         "swept " + std::to_string(s.total) + " classes, want 17711");
  expect(out, s.divergences == 0,
         "divergences: " + std::to_string(s.divergences) + " (first " +
             s.first_divergence + ")");
  expect(out, elapsed < 10.0,
         "sweep took " + std::to_string(elapsed) + " s (budget 10)");
  return out;
}

// ---- criterion 5: Fibonacci extremes and their uniqueness ----
Outcome criterion_extremes() {
  Outcome out;
  for (int r = 2; r <= 12; ++r) {
    ClassCode fib = parse(fib_word(r));
    DerivedVector d = derive_recurrence(fib);
    for (int i = 2; i <= r + 1; ++i) {
      expect(out, d.entry(i) == fibonacci(i - 1),
             "entry " + std::to_string(i) + " of the all-S class at r=" +
                 std::to_string(r) + " is not F_" + std::to_string(i - 1));
    }
    expect(out, nonholonomy_degree(d) == fibonacci(r + 2),
           "max degree at r=" + std::to_string(r) + " is not F_{r+2}");

    ClassCode generic(
        std::vector<Letter>(static_cast<std::size_t>(r), Letter::G));
    expect(out,
           nonholonomy_degree(derive_recurrence(generic)) ==
               Natural{static_cast<std::uint64_t>(r) + 1},
           "generic degree at r=" + std::to_string(r) + " is not r+1");

    ExtremalReport extremes = extremal_classes(r);
    expect(out, extremes.min_degree == Natural{static_cast<std::uint64_t>(r) + 1},
           "extremal min at r=" + std::to_string(r));
    expect(out, extremes.max_degree == fibonacci(r + 2),
           "extremal max at r=" + std::to_string(r));
    expect(out,
           extremes.min_count == 1 &&
               extremes.min_classes ==
                   std::vector<std::string>{generic.str()},
           "min degree attained by classes other than all-G at r=" +
               std::to_string(r));
    expect(out,
           extremes.max_count == 1 &&
               extremes.max_classes == std::vector<std::string>{fib.str()},
           "max degree attained by classes other than the all-S tail at r=" +
               std::to_string(r));
  }
  return out;
}

// ---- criterion 6: the degree spectrum gap ----
Outcome criterion_spectrum() {
  Outcome out;
  SpectrumReport six = degree_spectrum(6);
  expect(out, six.min_degree == Natural{7}, "spectrum(6) min != 7");
  expect(out, six.max_degree == Natural{21}, "spectrum(6) max != 21");
  bool has20 = false;
  for (const Natural& v : six.missing) {
    if (v == Natural{20}) has20 = true;
  }
  expect(out, has20, "20 not among the missing degrees at r=6");
  for (int r = 2; r <= 5; ++r) {
    expect(out, degree_spectrum(r).missing_total.is_zero(),
           "missing set at r=" + std::to_string(r) + " is not empty");
  }
  return out;
}

// ---- criterion 7: pairwise distinct derived vectors ----
Outcome criterion_distinct() {
  Outcome out;
  for (int r = 2; r <= 12; ++r) {
    DistinctnessReport rep = distinctness(r);
    expect(out, rep.all_distinct,
           "collision at r=" + std::to_string(r) +
               (rep.collisions.empty()
                    ? ""
                    : ": " + rep.collisions[0].first + " vs " +
                          rep.collisions[0].second));
    expect(out, rep.classes == kCounts[r - 2],
           "distinctness sweep size at r=" + std::to_string(r));
  }
  return out;
}

// ---- criterion 8: randomized identity checks ----
Outcome criterion_identities() {
  Outcome out;
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> kv(0, 9);
  std::uniform_int_distribution<int> extra(0, 3);
  int failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int j_max = iter % 9;  // 0..8
    int size = std::max(2, j_max + 1 + extra(rng));
    std::vector<int> k;
    for (int i = 0; i < size; ++i) k.push_back(kv(rng));
    if (k[1] == 0) k[1] = 1;
    if (!check_shift_absorption(k, j_max)) ++failures;
  }
  expect(out, failures == 0,
         std::to_string(failures) + " failures in the k_1 >= 1 identity");
  failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int j_max = 1 + iter % 8;  // 1..8
    int size = j_max + 1 + extra(rng);
    std::vector<int> k;
    for (int i = 0; i < size; ++i) k.push_back(kv(rng));
    k[1] = 0;
    if (!check_shift_absorption_k1_zero(k, j_max)) ++failures;
  }
  expect(out, failures == 0,
         std::to_string(failures) + " failures in the k_1 = 0 identity");
  return out;
}

// ---- criterion 9: monotonicity and positivity of every derived vector ----
Outcome criterion_monotone() {
  Outcome out;
  std::uint64_t checked = 0, violations = 0;
  for (int r = 2; r <= 12; ++r) {
    for_each_admissible(r, [&](const std::vector<Letter>& word) {
      DerivedVector d = derived_closed(ClassCode(word));
      ++checked;
      bool ok = d.non_decreasing() && d.entry(2) == Natural{1} &&
                d.entry(3) == Natural{1};
      for (const Natural& e : d.entries()) {
        if (e.is_zero()) ok = false;
      }
      if (!ok) ++violations;
    });
  }
  expect(out, checked == 17711, "well-formedness sweep size mismatch");
  expect(out, violations == 0,
         std::to_string(violations) + " ill-formed derived vectors");
  return out;
}

// ---- criterion 10: prolongation coherence ----
Outcome criterion_prolong() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  std::uint64_t checked = 0, divergences = 0;
  std::string first;
  for (int r = 2; r <= 11; ++r) {
    for_each_admissible(r, [&](const std::vector<Letter>& word) {
      ClassCode code(word);
      ClassParams params = extract_params(code);
      for (Letter x : {Letter::G, Letter::S, Letter::T}) {
        if (x == Letter::T && word.back() == Letter::G) {
          continue;  // illegal: would create GT
        }
        ClassCode longer = render_params(prolong(params, x));
        ++checked;
        bool ok = longer.str() == code.str() + to_char(x) &&
                  derived_closed(longer) == derive_recurrence(longer);
        if (!ok) {
          ++divergences;
          if (first.empty()) first = longer.str();
        }
      }
    });
  }
  double elapsed = seconds_since(start);
  expect(out, divergences == 0,
         std::to_string(divergences) + " prolongation divergences (first " +
             first + ")");
  expect(out, checked > 0, "prolongation sweep did not run");
  expect(out, elapsed < 20.0,
         "prolongation sweep took " + std::to_string(elapsed) +
             " s (budget 20)");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-gsv>\n");
    return 64;
  }
  g_gsv = argv[1];

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked-example reproduction (CLI derive + trace)",
       criterion_example},
      {2, "operation demos (S and T worked instances)", criterion_ops},
      {3, "enumeration counts F_{2r-3}, r = 2..12", criterion_counts},
      {4, "closed form == recurrence on all 17711 classes, r <= 12",
       criterion_equivalence},
      {5, "Fibonacci extremes, sharp and unique, r = 2..12",
       criterion_extremes},
      {6, "degree spectrum gap: 20 missing at r = 6, none below",
       criterion_spectrum},
      {7, "derived vectors pairwise distinct, r = 2..12", criterion_distinct},
      {8, "shift-absorption identities on 1000 random tuples each",
       criterion_identities},
      {9, "monotone, positive, 1,1-prefixed derived vectors",
       criterion_monotone},
      {10, "prolongation coherence on all words up to length 11",
       criterion_prolong},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    double elapsed = seconds_since(start);
    std::printf("%s %2d %s [%.3f s]\n", out.pass ? "PASS" : "FAIL", c.id,
                c.name, elapsed);
    for (const std::string& detail : out.details) {
      std::printf("        - %s\n", detail.c_str());
    }
    if (!out.pass) ++failures;
  }
  std::printf("acceptance: %d/%d criteria passed\n",
              static_cast<int>(criteria.size()) - failures,
              static_cast<int>(criteria.size()));
  return failures;
}
