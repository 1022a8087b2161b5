#include "goursat/analysis.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>
#include <utility>

namespace goursat {

namespace {

constexpr std::size_t kClassListCap = 32;

// Runs absorb over every admissible word of length r and merges the partial
// aggregates in lexicographic prefix order, so the result is identical for
// any job count. Words are partitioned by prefix: a prefix of an admissible
// word is admissible, and every admissible word extends by G's.
template <typename Agg, typename AbsorbFn>
Agg sweep_words(int r, int jobs, Agg zero, AbsorbFn absorb,
                void (*merge)(Agg&, Agg&&)) {
  jobs = std::max(1, jobs);
  int prefix_len = 0;
  if (jobs > 1) {
    const std::uint64_t want = 8ull * static_cast<std::uint64_t>(jobs);
    for (int len = 2; len < r && len <= 12; ++len) {
      auto count = count_admissible(len).to_uint64();
      if (count && *count >= want) {
        prefix_len = len;
        break;
      }
    }
  }
  if (prefix_len == 0) {
    Agg acc = std::move(zero);
    for (Enumerator e(r); !e.done(); e.advance()) {
      absorb(acc, e.word());
    }
    return acc;
  }

  std::vector<ClassCode> prefixes;
  for (Enumerator e(prefix_len); !e.done(); e.advance()) {
    prefixes.push_back(e.code());
  }
  const std::size_t chunk =
      (prefixes.size() + static_cast<std::size_t>(jobs) - 1) /
      static_cast<std::size_t>(jobs);
  std::vector<Agg> partial(static_cast<std::size_t>(jobs), zero);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    const std::size_t lo = static_cast<std::size_t>(t) * chunk;
    const std::size_t hi = std::min(prefixes.size(), lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi, t] {
      for (std::size_t i = lo; i < hi; ++i) {
        for (Enumerator e(prefixes[i], r); !e.done(); e.advance()) {
          absorb(partial[static_cast<std::size_t>(t)], e.word());
        }
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  Agg acc = std::move(zero);
  for (auto& part : partial) {
    merge(acc, std::move(part));
  }
  return acc;
}

std::string word_str(const std::vector<Letter>& word) {
  std::string out;
  out.reserve(word.size());
  for (Letter x : word) {
    out.push_back(to_char(x));
  }
  return out;
}

}  // namespace

std::vector<int> big_growth_vector(int r) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(r) + 1);
  for (int dim = 2; dim <= r + 2; ++dim) {
    out.push_back(dim);
  }
  return out;
}

ClassReport class_report(const ClassCode& code) {
  DerivedVector by_recurrence = derive_recurrence(code);
  DerivedVector by_closed_form = derived_closed(code);
  if (!(by_recurrence == by_closed_form)) {
    throw OracleDivergence("derivations disagree on " + code.str() +
                           ": recurrence " + by_recurrence.str() +
                           " vs closed form " + by_closed_form.str());
  }
  ClassReport report{
      code,
      extract_params(code),
      by_recurrence,
      small_growth_vector(by_recurrence),
      nonholonomy_degree(by_recurrence),
      codimension(code),
      big_growth_vector(code.size()),
  };
  return report;
}

EquivalenceSummary verify_equivalence(int r_max, int jobs) {
  if (r_max < 2) {
    throw std::invalid_argument("r_max must be >= 2");
  }
  struct Agg {
    std::uint64_t count = 0;
    std::uint64_t divergences = 0;
    std::string first;
  };
  EquivalenceSummary summary;
  summary.r_max = r_max;
  for (int r = 2; r <= r_max; ++r) {
    Agg acc = sweep_words<Agg>(
        r, jobs, {},
        [](Agg& agg, const std::vector<Letter>& word) {
          ClassCode code{word};
          ++agg.count;
          if (!(derive_recurrence(code) == derived_closed(code))) {
            ++agg.divergences;
            if (agg.first.empty()) {
              agg.first = code.str();
            }
          }
        },
        +[](Agg& into, Agg&& from) {
          into.count += from.count;
          into.divergences += from.divergences;
          if (into.first.empty()) {
            into.first = std::move(from.first);
          }
        });
    summary.classes_per_length.push_back(acc.count);
    summary.total += acc.count;
    summary.divergences += acc.divergences;
    if (summary.first_divergence.empty()) {
      summary.first_divergence = std::move(acc.first);
    }
  }
  return summary;
}

SpectrumReport degree_spectrum(int r, int jobs, std::size_t missing_cap) {
  if (r < 2) {
    throw std::invalid_argument("r must be >= 2");
  }
  struct Agg {
    std::set<Natural> degrees;
    std::uint64_t count = 0;
  };
  Agg acc = sweep_words<Agg>(
      r, jobs, {},
      [](Agg& agg, const std::vector<Letter>& word) {
        ++agg.count;
        agg.degrees.insert(nonholonomy_degree(derived_closed(ClassCode{word})));
      },
      +[](Agg& into, Agg&& from) {
        into.count += from.count;
        into.degrees.merge(from.degrees);
      });

  SpectrumReport report;
  report.r = r;
  report.classes = acc.count;
  report.realized.assign(acc.degrees.begin(), acc.degrees.end());
  report.min_degree = report.realized.front();
  report.max_degree = report.realized.back();
  // Walk the gaps between consecutive realized values.
  for (std::size_t i = 1; i < report.realized.size(); ++i) {
    Natural v = report.realized[i - 1] + Natural{1};
    while (v < report.realized[i]) {
      if (report.missing.size() >= missing_cap) {
        report.missing_truncated = true;
        break;
      }
      report.missing.push_back(v);
      v += Natural{1};
    }
    if (report.missing_truncated) {
      break;
    }
  }
  Natural interval = report.max_degree - report.min_degree + Natural{1};
  report.missing_total =
      interval - Natural{static_cast<std::uint64_t>(report.realized.size())};
  return report;
}

DistinctnessReport distinctness(int r, int jobs) {
  if (r < 2) {
    throw std::invalid_argument("r must be >= 2");
  }
  struct Agg {
    // Canonical decimal serialization -> first word producing it.
    std::unordered_map<std::string, std::string> seen;
    std::vector<std::pair<std::string, std::string>> collisions;
    std::uint64_t count = 0;
  };
  Agg acc = sweep_words<Agg>(
      r, jobs, {},
      [](Agg& agg, const std::vector<Letter>& word) {
        ++agg.count;
        ClassCode code{word};
        auto [it, inserted] =
            agg.seen.try_emplace(derived_closed(code).str(), code.str());
        if (!inserted && agg.collisions.size() < kClassListCap) {
          agg.collisions.emplace_back(it->second, code.str());
        }
      },
      +[](Agg& into, Agg&& from) {
        into.count += from.count;
        for (auto& [key, word] : from.seen) {
          auto [it, inserted] = into.seen.try_emplace(key, std::move(word));
          if (!inserted && into.collisions.size() < kClassListCap) {
            into.collisions.emplace_back(it->second, word);
          }
        }
        for (auto& pair : from.collisions) {
          if (into.collisions.size() < kClassListCap) {
            into.collisions.push_back(std::move(pair));
          }
        }
      });
  DistinctnessReport report;
  report.r = r;
  report.classes = acc.count;
  report.collisions = std::move(acc.collisions);
  report.all_distinct = report.collisions.empty();
  return report;
}

ExtremalReport extremal_classes(int r, int jobs) {
  if (r < 2) {
    throw std::invalid_argument("r must be >= 2");
  }
  struct Agg {
    bool seeded = false;
    Natural min_degree, max_degree;
    std::vector<std::string> min_classes, max_classes;
    std::uint64_t min_count = 0, max_count = 0;
  };
  auto take_min = [](Agg& agg, const Natural& degree, const std::string& word,
                     std::uint64_t count) {
    if (!agg.seeded || degree < agg.min_degree) {
      agg.min_degree = degree;
      agg.min_classes.assign(1, word);
      agg.min_count = count;
    } else if (degree == agg.min_degree) {
      agg.min_count += count;
      if (agg.min_classes.size() < kClassListCap) {
        agg.min_classes.push_back(word);
      }
    }
  };
  auto take_max = [](Agg& agg, const Natural& degree, const std::string& word,
                     std::uint64_t count) {
    if (!agg.seeded || degree > agg.max_degree) {
      agg.max_degree = degree;
      agg.max_classes.assign(1, word);
      agg.max_count = count;
    } else if (degree == agg.max_degree) {
      agg.max_count += count;
      if (agg.max_classes.size() < kClassListCap) {
        agg.max_classes.push_back(word);
      }
    }
  };
  auto absorb = [&](Agg& agg, const std::vector<Letter>& word) {
    Natural degree = nonholonomy_degree(derived_closed(ClassCode{word}));
    std::string text = word_str(word);
    take_min(agg, degree, text, 1);
    take_max(agg, degree, text, 1);
    agg.seeded = true;
  };
  // Merge must re-apply the same extremal rules to keep lexicographic order.
  static const auto merge = +[](Agg& into, Agg&& from) {
    if (!from.seeded) return;
    if (!into.seeded) {
      into = std::move(from);
      return;
    }
    if (from.min_degree < into.min_degree) {
      into.min_degree = std::move(from.min_degree);
      into.min_classes = std::move(from.min_classes);
      into.min_count = from.min_count;
    } else if (from.min_degree == into.min_degree) {
      into.min_count += from.min_count;
      for (auto& w : from.min_classes) {
        if (into.min_classes.size() < kClassListCap) {
          into.min_classes.push_back(std::move(w));
        }
      }
    }
    if (from.max_degree > into.max_degree) {
      into.max_degree = std::move(from.max_degree);
      into.max_classes = std::move(from.max_classes);
      into.max_count = from.max_count;
    } else if (from.max_degree == into.max_degree) {
      into.max_count += from.max_count;
      for (auto& w : from.max_classes) {
        if (into.max_classes.size() < kClassListCap) {
          into.max_classes.push_back(std::move(w));
        }
      }
    }
  };
  Agg acc = sweep_words<Agg>(r, jobs, {}, absorb, merge);
  ExtremalReport report;
  report.r = r;
  report.min_degree = std::move(acc.min_degree);
  report.max_degree = std::move(acc.max_degree);
  report.min_classes = std::move(acc.min_classes);
  report.max_classes = std::move(acc.max_classes);
  report.min_count = acc.min_count;
  report.max_count = acc.max_count;
  return report;
}

}  // namespace goursat
