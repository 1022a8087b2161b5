#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goursat/errors.hpp"
#include "goursat/natural.hpp"
#include "goursat/word.hpp"

namespace goursat {

/// Sequence of multiplicities der(C)(2..r+1) of a class of length r.
///
/// Storage is a 0-based dense array; the public accessor entry(j) uses the
/// conventional domain {2,...,size()+1} so that worked examples can be read
/// off directly. All entries are >= 1.
class DerivedVector {
 public:
  DerivedVector() = default;
  /// Throws NonPositiveEntry if any entry is zero.
  explicit DerivedVector(std::vector<Natural> entries);

  static DerivedVector ones(int r);

  int size() const { return static_cast<int>(entries_.size()); }
  /// Entry at position j, 2 <= j <= size()+1. Throws IndexOutOfRange.
  const Natural& entry(int j) const;
  const std::vector<Natural>& entries() const { return entries_; }

  bool non_decreasing() const;

  /// Space-separated decimal entries, e.g. "1 1 2 2 4 4 10".
  std::string str() const;

  friend bool operator==(const DerivedVector&, const DerivedVector&) = default;

 private:
  std::vector<Natural> entries_;
};

/// The nondecreasing dimension sequence: dimension j appears der(j) times for
/// j = 2..r+1, followed by a single r+2. Stored as runs because the expanded
/// length equals the nonholonomy degree, which reaches F_{r+2}.
class SmallGrowthVector {
 public:
  struct Run {
    int dim;
    Natural count;
    friend bool operator==(const Run&, const Run&) = default;
  };

  explicit SmallGrowthVector(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  /// Expanded length == nonholonomy degree of the source class.
  const Natural& length() const { return length_; }
  /// Largest dimension, r+2.
  int top_dim() const;

  /// The dims written out one by one. Throws std::length_error when the
  /// expansion would exceed max_len entries.
  std::vector<int> expand(std::uint64_t max_len = 1'000'000) const;

  /// Space-separated dims when the expansion is small, "dim^count" runs
  /// otherwise.
  std::string str() const;

  friend bool operator==(const SmallGrowthVector&,
                         const SmallGrowthVector&) = default;

 private:
  std::vector<Run> runs_;
  Natural length_;
};

/// Insert a 1 on the left: (1, a(2), a(3), ...).
DerivedVector op_g(const DerivedVector& a);

/// Fibonacci-like rule. Requires len(b) = len(a)+1; output is one longer than
/// b, starts 1, 1, and continues out(j) = a(j-2) + b(j-1).
/// Throws LengthMismatch.
DerivedVector op_s(const DerivedVector& a, const DerivedVector& b);

/// Arithmetic-progression rule. Requires len(b) = len(a)+1; output starts
/// 1, 1 and continues out(j) = 2 b(j-1) - a(j-2). Throws LengthMismatch, and
/// NonPositiveEntry when an output entry would drop below 1 (such input pairs
/// never arise from admissible words).
DerivedVector op_t(const DerivedVector& a, const DerivedVector& b);

/// Runs the two-step recurrence d^1 = (1), d^2 = (1,1), then one G/S/T step
/// per letter of the code from position 3 on, and returns d^r. Keeps only the
/// last two vectors.
DerivedVector derive_recurrence(const ClassCode& code);

struct TraceRow {
  Letter letter;
  DerivedVector vector;
  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// All rows d^1..d^r, each paired with the letter that produced it.
std::vector<TraceRow> trace_recurrence(const ClassCode& code);

/// Expands a derived vector into the small growth vector: j repeated
/// der(j) times for j = 2..r+1, then one final r+2.
SmallGrowthVector small_growth_vector(const DerivedVector& d);

/// 1 + sum of the entries.
Natural nonholonomy_degree(const DerivedVector& d);

}  // namespace goursat
