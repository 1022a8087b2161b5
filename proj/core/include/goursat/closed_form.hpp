#pragma once

#include <span>
#include <string>
#include <vector>

#include "goursat/errors.hpp"
#include "goursat/natural.hpp"
#include "goursat/recurrence.hpp"
#include "goursat/word.hpp"

namespace goursat {

/// The integer-sequence family generated by the k-parameters of a profile:
///
///   A^{+N}_0 = 1,   A^{+N}_1 = 2 + k[N],
///   A^{+N}_j = A^{+N}_{j-2} + (1 + k[j-1+N]) A^{+N}_{j-1}.
///
/// shift is N; N = 0 is the plain A_j family. With all k >= 0 the values are
/// strictly increasing from index 1 on.
struct ASequence {
  std::vector<int> k;           // the generating k-parameters
  int shift = 0;                // N
  std::vector<Natural> values;  // values[j] = A^{+N}_j

  /// values[j] with bounds checking. Throws IndexOutOfRange.
  const Natural& at(int j) const;
};

/// Generates A^{+N}_0 .. A^{+N}_upto. Requires shift >= 0 and, when upto >= 1,
/// shift + upto <= k.size() (the k-parameters consumed by the recurrence).
/// Throws IndexOutOfRange when the k-parameters are exhausted.
ASequence a_sequence(std::span<const int> k, int shift, int upto);

/// The distinct values of a derived vector together with their multiplicities,
/// kept in the row layout of the closed form for auditing: row 0 holds plain
/// A-values; every later row holds a shifted A-family scaled by a running
/// prefix product.
struct ValueTable {
  struct Row {
    Natural scale;               // prefix product applied to the row (1 in row 0)
    std::vector<Natural> base;   // unscaled A^{+N}_j entries of the row
  };
  std::vector<Row> rows;             // q + 1 rows
  std::vector<Natural> values;       // flattened scaled values, strictly increasing
  std::vector<int> multiplicities;   // parallel to values; sums to the word length
};

/// Builds the value table of a profile:
///   q = 0: the single row A_0 .. A_{s+1};
///   q >= 1: row 0 is A_0 .. A_{n_1-1}, row i scales the A^{+n_i} family by
///           A_{n_1} * prod_{j<i} A^{+n_j}_{n_{j+1}-n_j}; the last row runs to
///           A^{+n_q}_{s-n_q+1}.
/// Multiplicities: value 0 appears 2+k_0+l_0 times, value j (1<=j<=s)
/// 1+k_j+l_j times, value s+1 appears l_{s+1}-1 times.
ValueTable value_table(const ParamProfile& p);

/// Closed form for profiles with no interior G-runs (q = 0).
/// Throws ProfileMismatch when q != 0.
DerivedVector derived_q_zero(const ParamProfile& p);

/// Closed form for profiles with interior G-runs (q >= 1).
/// Throws ProfileMismatch when q = 0.
DerivedVector derived_q_positive(const ParamProfile& p);

/// Closed form for any admissible code: all-ones for the generic class,
/// otherwise the q-branch dispatch above.
DerivedVector derived_closed(const ClassCode& code);

/// Checks, for j = 0..j_max, the shift-absorption identity
///
///   A^{+1}_j + (1 + k_0) Abar^{+1}_j = A_{j+1},
///
/// where the Abar family is generated with k_1 - 1 in place of k_1.
/// Requires k_1 >= 1 (throws PreconditionViolated) and
/// 0 <= j_max <= k.size()-1 (throws IndexOutOfRange).
bool check_shift_absorption(std::span<const int> k, int j_max);

/// The k_1 = 0 companion identity, for j = 1..j_max:
///
///   A^{+1}_j + (1 + k_0) A^{+2}_{j-1} = A_{j+1}.
///
/// Requires k_1 = 0 (throws PreconditionViolated) and
/// 1 <= j_max <= k.size()-1 (throws IndexOutOfRange).
bool check_shift_absorption_k1_zero(std::span<const int> k, int j_max);

/// One-step prolongation of a class by a letter, on the parameter level:
///   G: l_0 += 1 (generic stays generic, one longer);
///   T: k_0 += 1, allowed only when l_0 = 0 and the class is not generic;
///   S: s += 1, all k/l indices shift up, new k_0 = l_0 = 0 (the generic
///      class of length r becomes s=0, l_1 = r).
/// Throws ForbiddenProlongation for an illegal T.
ClassParams prolong(const ClassParams& p, Letter x);

}  // namespace goursat
