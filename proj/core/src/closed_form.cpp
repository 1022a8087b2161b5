#include "goursat/closed_form.hpp"

#include <stdexcept>
#include <utility>

namespace goursat {

const Natural& ASequence::at(int j) const {
  if (j < 0 || j >= static_cast<int>(values.size())) {
    throw IndexOutOfRange("A-sequence index " + std::to_string(j) +
                          " outside [0, " +
                          std::to_string(values.size() - 1) + "]");
  }
  return values[static_cast<std::size_t>(j)];
}

ASequence a_sequence(std::span<const int> k, int shift, int upto) {
  if (shift < 0 || upto < 0) {
    throw IndexOutOfRange("A-sequence shift and upto must be >= 0");
  }
  // A^{+N}_0 needs no k-parameter at all; from A^{+N}_1 on, the recurrence
  // consumes k[N] .. k[N+upto-1].
  if (upto >= 1 && shift + upto > static_cast<int>(k.size())) {
    throw IndexOutOfRange("A-sequence needs k-parameters up to index " +
                          std::to_string(shift + upto - 1) + ", have " +
                          std::to_string(k.size()));
  }
  ASequence seq;
  seq.k.assign(k.begin(), k.end());
  seq.shift = shift;
  seq.values.reserve(static_cast<std::size_t>(upto) + 1);
  seq.values.emplace_back(1);
  if (upto >= 1) {
    seq.values.emplace_back(
        2 + static_cast<std::uint64_t>(k[static_cast<std::size_t>(shift)]));
  }
  for (int j = 2; j <= upto; ++j) {
    Natural coeff{
        1 + static_cast<std::uint64_t>(k[static_cast<std::size_t>(j - 1 + shift)])};
    seq.values.push_back(seq.values[static_cast<std::size_t>(j - 2)] +
                         coeff * seq.values[static_cast<std::size_t>(j - 1)]);
  }
  return seq;
}

ValueTable value_table(const ParamProfile& p) {
  validate_profile(p);
  ValueTable table;
  const int q = p.q();
  if (q == 0) {
    ASequence plain = a_sequence(p.k, 0, p.s + 1);
    table.rows.push_back({Natural{1}, plain.values});
    table.values = std::move(plain.values);
  } else {
    // Row 0: A_0 .. A_{n_1 - 1}; rows after it carry the shifted families,
    // each scaled by the running prefix product.
    const int n1 = p.n[0];
    ASequence plain = a_sequence(p.k, 0, n1);
    ValueTable::Row row0{Natural{1}, {}};
    row0.base.assign(plain.values.begin(), plain.values.end() - 1);
    table.values = row0.base;
    table.rows.push_back(std::move(row0));

    Natural prefix = plain.values.back();  // A_{n_1}
    for (int i = 1; i < q; ++i) {
      const int gap = p.n[static_cast<std::size_t>(i)] -
                      p.n[static_cast<std::size_t>(i - 1)];
      ASequence shifted =
          a_sequence(p.k, p.n[static_cast<std::size_t>(i - 1)], gap);
      ValueTable::Row row{prefix, {}};
      row.base.assign(shifted.values.begin(), shifted.values.end() - 1);
      for (const Natural& v : row.base) {
        table.values.push_back(prefix * v);
      }
      prefix *= shifted.values.back();
      table.rows.push_back(std::move(row));
    }
    const int last_n = p.n[static_cast<std::size_t>(q - 1)];
    ASequence tail = a_sequence(p.k, last_n, p.s - last_n + 1);
    ValueTable::Row last{prefix, tail.values};
    for (const Natural& v : tail.values) {
      table.values.push_back(prefix * v);
    }
    table.rows.push_back(std::move(last));
  }

  if (static_cast<int>(table.values.size()) != p.s + 2) {
    throw std::logic_error("value table must hold s+2 values");
  }
  for (std::size_t i = 1; i < table.values.size(); ++i) {
    if (!(table.values[i - 1] < table.values[i])) {
      throw std::logic_error("value table must be strictly increasing");
    }
  }

  table.multiplicities.reserve(table.values.size());
  table.multiplicities.push_back(2 + p.k[0] + p.l[0]);
  for (int j = 1; j <= p.s; ++j) {
    table.multiplicities.push_back(1 + p.k[static_cast<std::size_t>(j)] +
                                   p.l[static_cast<std::size_t>(j)]);
  }
  table.multiplicities.push_back(p.l[static_cast<std::size_t>(p.s) + 1] - 1);

  int sum = 0;
  for (int m : table.multiplicities) sum += m;
  if (sum != p.length()) {
    throw std::logic_error("value table multiplicities must sum to the length");
  }
  return table;
}

namespace {

DerivedVector expand_table(const ValueTable& table) {
  std::vector<Natural> out;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    for (int m = 0; m < table.multiplicities[i]; ++m) {
      out.push_back(table.values[i]);
    }
  }
  return DerivedVector(std::move(out));
}

}  // namespace

DerivedVector derived_q_zero(const ParamProfile& p) {
  if (p.q() != 0) {
    throw ProfileMismatch("profile has interior G-runs (q = " +
                          std::to_string(p.q()) + "), expected q = 0");
  }
  return expand_table(value_table(p));
}

DerivedVector derived_q_positive(const ParamProfile& p) {
  if (p.q() == 0) {
    throw ProfileMismatch("profile has no interior G-runs, expected q >= 1");
  }
  return expand_table(value_table(p));
}

DerivedVector derived_closed(const ClassCode& code) {
  ClassParams params = extract_params(code);
  if (std::holds_alternative<GenericMarker>(params)) {
    return DerivedVector::ones(code.size());
  }
  const auto& p = std::get<ParamProfile>(params);
  return p.q() == 0 ? derived_q_zero(p) : derived_q_positive(p);
}

namespace {

void check_k_window(std::span<const int> k, int j_max, int j_min) {
  if (k.size() < 2) {
    throw PreconditionViolated("identity needs at least k_0 and k_1");
  }
  for (int v : k) {
    if (v < 0) throw PreconditionViolated("k-parameters must be >= 0");
  }
  if (j_max < j_min || j_max > static_cast<int>(k.size()) - 1) {
    throw IndexOutOfRange("j_max must lie in [" + std::to_string(j_min) +
                          ", " + std::to_string(k.size() - 1) + "]");
  }
}

}  // namespace

bool check_shift_absorption(std::span<const int> k, int j_max) {
  check_k_window(k, j_max, 0);
  if (k[1] < 1) {
    throw PreconditionViolated("identity requires k_1 >= 1");
  }
  std::vector<int> k_bar(k.begin(), k.end());
  k_bar[1] -= 1;

  ASequence plain = a_sequence(k, 0, j_max + 1);
  ASequence shifted = a_sequence(k, 1, j_max);
  ASequence shifted_bar = a_sequence(k_bar, 1, j_max);
  Natural factor{1 + static_cast<std::uint64_t>(k[0])};
  for (int j = 0; j <= j_max; ++j) {
    if (shifted.at(j) + factor * shifted_bar.at(j) != plain.at(j + 1)) {
      return false;
    }
  }
  return true;
}

bool check_shift_absorption_k1_zero(std::span<const int> k, int j_max) {
  check_k_window(k, j_max, 1);
  if (k[1] != 0) {
    throw PreconditionViolated("identity requires k_1 = 0");
  }
  ASequence plain = a_sequence(k, 0, j_max + 1);
  ASequence shifted1 = a_sequence(k, 1, j_max);
  ASequence shifted2 = a_sequence(k, 2, j_max - 1);
  Natural factor{1 + static_cast<std::uint64_t>(k[0])};
  for (int j = 1; j <= j_max; ++j) {
    if (shifted1.at(j) + factor * shifted2.at(j - 1) != plain.at(j + 1)) {
      return false;
    }
  }
  return true;
}

ClassParams prolong(const ClassParams& params, Letter x) {
  if (const auto* generic = std::get_if<GenericMarker>(&params)) {
    switch (x) {
      case Letter::G:
        return GenericMarker{generic->r + 1};
      case Letter::S:
        // First S: one S block with empty tail, everything before it is G.
        return make_param_profile(0, {0}, {0, generic->r});
      case Letter::T:
        throw ForbiddenProlongation(
            "cannot append T to the all-G class (would create GT)");
    }
    throw std::logic_error("unreachable");
  }
  const auto& p = std::get<ParamProfile>(params);
  std::vector<int> k = p.k;
  std::vector<int> l = p.l;
  switch (x) {
    case Letter::G:
      l[0] += 1;
      return make_param_profile(p.s, std::move(k), std::move(l));
    case Letter::T:
      if (l[0] != 0) {
        throw ForbiddenProlongation(
            "cannot append T after a trailing G (would create GT)");
      }
      k[0] += 1;
      return make_param_profile(p.s, std::move(k), std::move(l));
    case Letter::S:
      k.insert(k.begin(), 0);
      l.insert(l.begin(), 0);
      return make_param_profile(p.s + 1, std::move(k), std::move(l));
  }
  throw std::logic_error("unreachable");
}

}  // namespace goursat
