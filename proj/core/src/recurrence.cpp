#include "goursat/recurrence.hpp"

#include <stdexcept>
#include <utility>

namespace goursat {

DerivedVector::DerivedVector(std::vector<Natural> entries)
    : entries_(std::move(entries)) {
  for (const Natural& e : entries_) {
    if (e.is_zero()) {
      throw NonPositiveEntry("derived vector entries must be >= 1");
    }
  }
}

DerivedVector DerivedVector::ones(int r) {
  return DerivedVector(std::vector<Natural>(static_cast<std::size_t>(r),
                                            Natural{1}));
}

const Natural& DerivedVector::entry(int j) const {
  if (j < 2 || j > size() + 1) {
    throw IndexOutOfRange("derived vector index " + std::to_string(j) +
                          " outside [2, " + std::to_string(size() + 1) + "]");
  }
  return entries_[static_cast<std::size_t>(j - 2)];
}

bool DerivedVector::non_decreasing() const {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] < entries_[i - 1]) {
      return false;
    }
  }
  return true;
}

std::string DerivedVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ' ';
    out += entries_[i].str();
  }
  return out;
}

SmallGrowthVector::SmallGrowthVector(std::vector<Run> runs)
    : runs_(std::move(runs)) {
  for (const Run& run : runs_) {
    length_ += run.count;
  }
}

int SmallGrowthVector::top_dim() const {
  return runs_.empty() ? 0 : runs_.back().dim;
}

std::vector<int> SmallGrowthVector::expand(std::uint64_t max_len) const {
  auto total = length_.to_uint64();
  if (!total || *total > max_len) {
    throw std::length_error("small growth vector expansion of length " +
                            length_.str() + " exceeds cap");
  }
  std::vector<int> out;
  out.reserve(*total);
  for (const Run& run : runs_) {
    std::uint64_t count = *run.count.to_uint64();
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(run.dim);
    }
  }
  return out;
}

std::string SmallGrowthVector::str() const {
  auto total = length_.to_uint64();
  std::string out;
  if (total && *total <= 10'000) {
    for (int dim : expand(10'000)) {
      if (!out.empty()) out += ' ';
      out += std::to_string(dim);
    }
  } else {
    for (const Run& run : runs_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(run.dim) + '^' + run.count.str();
    }
  }
  return out;
}

DerivedVector op_g(const DerivedVector& a) {
  std::vector<Natural> out;
  out.reserve(static_cast<std::size_t>(a.size()) + 1);
  out.emplace_back(1);
  for (const Natural& e : a.entries()) {
    out.push_back(e);
  }
  return DerivedVector(std::move(out));
}

namespace {

void check_arity(const DerivedVector& a, const DerivedVector& b) {
  if (b.size() != a.size() + 1) {
    throw LengthMismatch("second argument must be one entry longer (got " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + ")");
  }
}

}  // namespace

DerivedVector op_s(const DerivedVector& a, const DerivedVector& b) {
  check_arity(a, b);
  std::vector<Natural> out;
  out.reserve(static_cast<std::size_t>(b.size()) + 1);
  out.emplace_back(1);
  out.emplace_back(1);
  // out(j) = a(j-2) + b(j-1), skew-wise from NW to SE.
  for (int j = 4; j <= b.size() + 2; ++j) {
    out.push_back(a.entry(j - 2) + b.entry(j - 1));
  }
  return DerivedVector(std::move(out));
}

DerivedVector op_t(const DerivedVector& a, const DerivedVector& b) {
  check_arity(a, b);
  std::vector<Natural> out;
  out.reserve(static_cast<std::size_t>(b.size()) + 1);
  out.emplace_back(1);
  out.emplace_back(1);
  // out(j) = 2 b(j-1) - a(j-2); anything below 1 cannot come from an
  // admissible word, so fail loudly instead of wrapping.
  for (int j = 4; j <= b.size() + 2; ++j) {
    Natural twice_b = b.entry(j - 1) + b.entry(j - 1);
    if (twice_b <= a.entry(j - 2)) {
      throw NonPositiveEntry("T output entry at position " +
                             std::to_string(j) + " would be < 1");
    }
    out.push_back(twice_b - a.entry(j - 2));
  }
  return DerivedVector(std::move(out));
}

DerivedVector derive_recurrence(const ClassCode& code) {
  DerivedVector prev(std::vector<Natural>{Natural{1}});
  DerivedVector cur = DerivedVector::ones(2);
  // d^1 and d^2 are fixed; letters from position 3 on pick the operation.
  for (int i = 2; i < code.size(); ++i) {
    DerivedVector next;
    switch (code.at(i)) {
      case Letter::G:
        next = op_g(cur);
        break;
      case Letter::S:
        next = op_s(prev, cur);
        break;
      case Letter::T:
        next = op_t(prev, cur);
        break;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<TraceRow> trace_recurrence(const ClassCode& code) {
  std::vector<TraceRow> rows;
  rows.reserve(static_cast<std::size_t>(code.size()));
  rows.push_back({code.at(0), DerivedVector(std::vector<Natural>{Natural{1}})});
  rows.push_back({code.at(1), DerivedVector::ones(2)});
  for (int i = 2; i < code.size(); ++i) {
    const DerivedVector& prev = rows[rows.size() - 2].vector;
    const DerivedVector& cur = rows[rows.size() - 1].vector;
    DerivedVector next;
    switch (code.at(i)) {
      case Letter::G:
        next = op_g(cur);
        break;
      case Letter::S:
        next = op_s(prev, cur);
        break;
      case Letter::T:
        next = op_t(prev, cur);
        break;
    }
    rows.push_back({code.at(i), std::move(next)});
  }
  return rows;
}

SmallGrowthVector small_growth_vector(const DerivedVector& d) {
  std::vector<SmallGrowthVector::Run> runs;
  runs.reserve(static_cast<std::size_t>(d.size()) + 1);
  for (int j = 2; j <= d.size() + 1; ++j) {
    runs.push_back({j, d.entry(j)});
  }
  runs.push_back({d.size() + 2, Natural{1}});
  return SmallGrowthVector(std::move(runs));
}

Natural nonholonomy_degree(const DerivedVector& d) {
  Natural total{1};
  for (const Natural& e : d.entries()) {
    total += e;
  }
  return total;
}

}  // namespace goursat
