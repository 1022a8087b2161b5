#include "goursat/natural.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace goursat {

Natural::Natural(std::uint64_t value) {
  while (value > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
    value /= kBase;
  }
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("non-digit in decimal string");
    }
  }
  Natural out;
  // Consume 9-digit chunks from the right; each chunk is one limb.
  std::size_t end = text.size();
  while (end > 0) {
    std::size_t begin = end >= 9 ? end - 9 : 0;
    std::uint32_t limb = 0;
    for (std::size_t i = begin; i < end; ++i) {
      limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
    }
    out.limbs_.push_back(limb);
    end = begin;
  }
  out.trim();
  return out;
}

void Natural::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) {
    limbs_.pop_back();
  }
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) {
    limbs_.resize(rhs.limbs_.size(), 0);
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = carry + limbs_[i] +
                        (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0u);
    limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
    if (carry == 0 && i >= rhs.limbs_.size()) {
      break;
    }
  }
  if (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) {
    throw std::underflow_error("Natural subtraction would go negative");
  }
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < rhs.limbs_.size()
                            ? static_cast<std::int64_t>(rhs.limbs_[i])
                            : 0);
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
    if (borrow == 0 && i >= rhs.limbs_.size()) {
      break;
    }
  }
  trim();
  return *this;
}

Natural operator*(const Natural& lhs, const Natural& rhs) {
  Natural out;
  if (lhs.is_zero() || rhs.is_zero()) {
    return out;
  }
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(lhs.limbs_[i]) *
                              rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % Natural::kBase);
      carry = cur / Natural::kBase;
    }
    std::size_t idx = i + rhs.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[idx] + carry;
      out.limbs_[idx] = static_cast<std::uint32_t>(cur % Natural::kBase);
      carry = cur / Natural::kBase;
      ++idx;
    }
  }
  out.trim();
  return out;
}

Natural& Natural::operator*=(const Natural& rhs) {
  *this = *this * rhs;
  return *this;
}

std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) {
  if (lhs.limbs_.size() != rhs.limbs_.size()) {
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  }
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) {
      return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
  }
  return std::strong_ordering::equal;
}

std::string Natural::str() const {
  if (limbs_.empty()) {
    return "0";
  }
  std::string out = std::to_string(limbs_.back());
  char buf[10];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

std::optional<std::uint64_t> Natural::to_uint64() const {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t value = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (value > (kMax - limbs_[i]) / kBase) {
      return std::nullopt;
    }
    value = value * kBase + limbs_[i];
  }
  return value;
}

Natural fibonacci(int n) {
  if (n < 1) {
    throw std::invalid_argument("fibonacci index must be >= 1");
  }
  Natural a{1}, b{1};  // F_1, F_2
  for (int i = 2; i < n; ++i) {
    Natural next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return n == 1 ? a : b;
}

}  // namespace goursat
