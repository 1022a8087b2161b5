#pragma once

// Shared test utilities: short vector builders, an independent digit-string
// arithmetic oracle for Natural, a brute-force word oracle, and a subprocess
// runner for CLI-level tests.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "goursat/natural.hpp"
#include "goursat/recurrence.hpp"

namespace testutil {

inline goursat::DerivedVector dv(std::initializer_list<std::uint64_t> xs) {
  std::vector<goursat::Natural> entries;
  for (std::uint64_t x : xs) entries.emplace_back(x);
  return goursat::DerivedVector(std::move(entries));
}

// ---- digit-string schoolbook arithmetic, independent of Natural ----

inline std::string dec_trim(std::string s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return s.substr(i);
}

inline std::string dec_add(const std::string& a, const std::string& b) {
  std::string out;
  int carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    int da = i < a.size() ? a[a.size() - 1 - i] - '0' : 0;
    int db = i < b.size() ? b[b.size() - 1 - i] - '0' : 0;
    int sum = da + db + carry;
    out.push_back(static_cast<char>('0' + sum % 10));
    carry = sum / 10;
  }
  std::reverse(out.begin(), out.end());
  return dec_trim(out);
}

inline std::string dec_mul(const std::string& a, const std::string& b) {
  std::vector<int> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j + 1] += (a[i] - '0') * (b[j] - '0');
    }
  }
  for (std::size_t i = acc.size(); i-- > 1;) {
    acc[i - 1] += acc[i] / 10;
    acc[i] %= 10;
  }
  std::string out;
  for (int d : acc) out.push_back(static_cast<char>('0' + d));
  return dec_trim(out);
}

inline int dec_cmp(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

// ---- brute-force word oracle ----

// All admissible words of length r, found by filtering every word over
// {G,S,T}; usable for small r only. Sorted lexicographically.
inline std::vector<std::string> brute_force_admissible(int r) {
  std::vector<std::string> out;
  if (r < 2 || r > 12) {
    throw std::invalid_argument("brute force oracle handles 2 <= r <= 12");
  }
  std::string word(static_cast<std::size_t>(r), 'G');
  const char alphabet[3] = {'G', 'S', 'T'};
  std::vector<int> digits(static_cast<std::size_t>(r), 0);
  for (;;) {
    for (int i = 0; i < r; ++i) {
      word[static_cast<std::size_t>(i)] =
          alphabet[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
    }
    if (word.size() >= 2 && word[0] == 'G' && word[1] == 'G' &&
        word.find("GT") == std::string::npos) {
      out.push_back(word);
    }
    int pos = r - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 2) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- subprocess runner ----

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command capturing stdout; stderr is left alone unless the
// caller redirects it in `cmd`.
inline RunResult run_cmd(const std::string& cmd) {
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + cmd);
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status)
                                                        : -1;
  return result;
}

}  // namespace testutil
