#include "goursat/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace goursat {

namespace {

// Grammar checks shared by the char and Letter paths. Assumes all characters
// are already known to be G/S/T.
void check_structure(std::string_view word) {
  if (word.size() < 2) {
    throw ParseError(ParseErrorKind::TooShort, word.size(),
                     "word too short: need at least 2 letters, got " +
                         std::to_string(word.size()));
  }
  if (word[0] != 'G') {
    throw ParseError(ParseErrorKind::BadPrefix, 0,
                     "word must start with GG (position 0)");
  }
  if (word[1] != 'G') {
    throw ParseError(ParseErrorKind::BadPrefix, 1,
                     "word must start with GG (position 1)");
  }
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == 'T' && word[i - 1] == 'G') {
      throw ParseError(ParseErrorKind::ForbiddenFactor, i,
                       "forbidden factor GT at position " + std::to_string(i));
    }
  }
}

}  // namespace

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::InvalidCharacter:
      return "InvalidCharacter";
    case ParseErrorKind::TooShort:
      return "TooShort";
    case ParseErrorKind::BadPrefix:
      return "BadPrefix";
    case ParseErrorKind::ForbiddenFactor:
      return "ForbiddenFactor";
  }
  return "?";
}

ClassCode::ClassCode(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  std::string word;
  word.reserve(letters_.size());
  for (Letter x : letters_) {
    word.push_back(to_char(x));
  }
  check_structure(word);
}

ClassCode ClassCode::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != 'G' && c != 'S' && c != 'T') {
      throw ParseError(ParseErrorKind::InvalidCharacter, i,
                       std::string("invalid character '") + c +
                           "' at position " + std::to_string(i));
    }
    letters.push_back(static_cast<Letter>(c));
  }
  return ClassCode(std::move(letters));  // structure checks happen there
}

std::string ClassCode::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) {
    out.push_back(to_char(x));
  }
  return out;
}

std::string ClassCode::str_rvt() const {
  std::string out = str();
  for (char& c : out) {
    if (c == 'G') c = 'R';
    else if (c == 'S') c = 'V';
  }
  return out;
}

int ParamProfile::length() const {
  int len = l[static_cast<std::size_t>(s) + 1];
  for (int i = 0; i <= s; ++i) {
    len += 1 + k[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(i)];
  }
  return len;
}

ParamProfile make_param_profile(int s, std::vector<int> k,
                                std::vector<int> l) {
  ParamProfile p;
  p.s = s;
  p.k = std::move(k);
  p.l = std::move(l);
  for (int i = 1; i <= s && i < static_cast<int>(p.l.size()); ++i) {
    if (p.l[static_cast<std::size_t>(i)] > 0) {
      p.n.push_back(i);
    }
  }
  return p;
}

void validate_profile(const ParamProfile& p) {
  if (p.s < 0) {
    throw InvalidProfile("profile: s must be >= 0");
  }
  if (p.k.size() != static_cast<std::size_t>(p.s) + 1) {
    throw InvalidProfile("profile: need exactly s+1 k-parameters");
  }
  if (p.l.size() != static_cast<std::size_t>(p.s) + 2) {
    throw InvalidProfile("profile: need exactly s+2 l-parameters");
  }
  for (int v : p.k) {
    if (v < 0) throw InvalidProfile("profile: negative k-run");
  }
  for (int v : p.l) {
    if (v < 0) throw InvalidProfile("profile: negative l-run");
  }
  if (p.l.back() < 2) {
    throw InvalidProfile("profile: leading G-run l[s+1] must be >= 2");
  }
  std::vector<int> expect;
  for (int i = 1; i <= p.s; ++i) {
    if (p.l[static_cast<std::size_t>(i)] > 0) expect.push_back(i);
  }
  if (p.n != expect) {
    throw InvalidProfile("profile: n must list exactly the i in [1,s] with l[i] > 0");
  }
}

ClassParams extract_params(const ClassCode& code) {
  const auto& w = code.letters();
  bool has_s = std::find(w.begin(), w.end(), Letter::S) != w.end();
  if (!has_s) {
    return GenericMarker{code.size()};
  }
  std::vector<int> k, l;
  int i = code.size() - 1;
  // Walk blocks G^l T^k S from the right; the grammar forces this shape.
  for (;;) {
    int g_run = 0;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == Letter::G) {
      ++g_run;
      --i;
    }
    int t_run = 0;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == Letter::T) {
      ++t_run;
      --i;
    }
    if (i >= 0 && w[static_cast<std::size_t>(i)] == Letter::S) {
      k.push_back(t_run);
      l.push_back(g_run);
      --i;
    } else {
      l.push_back(g_run);  // the leading G-run, l[s+1]
      break;
    }
  }
  int s = static_cast<int>(k.size()) - 1;
  return make_param_profile(s, std::move(k), std::move(l));
}

ClassCode render_params(const ParamProfile& p) {
  validate_profile(p);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(p.length()));
  for (int i = 0; i < p.l[static_cast<std::size_t>(p.s) + 1]; ++i) {
    letters.push_back(Letter::G);
  }
  for (int i = p.s; i >= 0; --i) {
    letters.push_back(Letter::S);
    for (int t = 0; t < p.k[static_cast<std::size_t>(i)]; ++t) {
      letters.push_back(Letter::T);
    }
    for (int g = 0; g < p.l[static_cast<std::size_t>(i)]; ++g) {
      letters.push_back(Letter::G);
    }
  }
  return ClassCode(std::move(letters));
}

ClassCode render_params(const ClassParams& p) {
  if (const auto* generic = std::get_if<GenericMarker>(&p)) {
    return ClassCode(std::vector<Letter>(static_cast<std::size_t>(generic->r),
                                         Letter::G));
  }
  return render_params(std::get<ParamProfile>(p));
}

int codimension(const ClassCode& code) {
  int count = 0;
  for (Letter x : code.letters()) {
    if (x != Letter::G) ++count;
  }
  return count;
}

Natural count_admissible(int r) {
  if (r < 2) {
    throw std::invalid_argument("word length must be >= 2");
  }
  return fibonacci(2 * r - 3);
}

Enumerator::Enumerator(int r) : fixed_(2) {
  if (r < 2) {
    throw std::invalid_argument("word length must be >= 2");
  }
  word_.assign(static_cast<std::size_t>(r), Letter::G);
}

Enumerator::Enumerator(const ClassCode& prefix, int r)
    : word_(prefix.letters()), fixed_(prefix.size()) {
  if (r < prefix.size()) {
    throw std::invalid_argument("prefix longer than requested word length");
  }
  word_.resize(static_cast<std::size_t>(r), Letter::G);
}

void Enumerator::advance() {
  // Bump the rightmost bumpable position and reset the suffix to G...G (the
  // smallest valid continuation after any letter).
  for (int i = static_cast<int>(word_.size()) - 1; i >= fixed_; --i) {
    Letter cur = word_[static_cast<std::size_t>(i)];
    if (cur == Letter::G) {
      word_[static_cast<std::size_t>(i)] = Letter::S;
    } else if (cur == Letter::S &&
               word_[static_cast<std::size_t>(i) - 1] != Letter::G) {
      word_[static_cast<std::size_t>(i)] = Letter::T;
    } else {
      continue;
    }
    std::fill(word_.begin() + i + 1, word_.end(), Letter::G);
    return;
  }
  done_ = true;
}

}  // namespace goursat
