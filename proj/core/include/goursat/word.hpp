#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "goursat/errors.hpp"
#include "goursat/natural.hpp"

namespace goursat {

/// The three letters of class codes. Underlying values are the ASCII codes,
/// which already sort G < S < T -- the canonical enumeration order.
enum class Letter : char { G = 'G', S = 'S', T = 'T' };

inline char to_char(Letter x) { return static_cast<char>(x); }

/// Code of a geometric class: a word over {G,S,T} of length >= 2 that starts
/// with GG and contains no factor GT. Immutable once constructed.
class ClassCode {
 public:
  /// Validates the word grammar; throws ParseError.
  explicit ClassCode(std::vector<Letter> letters);

  /// Parses an uppercase string like "GGSTSGS"; throws ParseError.
  static ClassCode parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  Letter at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<Letter>& letters() const { return letters_; }

  std::string str() const;

  /// Display transliteration into the alternative R/V/T alphabet
  /// (R for G, V for S).
  std::string str_rvt() const;

  friend bool operator==(const ClassCode&, const ClassCode&) = default;

 private:
  std::vector<Letter> letters_;
};

inline ClassCode parse(std::string_view text) { return ClassCode::parse(text); }

/// Marker for the generic all-G class of length r. It carries no letter S,
/// so the k/l parameterization below does not apply to it.
struct GenericMarker {
  int r = 0;
  friend bool operator==(const GenericMarker&, const GenericMarker&) = default;
};

/// Discrete parameters of a class code containing at least one S:
///
///   code = G^{l[s+1]}  S T^{k[s]} G^{l[s]}  ...  S T^{k[0]} G^{l[0]}
///
/// s+1 is the number of S letters; k[i] and l[i] count the T and G runs after
/// each S, indexed from the rightmost S backwards; l[s+1] >= 2 is the leading
/// G run. n lists the i in [1,s] with l[i] > 0, ascending.
struct ParamProfile {
  int s = 0;
  std::vector<int> k;  // size s+1
  std::vector<int> l;  // size s+2
  std::vector<int> n;  // ascending subset of [1, s]

  int q() const { return static_cast<int>(n.size()); }
  /// Word length of the rendered code.
  int length() const;

  friend bool operator==(const ParamProfile&, const ParamProfile&) = default;
};

/// Builds a profile from s, k, l, deriving n. Structural validation happens
/// in render_params / the closed-form routines.
ParamProfile make_param_profile(int s, std::vector<int> k, std::vector<int> l);

using ClassParams = std::variant<GenericMarker, ParamProfile>;

/// Throws InvalidProfile if the structural invariants do not hold.
void validate_profile(const ParamProfile& p);

/// Block decomposition of a code; GenericMarker for the all-G class.
ClassParams extract_params(const ClassCode& code);

/// Inverse of extract_params. Throws InvalidProfile on a malformed profile.
ClassCode render_params(const ParamProfile& p);
ClassCode render_params(const ClassParams& p);

/// Number of letters different from G.
int codimension(const ClassCode& code);

/// Number of admissible words of length r, computed as F_{2r-3} without
/// enumeration. Throws std::invalid_argument for r < 2.
Natural count_admissible(int r);

/// Streams the admissible words of length r in lexicographic order
/// (G < S < T) using O(r) memory, optionally restricted to the words that
/// extend a fixed prefix. A prefix of an admissible word is itself an
/// admissible word, so prefixes are given as ClassCode.
class Enumerator {
 public:
  explicit Enumerator(int r);
  Enumerator(const ClassCode& prefix, int r);

  bool done() const { return done_; }
  /// Current word; valid until the next advance().
  const std::vector<Letter>& word() const { return word_; }
  ClassCode code() const { return ClassCode(word_); }
  void advance();

 private:
  std::vector<Letter> word_;
  int fixed_;  // leading positions that never change
  bool done_ = false;
};

/// Calls fn(const std::vector<Letter>&) for every admissible word of
/// length r, in lexicographic order.
template <typename Fn>
void for_each_admissible(int r, Fn&& fn) {
  for (Enumerator e(r); !e.done(); e.advance()) {
    fn(e.word());
  }
}

}  // namespace goursat
