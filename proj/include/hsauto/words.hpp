#ifndef HSAUTO_WORDS_HPP
#define HSAUTO_WORDS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsauto {

/// Ordered set of generator names. The order fixes letter indices and the
/// lexicographic order used by every traversal in the library.
///
/// Names are a lowercase ASCII letter optionally followed by digits ("a",
/// "x12"). The inverse of a generator is written with the first character
/// uppercased ("A", "X12").
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// a, b, c, ... for rank <= 26, otherwise x1, x2, ..., xn.
  static Alphabet standard(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{gen, !inverse}; }
  bool cancels(const Letter& other) const { return gen == other.gen && inverse != other.inverse; }

  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word over the generators and their inverses. Every
/// constructor reduces, so a Word never holds an adjacent x x^-1 pair.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::size_t rank, std::span<const Letter> letters);
  /// Positive word from generator indices.
  static Word positive(std::size_t rank, std::span<const std::uint32_t> gens);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_positive() const;
  bool is_reduced() const;

  bool operator==(const Word&) const = default;
  /// Shortlex order: length first, then letters (generator order, positive
  /// before inverse).
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

/// Parses "aB", "a^4b^-2", "x1X2". Lowercase is a generator, uppercase its
/// inverse; whitespace is ignored.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Plain letter form without exponent sugar; parse_word(to_string(w)) == w.
std::string to_string(const Word& w, const Alphabet& alphabet);

Word reduce_concat(const Word& u, const Word& v);
Word invert(const Word& w);

}  // namespace hsauto

#endif  // HSAUTO_WORDS_HPP
