#include "hsauto/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hsauto/error.hpp"

namespace hsauto {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l))
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("alphabet must contain at least one generator");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw ParseError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    if (rank <= 26)
      names.emplace_back(1, static_cast<char>('a' + i));
    else
      names.push_back("x" + std::to_string(i + 1));
  }
  return Alphabet(std::move(names));
}

Word Word::reduce(std::size_t rank, std::span<const Letter> letters) {
  Word w(rank);
  for (const Letter& l : letters) push_reduced(w.letters_, l);
  return w;
}

Word Word::positive(std::size_t rank, std::span<const std::uint32_t> gens) {
  Word w(rank);
  w.letters_.reserve(gens.size());
  for (auto g : gens) w.letters_.push_back(Letter{g, false});
  return w;
}

bool Word::is_positive() const {
  return std::none_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.inverse; });
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i - 1].cancels(letters_[i])) return false;
  return true;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                other.letters_.begin(), other.letters_.end());
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> seq;
  std::size_t pos = 0;
  auto error = [&](const std::string& msg, std::size_t at) {
    return ParseError(msg + " at position " + std::to_string(at) + " in \"" + std::string(text) + "\"");
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw error(std::string("unexpected symbol '") + c + "'", pos);

    const std::size_t start = pos;
    std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    const bool inverse = std::isupper(static_cast<unsigned char>(c));
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) name += text[pos++];

    const auto& names = alphabet.names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw error("unknown symbol '" + std::string(text.substr(start, pos - start)) + "'", start);
    Letter letter{static_cast<std::uint32_t>(it - names.begin()), inverse};

    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      const std::size_t digits_start = pos;
      exponent = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        exponent = exponent * 10 + (text[pos++] - '0');
        if (exponent > 1'000'000) throw error("exponent too large", digits_start);
      }
      if (pos == digits_start) throw error("missing exponent", digits_start);
      if (negative) letter = letter.inverted();
    }
    for (long long k = 0; k < exponent; ++k) seq.push_back(letter);
  }
  return Word::reduce(alphabet.rank(), seq);
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (const Letter& l : w.letters()) {
    std::string name = alphabet.name(l.gen);
    if (l.inverse) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += name;
  }
  return out;
}

Word reduce_concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw AlphabetMismatch("cannot multiply words of rank " + std::to_string(u.rank()) + " and " +
                           std::to_string(v.rank()));
  std::vector<Letter> seq(u.letters());
  seq.insert(seq.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(u.rank(), seq);
}

Word invert(const Word& w) {
  std::vector<Letter> seq;
  seq.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) seq.push_back(it->inverted());
  return Word::reduce(w.rank(), seq);
}

}  // namespace hsauto
