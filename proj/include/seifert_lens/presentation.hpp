#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "text.hpp"

namespace seifert_lens {

/// One letter of a word: a generator index raised to +1 or -1.
struct Letter {
  std::size_t generator = 0;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  /// Column of this letter in a coset table: 2g for g, 2g+1 for g^-1.
  std::size_t column() const { return 2 * generator + (sign < 0 ? 1 : 0); }

  friend bool operator==(Letter const&, Letter const&) = default;
};

/// Freely reduced word in the free group on the generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    reduce();
  }

  /// g^exponent for a single generator.
  static Word power(std::size_t generator, std::int64_t exponent) {
    std::vector<Letter> letters;
    int const sign = exponent < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
      letters.push_back({generator, sign});
    }
    return Word(std::move(letters));
  }

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word operator*(Word const& rhs) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
  }

  /// Exponent sum of one generator.
  std::int64_t exponent_sum(std::size_t generator) const {
    std::int64_t sum = 0;
    for (auto const& l : letters_) {
      if (l.generator == generator) sum += l.sign;
    }
    return sum;
  }

  std::size_t max_generator() const {
    std::size_t m = 0;
    for (auto const& l : letters_) m = std::max(m, l.generator + 1);
    return m;
  }

  friend bool operator==(Word const&, Word const&) = default;

 private:
  void reduce() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto const& l : letters_) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    letters_ = std::move(out);
  }

  std::vector<Letter> letters_;
};

/// Word rendered with run-length exponents, e.g. "a^-1 h a h". The empty word is "1".
inline std::string to_string(Word const& w, std::vector<std::string> const& names) {
  if (w.empty()) return "1";
  std::string out;
  auto const& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    std::int64_t const exp = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += names.at(ls[i].generator);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

/// Finitely presented group: named generators and freely reduced relators.
class GroupPresentation {
 public:
  GroupPresentation() = default;

  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
      : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (generators_[i] == generators_[j]) {
          throw std::invalid_argument("duplicate generator '" + generators_[i] + "'");
        }
      }
    }
    for (auto& r : relators) add_relator(std::move(r));
  }

  std::vector<std::string> const& generators() const noexcept { return generators_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  void add_relator(Word w) {
    validate(w);
    relators_.push_back(std::move(w));
  }

  /// Relation lhs = rhs stored as the relator lhs * rhs^-1.
  void add_relation(Word const& lhs, Word const& rhs) { add_relator(lhs * rhs.inverse()); }

  /// Throws std::invalid_argument when the word uses an undeclared generator.
  void validate(Word const& w) const {
    if (w.max_generator() > generators_.size()) {
      throw std::invalid_argument("word uses a generator outside the presentation");
    }
  }

  std::size_t generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i] == name) return i;
    }
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  }

  std::string to_string(Word const& w) const { return seifert_lens::to_string(w, generators_); }

  /// Parses a word over this presentation's generators.
  Word parse_word(std::string_view text) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

inline std::string to_string(GroupPresentation const& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out += ", ";
    out += p.generators()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i ? ", " : " ";
    out += p.to_string(p.relators()[i]);
  }
  out += " >";
  return out;
}

namespace detail {

// word := "1" | factor+ ; factor := name ("^" integer)?
inline Word parse_word(Cursor& cur, std::vector<std::string> const& names) {
  std::vector<Letter> letters;
  if (cur.peek() == '1') {
    cur.consume('1');
    return Word();
  }
  if (!cur.at_identifier()) cur.fail("generator name or '1'");
  while (cur.at_identifier()) {
    std::size_t const at = cur.position();
    std::string const name = cur.identifier();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      cur.seek(at);
      cur.fail("declared generator");
    }
    std::int64_t exp = 1;
    if (cur.consume('^')) exp = cur.integer();
    Word const p = Word::power(static_cast<std::size_t>(it - names.begin()), exp);
    letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  }
  return Word(std::move(letters));
}

}  // namespace detail

inline Word GroupPresentation::parse_word(std::string_view text) const {
  detail::Cursor cur(text);
  Word w = detail::parse_word(cur, generators_);
  cur.expect_end();
  return w;
}

/// Parses `< a, h | a^-1 h a h, a^4 h^-3 >`. Relators may also be written as
/// equations `lhs = rhs`.
inline GroupPresentation parse_presentation(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect('<');
  std::vector<std::string> names;
  if (cur.at_identifier()) {
    do {
      std::size_t const at = cur.position();
      std::string name = cur.identifier();
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        cur.seek(at);
        cur.fail("new generator name");
      }
      names.push_back(std::move(name));
    } while (cur.consume(','));
  }
  GroupPresentation p(names, {});
  if (cur.consume('|')) {
    if (cur.peek() != '>') {
      do {
        Word lhs = detail::parse_word(cur, names);
        if (cur.consume('=')) {
          p.add_relation(lhs, detail::parse_word(cur, names));
        } else {
          p.add_relator(std::move(lhs));
        }
      } while (cur.consume(','));
    }
  }
  cur.expect('>');
  cur.expect_end();
  return p;
}

}  // namespace seifert_lens
