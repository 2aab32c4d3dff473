#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gentuple/errors.hpp"

namespace gentuple {

// One signed letter of a free-group word: generator index (1-based) and sign.
struct Letter {
  int gen;   // in [1, alphabet_rank]
  int sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word over the free group F_n. Letters are stored fully expanded
// (no internal exponents); a word need not be freely reduced.
class Word {
 public:
  Word() = default;
  Word(int alphabet_rank, std::vector<Letter> letters);

  int alphabet_rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  // True when no adjacent pair x x^-1 remains.
  bool is_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

// Grammar: juxtaposition (optionally '*'-separated) of atoms, where an atom is
//   x<k>            generator k
//   1               the empty word
//   [u,v]           commutator u^-1 v^-1 u v; [u,v,w] nests as [[u,v],w]
//   ( w )           grouping
// and any atom may carry an integer exponent '^e'. Exponents expand eagerly.
Word parse_word(std::string_view text, int alphabet_rank);

// Unique freely reduced form; idempotent.
Word free_reduce(const Word& w);

Word concat(const Word& u, const Word& v);
Word word_inverse(const Word& w);
Word word_power(const Word& w, long long e);

// Inverse of parse_word up to reduction; adjacent equal letters collapse to
// exponent notation, e.g. "x1^2*x2^-1". Empty word prints as "1".
std::string word_to_string(const Word& w);

}  // namespace gentuple
