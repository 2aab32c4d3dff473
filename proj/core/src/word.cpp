#include "gentuple/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace gentuple {

Word::Word(int alphabet_rank, std::vector<Letter> letters)
    : rank_(alphabet_rank), letters_(std::move(letters)) {
  if (rank_ <= 0) throw validation_error("word alphabet rank must be positive");
  for (const Letter& l : letters_) {
    if (l.gen < 1 || l.gen > rank_)
      throw validation_error("generator index " + std::to_string(l.gen) +
                             " out of range for rank " + std::to_string(rank_));
    if (l.sign != 1 && l.sign != -1) throw validation_error("letter sign must be +1 or -1");
  }
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i].gen == letters_[i - 1].gen && letters_[i].sign == -letters_[i - 1].sign)
      return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  std::vector<Letter> parse() {
    auto letters = parse_sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return letters;
  }

 private:
  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw validation_error("word syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (std::isspace((unsigned char)text_[pos_]) || text_[pos_] == '*'))
      ++pos_;
  }

  bool peek_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'x' || c == '1' || c == '[' || c == '(';
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  std::vector<Letter> parse_sequence() {
    std::vector<Letter> out;
    while (peek_atom_start()) {
      auto atom = parse_atom();
      skip_ws();
      long long e = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        e = parse_int();
      }
      append_power(out, atom, e);
    }
    return out;
  }

  std::vector<Letter> parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected atom");
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == 'x') {
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
      if (pos_ == digits) fail("expected generator index after 'x'");
      int gen = std::atoi(std::string(text_.substr(digits, pos_ - digits)).c_str());
      if (gen < 1 || gen > rank_) fail("generator index out of range");
      return {Letter{gen, +1}};
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      auto acc = parse_sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        auto rhs = parse_sequence();
        acc = commutator(acc, rhs);
        skip_ws();
      }
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return acc;
    }
    fail("expected atom");
  }

  static std::vector<Letter> invert(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, -it->sign});
    return out;
  }

  // [u,v] = u^-1 v^-1 u v
  static std::vector<Letter> commutator(const std::vector<Letter>& u,
                                        const std::vector<Letter>& v) {
    std::vector<Letter> out = invert(u);
    auto vi = invert(v);
    out.insert(out.end(), vi.begin(), vi.end());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  static void append_power(std::vector<Letter>& out, const std::vector<Letter>& atom,
                           long long e) {
    if (e == 0 || atom.empty()) return;
    const auto base = e > 0 ? atom : invert(atom);
    for (long long i = 0; i < std::llabs(e); ++i) out.insert(out.end(), base.begin(), base.end());
  }
};

}  // namespace

Word parse_word(std::string_view text, int alphabet_rank) {
  if (alphabet_rank <= 0) throw validation_error("word alphabet rank must be positive");
  Parser p(text, alphabet_rank);
  return Word(alphabet_rank, p.parse());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters().size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(w.alphabet_rank(), std::move(stack));
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet_rank() != v.alphabet_rank())
    throw validation_error("cannot concatenate words over different ranks");
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet_rank(), std::move(letters));
}

Word word_inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  return Word(w.alphabet_rank(), std::move(out));
}

Word word_power(const Word& w, long long e) {
  Word base = e >= 0 ? w : word_inverse(w);
  std::vector<Letter> out;
  for (long long i = 0; i < std::llabs(e); ++i)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return Word(w.alphabet_rank(), std::move(out));
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& ls = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long e = (long long)(j - i) * ls[i].sign;
    if (!first) os << '*';
    os << 'x' << ls[i].gen;
    if (e != 1) os << '^' << e;
    first = false;
    i = j;
  }
  return os.str();
}

}  // namespace gentuple
