#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentuple/group.hpp"
#include "gentuple/word.hpp"

namespace gentuple {

// One elementary move on an n-tuple. Indices are 1-based.
//   R(i,j,s): t_i <- t_i * t_j^s          (i != j)
//   L(i,j,s): t_i <- t_j^s * t_i          (i != j)
//   I(j):     t_j <- t_j^-1
//   AC(i,w,s): t_i <- (w^s)^-1 * t_i * w^s
// AC conjugators are stored as a word over the group's distinguished
// generators when possible, or as an explicit element.
struct Move {
  enum class Op { R, L, I, AC };
  Op op = Op::I;
  int i = 1;
  int j = 1;
  int sign = +1;
  std::optional<Word> conj_word;
  std::optional<GroupElement> conj_element;

  static Move r(int i, int j, int sign) { return Move{Op::R, i, j, sign, {}, {}}; }
  static Move l(int i, int j, int sign) { return Move{Op::L, i, j, sign, {}, {}}; }
  static Move inv(int j) { return Move{Op::I, j, j, +1, {}, {}}; }
  static Move ac(int i, Word w, int sign) {
    return Move{Op::AC, i, i, sign, std::move(w), {}};
  }
  static Move ac(int i, GroupElement s, int sign) {
    return Move{Op::AC, i, i, sign, {}, std::move(s)};
  }

  bool is_nielsen() const { return op != Op::AC; }
};

struct MoveSequence {
  int tuple_size = 0;
  std::vector<Move> moves;

  std::size_t size() const { return moves.size(); }
  void append(Move m) { moves.push_back(std::move(m)); }
  void append(const MoveSequence& ms);
};

Tuple apply_move(const Tuple& t, const Move& m);
Tuple apply_sequence(const Tuple& t, const MoveSequence& ms);

// Reverses the order and flips each move so that
// apply_sequence(apply_sequence(t, ms), invert_sequence(ms)) == t.
MoveSequence invert_sequence(const MoveSequence& ms);

// Provenance note for a block of moves inside a certificate.
struct CertificateStep {
  std::string origin;  // "paper-recipe" or "bfs-fallback"
  std::string description;
  std::size_t first_move = 0;
  std::size_t move_count = 0;
};

// A replayable equivalence proof: applying `moves` to `source` yields
// `target`. The constructor replays and rejects anything that does not.
class Certificate {
 public:
  enum class Kind { nielsen, ac };

  Certificate(Tuple source, Tuple target, MoveSequence moves, Kind kind,
              std::vector<CertificateStep> steps = {});

  const Group& group() const { return source_.group; }
  const Tuple& source() const { return source_; }
  const Tuple& target() const { return target_; }
  const MoveSequence& moves() const { return moves_; }
  Kind kind() const { return kind_; }
  const std::vector<CertificateStep>& steps() const { return steps_; }

  // Re-runs the replay; true for any constructed certificate.
  bool verify() const;

 private:
  Tuple source_, target_;
  MoveSequence moves_;
  Kind kind_;
  std::vector<CertificateStep> steps_;
};

}  // namespace gentuple
