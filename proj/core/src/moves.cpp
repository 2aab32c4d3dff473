#include "gentuple/moves.hpp"

namespace gentuple {

void MoveSequence::append(const MoveSequence& ms) {
  moves.insert(moves.end(), ms.moves.begin(), ms.moves.end());
}

namespace {

GroupElement resolve_conjugator(const Tuple& t, const Move& m) {
  const Group& g = t.group;
  GroupElement s;
  if (m.conj_element) {
    s = *m.conj_element;
  } else if (m.conj_word) {
    s = evaluate_word(*m.conj_word, g, g.distinguished_generators());
  } else {
    throw validation_error("AC move carries no conjugator");
  }
  return m.sign > 0 ? s : g.inv(s);
}

}  // namespace

Tuple apply_move(const Tuple& t, const Move& m) {
  const int n = t.size();
  const Group& g = t.group;
  auto check_index = [n](int idx) {
    if (idx < 1 || idx > n) throw validation_error("move index out of range");
  };
  Tuple out = t;
  switch (m.op) {
    case Move::Op::R: {
      check_index(m.i);
      check_index(m.j);
      if (m.i == m.j) throw validation_error("R move requires i != j");
      const GroupElement& b = t.entries[m.j - 1];
      out.entries[m.i - 1] =
          g.mul(t.entries[m.i - 1], m.sign > 0 ? b : g.inv(b));
      break;
    }
    case Move::Op::L: {
      check_index(m.i);
      check_index(m.j);
      if (m.i == m.j) throw validation_error("L move requires i != j");
      const GroupElement& b = t.entries[m.j - 1];
      out.entries[m.i - 1] =
          g.mul(m.sign > 0 ? b : g.inv(b), t.entries[m.i - 1]);
      break;
    }
    case Move::Op::I:
      check_index(m.j);
      out.entries[m.j - 1] = g.inv(t.entries[m.j - 1]);
      break;
    case Move::Op::AC: {
      check_index(m.i);
      GroupElement s = resolve_conjugator(t, m);
      out.entries[m.i - 1] = g.conj(t.entries[m.i - 1], s);
      break;
    }
  }
  return out;
}

Tuple apply_sequence(const Tuple& t, const MoveSequence& ms) {
  if (ms.tuple_size != 0 && ms.tuple_size != t.size())
    throw validation_error("move sequence tuple size does not match tuple");
  Tuple cur = t;
  for (const Move& m : ms.moves) cur = apply_move(cur, m);
  return cur;
}

MoveSequence invert_sequence(const MoveSequence& ms) {
  MoveSequence out;
  out.tuple_size = ms.tuple_size;
  out.moves.reserve(ms.moves.size());
  for (auto it = ms.moves.rbegin(); it != ms.moves.rend(); ++it) {
    Move m = *it;
    if (m.op != Move::Op::I) m.sign = -m.sign;
    out.moves.push_back(std::move(m));
  }
  return out;
}

Certificate::Certificate(Tuple source, Tuple target, MoveSequence moves, Kind kind,
                         std::vector<CertificateStep> steps)
    : source_(std::move(source)),
      target_(std::move(target)),
      moves_(std::move(moves)),
      kind_(kind),
      steps_(std::move(steps)) {
  if (!(source_.group == target_.group))
    throw validation_error("certificate endpoints live in different groups");
  if (source_.size() != target_.size())
    throw validation_error("certificate endpoints have different lengths");
  if (moves_.tuple_size == 0) moves_.tuple_size = source_.size();
  if (kind_ == Kind::nielsen) {
    for (const Move& m : moves_.moves)
      if (!m.is_nielsen())
        throw validation_error("nielsen certificate contains an AC move");
  }
  if (!(apply_sequence(source_, moves_) == target_))
    throw validation_error("certificate does not replay from source to target");
}

bool Certificate::verify() const { return apply_sequence(source_, moves_) == target_; }

}  // namespace gentuple
