#include <doctest.h>

#include "gentuple/moves.hpp"
#include "gentuple/standard_groups.hpp"
#include "gentuple/structure.hpp"
#include "support.hpp"

using namespace gentuple;
using namespace testsupport;

TEST_CASE("elementary move semantics") {
  Group q8 = make_quaternion();
  auto i = q8.element_from_label("i");
  auto j = q8.element_from_label("j");
  Tuple t = tuple_of(q8, {i, j});

  // right multiplication: (a, b) -> (ab, b)
  Tuple r = apply_move(t, Move::r(1, 2, +1));
  CHECK(r.entries[0] == q8.mul(i, j));
  CHECK(r.entries[1] == j);

  // left multiplication
  Tuple l = apply_move(t, Move::l(1, 2, -1));
  CHECK(l.entries[0] == q8.mul(q8.inv(j), i));

  // conjugation by the second generator, as a word
  Tuple c = apply_move(t, Move::ac(1, parse_word("x2", 2), +1));
  CHECK(c.entries[0] == q8.mul(q8.mul(q8.inv(j), i), j));
  CHECK(c.entries[0] == q8.element_from_label("-i"));

  CHECK_THROWS_AS(apply_move(t, Move::r(1, 1, +1)), validation_error);
  CHECK_THROWS_AS(apply_move(t, Move::r(1, 3, +1)), validation_error);
}

TEST_CASE("involution and inverse pairs") {
  auto gen = rng(707);
  Group h1 = make_heisenberg(1);
  for (int trial = 0; trial < 50; ++trial) {
    Tuple t = tuple_of(h1, {random_element(gen, h1, -8, 8), random_element(gen, h1, -8, 8)});
    CHECK(apply_move(apply_move(t, Move::inv(1)), Move::inv(1)) == t);
    MoveSequence pair{2, {Move::r(1, 2, +1), Move::r(1, 2, -1)}};
    CHECK(apply_sequence(t, pair) == t);
    CHECK(apply_sequence(t, MoveSequence{2, {}}) == t);
  }
}

TEST_CASE("the paired left-right moves shift a central coordinate") {
  Group h1 = make_heisenberg(1);
  Tuple standard = tuple_of(h1, h1.distinguished_generators());
  MoveSequence seq{2, {Move::l(1, 2, -1), Move::r(1, 2, +1)}};
  Tuple out = apply_sequence(standard, seq);
  CHECK(out.entries[0] == coords(h1, {1, 0, 1}));
  CHECK(out.entries[1] == coords(h1, {0, 1, 0}));
}

TEST_CASE("invert_sequence undoes any sequence") {
  CHECK(invert_sequence(MoveSequence{2, {Move::r(1, 2, +1)}}).moves[0].sign == -1);
  CHECK(invert_sequence(MoveSequence{2, {}}).moves.empty());

  auto gen = rng(808);
  Group h1 = make_heisenberg(1);
  std::uniform_int_distribution<int> move_kind(0, 3);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    Tuple t = tuple_of(h1, {random_element(gen, h1, -5, 5), random_element(gen, h1, -5, 5),
                              random_element(gen, h1, -5, 5)});
    MoveSequence seq;
    seq.tuple_size = 3;
    while (seq.size() < 50) {
      int i = idx(gen), j = idx(gen);
      int sign = flip(gen) ? +1 : -1;
      switch (move_kind(gen)) {
        case 0:
          if (i != j) seq.append(Move::r(i, j, sign));
          break;
        case 1:
          if (i != j) seq.append(Move::l(i, j, sign));
          break;
        case 2:
          seq.append(Move::inv(i));
          break;
        default:
          seq.append(Move::ac(i, random_element(gen, h1, -3, 3), sign));
          break;
      }
    }
    Tuple there = apply_sequence(t, seq);
    CHECK(apply_sequence(there, invert_sequence(seq)) == t);
  }
}

TEST_CASE("moves preserve generation and normal generation") {
  // exhaustive over small groups and tuple lengths
  for (const Group& g : {make_quaternion(), make_dihedral(4),
                         to_cayley_table(make_abelian({Int(2), Int(4)})),
                         make_symmetric(3)}) {
    const std::uint64_t size = g.element_count();
    for (int n = 1; n <= 3; ++n) {
      if (n == 3 && size > 8) continue;
      std::vector<Move> alphabet;
      for (int i = 1; i <= n; ++i) {
        alphabet.push_back(Move::inv(i));
        for (int j = 1; j <= n; ++j)
          if (i != j)
            for (int sign : {+1, -1}) {
              alphabet.push_back(Move::r(i, j, sign));
              alphabet.push_back(Move::l(i, j, sign));
            }
      }
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= size;
      for (std::uint64_t key = 0; key < total; ++key) {
        std::uint64_t rest = key;
        std::vector<GroupElement> entries;
        for (int i = 0; i < n; ++i) {
          entries.push_back(g.element_at(rest % size));
          rest /= size;
        }
        Tuple t = tuple_of(g, entries);
        const bool gen_before = generates(g, t);
        const bool norm_before = normally_generates(g, t);
        if (!gen_before && !norm_before) continue;
        for (const Move& m : alphabet) {
          Tuple img = apply_move(t, m);
          if (gen_before) CHECK(generates(g, img));
          if (norm_before) CHECK(normally_generates(g, img));
        }
        if (norm_before) {
          for (std::uint64_t s = 0; s < size; ++s) {
            Tuple img = apply_move(t, Move::ac(1, g.element_at(s), +1));
            CHECK(normally_generates(g, img));
          }
        }
      }
    }
  }
}

TEST_CASE("certificates replay or refuse to exist") {
  Group q8 = make_quaternion();
  auto i = q8.element_from_label("i");
  auto j = q8.element_from_label("j");
  Tuple src = tuple_of(q8, {i, j});
  Tuple dst = apply_move(src, Move::r(1, 2, +1));

  Certificate ok(src, dst, MoveSequence{2, {Move::r(1, 2, +1)}}, Certificate::Kind::nielsen);
  CHECK(ok.verify());

  CHECK_THROWS_AS(Certificate(src, dst, MoveSequence{2, {Move::r(1, 2, -1)}},
                              Certificate::Kind::nielsen),
                  validation_error);

  // a nielsen certificate may not contain conjugation moves
  Tuple conj = apply_move(src, Move::ac(1, j, +1));
  CHECK_THROWS_AS(Certificate(src, conj, MoveSequence{2, {Move::ac(1, j, +1)}},
                              Certificate::Kind::nielsen),
                  validation_error);
  Certificate ac_ok(src, conj, MoveSequence{2, {Move::ac(1, j, +1)}}, Certificate::Kind::ac);
  CHECK(ac_ok.verify());
}
