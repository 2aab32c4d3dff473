#include "gentuple/abelian_reduce.hpp"

#include <algorithm>
#include <numeric>

#include "gentuple/explorer.hpp"
#include "gentuple/structure.hpp"

namespace gentuple {

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

void require_abelian_backend(const AbelianForm& a, const Tuple& t) {
  if (t.group.kind() != GroupKind::abelian)
    throw validation_error("operation requires an abelian backend tuple");
  const GroupSpec& s = t.group.spec();
  if (s.torsion != a.torsion || s.free_rank != a.free_rank)
    throw validation_error("abelian form does not match the tuple's group");
}

IntMatrix exponent_matrix(const Tuple& t) {
  const std::size_t d = t.entries.empty() ? 0 : t.entries[0].coords.size();
  IntMatrix m(t.entries.size(), d);
  for (std::size_t r = 0; r < t.entries.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m.at(r, c) = t.entries[r].coords[c];
  return m;
}

// Residue pair of det(exponent matrix) mod m1 for a square tuple (any mix of
// torsion and free columns; coordinate wraps change the determinant by
// multiples of the m_i, hence not mod m1).
DetInvariant det_pair(const Int& m1, const Tuple& t) {
  Int d = mod_floor(determinant(exponent_matrix(t)), m1);
  Int e = mod_floor(-d, m1);
  return d <= e ? DetInvariant{d, e} : DetInvariant{e, d};
}

}  // namespace

DetInvariant nielsen_det_invariant(const AbelianForm& a, const Tuple& t) {
  a.validate();
  if (a.free_rank != 0) throw validation_error("det invariant requires a finite form");
  if (a.torsion.empty() || t.size() != (int)a.torsion.size())
    throw validation_error("det invariant requires tuple length == rank");
  if (a.torsion.front() < 3) throw validation_error("det invariant requires m1 >= 3");
  require_abelian_backend(a, t);
  if (!generates(t.group, t))
    throw validation_error("det invariant requires a generating tuple");
  return det_pair(a.torsion.front(), t);
}

namespace {

// Move-by-move row reduction of an abelian tuple. Every mutation goes
// through apply_move, so the recorded sequence replays by construction.
// Torsion coordinates are canonical in [0, m); the Euclid logic below reads
// them through a signed lift in (-m/2, m/2] to keep the usual termination
// argument.
class Reducer {
 public:
  Reducer(const AbelianForm& form, const Tuple& t)
      : form_(form), state_(t), r_((int)form.torsion.size()) {
    seq_.tuple_size = t.size();
  }

  const Tuple& state() const { return state_; }
  MoveSequence take_moves() { return std::move(seq_); }
  std::vector<CertificateStep> take_steps() { return std::move(steps_); }

  int rows() const { return state_.size(); }

  const Int& entry(int row, int col) const { return state_.entries[row].coords[col]; }

  Int signed_entry(int row, int col) const {
    const Int& e = entry(row, col);
    if (col < r_ && 2 * e > form_.torsion[col]) return e - form_.torsion[col];
    return e;
  }

  // row i += k * row j, as |k| elementary R moves
  void add_rows(int i, int j, const Int& k) {
    const int sign = k > 0 ? +1 : -1;
    for (Int c = 0; c < abs_int(k); ++c) emit(Move::r(i + 1, j + 1, sign));
  }

  void negate_row(int i) { emit(Move::inv(i + 1)); }

  void swap_rows(int i, int j) {
    if (i == j) return;
    emit(Move::r(i + 1, j + 1, +1));
    emit(Move::r(j + 1, i + 1, -1));
    emit(Move::r(i + 1, j + 1, +1));
    emit(Move::inv(j + 1));
  }

  void splice(const MoveSequence& ms) {
    for (const Move& m : ms.moves) emit(m);
  }

  void note_step(const std::string& origin, const std::string& description,
                 std::size_t first_move) {
    if (seq_.moves.size() == first_move) return;
    steps_.push_back(CertificateStep{origin, description, first_move,
                                     seq_.moves.size() - first_move});
  }
  std::size_t move_count() const { return seq_.moves.size(); }

  // Pairwise Euclid on the signed lifts until the column's support among
  // rows >= from sits on a single row; returns that row, or -1 on a zero
  // column.
  int euclid_column(int col, int from) {
    for (;;) {
      int pivot = -1;
      for (int i = from; i < rows(); ++i) {
        if (entry(i, col) == 0) continue;
        if (pivot < 0 || abs_int(signed_entry(i, col)) < abs_int(signed_entry(pivot, col)))
          pivot = i;
      }
      if (pivot < 0) return -1;
      bool others = false;
      for (int i = from; i < rows(); ++i) {
        if (i == pivot || entry(i, col) == 0) continue;
        others = true;
        add_rows(i, pivot, -nearest_quotient(signed_entry(i, col), signed_entry(pivot, col)));
      }
      if (!others) return pivot;
    }
  }

  // Clears column `col` of every row except `prow`; requires the pivot entry
  // there to be 1 (torsion: 1 mod m).
  void clear_column(int col, int prow) {
    for (int i = 0; i < rows(); ++i) {
      if (i == prow || entry(i, col) == 0) continue;
      add_rows(i, prow, -signed_entry(i, col));
    }
  }

 private:
  void emit(const Move& m) {
    state_ = apply_move(state_, m);
    seq_.append(m);
  }

  AbelianForm form_;
  Tuple state_;
  MoveSequence seq_;
  std::vector<CertificateStep> steps_;
  int r_;
};

// Canonical n-tuple: basis vectors followed by identities, with the last
// torsion entry optionally scaled.
Tuple canonical_tuple(const Group& g, const AbelianForm& form, int n, const Int& last_scale) {
  const int r = (int)form.torsion.size();
  const int d = r + form.free_rank;
  Tuple t;
  t.group = g;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> coords(d, Int(0));
    if (i < d) coords[i] = (i == r - 1) ? last_scale : Int(1);
    t.entries.push_back(g.canonicalize(std::move(coords)));
  }
  return t;
}

}  // namespace

Certificate abelian_reduce(const AbelianForm& form, const Tuple& t) {
  form.validate();
  require_abelian_backend(form, t);
  const Group& g = t.group;
  if (!generates(g, t)) throw validation_error("abelian_reduce requires a generating tuple");

  const int r = (int)form.torsion.size();
  const int s = form.free_rank;
  const int n = t.size();

  Reducer red(form, t);
  const std::size_t recipe_start = red.move_count();

  // Free columns first: their cleared pivots carry exact integer
  // coefficients, so every later column still admits a unit pivot built from
  // the remaining rows. Free pivot #c lands in row c, torsion pivot #k in
  // row s+k; a final permutation restores the canonical order.
  for (int c = 0; c < s; ++c) {
    const int col = r + c;
    int carrier = red.euclid_column(col, c);
    if (carrier < 0 || abs_int(red.entry(carrier, col)) != 1)
      throw validation_error("internal: generating tuple with a non-unit free pivot");
    if (red.entry(carrier, col) < 0) red.negate_row(carrier);
    red.swap_rows(c, carrier);
    red.clear_column(col, c);
  }

  // Torsion columns. All rows >= s now have zero free parts, so moves among
  // them stay inside the torsion block.
  for (int k = 0; k < r; ++k) {
    const int col = k;
    const int prow = s + k;
    const Int& m = form.torsion[k];
    int carrier = red.euclid_column(col, prow);
    if (carrier < 0) {
      // column is zero mod m; nothing to pivot, the residual search settles it
      continue;
    }
    if (red.signed_entry(carrier, col) < 0) red.negate_row(carrier);

    // Borrow m_{k'} multiples of finished pivot rows when the gcd is stuck in
    // a non-unit residue class (possible for mixed-prime divisibility chains).
    for (int kp = 0; kp < k && gcd_int(red.entry(carrier, col), m) != 1; ++kp) {
      Int borrowed = mod_floor(form.torsion[kp] * red.entry(s + kp, col), m);
      if (borrowed == 0) continue;
      if (gcd_int(gcd_int(red.entry(carrier, col), borrowed), m) <
          gcd_int(red.entry(carrier, col), m)) {
        int helper = -1;
        for (int i = prow; i < red.rows(); ++i)
          if (i != carrier && red.entry(i, col) == 0) {
            helper = i;
            break;
          }
        if (helper < 0) break;
        red.add_rows(helper, s + kp, form.torsion[kp]);
        carrier = red.euclid_column(col, prow);
        if (red.signed_entry(carrier, col) < 0) red.negate_row(carrier);
      }
    }

    Int pivot_val = red.entry(carrier, col);
    if (gcd_int(pivot_val, m) != 1) {
      red.swap_rows(prow, carrier);  // residual search finishes the block
      continue;
    }
    if (pivot_val != 1) {
      // wrap: a zeroed row receives z copies of the carrier, z*pivot = 1 (m)
      int helper = -1;
      for (int i = prow; i < red.rows(); ++i)
        if (i != carrier) {
          helper = i;
          break;
        }
      if (helper < 0) {
        red.swap_rows(prow, carrier);  // single remaining row: class obstruction
        continue;
      }
      Egcd e = extended_gcd(pivot_val, m);
      red.add_rows(helper, carrier, mod_floor(e.x, m));
      red.add_rows(carrier, helper, -pivot_val);
      carrier = helper;
    }
    red.swap_rows(prow, carrier);
    red.clear_column(col, prow);
  }

  red.note_step("paper-recipe", "integer row reduction toward the canonical basis",
                recipe_start);

  // Intermediate target before the final row permutation: free basis rows
  // first (as placed above), then the torsion basis with the last torsion
  // entry scaled by the determinant class representative in the square case.
  Int last_scale = 1;
  bool exact_canonical = true;
  if (n == r + s && r > 0 && form.torsion.front() >= 3)
    last_scale = det_pair(form.torsion.front(), t).low;
  Tuple preperm = [&] {
    Tuple p;
    p.group = g;
    for (int i = 0; i < n; ++i) {
      std::vector<Int> coords(r + s, Int(0));
      if (i < s)
        coords[r + i] = 1;
      else if (i < s + r)
        coords[i - s] = (i - s == r - 1) ? last_scale : Int(1);
      p.entries.push_back(g.canonicalize(std::move(coords)));
    }
    return p;
  }();

  if (!(red.state() == preperm) && r > 0) {
    // one-move candidate: negating the scaled torsion row
    if (apply_move(red.state(), Move::inv(s + r)) == preperm) red.negate_row(s + r - 1);
  }

  if (!(red.state() == preperm)) {
    if (r == 0)
      throw validation_error("internal: free reduction missed its target");
    const std::size_t probe = red.move_count();
    // Breadth-first correction on the torsion sub-tuple. Rows s..n-1 have
    // zero free parts, so the spliced moves never disturb the free basis.
    GroupSpec sp;
    sp.kind = GroupKind::abelian;
    sp.torsion = form.torsion;
    Group tg = Group::from_spec(sp);
    auto torsion_part = [&](const Tuple& full) {
      Tuple tb;
      tb.group = tg;
      for (int i = s; i < n; ++i) {
        std::vector<Int> c(full.entries[i].coords.begin(),
                           full.entries[i].coords.begin() + r);
        tb.entries.push_back(tg.canonicalize(std::move(c)));
      }
      return tb;
    };
    GraphQuery q{tg, n - s, GraphMode::nielsen, {}};
    auto leg = find_path(q, torsion_part(red.state()), torsion_part(preperm));
    if (!leg) {
      // determinant class was advisory here: land on the component
      // representative instead
      ComponentsReport rep = components(q);
      std::uint64_t pos = rep.vertex_position(tuple_key(q, torsion_part(red.state())));
      Tuple alt = rep.representatives[rep.component_of[pos]];
      leg = find_path(q, torsion_part(red.state()), alt);
      if (!leg) throw validation_error("internal: vertex lost its own component");
      preperm = red.state();
      for (int i = s; i < n; ++i) {
        std::vector<Int> c = alt.entries[i - s].coords;
        c.resize(r + s, Int(0));
        preperm.entries[i] = g.canonicalize(std::move(c));
      }
      exact_canonical = false;
    }
    MoveSequence shifted;
    shifted.tuple_size = n;
    for (Move m : leg->moves().moves) {
      m.i += s;
      if (m.op != Move::Op::AC) m.j += s;
      shifted.append(m);
    }
    red.splice(shifted);
    red.note_step("bfs-fallback", "torsion block correction by graph search", probe);
  }

  if (!(red.state() == preperm))
    throw validation_error("internal: abelian reduction did not reach its intermediate form");

  // Put the torsion basis rows (currently s..s+r-1) ahead of the free ones.
  if (s > 0 && r > 0) {
    std::vector<int> dest(n);
    for (int i = 0; i < n; ++i) dest[i] = i;
    for (int c = 0; c < s; ++c) dest[c] = r + c;
    for (int k = 0; k < r; ++k) dest[s + k] = k;
    std::vector<int> content(n);
    std::iota(content.begin(), content.end(), 0);
    for (int pos = 0; pos < n; ++pos) {
      int want = pos;
      while (dest[content[want]] != pos) ++want;
      if (want != pos) {
        red.swap_rows(pos, want);
        std::swap(content[pos], content[want]);
      }
    }
  }

  Tuple target = red.state();
  if (exact_canonical && !(target == canonical_tuple(g, form, n, last_scale)))
    throw validation_error("internal: abelian reduction did not reach the canonical tuple");
  auto steps = red.take_steps();
  return Certificate(t, target, red.take_moves(), Certificate::Kind::nielsen,
                     std::move(steps));
}

}  // namespace gentuple
