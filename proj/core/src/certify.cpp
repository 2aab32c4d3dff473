#include "gentuple/certify.hpp"

#include <algorithm>
#include <sstream>

namespace gentuple {

namespace {

// Applies and records moves, with optional replay-validated macro steps that
// fall back to a breadth-first path segment when a recipe step misses.
class CertBuilder {
 public:
  CertBuilder(Tuple start, GraphMode patch_mode)
      : state_(std::move(start)), patch_mode_(patch_mode) {
    seq_.tuple_size = state_.size();
  }

  const Tuple& state() const { return state_; }

  void emit(const Move& m) {
    state_ = apply_move(state_, m);
    seq_.append(m);
  }

  void splice(const MoveSequence& ms) {
    for (const Move& m : ms.moves) emit(m);
  }

  // Runs `recipe` (which emits moves) and checks the state afterwards equals
  // `expected`; on a miss, rolls back and splices a searched path instead.
  void macro_step(const std::string& description, const Tuple& expected,
                  const std::function<void()>& recipe) {
    const std::size_t first = seq_.moves.size();
    const Tuple before = state_;
    bool ok = true;
    try {
      recipe();
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok && state_ == expected) {
      steps_.push_back(CertificateStep{"paper-recipe", description, first,
                                       seq_.moves.size() - first});
      return;
    }
    // roll back and search
    seq_.moves.resize(first);
    state_ = before;
    GraphQuery q{state_.group, state_.size(), patch_mode_, {}};
    auto leg = find_path(q, state_, expected);
    if (!leg)
      throw validation_error("recipe step failed and no replacement path exists: " +
                             description);
    splice(leg->moves());
    steps_.push_back(CertificateStep{"bfs-fallback", description, first,
                                     seq_.moves.size() - first});
  }

  void note(const std::string& origin, const std::string& description, std::size_t first) {
    if (seq_.moves.size() == first) return;
    steps_.push_back(
        CertificateStep{origin, description, first, seq_.moves.size() - first});
  }
  std::size_t move_count() const { return seq_.moves.size(); }

  Certificate finish(const Tuple& source, const Tuple& target, Certificate::Kind kind) {
    if (!(state_ == target))
      throw validation_error("certificate construction did not reach its target");
    return Certificate(source, target, std::move(seq_), kind, std::move(steps_));
  }

 private:
  Tuple state_;
  MoveSequence seq_;
  std::vector<CertificateStep> steps_;
  GraphMode patch_mode_;
};

constexpr long long kClearingCap = 1'000'000;

}  // namespace

Certificate heisenberg_canonicalize(const Group& g, const Tuple& t) {
  if (g.kind() != GroupKind::heisenberg)
    throw validation_error("heisenberg_canonicalize requires a Heisenberg backend");
  if (!(t.group == g)) throw validation_error("tuple group mismatch");
  const int k = g.spec().heis_k;
  const int n = 2 * k;
  if (t.size() != n) throw validation_error("tuple length must be 2k");
  if (!generates(g, t)) throw validation_error("non-generating tuple");

  const auto& ab = g.abelianization();
  Tuple projected;
  projected.group = ab.ab_group;
  for (const auto& e : t.entries) projected.entries.push_back(ab.project(e));
  Certificate plan = abelian_reduce(ab.form, projected);

  CertBuilder b(t, GraphMode::nielsen);
  const std::size_t lift_start = b.move_count();
  b.splice(plan.moves());
  b.note("paper-recipe", "abelianized row reduction, replayed on the Heisenberg entries",
         lift_start);

  // Entries now project to the standard basis; clear the central coordinate
  // of entry i with the paired conjugation-by-partner moves, one unit each.
  const std::size_t clear_start = b.move_count();
  for (int i = 1; i <= n; ++i) {
    const Int z = b.state().entries[i - 1].coords[2 * k];
    Int remaining = z;
    if (g.spec().modulus && 2 * remaining > *g.spec().modulus)
      remaining -= *g.spec().modulus;  // shorter direction around the cycle
    if (abs_int(remaining) > kClearingCap)
      throw budget_error("central clearing sequence too long",
                         abs_int(remaining).convert_to<std::uint64_t>());
    const int partner = i <= k ? i + k : i - k;
    const bool x_type = i <= k;
    for (Int c = 0; c < abs_int(remaining); ++c) {
      if ((remaining > 0) == x_type) {
        // inverse of the +1 pair for x-type entries, forward pair for y-type
        b.emit(Move::r(i, partner, -1));
        b.emit(Move::l(i, partner, +1));
      } else {
        b.emit(Move::l(i, partner, -1));
        b.emit(Move::r(i, partner, +1));
      }
    }
  }
  b.note("paper-recipe", "central coordinate clearing", clear_start);

  Tuple standard;
  standard.group = g;
  standard.entries = g.distinguished_generators();
  return b.finish(t, standard, Certificate::Kind::nielsen);
}

namespace {

// Non-identity alphabet from a rewriting set, keeping one provenance per
// element.
std::vector<SchreierGenerator> peel_alphabet(const Group& g, const SchreierSet& s) {
  std::vector<SchreierGenerator> out;
  const GroupElement id = g.identity();
  for (const auto& gen : s.generators) {
    if (gen.element == id) continue;
    bool dup = false;
    for (const auto& have : out)
      if (have.element == gen.element) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(gen);
  }
  return out;
}

std::string describe_peel(const SchreierGenerator& s, int slot) {
  std::ostringstream os;
  os << "peel commutator generator (n1=" << s.n1 << ", n2=" << s.n2 << ") from entry "
     << slot;
  return os.str();
}

}  // namespace

Certificate ac_normalize_2gen_nilpotent(const Group& g, const Tuple& t,
                                        const std::pair<GroupElement, GroupElement>& basis) {
  if (!g.is_finite()) throw validation_error("requires a finite group");
  if (!(t.group == g)) throw validation_error("tuple group mismatch");
  if (t.size() != 2) throw validation_error("requires a pair");
  if (!is_class_c(g))
    throw validation_error("requires every maximal subgroup to be normal");
  const GroupElement &x = basis.first, &y = basis.second;
  if (!generates(g, std::vector<GroupElement>{x, y}))
    throw validation_error("basis pair does not generate");
  if (!generates(g, t)) throw validation_error("tuple does not generate");
  if (rank_and_weight(g).rank != 2) throw validation_error("requires a rank-2 group");

  Tuple basis_tuple;
  basis_tuple.group = g;
  basis_tuple.entries = {x, y};

  // Abelianized leg: a path downstairs exists iff a certificate exists.
  const auto& ab = g.abelianization();
  auto project_pair = [&](const Tuple& p) {
    Tuple q;
    q.group = ab.ab_group;
    for (const auto& e : p.entries) q.entries.push_back(ab.project(e));
    return q;
  };
  GraphQuery abq{ab.ab_group, 2, GraphMode::nielsen, {}};
  auto ab_leg = find_path(abq, project_pair(t), project_pair(basis_tuple));
  if (!ab_leg)
    throw no_certificate_error(
        "the tuples are not equivalent in the abelianization; no certificate exists");

  CertBuilder b(t, GraphMode::ac);
  const std::size_t lift_start = b.move_count();
  b.splice(ab_leg->moves());
  b.note("paper-recipe", "abelianized normalization, lifted", lift_start);

  const Subgroup derived = derived_subgroup(g);
  const GroupElement xhat = b.state().entries[0];
  GroupElement phi1 = g.mul(g.inv(x), xhat);
  GroupElement phi2 = g.mul(g.inv(y), b.state().entries[1]);
  if (!derived.contains(phi1) || !derived.contains(phi2))
    throw validation_error("internal: lifted tuple is not a commutator perturbation");

  // Second entry first, against the perturbed basis (xhat, y).
  if (!(phi2 == g.identity())) {
    SchreierSet shat = schreier_commutator_generators(g, xhat, y);
    auto alphabet = peel_alphabet(g, shat);
    std::vector<GroupElement> letters;
    for (const auto& a : alphabet) letters.push_back(a.element);
    auto word = express_over_alphabet(g, letters, phi2);
    // suffix values phi2 = s_1 ... s_L, peeled from the left
    std::vector<GroupElement> suffix(word.size() + 1, g.identity());
    for (std::size_t i = word.size(); i-- > 0;)
      suffix[i] = g.mul(alphabet[word[i]].element, suffix[i + 1]);
    for (std::size_t i = 0; i < word.size(); ++i) {
      const SchreierGenerator& s = alphabet[word[i]];
      Tuple expected = b.state();
      expected.entries[1] = g.mul(y, suffix[i + 1]);
      const Int n1 = s.n1, n2 = s.n2;
      GroupElement w = g.mul(g.mul(g.pow(y, -n2), g.pow(xhat, -n1)), g.inv(y));
      b.macro_step(describe_peel(s, 2), expected, [&] {
        b.emit(Move::inv(1));
        b.emit(Move::ac(1, w, +1));
        b.emit(Move::l(2, 1, +1));
        b.emit(Move::ac(1, w, -1));
        b.emit(Move::inv(1));
        b.emit(Move::ac(1, y, -1));  // conjugate by y^-1
        b.emit(Move::l(2, 1, +1));
        b.emit(Move::ac(1, y, +1));
      });
    }
  }

  // First entry, against the clean basis (x, y).
  if (!(phi1 == g.identity())) {
    SchreierSet s_set = schreier_commutator_generators(g, x, y);
    auto alphabet = peel_alphabet(g, s_set);
    std::vector<GroupElement> letters;
    for (const auto& a : alphabet) letters.push_back(a.element);
    auto word = express_over_alphabet(g, letters, phi1);
    std::vector<GroupElement> suffix(word.size() + 1, g.identity());
    for (std::size_t i = word.size(); i-- > 0;)
      suffix[i] = g.mul(alphabet[word[i]].element, suffix[i + 1]);
    for (std::size_t i = 0; i < word.size(); ++i) {
      const SchreierGenerator& s = alphabet[word[i]];
      Tuple expected = b.state();
      expected.entries[0] = g.mul(x, suffix[i + 1]);
      const Int n1 = s.n1, n2 = s.n2;
      const int dir = n2 >= 0 ? +1 : -1;
      b.macro_step(describe_peel(s, 1), expected, [&] {
        b.emit(Move::inv(2));
        b.emit(Move::ac(2, g.pow(x, n1 + 1), -1));
        for (Int c = 0; c < abs_int(n2); ++c) b.emit(Move::l(1, 2, dir));
        b.emit(Move::ac(2, g.pow(x, n1 + 1), +1));
        b.emit(Move::inv(2));
        b.emit(Move::ac(2, g.pow(x, n1 + 2), -1));
        for (Int c = 0; c < abs_int(n2); ++c) b.emit(Move::l(1, 2, dir));
        b.emit(Move::ac(2, g.pow(x, n1 + 2), +1));
      });
    }
  }

  return b.finish(t, basis_tuple, Certificate::Kind::ac);
}

namespace {

// First generating d-tuple of distinct non-Frattini elements in enumeration
// order; the deterministic normal form the lift-style certificates target.
std::vector<GroupElement> canonical_generating_tuple(const Group& g, int d) {
  const std::uint64_t count = g.element_count();
  Subgroup phi = frattini(g);
  std::vector<GroupElement> candidates;
  for (std::uint64_t i = 0; i < count; ++i) {
    GroupElement e = g.element_at(i);
    bool in_phi = false;
    for (const auto& p : phi.elements)
      if (p == e) {
        in_phi = true;
        break;
      }
    if (!in_phi) candidates.push_back(e);
  }
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    std::vector<GroupElement> tuple;
    for (int i = 0; i < d; ++i) tuple.push_back(candidates[pick[i]]);
    if (generates(g, tuple)) return tuple;
    int pos = d - 1;
    while (pos >= 0 && pick[pos] == (int)candidates.size() - d + pos) --pos;
    if (pos < 0) throw validation_error("internal: no generating tuple found");
    ++pick[pos];
    for (int i = pos + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }
}

// Shared tail of the lift certificates: clear the slots past `lead` by
// expressing their inverses in the leading entries, then repair each leading
// entry via the spare slot lead+1.
void clear_and_repair(const Group& g, CertBuilder& b, int lead,
                      const std::vector<GroupElement>& lead_targets) {
  const int n = b.state().size();
  auto lead_tuple = [&]() {
    Tuple lt;
    lt.group = g;
    lt.entries.assign(b.state().entries.begin(), b.state().entries.begin() + lead);
    return lt;
  };
  auto emit_word = [&](int slot, const GroupElement& value) {
    // multiply entry `slot` by a word in the leading entries evaluating to
    // `value`
    Word w = express_in_generators(g, lead_tuple(), value);
    for (const Letter& l : w.letters()) b.emit(Move::r(slot, l.gen, +1));
  };

  const std::size_t clear_start = b.move_count();
  for (int j = lead + 1; j <= n; ++j) {
    const GroupElement& e = b.state().entries[j - 1];
    if (e == g.identity()) continue;
    emit_word(j, g.inv(e));
  }
  b.note("paper-recipe", "clearing the surplus slots", clear_start);

  const std::size_t repair_start = b.move_count();
  const int spare = lead + 1;
  for (int i = 1; i <= lead; ++i) {
    const GroupElement junk = g.mul(g.inv(lead_targets[i - 1]), b.state().entries[i - 1]);
    if (junk == g.identity()) continue;
    emit_word(spare, junk);            // spare slot receives the perturbation
    b.emit(Move::r(i, spare, -1));     // divide it out of the leading entry
    emit_word(spare, g.inv(junk));     // and return the spare slot to 1
  }
  b.note("paper-recipe", "entry-wise correction via the spare slot", repair_start);
}

}  // namespace

Certificate frattini_lift(const Group& g, int n, const Tuple& t) {
  if (!g.is_finite()) throw validation_error("requires a finite group");
  if (!(t.group == g)) throw validation_error("tuple group mismatch");
  if (t.size() != n) throw validation_error("tuple length does not match n");
  if (!generates(g, t)) throw validation_error("tuple does not generate");
  const int d = rank_and_weight(g).rank;
  if (n < d + 1) throw validation_error("requires n >= rank + 1");

  Subgroup phi = frattini(g);
  QuotientGroup q = quotient_by(g, phi);

  GraphQuery qq{q.quotient, n, GraphMode::nielsen, {}};
  ComponentsReport qr = components(qq);
  if (qr.component_count > 1)
    throw validation_error("the Frattini quotient graph is disconnected at this length");

  std::vector<GroupElement> lead_targets = canonical_generating_tuple(g, d);
  Tuple target;
  target.group = g;
  target.entries = lead_targets;
  target.entries.resize(n, g.identity());

  auto project_tuple = [&](const Tuple& p) {
    Tuple out;
    out.group = q.quotient;
    for (const auto& e : p.entries) out.entries.push_back(q.project(e));
    return out;
  };
  auto leg = find_path(qq, project_tuple(t), project_tuple(target));
  if (!leg)
    throw validation_error("internal: connected quotient graph without a path");

  CertBuilder b(t, GraphMode::nielsen);
  const std::size_t lift_start = b.move_count();
  b.splice(leg->moves());
  b.note("paper-recipe", "Frattini quotient path, lifted", lift_start);

  clear_and_repair(g, b, d, lead_targets);
  return b.finish(t, target, Certificate::Kind::nielsen);
}

Certificate stabilize_certificate(const Group& g, const Certificate& cert,
                                  const Tuple& extended_source) {
  if (!g.is_finite()) throw validation_error("requires a finite group");
  if (!(cert.group() == g) || !(extended_source.group == g))
    throw validation_error("group mismatch");
  if (!is_class_c(g))
    throw validation_error("requires every maximal subgroup to be normal");
  const int n = cert.source().size();
  if (extended_source.size() != n + 1)
    throw validation_error("extended source must have one extra entry");
  if (!generates(g, extended_source))
    throw validation_error("extended source does not normally generate");

  const auto& ab = g.abelianization();
  auto project_tuple = [&](const std::vector<GroupElement>& es) {
    Tuple out;
    out.group = ab.ab_group;
    for (const auto& e : es) out.entries.push_back(ab.project(e));
    return out;
  };

  // dropping the extra entry must land in the certificate's component
  {
    GraphQuery low{ab.ab_group, n, GraphMode::nielsen, {}};
    std::vector<GroupElement> head(extended_source.entries.begin(),
                                   extended_source.entries.end() - 1);
    if (!generates(g, head))
      throw validation_error("the first n entries must generate");
    if (!find_path(low, project_tuple(head), project_tuple(cert.source().entries)))
      throw validation_error(
          "extended source does not restrict into the certificate's component");
  }

  Tuple target;
  target.group = g;
  target.entries = cert.target().entries;
  target.entries.push_back(g.identity());

  GraphQuery hq{ab.ab_group, n + 1, GraphMode::nielsen, {}};
  auto leg = find_path(hq, project_tuple(extended_source.entries),
                       project_tuple(target.entries));
  if (!leg)
    throw validation_error("internal: abelianized graph disconnected above the rank");

  CertBuilder b(extended_source, GraphMode::ac);
  const std::size_t lift_start = b.move_count();
  b.splice(leg->moves());
  b.note("paper-recipe", "abelianized normalization at length n+1, lifted", lift_start);

  clear_and_repair(g, b, n, cert.target().entries);
  return b.finish(extended_source, target, Certificate::Kind::ac);
}

bool is_tame_central(const CentralAutParams& p) {
  return p.lambda1 == p.mu2 && p.lambda2 == 0 && p.mu1 == 0;
}

GroupElement central_twist_power(long long k) {
  if (k < 0) throw validation_error("power must be >= 0");
  GroupSpec spec;
  spec.kind = GroupKind::free_nilpotent;
  spec.fn_rank = 2;
  spec.fn_class = 3;
  Group g = Group::from_spec(spec);
  const GroupElement gx = GroupElement{{Int(1), 0, 0, 0, 0}};
  const GroupElement gy = GroupElement{{Int(0), 1, 0, 0, 0}};
  const GroupElement gt = GroupElement{{Int(0), 0, 1, 0, 0}};
  const GroupElement gu = GroupElement{{Int(0), 0, 0, 1, 0}};
  const GroupElement gv = GroupElement{{Int(0), 0, 0, 0, 1}};
  const GroupElement image_x = g.mul(gx, gu);  // x -> x[y,x,x], y -> y
  auto twist = [&](const GroupElement& e) {
    GroupElement out = g.pow(image_x, e.coords[0]);
    out = g.mul(out, g.pow(gy, e.coords[1]));
    out = g.mul(out, g.pow(gt, e.coords[2]));
    out = g.mul(out, g.pow(gu, e.coords[3]));
    return g.mul(out, g.pow(gv, e.coords[4]));
  };
  GroupElement cur = gx;
  for (long long i = 0; i < k; ++i) cur = twist(cur);
  return cur;
}

std::pair<Word, Word> akbulut_kirby_pair(long long l) {
  if (l < 1) throw validation_error("the pair is defined for l >= 1");
  Word u(2, {Letter{1, +1}, Letter{2, +1}, Letter{1, +1}, Letter{2, -1}, Letter{1, -1},
             Letter{2, -1}});
  std::vector<Letter> vl;
  for (long long i = 0; i < l; ++i) vl.push_back(Letter{1, +1});
  for (long long i = 0; i < l + 1; ++i) vl.push_back(Letter{2, -1});
  return {free_reduce(u), free_reduce(Word(2, std::move(vl)))};
}

}  // namespace gentuple
