#include "gentuple/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "finite_view.hpp"

namespace gentuple {

namespace {

using detail::FiniteView;
using detail::closure;
using detail::commutator_span;
using detail::make_view;
using detail::normal_closure;

bool is_normal_set(const FiniteView& v, const std::vector<std::uint32_t>& sorted_members) {
  std::vector<char> in(v.n, 0);
  for (auto m : sorted_members) in[m] = 1;
  for (std::uint32_t x = 0; x < v.n; ++x)
    for (auto m : sorted_members)
      if (!in[v.conj(m, x)]) return false;
  return true;
}

Subgroup make_subgroup(const FiniteView& v, std::vector<std::uint32_t> members) {
  Subgroup s;
  s.group = v.g;
  s.is_normal = is_normal_set(v, members);
  s.elements.reserve(members.size());
  for (auto m : members) s.elements.push_back(v.elems[m]);
  return s;
}

// Every subgroup, discovered as closures of incrementally extended
// generating sets. Adequate at desk scale.
std::vector<std::vector<std::uint32_t>> all_subgroups(const FiniteView& v) {
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  auto trivial = closure(v, {});
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    auto h = queue.front();
    queue.pop_front();
    std::vector<char> in(v.n, 0);
    for (auto m : h) in[m] = 1;
    for (std::uint32_t x = 0; x < v.n; ++x) {
      if (in[x]) continue;
      auto gens = h;
      gens.push_back(x);
      auto k = closure(v, gens);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  return {seen.begin(), seen.end()};
}

// Exponent-matrix criterion: the rows (plus the torsion relations) must have
// all invariant factors equal to 1.
bool abelian_rows_generate(const AbelianForm& form, const std::vector<std::vector<Int>>& rows) {
  const std::size_t cols = form.torsion.size() + (std::size_t)form.free_rank;
  if (cols == 0) return true;  // trivial group
  IntMatrix m(rows.size() + form.torsion.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  for (std::size_t i = 0; i < form.torsion.size(); ++i)
    m.at(rows.size() + i, i) = form.torsion[i];
  if (m.rows() < cols) return false;
  auto snf = smith_normal_form(m);
  for (std::size_t i = 0; i < cols; ++i)
    if (snf.d.at(i, i) != 1) return false;
  return true;
}

std::vector<std::uint32_t> entry_indices(const FiniteView& v,
                                         const std::vector<GroupElement>& entries) {
  std::vector<std::uint32_t> idx;
  idx.reserve(entries.size());
  for (const auto& e : entries) idx.push_back(v.index(e));
  return idx;
}

}  // namespace

bool Subgroup::contains(const GroupElement& e) const {
  return std::binary_search(
      elements.begin(), elements.end(), e,
      [this](const GroupElement& a, const GroupElement& b) {
        return group.element_index(a) < group.element_index(b);
      });
}

bool generates(const Group& g, const std::vector<GroupElement>& entries) {
  switch (g.kind()) {
    case GroupKind::cayley_table: {
      auto v = make_view(g);
      return closure(v, entry_indices(v, entries)).size() == v.n;
    }
    case GroupKind::abelian: {
      AbelianForm form{g.spec().torsion, g.spec().free_rank};
      std::vector<std::vector<Int>> rows;
      for (const auto& e : entries) rows.push_back(e.coords);
      return abelian_rows_generate(form, rows);
    }
    case GroupKind::heisenberg:
    case GroupKind::free_nilpotent: {
      // Nilpotent: generating modulo the derived subgroup suffices.
      const auto& ab = g.abelianization();
      std::vector<std::vector<Int>> rows;
      for (const auto& e : entries) rows.push_back(ab.project(e).coords);
      return abelian_rows_generate(ab.form, rows);
    }
  }
  return false;
}

bool generates(const Group& g, const Tuple& t) { return generates(g, t.entries); }

bool normally_generates(const Group& g, const std::vector<GroupElement>& entries) {
  if (g.kind() != GroupKind::cayley_table) return generates(g, entries);
  auto v = make_view(g);
  return normal_closure(v, entry_indices(v, entries)).size() == v.n;
}

bool normally_generates(const Group& g, const Tuple& t) {
  return normally_generates(g, t.entries);
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  auto v = make_view(g);
  auto subs = all_subgroups(v);
  std::vector<Subgroup> out;
  for (const auto& h : subs) {
    if (h.size() == v.n) continue;
    bool maximal = true;
    for (const auto& k : subs) {
      if (k.size() == v.n || k.size() <= h.size()) continue;
      if (std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(make_subgroup(v, h));
  }
  return out;
}

Subgroup frattini(const Group& g) {
  auto v = make_view(g);
  auto subs = all_subgroups(v);
  std::vector<const std::vector<std::uint32_t>*> maximals;
  for (const auto& h : subs) {
    if (h.size() == v.n) continue;
    bool maximal = true;
    for (const auto& k : subs) {
      if (k.size() == v.n || k.size() <= h.size()) continue;
      if (std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) maximals.push_back(&h);
  }
  std::vector<std::uint32_t> inter;
  if (maximals.empty()) {  // no proper subgroup at all: Frattini is the group
    inter.resize(v.n);
    for (std::uint32_t i = 0; i < v.n; ++i) inter[i] = i;
  } else {
    inter = *maximals.front();
    for (std::size_t i = 1; i < maximals.size(); ++i) {
      std::vector<std::uint32_t> next;
      std::set_intersection(inter.begin(), inter.end(), maximals[i]->begin(),
                            maximals[i]->end(), std::back_inserter(next));
      inter = std::move(next);
    }
  }
  return make_subgroup(v, inter);
}

Subgroup derived_subgroup(const Group& g) {
  auto v = make_view(g);
  std::vector<std::uint32_t> whole(v.n);
  for (std::uint32_t i = 0; i < v.n; ++i) whole[i] = i;
  return make_subgroup(v, commutator_span(v, whole, whole));
}

bool is_nilpotent(const Group& g) {
  auto v = make_view(g);
  std::vector<std::uint32_t> whole(v.n);
  for (std::uint32_t i = 0; i < v.n; ++i) whole[i] = i;
  auto gamma = commutator_span(v, whole, whole);
  for (;;) {
    if (gamma.size() == 1) return true;
    auto next = commutator_span(v, gamma, whole);
    if (next.size() == gamma.size()) return false;  // series stalled
    gamma = std::move(next);
  }
}

bool is_class_c(const Group& g) {
  for (const auto& m : maximal_subgroups(g))
    if (!m.is_normal) return false;
  return true;
}

namespace {

// Increasing-length search over index combinations, skipping non-generators
// (elements of the Frattini subgroup never help either kind of search).
int minimal_tuple_size(const FiniteView& v, const std::vector<std::uint32_t>& candidates,
                       const std::function<bool(const std::vector<std::uint32_t>&)>& spans) {
  if (spans({})) return 0;
  for (int n = 1; n <= (int)candidates.size(); ++n) {
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
      std::vector<std::uint32_t> tuple(n);
      for (int i = 0; i < n; ++i) tuple[i] = candidates[pick[i]];
      if (spans(tuple)) return n;
      int pos = n - 1;
      while (pos >= 0 && pick[pos] == (int)candidates.size() - n + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < n; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  throw validation_error("group has no generating tuple over its own elements");
}

}  // namespace

RankWeight rank_and_weight(const Group& g) {
  auto v = make_view(g);
  Subgroup phi = frattini(g);
  std::vector<char> in_phi(v.n, 0);
  for (const auto& e : phi.elements) in_phi[v.index(e)] = 1;
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t i = 0; i < v.n; ++i)
    if (!in_phi[i]) candidates.push_back(i);

  RankWeight rw;
  rw.rank = minimal_tuple_size(v, candidates, [&](const std::vector<std::uint32_t>& t) {
    return closure(v, t).size() == v.n;
  });
  if (v.n == 1) {
    rw.rank = rw.weight = 0;
    return rw;
  }
  rw.weight = minimal_tuple_size(v, candidates, [&](const std::vector<std::uint32_t>& t) {
    return normal_closure(v, t).size() == v.n;
  });
  return rw;
}

namespace {

long long order_in_abelianization(const Group& g, const GroupElement& e) {
  const auto& ab = g.abelianization();
  auto o = ab.ab_group.element_order(ab.project(e));
  if (!o) throw validation_error("element has infinite abelianized order");
  return to_ll(*o);
}

std::vector<SchreierGenerator> schreier_range(const Group& g, const GroupElement& x,
                                              const GroupElement& y, long long a_from,
                                              long long a_to, long long b_from,
                                              long long b_to) {
  std::vector<SchreierGenerator> out;
  for (long long n1 = a_from; n1 < a_to; ++n1)
    for (long long n2 = b_from; n2 < b_to; ++n2) {
      GroupElement lead = g.mul(g.pow(x, n1), g.pow(y, n2));
      GroupElement tail = g.mul(g.pow(x, n1 + 1), g.pow(y, n2));
      SchreierGenerator gen;
      gen.element = g.mul(g.mul(lead, x), g.inv(tail));
      gen.n1 = n1;
      gen.n2 = n2;
      gen.slot = 1;
      out.push_back(std::move(gen));
    }
  return out;
}

}  // namespace

SchreierSet schreier_commutator_generators(const Group& g, const GroupElement& x,
                                           const GroupElement& y, SchreierRange range) {
  if (!generates(g, std::vector<GroupElement>{x, y}))
    throw validation_error("pair does not generate the group");
  auto v = make_view(g);
  std::vector<std::uint32_t> whole(v.n);
  for (std::uint32_t i = 0; i < v.n; ++i) whole[i] = i;
  const auto derived = commutator_span(v, whole, whole);

  auto build = [&](SchreierRange r) {
    SchreierSet s;
    s.x = x;
    s.y = y;
    s.range = r;
    long long ax = 0, by = 0;
    switch (r) {
      case SchreierRange::abelianization:
        ax = order_in_abelianization(g, x);
        by = order_in_abelianization(g, y);
        s.generators = schreier_range(g, x, y, 0, ax, 0, by);
        break;
      case SchreierRange::group_order:
        ax = to_ll(*g.element_order(x));
        by = to_ll(*g.element_order(y));
        s.generators = schreier_range(g, x, y, 0, ax, 0, by);
        break;
      case SchreierRange::symmetric:
        ax = to_ll(*g.element_order(x));
        by = to_ll(*g.element_order(y));
        s.generators = schreier_range(g, x, y, -(ax - 1), ax, -(by - 1), by);
        break;
    }
    return s;
  };

  auto spans_derived = [&](const SchreierSet& s) {
    std::vector<std::uint32_t> gens;
    for (const auto& gen : s.generators) gens.push_back(v.index(gen.element));
    auto span = closure(v, gens);
    if (span.size() != derived.size()) return false;
    return std::equal(span.begin(), span.end(), derived.begin());
  };

  // The small range usually suffices; the full group-order range is the
  // complete rewriting set and always does.
  for (SchreierRange r : {range, SchreierRange::group_order, SchreierRange::symmetric}) {
    SchreierSet s = build(r);
    if (spans_derived(s)) return s;
    if (range != SchreierRange::abelianization) break;
  }
  throw validation_error("commutator generators failed to span the derived subgroup");
}

std::vector<int> express_over_alphabet(const Group& g,
                                       const std::vector<GroupElement>& alphabet,
                                       const GroupElement& target) {
  auto v = make_view(g);
  const std::uint32_t t = v.index(target);
  if (t == v.id) return {};
  std::vector<int> parent_letter(v.n, -1);
  std::vector<std::uint32_t> parent(v.n, 0);
  std::vector<char> visited(v.n, 0);
  std::vector<std::uint32_t> letters;
  for (const auto& a : alphabet) letters.push_back(v.index(a));
  std::deque<std::uint32_t> queue{v.id};
  visited[v.id] = 1;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < letters.size(); ++l) {
      auto y = v.mul(x, letters[l]);
      if (visited[y]) continue;
      visited[y] = 1;
      parent[y] = x;
      parent_letter[y] = (int)l;
      if (y == t) {
        std::vector<int> word;
        for (std::uint32_t cur = t; cur != v.id; cur = parent[cur])
          word.push_back(parent_letter[cur]);
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(y);
    }
  }
  throw validation_error("target is not reachable over the given alphabet");
}

Word express_in_generators(const Group& g, const Tuple& t, const GroupElement& target) {
  auto letters = express_over_alphabet(g, t.entries, target);
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (int l : letters) ls.push_back(Letter{l + 1, +1});
  Word w(t.size(), std::move(ls));
  if (!(evaluate_word(w, g, t.entries) == target))
    throw validation_error("internal: expressed word fails to evaluate to the target");
  return w;
}

Group to_cayley_table(const Group& g) {
  auto v = make_view(g);
  GroupSpec spec;
  spec.kind = GroupKind::cayley_table;
  spec.labels.reserve(v.n);
  for (std::uint32_t i = 0; i < v.n; ++i)
    spec.labels.push_back(g.element_to_string(v.elems[i]));
  spec.table.assign(v.n, std::vector<int>(v.n));
  for (std::uint32_t a = 0; a < v.n; ++a)
    for (std::uint32_t b = 0; b < v.n; ++b) spec.table[a][b] = (int)v.mul(a, b);
  auto gens = g.distinguished_generators();
  if (gens.empty()) gens.push_back(g.identity());
  for (const auto& e : gens) spec.generator_labels.push_back(g.element_to_string(e));
  return Group::from_spec(spec);
}

QuotientGroup quotient_by(const Group& g, const Subgroup& normal) {
  if (!normal.is_normal) throw validation_error("quotient requires a normal subgroup");
  auto v = make_view(g);
  std::vector<char> in(v.n, 0);
  for (const auto& e : normal.elements) in[v.index(e)] = 1;
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < v.n; ++i)
    if (in[i]) members.push_back(i);

  std::vector<std::uint32_t> coset_rep(v.n);
  for (std::uint32_t x = 0; x < v.n; ++x) {
    std::uint32_t best = UINT32_MAX;
    for (auto d : members) best = std::min(best, v.mul(x, d));
    coset_rep[x] = best;
  }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < v.n; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::vector<std::uint32_t> rep_pos(v.n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_pos[reps[i]] = (std::uint32_t)i;

  GroupSpec spec;
  spec.kind = GroupKind::cayley_table;
  for (auto r : reps) spec.labels.push_back(g.element_to_string(v.elems[r]));
  spec.table.assign(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      spec.table[a][b] = (int)rep_pos[coset_rep[v.mul(reps[a], reps[b])]];
  std::set<std::string> gen_labels;
  for (const auto& e : g.distinguished_generators())
    gen_labels.insert(g.element_to_string(v.elems[coset_rep[v.index(e)]]));
  if (gen_labels.empty()) gen_labels.insert(spec.labels[rep_pos[coset_rep[v.id]]]);
  spec.generator_labels.assign(gen_labels.begin(), gen_labels.end());

  QuotientGroup q;
  q.quotient = Group::from_spec(spec);

  auto rep_map = std::make_shared<std::vector<std::uint32_t>>(v.n);
  for (std::uint32_t x = 0; x < v.n; ++x) (*rep_map)[x] = rep_pos[coset_rep[x]];
  Group src = g;
  q.project = [rep_map, src](const GroupElement& e) {
    return GroupElement{{Int((*rep_map)[(std::size_t)src.element_index(e)])}};
  };
  return q;
}

}  // namespace gentuple
