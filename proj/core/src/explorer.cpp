#include "gentuple/explorer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "finite_view.hpp"

namespace gentuple {

namespace {

using detail::FiniteView;
using detail::UnionFind;

// All per-query state needed to walk the implicit graph on index digits.
struct Explorer {
  GraphQuery q;
  ExplorerOptions opts;
  FiniteView view;
  int n = 0;
  std::uint64_t total = 0;  // |G|^n
  std::vector<std::uint32_t> conj_idx;
  std::string conjugator_note;
  bool skip_conjugation = false;  // abelian backend: conjugation is trivial
  bool nilpotent_shortcut = false;
  mutable std::map<std::vector<std::uint32_t>, bool> member_memo;

  explicit Explorer(const GraphQuery& query, const ExplorerOptions& options)
      : q(query), opts(options), view(detail::make_view(query.group)) {
    n = q.n;
    if (n < 1) throw validation_error("tuple length must be >= 1");
    total = 1;
    for (int i = 0; i < n; ++i) {
      if (total > opts.max_vertices / view.n)
        throw budget_error("candidate tuple count exceeds the vertex budget",
                           total * view.n);
      total *= view.n;
    }

    if (q.mode == GraphMode::ac) {
      if (q.group.kind() == GroupKind::abelian) {
        skip_conjugation = true;
        conjugator_note = "conjugation trivial (abelian group)";
      } else if (q.conjugators) {
        for (const auto& e : *q.conjugators) conj_idx.push_back(view.index(e));
        conjugator_note = "explicit conjugator set (" +
                          std::to_string(conj_idx.size()) + " elements)";
        if (!generates(q.group, *q.conjugators))
          conjugator_note += ", which does not generate: partition may be finer";
      } else if (view.n <= opts.full_conjugation_threshold) {
        for (std::uint32_t i = 0; i < view.n; ++i)
          if (i != view.id) conj_idx.push_back(i);
        conjugator_note = "full conjugation (all group elements)";
      } else {
        for (const auto& e : q.group.distinguished_generators())
          conj_idx.push_back(view.index(e));
        conjugator_note = "generating conjugator set (" +
                          std::to_string(conj_idx.size()) +
                          " distinguished generators); same components as full "
                          "conjugation";
      }
      nilpotent_shortcut =
          q.group.kind() != GroupKind::cayley_table || is_nilpotent(q.group);
    }
  }

  void decode(std::uint64_t key, std::vector<std::uint32_t>& digits) const {
    for (int i = 0; i < n; ++i) {
      digits[i] = (std::uint32_t)(key % view.n);
      key /= view.n;
    }
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t key = 0;
    for (int i = n - 1; i >= 0; --i) key = key * view.n + digits[i];
    return key;
  }

  bool is_vertex(const std::vector<std::uint32_t>& digits) const {
    std::vector<std::uint32_t> sorted = digits;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto it = member_memo.find(sorted);
    if (it != member_memo.end()) return it->second;
    bool ok;
    if (q.mode == GraphMode::nielsen || nilpotent_shortcut)
      ok = detail::closure(view, sorted).size() == view.n;
    else
      ok = detail::normal_closure(view, sorted).size() == view.n;
    member_memo.emplace(std::move(sorted), ok);
    return ok;
  }

  // Calls fn(image_digits) for every neighbor of `digits`.
  template <typename Fn>
  void for_each_neighbor(const std::vector<std::uint32_t>& digits, Fn&& fn) const {
    std::vector<std::uint32_t> img = digits;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int sign : {+1, -1}) {
          std::uint32_t b = sign > 0 ? digits[j] : view.inv(digits[j]);
          img = digits;
          img[i] = view.mul(digits[i], b);  // R
          fn(img);
          img = digits;
          img[i] = view.mul(b, digits[i]);  // L
          fn(img);
        }
      }
      img = digits;
      img[i] = view.inv(digits[i]);  // I
      fn(img);
    }
    if (q.mode == GraphMode::ac && !skip_conjugation) {
      for (int i = 0; i < n; ++i)
        for (auto s : conj_idx)
          for (int sign : {+1, -1}) {
            std::uint32_t c = sign > 0 ? s : view.inv(s);
            img = digits;
            img[i] = view.conj(digits[i], c);
            fn(img);
          }
    }
  }

  // The move objects corresponding to for_each_neighbor, in the same order.
  std::vector<Move> move_alphabet() const {
    std::vector<Move> moves;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int sign : {+1, -1}) {
          moves.push_back(Move::r(i, j, sign));
          moves.push_back(Move::l(i, j, sign));
        }
      }
      moves.push_back(Move::inv(i));
    }
    if (q.mode == GraphMode::ac && !skip_conjugation) {
      auto gens = q.group.distinguished_generators();
      for (int i = 1; i <= n; ++i)
        for (auto s : conj_idx)
          for (int sign : {+1, -1}) {
            // prefer a word over distinguished generators for portability
            int gen_pos = -1;
            for (std::size_t k = 0; k < gens.size(); ++k)
              if (view.index(gens[k]) == s) {
                gen_pos = (int)k;
                break;
              }
            if (gen_pos >= 0)
              moves.push_back(Move::ac(
                  i, Word((int)gens.size(), {Letter{gen_pos + 1, +1}}), sign));
            else
              moves.push_back(Move::ac(i, view.elems[s], sign));
          }
    }
    return moves;
  }

  Tuple tuple_of(const std::vector<std::uint32_t>& digits) const {
    Tuple t;
    t.group = q.group;
    for (int i = 0; i < n; ++i) t.entries.push_back(view.elems[digits[i]]);
    return t;
  }

  std::vector<std::uint32_t> digits_of(const Tuple& t) const {
    if (!(t.group == q.group)) throw validation_error("tuple group does not match query");
    if (t.size() != n) throw validation_error("tuple length does not match query");
    std::vector<std::uint32_t> digits(n);
    for (int i = 0; i < n; ++i) digits[i] = view.index(t.entries[i]);
    return digits;
  }
};

}  // namespace

std::uint64_t ComponentsReport::vertex_position(std::uint64_t key) const {
  auto it = std::lower_bound(vertex_keys.begin(), vertex_keys.end(), key);
  if (it == vertex_keys.end() || *it != key) return npos;
  return (std::uint64_t)(it - vertex_keys.begin());
}

std::uint64_t tuple_key(const GraphQuery& q, const Tuple& t) {
  Explorer ex(q, {});
  return ex.encode(ex.digits_of(t));
}

Tuple tuple_from_key(const GraphQuery& q, std::uint64_t key) {
  Explorer ex(q, {});
  std::vector<std::uint32_t> digits(ex.n);
  ex.decode(key, digits);
  return ex.tuple_of(digits);
}

ComponentsReport components(const GraphQuery& q, const ExplorerOptions& opts) {
  Explorer ex(q, opts);
  ComponentsReport report;
  report.conjugator_note = ex.conjugator_note;

  // vertex collection
  std::vector<std::uint32_t> digits(ex.n);
  for (std::uint64_t key = 0; key < ex.total; ++key) {
    ex.decode(key, digits);
    if (ex.is_vertex(digits)) report.vertex_keys.push_back(key);
  }
  report.vertex_count = report.vertex_keys.size();
  if (report.vertex_count == 0) {
    report.component_count = 0;
    return report;
  }

  const std::uint64_t v_count = report.vertex_count;
  UnionFind dsu(v_count);
  auto unite_neighbors = [&](std::uint64_t v, std::vector<std::pair<std::uint32_t, std::uint32_t>>* out) {
    std::vector<std::uint32_t> d(ex.n);
    ex.decode(report.vertex_keys[v], d);
    ex.for_each_neighbor(d, [&](const std::vector<std::uint32_t>& img) {
      std::uint64_t pos = report.vertex_position(ex.encode(img));
      if (pos == ComponentsReport::npos)
        throw validation_error("internal: move image left the vertex set");
      if (out)
        out->emplace_back((std::uint32_t)v, (std::uint32_t)pos);
      else
        dsu.unite((std::uint32_t)v, (std::uint32_t)pos);
    });
  };

  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    for (std::uint64_t v = 0; v < v_count; ++v) unite_neighbors(v, nullptr);
  } else {
    // Workers only generate edges; unions are applied serially. The final
    // partition does not depend on the schedule.
    const std::uint64_t block = 1 << 16;
    for (std::uint64_t start = 0; start < v_count; start += block) {
      const std::uint64_t end = std::min(v_count, start + block);
      std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> buf(workers);
      std::vector<std::thread> threads;
      for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w]() {
          for (std::uint64_t v = start + w; v < end; v += workers)
            unite_neighbors(v, &buf[w]);
        });
      for (auto& t : threads) t.join();
      for (const auto& pairs : buf)
        for (auto [a, b] : pairs) dsu.unite(a, b);
    }
  }

  // canonical representatives: digit-lexicographically least tuple per root
  std::vector<std::uint32_t> root_of(v_count);
  std::unordered_map<std::uint32_t, std::uint64_t> best;  // root -> vertex position
  auto digit_less = [&](std::uint64_t a, std::uint64_t b) {
    std::vector<std::uint32_t> da(ex.n), db(ex.n);
    ex.decode(report.vertex_keys[a], da);
    ex.decode(report.vertex_keys[b], db);
    return da < db;
  };
  for (std::uint64_t v = 0; v < v_count; ++v) {
    root_of[v] = dsu.find((std::uint32_t)v);
    auto [it, inserted] = best.emplace(root_of[v], v);
    if (!inserted && digit_less(v, it->second)) it->second = v;
  }
  std::vector<std::pair<std::uint64_t, std::uint32_t>> reps;  // (vertex pos, root)
  reps.reserve(best.size());
  for (auto [root, v] : best) reps.emplace_back(v, root);
  std::sort(reps.begin(), reps.end(),
            [&](const auto& a, const auto& b) { return digit_less(a.first, b.first); });
  std::unordered_map<std::uint32_t, std::uint32_t> comp_id;
  for (std::uint32_t i = 0; i < reps.size(); ++i) comp_id.emplace(reps[i].second, i);

  report.component_count = reps.size();
  report.representatives.reserve(reps.size());
  for (const auto& [v, root] : reps) {
    std::vector<std::uint32_t> d(ex.n);
    ex.decode(report.vertex_keys[v], d);
    report.representatives.push_back(ex.tuple_of(d));
  }
  report.component_of.resize(v_count);
  for (std::uint64_t v = 0; v < v_count; ++v) report.component_of[v] = comp_id[root_of[v]];
  return report;
}

std::optional<Certificate> find_path(const GraphQuery& q, const Tuple& from, const Tuple& to,
                                     const ExplorerOptions& opts) {
  Explorer ex(q, opts);
  auto from_digits = ex.digits_of(from);
  auto to_digits = ex.digits_of(to);
  if (!ex.is_vertex(from_digits) || !ex.is_vertex(to_digits))
    throw validation_error("find_path endpoints must be vertices of the queried graph");

  const Certificate::Kind kind =
      q.mode == GraphMode::nielsen ? Certificate::Kind::nielsen : Certificate::Kind::ac;
  const std::uint64_t from_key = ex.encode(from_digits);
  const std::uint64_t to_key = ex.encode(to_digits);
  if (from_key == to_key)
    return Certificate(from, to, MoveSequence{ex.n, {}}, kind);

  const auto alphabet = ex.move_alphabet();
  struct Origin {
    std::uint64_t parent;
    std::uint32_t move;
  };
  std::unordered_map<std::uint64_t, Origin> seen;
  seen.emplace(from_key, Origin{from_key, 0});
  std::deque<std::uint64_t> queue{from_key};
  bool found = false;
  while (!queue.empty() && !found) {
    std::uint64_t cur = queue.front();
    queue.pop_front();
    std::vector<std::uint32_t> d(ex.n);
    ex.decode(cur, d);
    std::uint32_t move_index = 0;
    ex.for_each_neighbor(d, [&](const std::vector<std::uint32_t>& img) {
      std::uint64_t key = ex.encode(img);
      if (!found && seen.emplace(key, Origin{cur, move_index}).second) {
        if (seen.size() > opts.max_vertices)
          throw budget_error("search frontier exceeds the vertex budget", seen.size());
        if (key == to_key)
          found = true;
        else
          queue.push_back(key);
      }
      ++move_index;
    });
  }
  if (!found) return std::nullopt;

  std::vector<Move> path;
  for (std::uint64_t cur = to_key; cur != from_key;) {
    const Origin& o = seen.at(cur);
    path.push_back(alphabet[o.move]);
    cur = o.parent;
  }
  std::reverse(path.begin(), path.end());
  return Certificate(from, to, MoveSequence{ex.n, std::move(path)}, kind);
}

PreimageReport verify_preimage_theorem(const Group& g, int n, const ExplorerOptions& opts) {
  PreimageReport report;
  GraphQuery gq{g, n, GraphMode::ac, {}};
  ComponentsReport gr = components(gq, opts);
  report.group_vertices = gr.vertex_count;
  report.group_components = gr.component_count;

  const auto& ab = g.abelianization();
  GraphQuery aq{ab.ab_group, n, GraphMode::ac, {}};
  ComponentsReport ar = components(aq, opts);
  report.ab_vertices = ar.vertex_count;
  report.ab_components = ar.component_count;

  // component id downstairs for every vertex upstairs
  Explorer gex(gq, opts);
  Explorer aex(aq, opts);
  std::vector<std::optional<std::uint32_t>> image_class(gr.component_count);
  bool holds = true;
  std::ostringstream detail;
  std::vector<std::uint32_t> digits(n);
  for (std::uint64_t v = 0; v < gr.vertex_count && holds; ++v) {
    gex.decode(gr.vertex_keys[v], digits);
    std::vector<std::uint32_t> ab_digits(n);
    for (int i = 0; i < n; ++i)
      ab_digits[i] =
          (std::uint32_t)ab.ab_group.element_index(ab.project(gex.view.elems[digits[i]]));
    std::uint64_t ab_pos = ar.vertex_position(aex.encode(ab_digits));
    if (ab_pos == ComponentsReport::npos) {
      holds = false;
      detail << "projected tuple is not a vertex downstairs";
      break;
    }
    std::uint32_t down = ar.component_of[ab_pos];
    std::uint32_t up = gr.component_of[v];
    if (!image_class[up])
      image_class[up] = down;
    else if (*image_class[up] != down) {
      holds = false;
      detail << "component " << up << " maps onto two abelianized components";
    }
  }
  if (holds) {
    std::set<std::uint32_t> used;
    for (std::uint64_t c = 0; c < gr.component_count; ++c) {
      if (!image_class[c]) continue;
      if (!used.insert(*image_class[c]).second) {
        holds = false;
        detail << "two components share the abelianized class " << *image_class[c];
        break;
      }
    }
  }
  report.holds = holds;
  if (holds) {
    detail << "components upstairs: " << gr.component_count
           << ", downstairs: " << ar.component_count
           << "; partition equals the abelianized pullback";
  }
  if (n < 2)
    detail << " [note: length 1 lies outside the stated hypotheses of the "
              "preimage results]";
  report.detail = detail.str();
  return report;
}

std::string export_graph(const GraphQuery& q, ExportFormat format,
                         const ExplorerOptions& opts) {
  Explorer ex(q, opts);
  std::vector<std::uint64_t> vertex_keys;
  std::vector<std::uint32_t> digits(ex.n);
  for (std::uint64_t key = 0; key < ex.total; ++key) {
    ex.decode(key, digits);
    if (ex.is_vertex(digits)) vertex_keys.push_back(key);
  }
  auto position = [&](std::uint64_t key) {
    return (std::uint64_t)(std::lower_bound(vertex_keys.begin(), vertex_keys.end(), key) -
                           vertex_keys.begin());
  };
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t v = 0; v < vertex_keys.size(); ++v) {
    ex.decode(vertex_keys[v], digits);
    ex.for_each_neighbor(digits, [&](const std::vector<std::uint32_t>& img) {
      std::uint64_t u = position(ex.encode(img));
      if (u != v) edges.emplace(std::min(v, u), std::max(v, u));
    });
  }
  std::vector<std::string> labels;
  labels.reserve(vertex_keys.size());
  for (std::uint64_t v = 0; v < vertex_keys.size(); ++v) {
    ex.decode(vertex_keys[v], digits);
    labels.push_back(tuple_to_string(ex.tuple_of(digits)));
  }
  if (format == ExportFormat::json) {
    nlohmann::json doc;
    doc["mode"] = q.mode == GraphMode::nielsen ? "nielsen" : "ac";
    doc["vertex_count"] = vertex_keys.size();
    doc["edge_count"] = edges.size();
    doc["vertices"] = labels;
    auto& es = doc["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges) es.push_back({a, b});
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "graph tuples {\n";
  for (std::uint64_t v = 0; v < labels.size(); ++v)
    os << "  v" << v << " [label=\"" << labels[v] << "\"];\n";
  for (const auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gentuple
