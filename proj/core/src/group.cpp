#include "gentuple/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gentuple {

bool GroupElement::operator<(const GroupElement& o) const {
  if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
  }
  return false;
}

bool Tuple::lex_less(const Tuple& o) const {
  if (entries.size() != o.entries.size()) return entries.size() < o.entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == o.entries[i]) continue;
    return entries[i] < o.entries[i];
  }
  return false;
}

class GroupImpl {
 public:
  GroupSpec spec;

  // cayley_table
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::uint32_t> inverse;
  std::uint32_t identity_index = 0;
  std::map<std::string, std::uint32_t> label_index;
  std::vector<std::uint32_t> generator_indices;

  mutable std::once_flag ab_once;
  mutable std::unique_ptr<Abelianization> ab;

  explicit GroupImpl(const GroupSpec& s) : spec(s) {
    switch (spec.kind) {
      case GroupKind::cayley_table:
        validate_cayley();
        break;
      case GroupKind::abelian: {
        AbelianForm f{spec.torsion, spec.free_rank};
        f.validate();
        break;
      }
      case GroupKind::heisenberg:
        if (spec.heis_k < 1) throw validation_error("heisenberg k must be >= 1");
        if (spec.modulus && *spec.modulus < 2)
          throw validation_error("heisenberg modulus must be >= 2");
        break;
      case GroupKind::free_nilpotent:
        if (spec.fn_rank != 2)
          throw validation_error("free nilpotent backend supports rank 2 only");
        if (spec.fn_class < 1 || spec.fn_class > 3)
          throw validation_error("free nilpotent class must be 1, 2 or 3");
        break;
    }
  }

  std::size_t coord_size() const {
    switch (spec.kind) {
      case GroupKind::cayley_table: return 1;
      case GroupKind::abelian: return spec.torsion.size() + spec.free_rank;
      case GroupKind::heisenberg: return 2 * (std::size_t)spec.heis_k + 1;
      case GroupKind::free_nilpotent: return 5;
    }
    return 0;
  }

 private:
  void validate_cayley() {
    const std::size_t n = spec.labels.size();
    if (n == 0) throw validation_error("cayley table needs at least one element");
    if (spec.table.size() != n) throw validation_error("cayley table must be square");
    for (std::size_t i = 0; i < n; ++i) {
      if (spec.labels[i].empty()) throw validation_error("empty element label");
      if (!label_index.emplace(spec.labels[i], (std::uint32_t)i).second)
        throw validation_error("duplicate element label: " + spec.labels[i]);
    }
    table.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      if (spec.table[i].size() != n) throw validation_error("cayley table must be square");
      table[i].reserve(n);
      for (int v : spec.table[i]) {
        if (v < 0 || (std::size_t)v >= n)
          throw validation_error("cayley table entry out of range");
        table[i].push_back((std::uint32_t)v);
      }
    }
    // identity
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = table[e][x] == x && table[x][e] == x;
      if (ok) {
        identity_index = (std::uint32_t)e;
        found = true;
      }
    }
    if (!found) throw validation_error("cayley table has no identity element");
    // inverses
    inverse.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = false;
      for (std::size_t y = 0; y < n; ++y) {
        if (table[x][y] == identity_index && table[y][x] == identity_index) {
          inverse[x] = (std::uint32_t)y;
          ok = true;
          break;
        }
      }
      if (!ok)
        throw validation_error("element has no inverse: " + spec.labels[x]);
    }
    // associativity over all triples
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw validation_error("associativity fails at triple (" + spec.labels[a] + ", " +
                                   spec.labels[b] + ", " + spec.labels[c] + ")");
    // distinguished generators must exist and generate
    if (spec.generator_labels.empty())
      throw validation_error("cayley table spec requires a generators list");
    for (const auto& l : spec.generator_labels) {
      auto it = label_index.find(l);
      if (it == label_index.end())
        throw validation_error("generator label not in element list: " + l);
      generator_indices.push_back(it->second);
    }
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> work{identity_index};
    in[identity_index] = 1;
    while (!work.empty()) {
      auto x = work.back();
      work.pop_back();
      for (auto g : generator_indices) {
        auto y = table[x][g];
        if (!in[y]) {
          in[y] = 1;
          work.push_back(y);
        }
      }
    }
    if ((std::size_t)std::count(in.begin(), in.end(), 1) != n)
      throw validation_error("distinguished generators do not generate the group");
  }
};

namespace {

// ----- free nilpotent collection -------------------------------------------
//
// Normal form x^a y^b t^e u^f v^g over the ordered basis
//   x, y, t = [y,x], u = [y,x,x], v = [y,x,y],
// with u, v central and every commutator of weight > 3 trivial. Products are
// computed by collecting the right factor into the left normal form, one
// basis letter at a time:
//   t^e x^s = x^s t^e u^{es}
//   t^e y^s = y^s t^e v^{es}
//   y^b x^s = x^s y^b t^{sb} u^{b(1-s)/2} v^{s b(b-1)/2}   (s = +-1)
// Folding |n| single-letter x steps gives, for any integer n,
//   de = n b,  df = e n + b n(n-1)/2,  dg = n b(b-1)/2
// (the u corrections from negative letters are absorbed by n(n-1)/2).

struct Malcev {
  Int a, b, e, f, g;
};

void fn_truncate(Malcev& m, int cls) {
  if (cls <= 2) m.f = m.g = 0;
  if (cls <= 1) m.e = 0;
}

void fn_append_x(Malcev& m, const Int& n, int cls) {
  if (n == 0) return;
  m.f += m.e * n + m.b * (n * (n - 1) / 2);
  m.g += n * (m.b * (m.b - 1) / 2);
  m.e += n * m.b;
  m.a += n;
  fn_truncate(m, cls);
}

void fn_append_y(Malcev& m, const Int& n, int cls) {
  if (n == 0) return;
  m.g += m.e * n;
  m.b += n;
  fn_truncate(m, cls);
}

Malcev fn_mul(const Malcev& l, const Malcev& r, int cls) {
  Malcev m = l;
  fn_append_x(m, r.a, cls);
  fn_append_y(m, r.b, cls);
  m.e += r.e;
  m.f += r.f;
  m.g += r.g;
  fn_truncate(m, cls);
  return m;
}

Malcev fn_inv(const Malcev& a, int cls) {
  Malcev m{0, 0, -a.e, -a.f, -a.g};
  fn_truncate(m, cls);
  fn_append_y(m, -a.b, cls);
  fn_append_x(m, -a.a, cls);
  return m;
}

Malcev to_malcev(const GroupElement& el) {
  return Malcev{el.coords[0], el.coords[1], el.coords[2], el.coords[3], el.coords[4]};
}

GroupElement from_malcev(const Malcev& m) {
  return GroupElement{{m.a, m.b, m.e, m.f, m.g}};
}

}  // namespace

Group Group::from_spec(const GroupSpec& spec) {
  Group g;
  g.impl_ = std::make_shared<const GroupImpl>(spec);
  return g;
}

const GroupImpl& Group::impl() const {
  if (!impl_) throw validation_error("use of an empty group handle");
  return *impl_;
}

GroupKind Group::kind() const { return impl().spec.kind; }
const GroupSpec& Group::spec() const { return impl().spec; }

GroupElement Group::identity() const {
  const GroupImpl& im = impl();
  if (im.spec.kind == GroupKind::cayley_table)
    return GroupElement{{Int(im.identity_index)}};
  return GroupElement{std::vector<Int>(im.coord_size(), Int(0))};
}

GroupElement Group::canonicalize(std::vector<Int> coords) const {
  const GroupImpl& im = impl();
  if (coords.size() != im.coord_size())
    throw validation_error("element coordinate count does not match backend");
  switch (im.spec.kind) {
    case GroupKind::cayley_table:
      if (coords[0] < 0 || coords[0] >= Int(im.spec.labels.size()))
        throw validation_error("cayley element index out of range");
      break;
    case GroupKind::abelian:
      for (std::size_t i = 0; i < im.spec.torsion.size(); ++i)
        coords[i] = mod_floor(coords[i], im.spec.torsion[i]);
      break;
    case GroupKind::heisenberg:
      if (im.spec.modulus)
        for (Int& c : coords) c = mod_floor(c, *im.spec.modulus);
      break;
    case GroupKind::free_nilpotent: {
      Malcev m = to_malcev(GroupElement{coords});
      fn_truncate(m, im.spec.fn_class);
      return from_malcev(m);
    }
  }
  return GroupElement{std::move(coords)};
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  const GroupImpl& im = impl();
  if (a.coords.size() != im.coord_size() || b.coords.size() != im.coord_size())
    throw validation_error("element does not belong to this backend");
  switch (im.spec.kind) {
    case GroupKind::cayley_table: {
      auto i = (std::uint32_t)to_ll(a.coords[0]);
      auto j = (std::uint32_t)to_ll(b.coords[0]);
      return GroupElement{{Int(im.table[i][j])}};
    }
    case GroupKind::abelian: {
      std::vector<Int> c(im.coord_size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
      return canonicalize(std::move(c));
    }
    case GroupKind::heisenberg: {
      const int k = im.spec.heis_k;
      std::vector<Int> c(2 * k + 1);
      Int cross = 0;
      for (int i = 0; i < k; ++i) {
        c[i] = a.coords[i] + b.coords[i];
        c[k + i] = a.coords[k + i] + b.coords[k + i];
        cross += a.coords[i] * b.coords[k + i];
      }
      c[2 * k] = a.coords[2 * k] + b.coords[2 * k] + cross;
      return canonicalize(std::move(c));
    }
    case GroupKind::free_nilpotent:
      return from_malcev(fn_mul(to_malcev(a), to_malcev(b), im.spec.fn_class));
  }
  throw validation_error("unreachable");
}

GroupElement Group::inv(const GroupElement& a) const {
  const GroupImpl& im = impl();
  if (a.coords.size() != im.coord_size())
    throw validation_error("element does not belong to this backend");
  switch (im.spec.kind) {
    case GroupKind::cayley_table: {
      auto i = (std::uint32_t)to_ll(a.coords[0]);
      return GroupElement{{Int(im.inverse[i])}};
    }
    case GroupKind::abelian: {
      std::vector<Int> c(im.coord_size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
      return canonicalize(std::move(c));
    }
    case GroupKind::heisenberg: {
      const int k = im.spec.heis_k;
      std::vector<Int> c(2 * k + 1);
      Int dot = 0;
      for (int i = 0; i < k; ++i) {
        c[i] = -a.coords[i];
        c[k + i] = -a.coords[k + i];
        dot += a.coords[i] * a.coords[k + i];
      }
      c[2 * k] = dot - a.coords[2 * k];
      return canonicalize(std::move(c));
    }
    case GroupKind::free_nilpotent:
      return from_malcev(fn_inv(to_malcev(a), im.spec.fn_class));
  }
  throw validation_error("unreachable");
}

GroupElement Group::pow(const GroupElement& a, const Int& e) const {
  GroupElement base = e < 0 ? inv(a) : a;
  Int n = abs_int(e);
  GroupElement acc = identity();
  while (n > 0) {
    if ((n & 1) != 0) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

GroupElement Group::conj(const GroupElement& a, const GroupElement& s) const {
  return mul(mul(inv(s), a), s);
}

GroupElement Group::commutator(const GroupElement& a, const GroupElement& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::optional<Int> Group::element_order(const GroupElement& a) const {
  const GroupImpl& im = impl();
  const GroupElement id = identity();
  if (a == id) return Int(1);
  switch (im.spec.kind) {
    case GroupKind::abelian: {
      const std::size_t r = im.spec.torsion.size();
      for (std::size_t i = r; i < im.coord_size(); ++i)
        if (a.coords[i] != 0) return std::nullopt;
      Int ord = 1;
      for (std::size_t i = 0; i < r; ++i) {
        Int o = im.spec.torsion[i] / gcd_int(a.coords[i], im.spec.torsion[i]);
        ord = ord / gcd_int(ord, o) * o;
      }
      return ord;
    }
    case GroupKind::heisenberg:
      if (!im.spec.modulus) return std::nullopt;  // torsion-free
      break;
    case GroupKind::free_nilpotent:
      return std::nullopt;  // torsion-free
    case GroupKind::cayley_table:
      break;
  }
  GroupElement x = a;
  Int n = 1;
  const Int cap = order();
  while (x != id) {
    x = mul(x, a);
    ++n;
    if (n > cap) throw validation_error("order computation exceeded group order");
  }
  return n;
}

bool Group::is_finite() const {
  const GroupImpl& im = impl();
  switch (im.spec.kind) {
    case GroupKind::cayley_table: return true;
    case GroupKind::abelian: return im.spec.free_rank == 0;
    case GroupKind::heisenberg: return im.spec.modulus.has_value();
    case GroupKind::free_nilpotent: return false;
  }
  return false;
}

Int Group::order() const {
  const GroupImpl& im = impl();
  if (!is_finite()) throw validation_error("group is infinite");
  switch (im.spec.kind) {
    case GroupKind::cayley_table: return Int(im.spec.labels.size());
    case GroupKind::abelian: {
      Int n = 1;
      for (const Int& m : im.spec.torsion) n *= m;
      return n;
    }
    case GroupKind::heisenberg: {
      Int n = 1;
      for (int i = 0; i < 2 * im.spec.heis_k + 1; ++i) n *= *im.spec.modulus;
      return n;
    }
    default: break;
  }
  throw validation_error("unreachable");
}

std::uint64_t Group::element_count() const {
  Int n = order();
  if (n > Int(UINT64_MAX >> 1)) throw budget_error("group too large to enumerate", UINT64_MAX);
  return n.convert_to<std::uint64_t>();
}

GroupElement Group::element_at(std::uint64_t index) const {
  const GroupImpl& im = impl();
  switch (im.spec.kind) {
    case GroupKind::cayley_table:
      return GroupElement{{Int(index)}};
    case GroupKind::abelian: {
      std::vector<Int> c(im.coord_size());
      std::uint64_t rest = index;
      for (std::size_t i = 0; i < im.spec.torsion.size(); ++i) {
        auto m = im.spec.torsion[i].convert_to<std::uint64_t>();
        c[i] = Int(rest % m);
        rest /= m;
      }
      return GroupElement{std::move(c)};
    }
    case GroupKind::heisenberg: {
      std::vector<Int> c(im.coord_size());
      auto m = im.spec.modulus->convert_to<std::uint64_t>();
      std::uint64_t rest = index;
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = Int(rest % m);
        rest /= m;
      }
      return GroupElement{std::move(c)};
    }
    default:
      throw validation_error("group is not enumerable");
  }
}

std::uint64_t Group::element_index(const GroupElement& a) const {
  const GroupImpl& im = impl();
  switch (im.spec.kind) {
    case GroupKind::cayley_table:
      return a.coords[0].convert_to<std::uint64_t>();
    case GroupKind::abelian: {
      std::uint64_t idx = 0, stride = 1;
      for (std::size_t i = 0; i < im.spec.torsion.size(); ++i) {
        idx += a.coords[i].convert_to<std::uint64_t>() * stride;
        stride *= im.spec.torsion[i].convert_to<std::uint64_t>();
      }
      return idx;
    }
    case GroupKind::heisenberg: {
      auto m = im.spec.modulus->convert_to<std::uint64_t>();
      std::uint64_t idx = 0, stride = 1;
      for (std::size_t i = 0; i < a.coords.size(); ++i) {
        idx += a.coords[i].convert_to<std::uint64_t>() * stride;
        stride *= m;
      }
      return idx;
    }
    default:
      throw validation_error("group is not enumerable");
  }
}

std::vector<GroupElement> Group::distinguished_generators() const {
  const GroupImpl& im = impl();
  std::vector<GroupElement> out;
  switch (im.spec.kind) {
    case GroupKind::cayley_table:
      for (auto i : im.generator_indices) out.push_back(GroupElement{{Int(i)}});
      break;
    case GroupKind::abelian:
      for (std::size_t i = 0; i < im.coord_size(); ++i) {
        std::vector<Int> c(im.coord_size(), Int(0));
        c[i] = 1;
        out.push_back(GroupElement{std::move(c)});
      }
      break;
    case GroupKind::heisenberg:
      for (int i = 0; i < 2 * im.spec.heis_k; ++i) {
        std::vector<Int> c(im.coord_size(), Int(0));
        c[i] = 1;
        out.push_back(GroupElement{std::move(c)});
      }
      break;
    case GroupKind::free_nilpotent:
      out.push_back(GroupElement{{Int(1), 0, 0, 0, 0}});
      out.push_back(GroupElement{{Int(0), 1, 0, 0, 0}});
      break;
  }
  return out;
}

std::string Group::element_to_string(const GroupElement& a) const {
  const GroupImpl& im = impl();
  if (im.spec.kind == GroupKind::cayley_table)
    return im.spec.labels[(std::size_t)to_ll(a.coords[0])];
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) os << ',';
    os << a.coords[i].str();
  }
  os << ')';
  return os.str();
}

GroupElement Group::element_from_label(const std::string& label) const {
  const GroupImpl& im = impl();
  if (im.spec.kind != GroupKind::cayley_table)
    throw validation_error("labels only apply to cayley table groups");
  auto it = im.label_index.find(label);
  if (it == im.label_index.end()) throw validation_error("unknown element label: " + label);
  return GroupElement{{Int(it->second)}};
}

const Abelianization& Group::abelianization() const {
  const GroupImpl& im = impl();
  std::call_once(im.ab_once, [&]() {
    auto ab = std::make_unique<Abelianization>();
    switch (im.spec.kind) {
      case GroupKind::abelian: {
        ab->form = AbelianForm{im.spec.torsion, im.spec.free_rank};
        GroupSpec s = im.spec;
        ab->ab_group = Group::from_spec(s);
        ab->project = [](const GroupElement& g) { return g; };
        break;
      }
      case GroupKind::heisenberg: {
        const int k = im.spec.heis_k;
        if (im.spec.modulus) {
          ab->form.torsion.assign(2 * k, *im.spec.modulus);
          ab->form.free_rank = 0;
        } else {
          ab->form.free_rank = 2 * k;
        }
        GroupSpec s;
        s.kind = GroupKind::abelian;
        s.torsion = ab->form.torsion;
        s.free_rank = ab->form.free_rank;
        ab->ab_group = Group::from_spec(s);
        ab->project = [k](const GroupElement& g) {
          return GroupElement{
              std::vector<Int>(g.coords.begin(), g.coords.begin() + 2 * k)};
        };
        break;
      }
      case GroupKind::free_nilpotent: {
        ab->form.free_rank = 2;
        GroupSpec s;
        s.kind = GroupKind::abelian;
        s.free_rank = 2;
        ab->ab_group = Group::from_spec(s);
        ab->project = [](const GroupElement& g) {
          return GroupElement{{g.coords[0], g.coords[1]}};
        };
        break;
      }
      case GroupKind::cayley_table: {
        const std::size_t n = im.spec.labels.size();
        // derived subgroup: closure of all commutators
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> seeds;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            std::uint32_t c =
                im.table[im.table[im.inverse[a]][im.inverse[b]]][im.table[a][b]];
            if (!seen[c]) {
              seen[c] = 1;
              seeds.push_back(c);
            }
          }
        std::vector<char> mark(n, 0);
        mark[im.identity_index] = 1;
        std::vector<std::uint32_t> members{im.identity_index};
        for (std::size_t head = 0; head < members.size(); ++head)
          for (auto s : seeds) {
            auto y = im.table[members[head]][s];
            if (!mark[y]) {
              mark[y] = 1;
              members.push_back(y);
            }
          }
        // coset representative: minimum index within g * D
        std::vector<std::uint32_t> coset_rep(n);
        for (std::size_t g = 0; g < n; ++g) {
          std::uint32_t best = UINT32_MAX;
          for (auto d : members) best = std::min(best, im.table[g][d]);
          coset_rep[g] = best;
        }
        // quotient on generator images, presented via its Cayley graph
        const auto& gens = im.generator_indices;
        const std::size_t k = gens.size();
        std::vector<std::vector<std::uint32_t>> qtable(n);  // sparse: rows only for reps
        std::vector<std::uint32_t> qgens(k);
        for (std::size_t j = 0; j < k; ++j) qgens[j] = coset_rep[gens[j]];
        for (std::size_t g = 0; g < n; ++g) {
          if (coset_rep[g] != g) continue;
          qtable[g].assign(n, 0);
          for (std::size_t h = 0; h < n; ++h) qtable[g][h] = coset_rep[im.table[g][h]];
        }
        // reuse the generic presentation scan on the rep set
        std::vector<std::vector<Int>> element_row(n);
        std::vector<std::vector<Int>> relations;
        element_row[coset_rep[im.identity_index]].assign(k, Int(0));
        std::vector<std::uint32_t> queue{coset_rep[im.identity_index]};
        for (std::size_t head = 0; head < queue.size(); ++head) {
          std::uint32_t h = queue[head];
          for (std::size_t j = 0; j < k; ++j) {
            std::uint32_t hg = qtable[h][qgens[j]];
            std::vector<Int> row = element_row[h];
            row[j] += 1;
            if (element_row[hg].empty()) {
              element_row[hg] = std::move(row);
              queue.push_back(hg);
            } else {
              for (std::size_t c = 0; c < k; ++c) row[c] -= element_row[hg][c];
              relations.push_back(std::move(row));
            }
          }
        }
        if (relations.empty()) relations.push_back(std::vector<Int>(k, Int(0)));
        IntMatrix rel(relations.size(), k);
        for (std::size_t r = 0; r < relations.size(); ++r)
          for (std::size_t c = 0; c < k; ++c) rel.at(r, c) = relations[r][c];
        SmithDecomposition snf = smith_normal_form(rel);
        // z -> z * V maps the relation lattice onto  +d_i Z, so coordinates of
        // the quotient are (z*V)_i mod d_i for the i with d_i >= 2.
        std::vector<Int> divisors(k, Int(0));
        for (std::size_t i = 0; i < k && i < std::min(rel.rows(), rel.cols()); ++i)
          divisors[i] = snf.d.at(i, i);
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < k; ++i) {
          if (divisors[i] == 0)
            throw validation_error("internal: finite group produced a free abelian factor");
          if (divisors[i] >= 2) kept.push_back(i);
        }
        for (std::size_t i : kept) ab->form.torsion.push_back(divisors[i]);
        ab->form.free_rank = 0;
        GroupSpec s;
        s.kind = GroupKind::abelian;
        s.torsion = ab->form.torsion;
        ab->ab_group = Group::from_spec(s);
        // precompute projected coordinates per element index
        auto coords_of = std::make_shared<std::vector<std::vector<Int>>>(n);
        IntMatrix vmat = snf.v;
        for (std::size_t g = 0; g < n; ++g) {
          const auto& row = element_row[coset_rep[g]];
          std::vector<Int> img(kept.size(), Int(0));
          for (std::size_t t = 0; t < kept.size(); ++t) {
            Int acc = 0;
            for (std::size_t c = 0; c < k; ++c) acc += row[c] * vmat.at(c, kept[t]);
            img[t] = mod_floor(acc, divisors[kept[t]]);
          }
          (*coords_of)[g] = std::move(img);
        }
        ab->project = [coords_of](const GroupElement& g) {
          return GroupElement{(*coords_of)[(std::size_t)g.coords[0].convert_to<long long>()]};
        };
        break;
      }
    }
    im.ab = std::move(ab);
  });
  return *im.ab;
}

GroupElement evaluate_word(const Word& w, const Group& g,
                           const std::vector<GroupElement>& assignment) {
  if ((int)assignment.size() != w.alphabet_rank())
    throw validation_error("assignment length does not match word alphabet rank");
  GroupElement acc = g.identity();
  for (const Letter& l : w.letters()) {
    const GroupElement& base = assignment[(std::size_t)l.gen - 1];
    acc = g.mul(acc, l.sign > 0 ? base : g.inv(base));
  }
  return acc;
}

std::string tuple_to_string(const Tuple& t) {
  std::ostringstream os;
  for (int i = 0; i < t.size(); ++i) {
    if (i) os << ';';
    os << t.group.element_to_string(t.entries[i]);
  }
  return os.str();
}

}  // namespace gentuple
