#include "gentuple/standard_groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gentuple/structure.hpp"

namespace gentuple {

Group make_cyclic(int n) { return make_abelian({Int(n)}); }

Group make_abelian(std::vector<Int> torsion, int free_rank) {
  GroupSpec s;
  s.kind = GroupKind::abelian;
  s.torsion = std::move(torsion);
  s.free_rank = free_rank;
  return Group::from_spec(s);
}

Group make_heisenberg(int k) {
  GroupSpec s;
  s.kind = GroupKind::heisenberg;
  s.heis_k = k;
  return Group::from_spec(s);
}

Group make_modular_heisenberg(int k, Int modulus) {
  GroupSpec s;
  s.kind = GroupKind::heisenberg;
  s.heis_k = k;
  s.modulus = std::move(modulus);
  return Group::from_spec(s);
}

Group make_free_nilpotent(int nil_class) {
  GroupSpec s;
  s.kind = GroupKind::free_nilpotent;
  s.fn_rank = 2;
  s.fn_class = nil_class;
  return Group::from_spec(s);
}

Group make_quaternion() {
  // indices: 1, -1, i, -i, j, -j, k, -k
  const int neg[8] = {1, 0, 3, 2, 5, 4, 7, 6};
  auto mul = [&](int a, int b) -> int {
    const bool sa = a & 1, sb = b & 1;  // odd index = negated unit
    const int ua = a / 2, ub = b / 2;   // 0=1, 1=i, 2=j, 3=k
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int psign[4][4] = {{+1, +1, +1, +1},
                                    {+1, -1, +1, -1},
                                    {+1, -1, -1, +1},
                                    {+1, +1, -1, -1}};
    int u = prod[ua][ub];
    int s = psign[ua][ub];
    int idx = 2 * u + ((s < 0) ? 1 : 0);
    if (sa) idx = neg[idx];
    if (sb) idx = neg[idx];
    return idx;
  };
  GroupSpec s;
  s.kind = GroupKind::cayley_table;
  s.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  s.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) s.table[a][b] = mul(a, b);
  s.generator_labels = {"i", "j"};
  return Group::from_spec(s);
}

Group make_dihedral(int n) {
  // elements r^a (a < n) then r^a s, with s r s = r^-1
  GroupSpec spec;
  spec.kind = GroupKind::cayley_table;
  auto label = [&](int a, int flip) {
    std::ostringstream os;
    os << 'r' << a;
    if (flip) os << 's';
    return os.str();
  };
  for (int flip = 0; flip < 2; ++flip)
    for (int a = 0; a < n; ++a) spec.labels.push_back(label(a, flip));
  auto index = [&](int a, int flip) { return flip * n + ((a % n + n) % n); };
  spec.table.assign(2 * n, std::vector<int>(2 * n));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int a = 0; a < n; ++a)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int b = 0; b < n; ++b) {
          // (r^a s^f1)(r^b s^f2) = r^(a + b or a - b) s^(f1 xor f2)
          int c = f1 ? a - b : a + b;
          spec.table[index(a, f1)][index(b, f2)] = index(c, f1 ^ f2);
        }
  spec.generator_labels = {label(1, 0), label(0, 1)};
  return Group::from_spec(spec);
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return all;
}

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

Group permutation_group(const std::vector<std::vector<int>>& perms,
                        const std::vector<int>& generator_positions) {
  GroupSpec spec;
  spec.kind = GroupKind::cayley_table;
  auto label = [](const std::vector<int>& p) {
    std::string s = "p";
    for (int v : p) s += char('0' + v);
    return s;
  };
  for (const auto& p : perms) spec.labels.push_back(label(p));
  const int m = (int)perms.size();
  spec.table.assign(m, std::vector<int>(m));
  auto find = [&](const std::vector<int>& p) {
    for (int i = 0; i < m; ++i)
      if (perms[i] == p) return i;
    throw validation_error("internal: composition left the permutation set");
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // composition: apply a first, then b
      std::vector<int> c(perms[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[b][perms[a][i]];
      spec.table[a][b] = find(c);
    }
  for (int pos : generator_positions) spec.generator_labels.push_back(spec.labels[pos]);
  return Group::from_spec(spec);
}

}  // namespace

Group make_symmetric(int n) {
  if (n < 2 || n > 5) throw validation_error("symmetric table supported for 2 <= n <= 5");
  auto perms = permutations_of(n);
  // generators: the transposition (0 1) and the n-cycle
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<int> gen_pos;
  for (int i = 0; i < (int)perms.size(); ++i)
    if (perms[i] == transposition || perms[i] == cycle) gen_pos.push_back(i);
  return permutation_group(perms, gen_pos);
}

Group make_alternating(int n) {
  if (n < 3 || n > 5) throw validation_error("alternating table supported for 3 <= n <= 5");
  auto all = permutations_of(n);
  std::vector<std::vector<int>> even;
  for (auto& p : all)
    if (is_even(p)) even.push_back(p);
  // generators: the 3-cycle (0 1 2) and, for n >= 4, an n- or (n-1)-cycle
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<std::vector<int>> gens{three};
  if (n >= 4) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    if (n % 2 == 1) {  // n-cycle is even
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    } else {  // rotate the last n-1 points
      for (int i = 1; i < n; ++i) c[i] = 1 + (i % (n - 1));
    }
    gens.push_back(c);
  }
  std::vector<int> gen_pos;
  for (int i = 0; i < (int)even.size(); ++i)
    for (const auto& g : gens)
      if (even[i] == g) gen_pos.push_back(i);
  return permutation_group(even, gen_pos);
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"Z5", to_cayley_table(make_cyclic(5))});
  corpus.push_back({"Z6", to_cayley_table(make_cyclic(6))});
  corpus.push_back({"Z8", to_cayley_table(make_cyclic(8))});
  corpus.push_back({"Z2xZ4", to_cayley_table(make_abelian({Int(2), Int(4)}))});
  corpus.push_back({"Q8", make_quaternion()});
  corpus.push_back({"D3", make_dihedral(3)});
  corpus.push_back({"D4", make_dihedral(4)});
  corpus.push_back({"D5", make_dihedral(5)});
  corpus.push_back({"D6", make_dihedral(6)});
  corpus.push_back({"S3", make_symmetric(3)});
  corpus.push_back({"S4", make_symmetric(4)});
  corpus.push_back({"A4", make_alternating(4)});
  corpus.push_back({"Heis mod 2", make_modular_heisenberg(1, 2)});
  corpus.push_back({"Heis mod 3", make_modular_heisenberg(1, 3)});
  return corpus;
}

}  // namespace gentuple
