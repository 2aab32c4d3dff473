#include "gentuple/json_io.hpp"

#include <sstream>

namespace gentuple {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v >= Int(INT64_MIN) && v <= Int(INT64_MAX)) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw validation_error("expected an integer (number or decimal string)");
}

json group_spec_to_json(const GroupSpec& spec) {
  json j;
  switch (spec.kind) {
    case GroupKind::abelian: {
      j["kind"] = "abelian";
      auto& t = j["torsion"] = json::array();
      for (const Int& m : spec.torsion) t.push_back(int_to_json(m));
      j["free_rank"] = spec.free_rank;
      break;
    }
    case GroupKind::cayley_table:
      j["kind"] = "cayley_table";
      j["elements"] = spec.labels;
      j["table"] = spec.table;
      j["generators"] = spec.generator_labels;
      break;
    case GroupKind::heisenberg:
      j["kind"] = "heisenberg";
      j["k"] = spec.heis_k;
      j["modulus"] = spec.modulus ? int_to_json(*spec.modulus) : json(nullptr);
      break;
    case GroupKind::free_nilpotent:
      j["kind"] = "free_nilpotent";
      j["rank"] = spec.fn_rank;
      j["class"] = spec.fn_class;
      break;
  }
  return j;
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw validation_error("group spec must be an object with a 'kind'");
  GroupSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "abelian") {
    spec.kind = GroupKind::abelian;
    if (j.contains("torsion"))
      for (const auto& m : j.at("torsion")) spec.torsion.push_back(int_from_json(m));
    spec.free_rank = j.value("free_rank", 0);
  } else if (kind == "cayley_table") {
    spec.kind = GroupKind::cayley_table;
    spec.labels = j.at("elements").get<std::vector<std::string>>();
    spec.table = j.at("table").get<std::vector<std::vector<int>>>();
    spec.generator_labels = j.at("generators").get<std::vector<std::string>>();
  } else if (kind == "heisenberg") {
    spec.kind = GroupKind::heisenberg;
    spec.heis_k = j.at("k").get<int>();
    if (j.contains("modulus") && !j.at("modulus").is_null())
      spec.modulus = int_from_json(j.at("modulus"));
  } else if (kind == "free_nilpotent") {
    spec.kind = GroupKind::free_nilpotent;
    spec.fn_rank = j.value("rank", 2);
    spec.fn_class = j.at("class").get<int>();
  } else {
    throw validation_error("unknown group kind: " + kind);
  }
  return spec;
}

json element_to_json(const Group& g, const GroupElement& e) {
  if (g.kind() == GroupKind::cayley_table) return json(g.element_to_string(e));
  json arr = json::array();
  for (const Int& c : e.coords) arr.push_back(int_to_json(c));
  return arr;
}

GroupElement element_from_json(const Group& g, const json& j) {
  if (j.is_string()) return g.element_from_label(j.get<std::string>());
  if (!j.is_array()) throw validation_error("element must be a label or coordinate array");
  std::vector<Int> coords;
  for (const auto& c : j) coords.push_back(int_from_json(c));
  return g.canonicalize(std::move(coords));
}

json tuple_to_json(const Tuple& t) {
  json arr = json::array();
  for (const auto& e : t.entries) arr.push_back(element_to_json(t.group, e));
  return arr;
}

Tuple tuple_from_json(const Group& g, const json& j) {
  if (!j.is_array()) throw validation_error("tuple must be an array");
  Tuple t;
  t.group = g;
  for (const auto& e : j) t.entries.push_back(element_from_json(g, e));
  return t;
}

json move_to_json(const Group& g, const Move& m) {
  json j;
  switch (m.op) {
    case Move::Op::R:
      j["op"] = "R";
      j["i"] = m.i;
      j["j"] = m.j;
      j["sign"] = m.sign;
      break;
    case Move::Op::L:
      j["op"] = "L";
      j["i"] = m.i;
      j["j"] = m.j;
      j["sign"] = m.sign;
      break;
    case Move::Op::I:
      j["op"] = "I";
      j["j"] = m.j;
      break;
    case Move::Op::AC:
      j["op"] = "AC";
      j["i"] = m.i;
      j["sign"] = m.sign;
      if (m.conj_word)
        j["s"] = word_to_string(*m.conj_word);
      else if (m.conj_element)
        j["element"] = element_to_json(g, *m.conj_element);
      else
        throw validation_error("AC move carries no conjugator");
      break;
  }
  return j;
}

Move move_from_json(const Group& g, const json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "R") return Move::r(j.at("i").get<int>(), j.at("j").get<int>(), j.at("sign").get<int>());
  if (op == "L") return Move::l(j.at("i").get<int>(), j.at("j").get<int>(), j.at("sign").get<int>());
  if (op == "I") return Move::inv(j.at("j").get<int>());
  if (op == "AC") {
    const int i = j.at("i").get<int>();
    const int sign = j.at("sign").get<int>();
    if (j.contains("s")) {
      const int rank = (int)g.distinguished_generators().size();
      return Move::ac(i, parse_word(j.at("s").get<std::string>(), rank), sign);
    }
    if (j.contains("element")) return Move::ac(i, element_from_json(g, j.at("element")), sign);
    throw validation_error("AC move needs 's' or 'element'");
  }
  throw validation_error("unknown move op: " + op);
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["group"] = group_spec_to_json(c.group().spec());
  j["kind"] = c.kind() == Certificate::Kind::nielsen ? "nielsen" : "ac";
  j["source"] = tuple_to_json(c.source());
  j["target"] = tuple_to_json(c.target());
  auto& moves = j["moves"] = json::array();
  for (const Move& m : c.moves().moves) moves.push_back(move_to_json(c.group(), m));
  auto& steps = j["metadata"]["steps"] = json::array();
  for (const CertificateStep& s : c.steps()) {
    json step;
    step["origin"] = s.origin;
    step["description"] = s.description;
    step["first_move"] = s.first_move;
    step["move_count"] = s.move_count;
    steps.push_back(std::move(step));
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  Group g = Group::from_spec(group_spec_from_json(j.at("group")));
  Tuple source = tuple_from_json(g, j.at("source"));
  Tuple target = tuple_from_json(g, j.at("target"));
  MoveSequence ms;
  ms.tuple_size = source.size();
  for (const auto& m : j.at("moves")) ms.append(move_from_json(g, m));
  const std::string kind = j.at("kind").get<std::string>();
  std::vector<CertificateStep> steps;
  if (j.contains("metadata") && j.at("metadata").contains("steps"))
    for (const auto& s : j.at("metadata").at("steps"))
      steps.push_back(CertificateStep{s.at("origin").get<std::string>(),
                                      s.at("description").get<std::string>(),
                                      s.at("first_move").get<std::size_t>(),
                                      s.at("move_count").get<std::size_t>()});
  return Certificate(std::move(source), std::move(target), std::move(ms),
                     kind == "nielsen" ? Certificate::Kind::nielsen : Certificate::Kind::ac,
                     std::move(steps));
}

json components_report_to_json(const ComponentsReport& r) {
  json j;
  j["vertex_count"] = r.vertex_count;
  j["component_count"] = r.component_count;
  auto& reps = j["representatives"] = json::array();
  for (const Tuple& t : r.representatives) reps.push_back(tuple_to_json(t));
  if (!r.conjugator_note.empty()) j["conjugators"] = r.conjugator_note;
  return j;
}

json subgroup_to_json(const Subgroup& s) {
  json arr = json::array();
  for (const auto& e : s.elements) arr.push_back(s.group.element_to_string(e));
  return arr;
}

json preimage_report_to_json(const PreimageReport& r) {
  json j;
  j["holds"] = r.holds;
  j["group_vertices"] = r.group_vertices;
  j["group_components"] = r.group_components;
  j["ab_vertices"] = r.ab_vertices;
  j["ab_components"] = r.ab_components;
  j["detail"] = r.detail;
  return j;
}

Tuple parse_tuple_literal(const Group& g, const std::string& text) {
  Tuple t;
  t.group = g;
  std::size_t start = 0;
  auto next_piece = [&](std::size_t& from) -> std::string {
    // split on ';' outside parentheses/brackets
    int depth = 0;
    for (std::size_t i = from; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ';' && depth == 0) {
        std::string piece = text.substr(from, i - from);
        from = i + 1;
        return piece;
      }
    }
    std::string piece = text.substr(from);
    from = text.size();
    return piece;
  };
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (start < text.size()) {
    std::string piece = trim(next_piece(start));
    if (piece.empty()) throw validation_error("empty tuple entry");
    if (piece.front() == '(' && piece.back() == ')') {
      std::vector<Int> coords;
      std::string body = piece.substr(1, piece.size() - 2);
      std::istringstream is(body);
      std::string item;
      while (std::getline(is, item, ',')) coords.push_back(Int(trim(item)));
      t.entries.push_back(g.canonicalize(std::move(coords)));
      continue;
    }
    if (g.kind() == GroupKind::cayley_table) {
      try {
        t.entries.push_back(g.element_from_label(piece));
        continue;
      } catch (const validation_error&) {
        // fall through to word parsing
      }
    }
    auto gens = g.distinguished_generators();
    Word w = parse_word(piece, (int)gens.size());
    t.entries.push_back(evaluate_word(w, g, gens));
  }
  if (t.entries.empty()) throw validation_error("tuple literal is empty");
  return t;
}

}  // namespace gentuple
