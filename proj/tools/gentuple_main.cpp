// Command-line front end: group-spec ingestion, command dispatch, JSON/DOT
// emission, deterministic exit codes (0 ok, 2 validation, 3 budget,
// 4 no certificate exists).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gentuple/certify.hpp"
#include "gentuple/explorer.hpp"
#include "gentuple/json_io.hpp"
#include "gentuple/standard_groups.hpp"
#include "gentuple/structure.hpp"

namespace {

using nlohmann::json;
using namespace gentuple;

struct CommonArgs {
  std::string group_file;
  std::string output;
  std::uint64_t budget = 10'000'000;
  int workers = 1;
};

Group load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open group file: " + path);
  json j;
  in >> j;
  return Group::from_spec(group_spec_from_json(j));
}

void emit_text(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw validation_error("cannot write output file: " + output);
    out << text;
  }
}

void emit(const json& doc, const std::string& output) {
  emit_text(doc.dump(2) + "\n", output);
}

ExplorerOptions options_of(const CommonArgs& a) {
  ExplorerOptions opts;
  opts.max_vertices = a.budget;
  opts.workers = a.workers;
  return opts;
}

GraphMode mode_of(const std::string& mode) {
  if (mode == "nielsen") return GraphMode::nielsen;
  if (mode == "ac") return GraphMode::ac;
  throw validation_error("mode must be 'nielsen' or 'ac'");
}

json certificate_output(const Certificate& cert) {
  json j = certificate_to_json(cert);
  j["replays"] = cert.verify();
  j["move_count"] = cert.moves().size();
  return j;
}

int run_inspect(const CommonArgs& args) {
  Group g = load_group(args.group_file);
  json j;
  switch (g.kind()) {
    case GroupKind::cayley_table: j["kind"] = "cayley_table"; break;
    case GroupKind::abelian: j["kind"] = "abelian"; break;
    case GroupKind::heisenberg: j["kind"] = "heisenberg"; break;
    case GroupKind::free_nilpotent: j["kind"] = "free_nilpotent"; break;
  }
  j["finite"] = g.is_finite();
  const auto& ab = g.abelianization();
  json form;
  auto& tor = form["torsion"] = json::array();
  for (const Int& m : ab.form.torsion) tor.push_back(int_to_json(m));
  form["free_rank"] = ab.form.free_rank;
  j["abelianization"] = form;
  if (g.is_finite()) {
    j["order"] = int_to_json(g.order());
    RankWeight rw = rank_and_weight(g);
    j["rank"] = rw.rank;
    j["weight"] = rw.weight;
    j["nilpotent"] = is_nilpotent(g);
    j["class_c"] = is_class_c(g);
    j["frattini_order"] = frattini(g).size();
  }
  emit(j, args.output);
  return 0;
}

int run_predict(const CommonArgs& args, int n) {
  Group g = load_group(args.group_file);
  if (g.kind() != GroupKind::abelian)
    throw validation_error("predict requires an abelian group spec");
  AbelianForm form{g.spec().torsion, g.spec().free_rank};
  auto count = predicted_components(form, n);
  json j;
  j["n"] = n;
  j["components"] = count ? int_to_json(*count) : json("empty");
  emit(j, args.output);
  return 0;
}

int run_components(const CommonArgs& args, int n, const std::string& mode,
                   const std::string& conjugators) {
  Group g = load_group(args.group_file);
  GraphQuery q{g, n, mode_of(mode), {}};
  if (!conjugators.empty()) q.conjugators = parse_tuple_literal(g, conjugators).entries;
  ComponentsReport r = components(q, options_of(args));
  emit(components_report_to_json(r), args.output);
  return 0;
}

int run_path(const CommonArgs& args, int n, const std::string& mode, const std::string& from,
             const std::string& to) {
  Group g = load_group(args.group_file);
  GraphQuery q{g, n, mode_of(mode), {}};
  Tuple from_t = parse_tuple_literal(g, from);
  Tuple to_t = parse_tuple_literal(g, to);
  auto cert = find_path(q, from_t, to_t, options_of(args));
  if (!cert) throw no_certificate_error("the tuples lie in different components");
  emit(certificate_output(*cert), args.output);
  return 0;
}

int run_canonicalize(const CommonArgs& args, const std::string& tuple) {
  Group g = load_group(args.group_file);
  Tuple t = parse_tuple_literal(g, tuple);
  if (g.kind() == GroupKind::heisenberg) {
    emit(certificate_output(heisenberg_canonicalize(g, t)), args.output);
    return 0;
  }
  if (g.kind() == GroupKind::abelian) {
    AbelianForm form{g.spec().torsion, g.spec().free_rank};
    emit(certificate_output(abelian_reduce(form, t)), args.output);
    return 0;
  }
  throw validation_error("canonicalize supports heisenberg and abelian backends");
}

int run_certify(const CommonArgs& args, const std::string& mode, const std::string& tuple,
                const std::string& basis) {
  Group g = load_group(args.group_file);
  Tuple t = parse_tuple_literal(g, tuple);
  if (mode == "nielsen") {
    if (g.kind() == GroupKind::heisenberg) {
      emit(certificate_output(heisenberg_canonicalize(g, t)), args.output);
    } else if (g.kind() == GroupKind::abelian) {
      AbelianForm form{g.spec().torsion, g.spec().free_rank};
      emit(certificate_output(abelian_reduce(form, t)), args.output);
    } else {
      emit(certificate_output(frattini_lift(g, t.size(), t)), args.output);
    }
    return 0;
  }
  if (mode != "ac") throw validation_error("mode must be 'nielsen' or 'ac'");
  std::pair<GroupElement, GroupElement> basis_pair = [&] {
    if (!basis.empty()) {
      Tuple b = parse_tuple_literal(g, basis);
      if (b.size() != 2) throw validation_error("basis must be a pair");
      return std::make_pair(b.entries[0], b.entries[1]);
    }
    auto gens = g.distinguished_generators();
    if (gens.size() != 2)
      throw validation_error("provide --basis; the group has no distinguished pair");
    return std::make_pair(gens[0], gens[1]);
  }();
  emit(certificate_output(ac_normalize_2gen_nilpotent(g, t, basis_pair)), args.output);
  return 0;
}

int run_export(const CommonArgs& args, int n, const std::string& mode,
               const std::string& format) {
  Group g = load_group(args.group_file);
  GraphQuery q{g, n, mode_of(mode), {}};
  if (format != "dot" && format != "json")
    throw validation_error("format must be 'dot' or 'json'");
  ExportFormat f = format == "dot" ? ExportFormat::dot : ExportFormat::json;
  emit_text(export_graph(q, f, options_of(args)), args.output);
  return 0;
}

int run_verify_certificate(const CommonArgs& args, const std::string& cert_file) {
  std::ifstream in(cert_file);
  if (!in) throw validation_error("cannot open certificate file: " + cert_file);
  json j;
  in >> j;
  Certificate cert = certificate_from_json(j);  // constructor replays
  json out;
  out["replays"] = cert.verify();
  out["kind"] = j.at("kind");
  out["move_count"] = cert.moves().size();
  emit(out, args.output);
  return 0;
}

int run_verify_preimage(const CommonArgs& args, int n) {
  Group g = load_group(args.group_file);
  PreimageReport r = verify_preimage_theorem(g, n, options_of(args));
  emit(preimage_report_to_json(r), args.output);
  return r.holds ? 0 : 2;
}

int run_verify_abelian_count(const CommonArgs& args, int n) {
  Group g = load_group(args.group_file);
  if (g.kind() != GroupKind::abelian)
    throw validation_error("abelian-count requires an abelian group spec");
  AbelianForm form{g.spec().torsion, g.spec().free_rank};
  auto predicted = predicted_components(form, n);
  GraphQuery q{g, n, GraphMode::nielsen, {}};
  ComponentsReport r = components(q, options_of(args));
  const bool match =
      predicted ? Int(r.component_count) == *predicted : r.component_count == 0;
  json j;
  j["n"] = n;
  j["predicted"] = predicted ? int_to_json(*predicted) : json(0);
  j["explored"] = r.component_count;
  j["match"] = match;
  emit(j, args.output);
  return match ? 0 : 2;
}

int run_verify_corpus(const CommonArgs& args) {
  json rows = json::array();
  bool all_ok = true;
  for (const auto& entry : standard_corpus()) {
    json row;
    row["group"] = entry.name;
    const bool nil = is_nilpotent(entry.group);
    const bool cc = is_class_c(entry.group);
    row["nilpotent"] = nil;
    row["class_c"] = cc;
    row["match"] = nil == cc;
    all_ok = all_ok && nil == cc;
    rows.push_back(std::move(row));
  }
  json j;
  j["groups"] = rows;
  j["all_match"] = all_ok;
  emit(j, args.output);
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nielsen and Andrews-Curtis equivalence on generating tuples"};
  app.require_subcommand(1);

  CommonArgs args;
  int n = 1;
  std::string mode = "nielsen", format = "json";
  std::string tuple, basis, from, to, conjugators, cert_file;

  auto add_common = [&](CLI::App* cmd, bool needs_group = true) {
    if (needs_group)
      cmd->add_option("--group", args.group_file, "group spec JSON file")->required();
    cmd->add_option("--output", args.output, "write the result to a file instead of stdout");
    cmd->add_option("--budget", args.budget, "maximum explored vertex count");
    cmd->add_option("--workers", args.workers, "worker threads for graph exploration");
  };

  auto* inspect = app.add_subcommand("inspect", "summarize a group spec");
  add_common(inspect);

  auto* predict = app.add_subcommand("predict", "closed-form component count (abelian)");
  add_common(predict);
  predict->add_option("--n", n, "tuple length")->required();

  auto* comps = app.add_subcommand("components", "connected components of the tuple graph");
  add_common(comps);
  comps->add_option("--n", n, "tuple length")->required();
  comps->add_option("--mode", mode, "nielsen or ac");
  comps->add_option("--conjugators", conjugators, "explicit conjugator set (ac mode)");

  auto* path = app.add_subcommand("path", "breadth-first certificate between two tuples");
  add_common(path);
  path->add_option("--n", n, "tuple length")->required();
  path->add_option("--mode", mode, "nielsen or ac");
  path->add_option("--from", from, "source tuple literal")->required();
  path->add_option("--to", to, "target tuple literal")->required();

  auto* canon = app.add_subcommand("canonicalize", "constructive normal-form certificate");
  add_common(canon);
  canon->add_option("--tuple", tuple, "tuple literal")->required();

  auto* certify = app.add_subcommand("certify", "equivalence certificate to a canonical tuple");
  add_common(certify);
  certify->add_option("--mode", mode, "nielsen or ac");
  certify->add_option("--tuple", tuple, "tuple literal")->required();
  certify->add_option("--basis", basis, "basis pair literal (ac mode)");

  auto* exp = app.add_subcommand("export", "emit the full graph");
  add_common(exp);
  exp->add_option("--n", n, "tuple length")->required();
  exp->add_option("--mode", mode, "nielsen or ac");
  exp->add_option("--format", format, "dot or json");

  auto* verify = app.add_subcommand("verify", "verification harnesses");
  verify->require_subcommand(1);
  auto* vcert = verify->add_subcommand("certificate", "replay a serialized certificate");
  add_common(vcert, false);
  vcert->add_option("--certificate", cert_file, "certificate JSON file")->required();
  auto* vpre = verify->add_subcommand("preimage", "abelianization preimage partition check");
  add_common(vpre);
  vpre->add_option("--n", n, "tuple length")->required();
  auto* vab = verify->add_subcommand("abelian-count", "explored vs predicted components");
  add_common(vab);
  vab->add_option("--n", n, "tuple length")->required();
  auto* vcorp =
      verify->add_subcommand("corpus", "maximal-subgroup normality vs nilpotency corpus");
  add_common(vcorp, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inspect) return run_inspect(args);
    if (*predict) return run_predict(args, n);
    if (*comps) return run_components(args, n, mode, conjugators);
    if (*path) return run_path(args, n, mode, from, to);
    if (*canon) return run_canonicalize(args, tuple);
    if (*certify) return run_certify(args, mode, tuple, basis);
    if (*exp) return run_export(args, n, mode, format);
    if (*verify) {
      if (*vcert) return run_verify_certificate(args, cert_file);
      if (*vpre) return run_verify_preimage(args, n);
      if (*vab) return run_verify_abelian_count(args, n);
      if (*vcorp) return run_verify_corpus(args);
    }
  } catch (const budget_error& e) {
    json err{{"code", 3}, {"message", e.what()}, {"context", {{"required", e.required()}}}};
    std::cerr << err.dump() << "\n";
    return 3;
  } catch (const no_certificate_error& e) {
    json err{{"code", 4}, {"message", e.what()}, {"context", json::object()}};
    std::cerr << err.dump() << "\n";
    return 4;
  } catch (const std::exception& e) {
    json err{{"code", 2}, {"message", e.what()}, {"context", json::object()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 0;
}
