// End-to-end checks of the installed command-line surface: exit codes,
// deterministic output, and the certificate round trip.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok) ++failures;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(GENTUPLE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  while (std::fgets(buf.data(), (int)buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) {
  return std::string(GENTUPLE_DATA_DIR) + "/" + name;
}

}  // namespace

int main() {
  using nlohmann::json;

  auto comp = run("components --group " + data("z5.json") + " --n 1 --mode nielsen");
  check(comp.exit_code == 0, "components exits 0");
  check(json::parse(comp.out)["component_count"] == 2, "components count on the 5-cycle");

  auto comp2 = run("components --group " + data("z5.json") + " --n 1 --mode nielsen");
  check(comp.out == comp2.out, "identical invocations are byte-identical");

  auto pred = run("predict --group " + data("z2x4.json") + " --n 2");
  check(pred.exit_code == 0 && json::parse(pred.out)["components"] == 1,
        "predicted count for the mixed 2-4 form");

  auto cert = run("certify --group " + data("h1.json") +
                  " --mode nielsen --tuple \"(1,0,5);(0,1,-3)\"");
  check(cert.exit_code == 0, "heisenberg certify exits 0");
  check(json::parse(cert.out)["replays"] == true, "heisenberg certificate replays");

  // round trip: emitted certificates re-verify
  const std::string cert_path = "smoke_cert.json";
  {
    std::ofstream f(cert_path);
    f << cert.out;
  }
  auto verify = run("verify certificate --certificate " + cert_path);
  check(verify.exit_code == 0 && json::parse(verify.out)["replays"] == true,
        "emitted certificate re-ingests and replays");
  std::remove(cert_path.c_str());

  auto pre = run("verify preimage --group " + data("heis_mod5.json") + " --n 2");
  auto pre_doc = json::parse(pre.out);
  check(pre.exit_code == 0 && pre_doc["holds"] == true && pre_doc["group_components"] == 2,
        "preimage harness on the mod-5 group");

  auto corpus = run("verify corpus");
  check(corpus.exit_code == 0 && json::parse(corpus.out)["all_match"] == true,
        "characterization corpus");

  auto abc = run("verify abelian-count --group " + data("z5.json") + " --n 1");
  check(abc.exit_code == 0 && json::parse(abc.out)["match"] == true, "abelian-count harness");

  auto exp = run("export --group " + data("z5.json") + " --n 1 --mode nielsen --format dot");
  check(exp.exit_code == 0 && exp.out.rfind("graph tuples {", 0) == 0, "dot export");

  auto ac = run("certify --group " + data("q8.json") + " --mode ac --tuple \"-i;j\" --basis \"i;j\"");
  check(ac.exit_code == 0 && json::parse(ac.out)["replays"] == true,
        "ac certificate on the quaternion pair");

  // exit code contract
  auto bad = run("components --group no_such_file.json --n 1");
  check(bad.exit_code == 2, "missing file is a validation error (2)");
  auto over = run("components --group " + data("q8.json") + " --n 2 --mode ac --budget 5");
  check(over.exit_code == 3, "exceeded budget exits 3");
  auto nopath = run("path --group " + data("z5.json") +
                    " --n 1 --mode nielsen --from \"(1)\" --to \"(2)\"");
  check(nopath.exit_code == 4, "separated tuples exit 4");

  if (failures) std::printf("%d cli checks failed\n", failures);
  return failures == 0 ? 0 : 1;
}
