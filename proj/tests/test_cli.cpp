#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "adjalg/comodalg.hpp"
#include "adjalg/hopf.hpp"
#include "adjalg/io.hpp"
#include "fixtures.hpp"

using namespace adjalg;

namespace {

struct RunResult {
  int code;
  std::string out;
};

/* Run the installed binary with the given arguments, capturing stdout. */
RunResult run(const std::string& args) {
  std::string cmd = std::string(ADJALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

std::string fx(const std::string& name) {
  return std::string(ADJALG_FIXTURES_DIR) + "/" + name;
}

std::string tmp(const std::string& name) {
  return "/tmp/adjalg_cli_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string status(const Json& report, const std::string& row) {
  return report.at("checks").at(row).at("status").get<std::string>();
}

}  // namespace

TEST_CASE("group info reports classes and cosets") {
  RunResult r = run("group-info --group " + fx("s3.json") + " --subgroup e,r,r2");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("order").get<int>() == 6);
  CHECK_FALSE(j.at("abelian").get<bool>());
  CHECK(j.at("classes").size() == 3);
  CHECK(j.at("subgroup").at("index").get<int>() == 2);
  CHECK(j.at("subgroup").at("coset_reps") == Json::array({"e", "s"}));
}

TEST_CASE("adjoint group mode solves the showcase pair") {
  std::string out = tmp("adj_group.json");
  RunResult r = run("adjoint --mode group --group " + fx("s3.json") +
                    " --cocycle " + fx("s3_a3_trivial.json") + " --out " + out);
  CHECK(r.code == 0);
  Json j = load_json_file(out);
  CHECK(j.at("dim").get<int>() == 6);
  CHECK(j.at("basis_names").front().get<std::string>() == "alpha[e,e]");
  for (const auto& [name, row] : j.at("checks").items()) {
    INFO(name);
    CHECK(row.at("status").get<std::string>() != "fail");
  }
  CHECK(status(j, "yetter-struct-group") == "pass");
  CHECK(status(j, "scalars-phi") == "pass");
  CHECK(status(j, "1dim-s") == "skipped");

  /* byte determinism, including against the committed report */
  std::string out2 = tmp("adj_group_2.json");
  RunResult r2 = run("adjoint --mode group --group " + fx("s3.json") +
                     " --cocycle " + fx("s3_a3_trivial.json") + " --out " + out2);
  CHECK(r2.code == 0);
  CHECK(slurp(out) == slurp(out2));
  CHECK(slurp(out) == slurp(fx("adjoint_report_s3.json")));
}

TEST_CASE("adjoint dual group mode with the character") {
  std::string out = tmp("adj_dual.json");
  RunResult r = run("adjoint --mode dual-group --group " + fx("s3.json") +
                    " --cocycle " + fx("s3_a3_trivial.json") + " --rep " +
                    fx("s3_a3_char_rep.json") + " --out " + out);
  CHECK(r.code == 0);
  Json j = load_json_file(out);
  CHECK(j.at("dim").get<int>() == 6);
  CHECK(status(j, "1dim-s") == "pass");
  CHECK(status(j, "yetter-struct-dualgroup") == "pass");
  CHECK(status(j, "scalars-phi") == "pass");
  CHECK(j.at("basis_names").front().get<std::string>() == "alpha[(e,e)]");
}

TEST_CASE("generic mode accepts hopf and algebra files") {
  FiniteGroup s3 = testfx::s3();
  HopfData h = group_hopf(s3);
  TwoCocycle psi = TwoCocycle::trivial(s3, s3.subgroup({"e", "r", "r2"}));
  ComoduleAlgebra k = twisted_group_comodule_algebra(h, psi);
  save_json_file(tmp("hopf.json"), hopf_to_json(h));
  save_json_file(tmp("alg.json"), comodule_algebra_to_json(k));

  std::string out = tmp("adj_generic.json");
  RunResult r = run("adjoint --mode generic --hopf " + tmp("hopf.json") +
                    " --algebra " + tmp("alg.json") + " --out " + out);
  CHECK(r.code == 0);
  Json j = load_json_file(out);
  CHECK(j.at("dim").get<int>() == 6);
  CHECK(status(j, "basis") == "pass");
  CHECK(status(j, "scalars-phi") == "skipped");
}

TEST_CASE("classfun matches the models") {
  SUBCASE("whole group") {
    std::string out = tmp("cf_full.json");
    RunResult r = run("classfun --mode group --group " + fx("s3.json") +
                      " --cocycle " + fx("s3_trivial.json") + " --out " + out);
    CHECK(r.code == 0);
    Json j = load_json_file(out);
    CHECK(j.at("dim_cf").get<int>() == 3);
    CHECK(j.at("dim_model").get<int>() == 3);
    CHECK(j.at("match").get<bool>());
    const Json& gt = j.at("group_theoretical");
    CHECK(gt.at("dim_end").get<int>() == 3);
    CHECK(gt.at("dim_c1").get<int>() == 3);
    CHECK(gt.at("dim_cpsi").get<int>() == 3);
    CHECK(gt.at("final_match").get<bool>());
  }
  SUBCASE("proper subgroup") {
    std::string out = tmp("cf_a3.json");
    RunResult r = run("classfun --mode group --group " + fx("s3.json") +
                      " --cocycle " + fx("s3_a3_trivial.json") + " --out " + out);
    CHECK(r.code == 0);
    Json j = load_json_file(out);
    CHECK(j.at("dim_cf").get<int>() == 3);
    CHECK(j.at("dim_model").get<int>() == 3);
    CHECK(j.at("match").get<bool>());
    /* the two-sided object is strictly bigger here; reported, not hidden */
    const Json& gt = j.at("group_theoretical");
    CHECK(gt.at("dim_end").get<int>() == 6);
    CHECK(gt.at("dim_c1").get<int>() == 3);
    CHECK_FALSE(gt.at("final_match").get<bool>());
  }
  SUBCASE("trivial subgroup") {
    Json cj;
    cj["subgroup"] = Json::array({"e"});
    cj["values"] = "trivial";
    save_json_file(tmp("triv_sub.json"), cj);
    std::string out = tmp("cf_e.json");
    RunResult r = run("classfun --mode group --group " + fx("s3.json") +
                      " --cocycle " + tmp("triv_sub.json") + " --out " + out);
    CHECK(r.code == 0);
    Json j = load_json_file(out);
    CHECK(j.at("dim_cf").get<int>() == 1);
    CHECK(j.at("dim_model").get<int>() == 1);
    CHECK(j.at("match").get<bool>());
  }
  SUBCASE("dual case counts cosets") {
    std::string out = tmp("cf_dual.json");
    RunResult r = run("classfun --mode dual-group --group " + fx("s3.json") +
                      " --cocycle " + fx("s3_a3_trivial.json") + " --rep " +
                      fx("s3_a3_char_rep.json") + " --out " + out);
    CHECK(r.code == 0);
    Json j = load_json_file(out);
    CHECK(j.at("dim_cf").get<int>() == 2);
    CHECK(j.at("dim_model").get<int>() == 2);
    CHECK(j.at("match").get<bool>());
    CHECK(j.at("basis").size() == 2);
  }
}

TEST_CASE("verify bundled passes everywhere") {
  std::string out = tmp("bundled.json");
  RunResult r = run("verify --bundled --out " + out);
  CHECK(r.code == 0);
  Json j = load_json_file(out);
  CHECK(j.at("bundled").get<bool>());
  CHECK(j.at("instances").size() == 24);
  for (const Json& inst : j.at("instances")) {
    INFO(inst.at("name").get<std::string>());
    for (const auto& [name, row] : inst.at("checks").items()) {
      INFO(name);
      CHECK(row.at("status").get<std::string>() != "fail");
    }
  }
}

TEST_CASE("verify report accepts the committed report") {
  std::string out = tmp("ver_good.json");
  RunResult r = run("verify --report " + fx("adjoint_report_s3.json") +
                    " --out " + out);
  CHECK(r.code == 0);
  Json j = load_json_file(out);
  for (const auto& [name, row] : j.at("checks").items()) {
    INFO(name);
    CHECK(row.at("status").get<std::string>() != "fail");
  }
}

TEST_CASE("verify report flags each corrupted tensor") {
  SUBCASE("basis entry") {
    std::string out = tmp("ver_bad_basis.json");
    RunResult r = run("verify --report " + fx("report_bad_basis.json") +
                      " --out " + out);
    CHECK(r.code == 1);
    Json j = load_json_file(out);
    CHECK(status(j, "basis") == "fail");
    CHECK(status(j, "fpdim") == "pass");
    CHECK(status(j, "scalars-phi") == "pass");
  }
  SUBCASE("action entry") {
    std::string out = tmp("ver_bad_action.json");
    RunResult r = run("verify --report " + fx("report_bad_action.json") +
                      " --out " + out);
    CHECK(r.code == 1);
    Json j = load_json_file(out);
    CHECK(status(j, "yetter-struct-group") == "fail");
    CHECK(status(j, "basis") == "pass");
    CHECK(status(j, "sk-elements") == "pass");
  }
  SUBCASE("coaction entry") {
    std::string out = tmp("ver_bad_coaction.json");
    RunResult r = run("verify --report " + fx("report_bad_coaction.json") +
                      " --out " + out);
    CHECK(r.code == 1);
    Json j = load_json_file(out);
    CHECK(status(j, "yetter-struct-group") == "fail");
    CHECK(status(j, "th11") == "fail");
    CHECK(status(j, "basis") == "pass");
    CHECK(status(j, "sk-elements") == "pass");
  }
  SUBCASE("product entry") {
    std::string out = tmp("ver_bad_product.json");
    RunResult r = run("verify --report " + fx("report_bad_product.json") +
                      " --out " + out);
    CHECK(r.code == 1);
    Json j = load_json_file(out);
    CHECK(status(j, "sk-elements") == "fail");
    CHECK(status(j, "yd-module") == "pass");
    CHECK(status(j, "basis") == "pass");
    CHECK(status(j, "yetter-struct-group") == "pass");
  }
}

TEST_CASE("normalize cocycle round trip") {
  std::string out = tmp("normalized.json");
  RunResult r = run("normalize-cocycle --group " + fx("klein.json") +
                    " --cocycle " + fx("klein_pauli_raw.json") + " --out " + out);
  CHECK(r.code == 0);
  Json j = load_json_file(out);
  CHECK(j.contains("coboundary"));
  CHECK(j.at("coboundary").size() == 4);

  /* the raw file is rejected, its normalization is accepted */
  RunResult raw = run("adjoint --mode group --group " + fx("klein.json") +
                      " --cocycle " + fx("klein_pauli_raw.json"));
  CHECK(raw.code == 1);
  RunResult ok = run("adjoint --mode group --group " + fx("klein.json") +
                     " --cocycle " + out + " --out " + tmp("adj_norm.json"));
  CHECK(ok.code == 0);
}

TEST_CASE("usage and input errors exit with code two") {
  std::ofstream(tmp("garbage.json")) << "garbage{{{\n";
  RunResult bad = run("adjoint --mode group --group " + fx("s3.json") +
                      " --cocycle " + tmp("garbage.json"));
  CHECK(bad.code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("adjoint").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("adjoint --mode sideways --group " + fx("s3.json") + " --cocycle " +
            fx("s3_trivial.json")).code == 2);
  RunResult mismatch = run("adjoint --mode group --group " + fx("s3.json") +
                           " --subgroup e,s --cocycle " + fx("s3_a3_trivial.json"));
  CHECK(mismatch.code == 2);
}
