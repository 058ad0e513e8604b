#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qconic/report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QCONIC_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(QCONIC_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze succeeds on valid fixtures") {
  auto r = run("analyze --json " + fixture("tangent_pair.json"));
  CHECK(r.code == 0);
  auto j = qconic::Json::parse(r.out);
  CHECK(j.dump().find("NotFree") != std::string::npos);
  CHECK(run("analyze " + fixture("pencil_k3.json")).code == 0);
}

TEST_CASE("structured output is byte-for-byte deterministic") {
  for (const char* f : {"generic_pair.json", "pencil_k4.json"}) {
    auto a = run("analyze --json " + fixture(f));
    auto b = run("analyze --json " + fixture(f));
    auto c = run("analyze --json --jobs 3 --backend scalar " + fixture(f));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  CHECK(run("enumerate 6 --json").out == run("enumerate 6 --json --jobs 2").out);
  CHECK(run("verify a --kmax 7 --json").out == run("verify a --kmax 7 --json --jobs 4").out);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run("analyze " + fixture("malformed.json")).code == 2);
  CHECK(run("analyze " + fixture("singular_member.json")).code == 2);
  CHECK(run("analyze " + fixture("duplicate_members.json")).code == 2);
  CHECK(run("analyze /nonexistent/file.json").code == 2);
  CHECK(run("freeness \"x^2*y\"").code == 2);
  CHECK(run("freeness \"x^2 + y\"").code == 2);
  CHECK(run("freeness \"x + \"").code == 2);
  CHECK(run("generate --g1 \"x^2+y^2-2*z^2\" --g2 \"x^2-y^2\" --params 0,1").code == 2);
  CHECK(run("enumerate 2 --filter bogus").code == 2);
  CHECK(run("analyze --backend sse9 " + fixture("pencil_k3.json")).code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("freeness command") {
  auto r = run("freeness --json \"x*y*z\"");
  CHECK(r.code == 0);
  auto j = qconic::Json::parse(r.out);
  CHECK(j["degree"] == 3);
  CHECK(j["tau"] == 3);
  CHECK(j["mdr"] == 1);
  CHECK(r.out.find("\"Free\"") != std::string::npos);
  auto s = qconic::Json::parse(run("freeness --json \"x^2+y^2+z^2\"").out);
  CHECK(s["mdr"] == 1);
  CHECK(s["tau"] == 0);
  CHECK(run("freeness \"(x^2-y*z)*(x^2+y*z)\"").code == 0);
}

TEST_CASE("enumerate command") {
  auto j = qconic::Json::parse(run("enumerate 2 --json").out);
  CHECK(j["admissible"] == 4);
  CHECK(j["rows"].size() == 4);
  auto bad = qconic::Json::parse(run("enumerate 5 --filter theorem-b --failing --json").out);
  bool found = false;
  for (const auto& row : bad["rows"])
    if (row["n2"] == 0 && row["t2"] == 20 && row["n3"] == 0 && row["n4"] == 0) found = true;
  CHECK(found);
  auto three = qconic::Json::parse(run("enumerate 3 --filter theorem-b --failing --json").out);
  CHECK(three["rows"].empty());
}

TEST_CASE("verify command") {
  auto a = qconic::Json::parse(run("verify a --kmax 2 --json").out);
  CHECK(a["vectors_checked"] == 4);
  CHECK(a["counterexamples"].empty());
  auto ten = run("verify a --kmax 10 --json");
  CHECK(ten.code == 0);
  CHECK(qconic::Json::parse(ten.out)["counterexamples"].empty());
  auto b = run("verify b --k 3");
  CHECK(b.code == 0);
  CHECK(b.out.find("117/16") != std::string::npos);
  CHECK(b.out.find("45/8") != std::string::npos);
}

TEST_CASE("generate writes files that analyze accepts") {
  auto r = run("generate --g1 \"x^2+y^2-2*z^2\" --g2 \"x^2-y^2\" --params 0,2,3");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(fixture("pencil_k3.json")));
  std::string tmp = "/tmp/qconic_generated_k4.json";
  CHECK(run("generate --g1 \"x^2+y^2-2*z^2\" --g2 \"x^2-y^2\" --params 0,2,3,4 -o " + tmp).code == 0);
  auto an = run("analyze --json " + tmp);
  CHECK(an.code == 0);
  CHECK(qconic::Json::accept(an.out));
  CHECK(an.out.find("\"n4\": 4") != std::string::npos);
  std::remove(tmp.c_str());
}
