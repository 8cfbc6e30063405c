#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  std::vector<json> records() const {
    std::vector<json> r;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
      if (!line.empty() && line.front() == '{') r.push_back(json::parse(line));
    return r;
  }
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("sparsehalf_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

CliRun run(const std::string& args) {
  const fs::path out = scratch() / "stdout";
  const fs::path err = scratch() / "stderr";
  const std::string cmd = std::string(SPARSEHALF_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, GenTuran) {
  const CliRun r = run("gen turan 3 12");
  ASSERT_EQ(r.code, 0) << r.err;
  const CliRun p = run("gen turan 3 6");
  EXPECT_EQ(trim(p.out), "E]~o");
}

TEST(Cli, GenOtherKinds) {
  EXPECT_EQ(trim(run("gen petersen").out), "IheA@GUAo");
  EXPECT_EQ(run("gen blowup c5 2").code, 0);
  EXPECT_EQ(run("gen turan 3 7").code, 0);
  EXPECT_EQ(run("gen circulant 8 1 3").code, 0);
  EXPECT_EQ(run("gen hypercube 3").code, 0);
  EXPECT_EQ(run("gen nonsense 3").code, 3);
}

TEST(Cli, SparseHalfOnTuranTwelve) {
  const fs::path f = write_file("t312.g6", trim(run("gen turan 3 12").out) + "\n");
  const CliRun r = run("sparse-half " + f.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = r.records();
  ASSERT_EQ(recs.size(), 1u);
  const json& rec = recs.front();
  EXPECT_EQ(rec.at("n"), 12);
  EXPECT_EQ(rec.at("e"), 48);
  EXPECT_EQ(rec.at("record"), 0);
  EXPECT_TRUE(rec.contains("tool_version"));
  EXPECT_TRUE(rec.contains("wall_ms"));
  EXPECT_EQ(rec.at("result").at("achieved"), 8);
  EXPECT_EQ(rec.at("result").at("verdict"), "equality");
  EXPECT_EQ(rec.at("result").at("size"), 6);
}

TEST(Cli, SparseHalfKeepsInputOrderWithThreads) {
  std::string text;
  for (const char* g : {"turan 3 6", "petersen", "blowup c5 2", "turan 3 12", "cycle 8"})
    text += trim(run(std::string("gen ") + g).out) + "\n";
  const fs::path f = write_file("batch.g6", text);
  const CliRun r = run("-j 4 sparse-half " + f.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = r.records();
  ASSERT_EQ(recs.size(), 5u);
  for (std::size_t i = 0; i < recs.size(); ++i) EXPECT_EQ(recs[i].at("record"), i);
  EXPECT_EQ(recs[1].at("result").at("achieved"), 2);
  EXPECT_EQ(recs[4].at("result").at("achieved"), 0);
}

TEST(Cli, ExplainAddsThresholds) {
  const fs::path f = write_file("t36.g6", "E]~o\n");
  const CliRun r = run("sparse-half --explain " + f.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.records().front().contains("thresholds"));
}

TEST(Cli, K4IsAPreconditionFailure) {
  const fs::path f = write_file("k5.g6", trim(run("gen complete 5").out) + "\n");
  const CliRun r = run("sparse-half " + f.string());
  EXPECT_EQ(r.code, 3);
  EXPECT_NE((r.out + r.err).find("0 1 2 3"), std::string::npos) << r.out << r.err;
  EXPECT_EQ(run("sparse-half --allow-k4 " + f.string()).code, 0);
}

TEST(Cli, ParseErrorAndUsage) {
  const fs::path f = write_file("bad.g6", "E]~o\n~~~\n");
  EXPECT_EQ(run("sparse-half " + f.string()).code, 2);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("sparse-half").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST(Cli, Oracle) {
  const fs::path t = write_file("t36o.g6", "E]~o\n");
  const CliRun r = run("oracle --size 3 " + t.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.records().front().at("minimum"), 2);
  const fs::path p = write_file("pet.g6", trim(run("gen petersen").out) + "\n");
  const CliRun q = run("oracle --size 5 " + p.string());
  EXPECT_EQ(q.records().front().at("minimum"), 2);
  EXPECT_EQ(q.records().front().at("witness").size(), 5u);
  const fs::path big = write_file("t331.g6", trim(run("gen turan 3 31").out) + "\n");
  EXPECT_EQ(run("oracle " + big.string()).code, 3);
}

TEST(Cli, VerifyExtremal) {
  std::string text;
  for (const char* g : {"turan 3 6", "turan 3 12", "blowup c5 2", "petersen"})
    text += trim(run(std::string("gen ") + g).out) + "\n";
  const fs::path f = write_file("extremal.g6", text);
  const CliRun r = run("verify-extremal " + f.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = r.records();
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].at("verdict"), "conforms-extremal");
  EXPECT_EQ(recs[1].at("verdict"), "conforms-extremal");
  EXPECT_EQ(recs[2].at("verdict"), "conforms-strict");
  EXPECT_EQ(recs[3].at("verdict"), "conforms-strict");
}

TEST(Cli, Bipartite) {
  const fs::path f = write_file("t312b.g6", trim(run("gen turan 3 12").out) + "\n");
  const CliRun r = run("bipartite " + f.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json rec = r.records().front();
  EXPECT_EQ(rec.at("removed"), 16);
  EXPECT_EQ(rec.at("a").size(), 6u);
  EXPECT_EQ(rec.at("within_bound"), true);
}

TEST(Cli, CertifyAndReplay) {
  const fs::path out = scratch() / "ell.json";
  const CliRun r = run("certify ell --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.records().front().at("status"), "proved");
  ASSERT_TRUE(fs::exists(out));
  const CliRun rep = run("certify --replay " + out.string());
  EXPECT_EQ(rep.code, 0) << rep.out << rep.err;

  json cert = json::parse(slurp(out));
  cert.at("boxes").erase(cert.at("boxes").begin());
  const fs::path bad = write_file("ell_bad.json", cert.dump());
  EXPECT_EQ(run("certify --replay " + bad.string()).code, 5);
}

TEST(Cli, CertifyExitCodes) {
  const CliRun m = run("certify m");
  EXPECT_EQ(m.code, 0) << m.err;
  const CliRun b = run("certify m --budget 100");
  EXPECT_EQ(b.code, 4);
  EXPECT_FALSE(b.err.empty());
  EXPECT_EQ(run("certify ell --margin 1000").code, 5);
  EXPECT_EQ(run("certify ell --margin 1/100 --budget 20000").code, 4);
  EXPECT_EQ(run("certify nope").code, 3);
  EXPECT_EQ(run("certify closed-forms").code, 0);
}
