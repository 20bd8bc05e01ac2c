#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "imp/cli.hpp"

namespace imp::cli {
namespace {

const char* kSum = "while x < n do x := x + 1; y := x + y done";
const char* kEx1 = "while x < n do [le(x,n) /\\ pp(y,x)] x:=x+1; y:=x+y done";

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run(RunConfig cfg) {
  std::ostringstream out, err;
  int code = execute(cfg, out, err);
  return {code, out.str(), err.str()};
}

Captured run_args(std::vector<std::string> args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = main(args, in, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command c, std::string program) {
  RunConfig cfg;
  cfg.command = c;
  cfg.program = std::move(program);
  return cfg;
}

TEST(CmdRun, Outcomes) {
  RunConfig cfg = config(Command::Run, kSum);
  cfg.env = "x=0,y=0,n=3";
  Captured c = run(cfg);
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(c.out, "x=3,y=6,n=3\n");

  c = run(config(Command::Run, "skip"));
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(c.out, "\n");

  EXPECT_EQ(run(config(Command::Run, "while 0 < 1 do skip done")).code, kOutOfFuel);
  EXPECT_EQ(run(config(Command::Run, "x := 1")).code, kRuntimeError);
  EXPECT_EQ(run(config(Command::Run, "x := ")).code, kUsage);

  cfg.env = "x=";
  EXPECT_EQ(run(cfg).code, kUsage);
}

TEST(CmdVcg, PaperExample) {
  RunConfig cfg = config(Command::Vcg, kEx1);
  cfg.post = "pp(y,n)";
  Captured c = run(cfg);
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("pc: le(x,n) /\\ pp(y,x)\n"), std::string::npos);
  EXPECT_NE(c.out.find("condition 2: "), std::string::npos);
  EXPECT_EQ(c.out.find("condition 3: "), std::string::npos);
  EXPECT_NE(c.out.find("no counterexamples"), std::string::npos);

  cfg.post = "pp(x,n)";
  c = run(cfg);
  EXPECT_EQ(c.code, kCounterexample);
  EXPECT_NE(c.out.find("counterexample to condition 1"), std::string::npos);
}

TEST(CmdVcg, SkipAndWarnings) {
  RunConfig cfg = config(Command::Vcg, "skip");
  cfg.post = "mystery(x)";
  Captured c = run(cfg);
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("pc: mystery(x)"), std::string::npos);
  EXPECT_NE(c.err.find("predicate 'mystery'"), std::string::npos);
  cfg.post = "x <";
  EXPECT_EQ(run(cfg).code, kUsage);
}

TEST(CmdVcg, JsonMatchesText) {
  RunConfig cfg = config(Command::Vcg, kEx1);
  cfg.post = "pp(x,n)";
  cfg.format = Format::Json;
  Captured c = run(cfg);
  EXPECT_EQ(c.code, kCounterexample);
  auto doc = nlohmann::json::parse(c.out);
  EXPECT_EQ(doc["status"], "counterexample");
  EXPECT_EQ(doc["pc"], "le(x,n) /\\ pp(y,x)");
  ASSERT_EQ(doc["conditions"].size(), 2u);
  EXPECT_EQ(doc["conditions"][0]["concl"], "pp(x,n)");
  EXPECT_EQ(doc["counterexample"][0]["condition"], 1);
}

TEST(CmdAbsint, SumProgram) {
  RunConfig cfg = config(Command::Absint, kSum);
  cfg.abenv = "x=[0,0],y=[0,0],n=[3,3]";
  Captured c = run(cfg);
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("final: 2 < x /\\ -1 < y /\\ 2 < n /\\ n < 4"), std::string::npos);

  cfg.verify = true;
  cfg.format = Format::Json;
  c = run(cfg);
  EXPECT_EQ(c.code, kOk);
  auto doc = nlohmann::json::parse(c.out);
  EXPECT_EQ(doc["status"], "verified");
  EXPECT_EQ(doc["env"], "x=[3,+inf],y=[0,+inf],n=[3,3]");
}

TEST(CmdAbsint, SkipAndDefaults) {
  Captured c = run(config(Command::Absint, "skip"));
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(c.out, "{ 0 < 1 } skip\nfinal: 0 < 1\n");

  c = run(config(Command::Absint, "x := y"));
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.err.find("variable 'x'"), std::string::npos);

  RunConfig cfg = config(Command::Absint, "skip");
  cfg.abenv = "x=[2,1]";
  EXPECT_EQ(run(cfg).code, kUsage);
}

TEST(CmdCheck, Examples) {
  RunConfig cfg = config(Command::Check, kEx1);
  cfg.env = "x=0,y=0,n=3";
  EXPECT_EQ(run(cfg).code, kOk);

  cfg.program = "while x < n do [pp(x,y)] x:=x+1; y:=x+y done";
  Captured c = run(cfg);
  EXPECT_EQ(c.code, kCounterexample);
  EXPECT_NE(c.out.find("violation at /: pp(x,y) fails with x=2,y=3,n=3"), std::string::npos);

  c = run(config(Command::Check, "{0 < 0} skip"));
  EXPECT_EQ(c.code, kCounterexample);
  EXPECT_NE(c.out.find("violation at /"), std::string::npos);

  EXPECT_EQ(run(config(Command::Check, "{0 < 1} while 0 < 1 do [0 < 1] skip done")).code,
            kOutOfFuel);
}

TEST(FrontEnd, ArgumentsAndStdin) {
  Captured c = run_args({"run", "--env", "x=0,y=0,n=3", "-"}, kSum);
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(c.out, "x=3,y=6,n=3\n");

  c = run_args({"run", "--fuel", "3", "--env", "x=0,y=0,n=3", "-"}, kSum);
  EXPECT_EQ(c.code, kOutOfFuel);

  c = run_args({"vcg", "--post", "pp(y,n)", "--format", "json", "-"}, kEx1);
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(c.out)["status"], "valid");

  EXPECT_EQ(run_args({"run", "--samples", "0", "-"}, "skip").code, kUsage);
  EXPECT_EQ(run_args({"run", "--format", "xml", "-"}, "skip").code, kUsage);
  EXPECT_EQ(run_args({"frobnicate", "-"}, "skip").code, kUsage);
  EXPECT_EQ(run_args({"run", "/nonexistent/file.imp"}, "").code, kUsage);
  EXPECT_EQ(run_args({"--help"}, "").code, kOk);
}

}  // namespace
}  // namespace imp::cli
