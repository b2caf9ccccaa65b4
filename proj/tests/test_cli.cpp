#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "dsr_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt";
  std::string cmd = std::string(DSR_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                    (scratch_dir() / "stderr.txt").string();
  int raw = std::system(cmd.c_str());
  int code = raw == -1 ? -1 : WEXITSTATUS(raw);
  return {code, read_file(out)};
}

const char* kStarInstance =
    "p dsr 4 3 4 1\n"
    "e 1 2\n"
    "e 1 3\n"
    "e 1 4\n"
    "d 2 3 4\n";

}  // namespace

TEST_CASE("solve: yes-instance prints the target and exits 0") {
  fs::path inst = write_file("star.dsr", kStarInstance);
  for (std::string strategy : {"auto", "oracle", "fpt-ds", "fpt-vc"}) {
    RunResult r = run("solve " + inst.string() + " --strategy " + strategy);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("yes\n") != std::string::npos);
    CHECK(r.output.find("target 1") != std::string::npos);
  }
  // Forests go through the class strategy too.
  RunResult r = run("solve " + inst.string() + " --strategy class");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("target 1") != std::string::npos);
}

TEST_CASE("solve: no-instance exits 1") {
  fs::path inst = write_file("frozen.dsr",
                             "p dsr 3 2 1 0\n"
                             "e 1 2\n"
                             "e 2 3\n"
                             "d 2\n");
  RunResult r = run("solve " + inst.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("no\n") != std::string::npos);
}

TEST_CASE("solve: malformed file exits 2") {
  fs::path inst = write_file("broken.dsr", "p dsr 2 0\nd\n");
  CHECK(run("solve " + inst.string()).exit_code == 2);
  fs::path nondom = write_file("nondom.dsr", "p dsr 3 1 2 1\ne 1 2\nd 1\n");
  CHECK(run("solve " + nondom.string()).exit_code == 2);
  CHECK(run("solve " + scratch_dir().string() + "/missing.dsr").exit_code == 2);
}

TEST_CASE("solve: oracle cap exits 3") {
  std::ostringstream big;
  big << "p dsr 21 20 21 1\n";
  for (int v = 2; v <= 21; ++v) big << "e 1 " << v << "\n";
  big << "d 1\n";
  fs::path inst = write_file("big.dsr", big.str());
  CHECK(run("solve " + inst.string() + " --strategy oracle").exit_code == 3);
  CHECK(run("solve " + inst.string() + " --strategy oracle --cap 21").exit_code == 0);
  // auto dispatches away from the oracle above the cap.
  CHECK(run("solve " + inst.string()).exit_code == 0);
}

TEST_CASE("solve: witness output validates") {
  fs::path inst = write_file("star2.dsr", kStarInstance);
  fs::path witness = scratch_dir() / "witness.seq";
  // The class strategy would skip the move list, so ask the exact search.
  RunResult r =
      run("solve " + inst.string() + " --strategy oracle --witness " + witness.string());
  CHECK(r.exit_code == 0);
  CHECK(run("validate " + inst.string() + " " + witness.string()).exit_code == 0);
}

TEST_CASE("solve: interval evidence") {
  // P4 as intervals; gamma is 2, s = 1 forces a no.
  fs::path inst = write_file("p4.dsr",
                             "p dsr 4 3 4 1\n"
                             "e 1 2\n"
                             "e 2 3\n"
                             "e 3 4\n"
                             "d 2 3\n");
  fs::path model = write_file("p4.intervals",
                              "1 0 1\n"
                              "2 1 2\n"
                              "3 2 3\n"
                              "4 3 4\n");
  RunResult r = run("solve " + inst.string() + " --evidence " + model.string());
  CHECK(r.exit_code == 1);
  // Mismatched evidence is bad input.
  fs::path wrong = write_file("wrong.intervals",
                              "1 0 1\n"
                              "2 2 3\n"
                              "3 4 5\n"
                              "4 6 7\n");
  CHECK(run("solve " + inst.string() + " --evidence " + wrong.string()).exit_code == 2);
}

TEST_CASE("validate exit codes") {
  fs::path inst = write_file("star3.dsr", kStarInstance);
  fs::path good = write_file("good.seq", "+ 1\n- 2\n- 3\n- 4\n");
  fs::path bad = write_file("bad.seq", "- 2\n- 3\n");
  fs::path junk = write_file("junk.seq", "add 1\n");
  CHECK(run("validate " + inst.string() + " " + good.string()).exit_code == 0);
  CHECK(run("validate " + inst.string() + " " + bad.string()).exit_code == 1);
  CHECK(run("validate " + inst.string() + " " + junk.string()).exit_code == 2);
}

TEST_CASE("gen is deterministic under a seed and emits parseable instances") {
  RunResult a = run("gen tree --n 8 --seed 1");
  RunResult b = run("gen tree --n 8 --seed 1");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  RunResult c = run("gen tree --n 8 --seed 2");
  CHECK(c.output != a.output);

  RunResult r1 = run("gen random --n 10 --p 0.3 --seed 7");
  RunResult r2 = run("gen random --n 10 --p 0.3 --seed 7");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);

  fs::path gen = write_file("gen.dsr", r1.output);
  CHECK(run("solve " + gen.string() + " --strategy oracle").exit_code <= 1);

  RunResult split = run("gen split --na 3 --nb 5 --p 0.4 --seed 3");
  CHECK(split.exit_code == 0);
  fs::path split_file = write_file("split.dsr", split.output);
  CHECK(run("solve " + split_file.string()).exit_code <= 1);
}

TEST_CASE("gen from-ds builds the all-vertices instance") {
  fs::path c4 = write_file("c4.dsr",
                           "p dsr 4 4 2 1\n"
                           "e 1 2\n"
                           "e 2 3\n"
                           "e 3 4\n"
                           "e 1 4\n"
                           "d 1 3\n");
  RunResult r = run("gen from-ds --input " + c4.string() + " --s 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("p dsr 4 4 4 2\n") == 0);
  CHECK(r.output.find("d 1 2 3 4\n") != std::string::npos);
}

TEST_CASE("kernelize emits a parseable kernel plus a log") {
  // K4: three interchangeable out-of-core vertices shrink to one.
  fs::path inst = write_file("k4.dsr",
                             "p dsr 4 6 3 0\n"
                             "e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
                             "d 2 3\n");
  fs::path out = scratch_dir() / "kernel.dsr";
  fs::path log = scratch_dir() / "kernel.log";
  RunResult r =
      run("kernelize " + inst.string() + " -o " + out.string() + " --log " + log.string());
  CHECK(r.exit_code == 0);
  std::string kernel = read_file(out);
  CHECK(kernel.find("p dsr 2 1") == 0);
  std::string logtext = read_file(log);
  CHECK(logtext.find("\"r1\"") != std::string::npos);
  CHECK(logtext.find("\"map\"") != std::string::npos);
}

TEST_CASE("reduce subcommands emit parseable instances and name maps") {
  fs::path vcr = write_file("vcr.dsr",
                            "p vcr 3 2 2 1\n"
                            "e 1 2\n"
                            "e 2 3\n"
                            "d 2\n");
  fs::path map = scratch_dir() / "map.json";
  RunResult split = run("reduce split --input " + vcr.string() + " --map " + map.string());
  CHECK(split.exit_code == 0);
  CHECK(split.output.find("p dsr 5 7") == 0);
  CHECK(read_file(map).find("w(") != std::string::npos);

  RunResult gadget = run("reduce gadget --input " + vcr.string());
  CHECK(gadget.exit_code == 0);
  CHECK(gadget.output.find("p dsr 5 6") == 0);

  fs::path split_file = write_file("split_out.dsr", split.output);
  RunResult bip = run("reduce bipartite --input " + split_file.string());
  CHECK(bip.exit_code == 0);
  CHECK(bip.output.find("p dsr 7") == 0);

  fs::path ds = write_file("k2.dsr", "p dsr 2 1 2 1\ne 1 2\nd 1\n");
  RunResult w2 = run("reduce w2 --input " + ds.string() + " --kprime 1 --map " + map.string());
  CHECK(w2.exit_code == 0);
  CHECK(w2.output.find("p dsr 6") == 0);
  CHECK(read_file(map).find("v1,") != std::string::npos);

  // DSR instance fed to a VCR reduction is bad input.
  fs::path dsr = write_file("plain.dsr", kStarInstance);
  CHECK(run("reduce split --input " + dsr.string()).exit_code == 2);
}

TEST_CASE("auto agrees with the oracle across generated instances") {
  for (int seed = 1; seed <= 10; ++seed) {
    RunResult gen = run("gen random --n 7 --p 0.4 --seed " + std::to_string(seed));
    REQUIRE(gen.exit_code == 0);
    fs::path inst = write_file("agree.dsr", gen.output);
    int via_auto = run("solve " + inst.string()).exit_code;
    int via_oracle = run("solve " + inst.string() + " --strategy oracle").exit_code;
    CHECK(via_auto == via_oracle);
  }
}
