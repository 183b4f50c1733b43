// End-to-end checks of the command-line tool, driven through the shell.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SPHERETILE_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("solve three-layer prints the published values") {
  const RunResult r = run("solve three-layer --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("a/pi=0.2879") != std::string::npos);
  CHECK(r.output.find("b/pi=0.3560") != std::string::npos);
  CHECK(r.output.find("c/pi=0.1615") != std::string::npos);
}

TEST_CASE("avc with rational pi units lists the f=16 table") {
  const RunResult r =
      run("avc --alpha 1/2 --beta 1/2 --gamma 3/4 --delta 1/2 --units pi");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ac^2\nd^4\nb^2d^2\nb^4\na^2b^2\na^4\n");
}

TEST_CASE("generate | verify pipeline exits 0") {
  const std::string doc = tmp_path("two_layer_n3.json");
  const RunResult gen = run("generate two-layer --n 3 --d 0,-0.6,-0.8 --out " + doc);
  REQUIRE(gen.exit_code == 0);
  const RunResult ver = run("verify " + doc);
  CHECK(ver.exit_code == 0);
  CHECK(ver.output.find("verification passed") != std::string::npos);
  const RunResult cen = run("census " + doc);
  CHECK(cen.exit_code == 0);
  CHECK(cen.output == "T(6 bcd, 2 a^3)\n");
  std::remove(doc.c_str());
}

TEST_CASE("generate across families verifies, byte-identical reruns") {
  const std::string doc = tmp_path("family.json");
  for (const std::string args :
       {std::string("generate three-layer --n 2"), std::string("generate subdivision --b 0.3"),
        std::string("generate three-layer-flip1 --m 1"),
        std::string("generate three-layer-flip2 --m 1"),
        std::string("generate subdivision-flip"),
        std::string("generate two-layer --n 5 --d 0.93,0.05,-0.36")}) {
    const RunResult r1 = run(args);
    const RunResult r2 = run(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    REQUIRE(run(args + " --out " + doc).exit_code == 0);
    CHECK(run("verify " + doc).exit_code == 0);
  }
  std::remove(doc.c_str());
}

TEST_CASE("render produces svg with matching path count") {
  const std::string doc = tmp_path("three_layer_n2.json");
  REQUIRE(run("generate three-layer --n 2 --out " + doc).exit_code == 0);
  const RunResult r = run("render --pole 0.2,-0.4,0.89 " + doc);
  CHECK(r.exit_code == 0);
  int paths = 0;
  for (size_t pos = r.output.find("<path "); pos != std::string::npos;
       pos = r.output.find("<path ", pos + 1))
    ++paths;
  CHECK(paths == 32);
  std::remove(doc.c_str());
}

TEST_CASE("moduli subcommands") {
  CHECK(run("moduli two-layer --n 3 --d 0,-0.6,-0.8").output == "ConcaveBeta\n");
  CHECK(run("moduli two-layer --n 3 --d 0.93,0.05,-0.36").output == "ConvexInterior\n");
  CHECK(run("moduli subdivision --b 0.2").output == "Valid_a2bc\n");
  CHECK(run("moduli subdivision --b 0.7853981633974483").output == "Reduction(Reduce_a2b2)\n");
  CHECK(run("moduli subdivision --b 1.2").output == "Invalid\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("generate bogus-family").exit_code == 2);
  CHECK(run("solve three-layer --n 1").exit_code == 2);
  CHECK(run("generate subdivision --b 2.0").exit_code == 2);
}

TEST_CASE("verify exits 1 on a damaged document") {
  const std::string doc = tmp_path("damaged.json");
  const RunResult gen = run("generate three-layer --n 2 --out " + doc);
  REQUIRE(gen.exit_code == 0);
  // Flip one edge label in the document text.
  {
    FILE* f = fopen(doc.c_str(), "rb");
    REQUIRE(f);
    std::string text;
    char ch;
    while (fread(&ch, 1, 1, f) == 1) text += ch;
    fclose(f);
    const std::string needle = "\"edges\": [\"a\", \"b\", \"c\", \"a\"]";
    const size_t pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, needle.size(), "\"edges\": [\"a\", \"c\", \"c\", \"a\"]");
    f = fopen(doc.c_str(), "wb");
    fwrite(text.data(), 1, text.size(), f);
    fclose(f);
  }
  const RunResult ver = run("verify " + doc);
  CHECK(ver.exit_code == 1);
  std::remove(doc.c_str());
}
