#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(CZMORPH_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty() || args.rfind("analyze", 0) == 0) cmd = "printf '" + input + "' | " + cmd;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli generate") {
  auto r = run("generate korek InstrSg");
  CHECK(r.status == 0);
  CHECK(r.out == "korkem\n");
}

TEST_CASE("cli trace") {
  auto r = run("trace 'korek^2P0^E1em' korekem");
  CHECK(r.status == 0);
  CHECK(r.out.find("rejected korekem\t\"Deletion of e\" at position 4") != std::string::npos);
}

TEST_CASE("cli analyze") {
  auto empty = run("analyze");
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());
  auto r = run("analyze", "matce\\nzzz\\n");
  CHECK(r.out == "matce\tmatka\tDatSg\tfem-a-person\nmatce\tmatka\tLocSg\tfem-a-person\nzzz\t?\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run("").status == 1);
  CHECK(run("generate").status == 1);
  CHECK(run("--lexicon /nonexistent/x.lexicon generate korek InstrSg").status == 2);
  CHECK(run("generate nope NomSg").status == 3);
  CHECK(run("conflicts").status == 0);
}

TEST_CASE("cli json output is reproducible") {
  for (const char* args : {"--json expand korek", "--json analyze matce korkem zzz",
                           "--json trace 'korek^2P0^E1em'", "--json conflicts"}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK_FALSE(a.out.empty());
    CHECK(a.out == b.out);
  }
}
