#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("check") {
  const Run ok = run("check --m 1 --n 1 --p 3 --poly \"x1 - y1\"");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("overall=true") != std::string::npos);
  CHECK(ok.out.find("strict=true") != std::string::npos);
  CHECK(ok.out.find("p_balanced=false") != std::string::npos);

  const Run no = run("check --m 1 --n 1 --p 3 --poly x1");
  CHECK(no.code == 1);
  CHECK(no.out.find("overall=false") != std::string::npos);

  CHECK(run("check --m 1 --n 1 --p 3 --poly \"x1 +\"").code == 2);
  CHECK(run("check --m 1 --n 1 --p 3 --poly x2").code == 2);
  CHECK(run("check --m 1 --n 1 --p 4 --poly x1").code == 2);
  CHECK(run("check --m 1 --n 1 --p 3").code == 2);
  CHECK(run("check --m 2 --n 0 --p 3 --poly \"x1 + x2\"").out.find("strict=n/a") != std::string::npos);
}

TEST_CASE("check reads a file") {
  const std::string path = "ssym_cli_test_input.txt";
  std::ofstream(path) << "y1^2 - x1*y1\n";
  CHECK(run("check --p 3 --file " + path).code == 0);
  std::remove(path.c_str());
  CHECK(run("check --p 3 --file /nonexistent/input").code == 2);
}

TEST_CASE("decompose") {
  const Run c2 = run("decompose --m 1 --n 1 --p 3 --poly \"y1^2 - x1*y1\" --verify");
  CHECK(c2.code == 0);
  CHECK_FALSE(c2.out.empty());
  CHECK(run("decompose --p 3 --poly 2").out == "2\n");
  CHECK(run("decompose --p 3 --poly x1").code == 1);
  CHECK(run("decompose --m 2 --n 2 --p 5 --poly \"x1^5*x2^5 + y1*y2 - 1\" --verify").code == 1);
  const Run big = run("decompose --m 2 --n 2 --p 3 --poly \"x1*x2*y1^2*y2^2 + x1 + x2 - y1 - y2\" --verify");
  CHECK(big.code == 0);
}

TEST_CASE("vk") {
  const Run a = run("vk --m 1 --n 1 --p 3 --k 1");
  CHECK(a.code == 0);
  CHECK(a.out == "2*x1*y1 + y1^2\n");
  CHECK(run("vk --m 1 --n 1 --p 3 --k 1 --show-psi").out == "2*x1*y1 + y1^2\n0\n0\n");
  const Run b = run("vk --m 2 --n 1 --p 3 --k 1 --show-psi");
  CHECK(b.out == "2*x1*x2*y1 + x1*y1^2 + x2*y1^2\nT^3\n0\n");
  CHECK(run("vk --m 1 --n 1 --p 3 --k 3").code == 2);
  CHECK(run("vk --m 0 --n 1 --p 3 --k 1").code == 2);
}

TEST_CASE("dims") {
  const Run a = run("dims --m 1 --n 1 --p 3 --dmax 6");
  CHECK(a.code == 0);
  std::size_t lines = 0, trues = 0;
  for (std::size_t pos = 0; (pos = a.out.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  for (std::size_t pos = 0; (pos = a.out.find(",true", pos)) != std::string::npos; ++pos) ++trues;
  CHECK(lines == 8);
  CHECK(trues == 7);
  CHECK(a.out.rfind("m,n,p,d,dim_As,dim_generated,match\n", 0) == 0);
  CHECK(run("dims --m 1 --n 1 --p 3 --dmax 0").out == "m,n,p,d,dim_As,dim_generated,match\n1,1,3,0,1,1,true\n");
  // partitions of 0..4 into at most 2 parts: 1 1 2 2 3
  const Run y = run("dims --m 0 --n 2 --p 3 --dmax 4");
  CHECK(y.out.find("0,2,3,4,3,3,true") != std::string::npos);
  CHECK(y.out.find("0,2,3,3,2,2,true") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check --bogus").code == 2);
  CHECK(run("--help").code == 0);
}
