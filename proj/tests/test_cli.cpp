#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "REPGROWTH_CACHE_DIR=") {
  std::string cmd = env + " '" REPGROWTH_CLI "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string temp_dir(const std::string& tag) {
  auto d = std::filesystem::temp_directory_path() / ("repgrowth_cli_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d.string();
}

}  // namespace

TEST_CASE("irr on G*_{7,2} over GF(4)") {
  auto r = run("irr --group 'gstar 7 2' --field 4 --maxdim 4");
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  // eta(7) = 3 and gcd(3, 4 - 1) = 3 linear characters
  CHECK(j["r_star"][1] == 3);
  CHECK(j["p"] == 2);
  CHECK(j["k"] == 2);
  CHECK(j["D"] == 4);
  CHECK(j["request"]["config"]["seed"] == 1);
  CHECK(j["request"]["config"]["caps"].contains("enumeration"));
}

TEST_CASE("regular chop of SL(3,2) over GF(2)") {
  auto r = run("chop --group 'sl 3 2' --field 2 --regular");
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  std::vector<int> dims;
  for (auto& f : j["factors"]) dims.push_back(f["dim"]);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 3, 3, 8});
  CHECK(j["total_dim"] == 168);
}

TEST_CASE("csv columns") {
  auto r = run("--format csv irr --group 'sym 3' --field 2 --maxdim 3");
  REQUIRE(r.status == 0);
  CHECK(r.out == "n,r,r_star,R\n1,1,1,1\n2,1,1,2\n3,0,0,2\n");
}

TEST_CASE("byte-identical output across runs") {
  for (std::string args : {"irr --group 'alt 5' --field 4 --maxdim 5", "chief --group 'sym 4' --fp1",
                           "--seed 7 cohom --group 'sl 2 5' --field 5 --ag"}) {
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache hits equal recomputation") {
  auto dir = temp_dir("cache");
  std::string env = "REPGROWTH_CACHE_DIR='" + dir + "'";
  for (std::string args : {"irr --group 'gstar 7 2' --field 4 --maxdim 4", "chop --group 'sl 3 2' --field 2 --regular",
                           "epi --group 'sym 4' --target 'sym 3'", "check families --c 2",
                           "--format csv irr --group 'sym 4' --field 3"}) {
    auto miss = run(args, env);
    auto entries = std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator());
    auto hit = run(args, env);
    auto fresh = run("--no-cache " + args, env);
    CHECK(miss.out == hit.out);
    CHECK(miss.status == hit.status);
    CHECK(hit.out == fresh.out);
    CHECK(hit.status == fresh.status);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == entries);
  }
  // seed is part of the key
  auto before = std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator());
  run("--seed 2 irr --group 'gstar 7 2' --field 4 --maxdim 4", env);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == before + 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(run("irr --group 'nonsense 3' --field 2").status == 2);
  CHECK(run("irr --group 'sym 3' --field 6").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--format csv chief --group 'sym 3'").status == 2);
  CHECK(run("verify --suite nonsense").status == 2);
  CHECK(run("--cap-enum 10 chief --group 'sym 4'").status == 2);
  CHECK(run("check families --c 3").status == 0);
  CHECK(run("check families --c 2").status == 1);
  CHECK(run("verify --suite gstar").status == 0);
}

TEST_CASE("verify report") {
  auto r = run("verify --criterion 2 --criterion 3");
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["criteria"].size() == 2);
  CHECK(j["criteria"][0]["id"] == 2);
  CHECK(j["criteria"][1]["id"] == 3);
  CHECK(j["pass"] == true);
}
