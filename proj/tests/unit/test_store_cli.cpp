#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ddseries/cli/cli.hpp"
#include "ddseries/store/store.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ddseries;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("ddseries_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ddseries");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(store::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(store::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("atomic write replaces content and leaves no temporaries") {
  TempDir tmp;
  const auto p = tmp.path / "blob.txt";
  store::atomic_write(p, "first");
  store::atomic_write(p, "second");
  CHECK(slurp(p) == "second");
  CHECK(store::file_digest(p) == store::sha256_hex("second"));
  int files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) ++files;
  CHECK(files == 1);
  CHECK_THROWS(store::file_digest(tmp.path / "missing"));
}

TEST_CASE("cache hits, misses and recovers from bad blobs") {
  TempDir tmp;
  std::ostringstream warnings;
  const store::Cache cache(tmp.path, "v1", &warnings);
  const json key = {{"kind", "test"}, {"n", 3}};
  int computed = 0;
  auto compute = [&] {
    ++computed;
    return json{{"x", 42}};
  };
  CHECK_FALSE(cache.lookup(key).has_value());
  CHECK(cache.get_or_compute(key, compute) == json{{"x", 42}});
  CHECK(cache.get_or_compute(key, compute) == json{{"x", 42}});
  CHECK(computed == 1);
  CHECK(cache.path_for(key).filename() == store::sha256_hex(key.dump()) + ".json");

  SUBCASE("corrupt blob") {
    store::atomic_write(cache.path_for(key), "{not json");
    CHECK(cache.get_or_compute(key, compute) == json{{"x", 42}});
    CHECK(computed == 2);
    CHECK_FALSE(warnings.str().empty());
  }
  SUBCASE("other tool version") {
    const store::Cache other(tmp.path, "v2", &warnings);
    CHECK_FALSE(other.lookup(key).has_value());
    CHECK_FALSE(warnings.str().empty());
  }
  SUBCASE("validator rejects") {
    auto reject = [](const json& j) {
      if (!j.contains("y")) throw std::runtime_error("missing y");
    };
    CHECK_FALSE(cache.lookup(key, reject).has_value());
  }
  SUBCASE("blob stored under a different key") {
    const json other_key = {{"kind", "test"}, {"n", 4}};
    fs::copy_file(cache.path_for(key), cache.path_for(other_key));
    CHECK_FALSE(cache.lookup(other_key).has_value());
  }
}

TEST_CASE("manifest digest ignores timing and output") {
  store::RunManifest a;
  a.subcommand = "enumerate";
  a.parameters = {{"d", 2}};
  a.tool_version = "v1";
  auto b = a;
  b.wall_time_seconds = 12.5;
  b.output_digest = "ff";
  CHECK(a.digest() == b.digest());
  b.parameters["d"] = 3;
  CHECK(a.digest() != b.digest());
  CHECK(a.to_json().at("manifest_digest") == a.digest());
}

TEST_CASE("cli enumerate") {
  const auto r = run({"enumerate", "--model", "saw", "--d", "2", "--n", "4"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.contains("manifest_digest"));
  const auto& counts = j.at("result").at("counts");
  REQUIRE(counts.size() >= 4);
  std::vector<std::string> got;
  for (const auto& c : counts) got.push_back(c.is_string() ? c.get<std::string>() : c.dump());
  CHECK(got[got.size() - 4] == "4");
  CHECK(got.back() == "100");
  CHECK(run({"enumerate", "--model", "saw", "--d", "2", "--n", "4"}).out == r.out);

  const auto csv = run({"enumerate", "--model", "saw", "--d", "2", "--n", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("100") != std::string::npos);
  CHECK(csv.out.find('{') == std::string::npos);
}

TEST_CASE("cli budget exhaustion") {
  const auto r = run({"enumerate", "--model", "saw", "--d", "3", "--n", "12", "--budget", "100000"});
  CHECK(r.code == 3);
  CHECK(r.err.find("complete through n = 8") != std::string::npos);
  CHECK(json::parse(r.out).at("result").at("partial") == true);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate", "--d", "0", "--n", "4"}).code == 2);
  CHECK(run({"enumerate", "--model", "lattice", "--d", "2", "--n", "4"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"alpha", "--table", "/nonexistent.json", "--n", "3"}).code == 2);
  CHECK(run({"enumerate", "--model", "memory", "--d", "2", "--n", "4"}).code == 2);
}

TEST_CASE("cli alpha with an empty table") {
  TempDir tmp;
  const auto table = tmp.path / "empty.json";
  store::atomic_write(table, R"({"max_b": 4, "entries": []})");
  const auto r = run({"alpha", "--table", table.string(), "--n", "4"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("result").at("alpha") == json::array({"1/1", "0/1", "0/1", "0/1"}));
  CHECK(j.at("result").at("routes_agree") == true);
}

TEST_CASE("cli output file, manifest and cache") {
  TempDir tmp;
  const auto out = tmp.path / "census.json";
  const auto cache = tmp.path / "cache";
  std::vector<std::string> args = {"--out", out.string(), "--cache", cache.string(), "enumerate", "--d", "2", "--n", "6"};
  REQUIRE(run(args).code == 0);
  const auto first = slurp(out);
  const auto manifest = json::parse(slurp(out.string() + ".manifest.json"));
  CHECK(manifest.at("output_digest") == store::sha256_hex(first));
  CHECK(json::parse(first).at("manifest_digest") == manifest.at("manifest_digest"));
  int blobs = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(cache)) ++blobs;
  CHECK(blobs == 1);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(out) == first);

  const auto env_cache = tmp.path / "env_cache";
  ::setenv("DDSERIES_CACHE", env_cache.string().c_str(), 1);
  REQUIRE(run({"enumerate", "--d", "2", "--n", "5"}).code == 0);
  ::unsetenv("DDSERIES_CACHE");
  CHECK(fs::exists(env_cache));
}

TEST_CASE("cli lemma suite") {
  const auto r = run({"check", "--suite", "lemmas"});
  CHECK(r.code == 0);
  CHECK(run({"check", "--suite", "lemmas"}).out == r.out);
}

TEST_CASE("cli borel on a toy") {
  const auto r = run({"borel", "--toy", "geometric", "--length", "41", "--s", "0.5", "--pade-m", "20", "--pade-n", "20"});
  CHECK(r.code == 0);
  CHECK(run({"borel", "--toy", "saw"}).code == 1);
}
