#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vira/vira.hpp"
#include "vira_cli/cli.hpp"

using nlohmann::json;
using vira::cli::run;

namespace {

const std::string kTestDir = VIRA_TEST_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kTestDir + "/data/" + name; }

std::vector<json> records(const std::string& ndjson) {
  std::vector<json> out;
  std::istringstream in(ndjson);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

std::vector<std::string> text_blocks(const std::string& text) {
  std::vector<std::string> blocks;
  std::istringstream in(text);
  std::string line, cur;
  while (std::getline(in, line)) {
    if (line.empty()) {
      blocks.push_back(cur);
      cur.clear();
    } else {
      cur += line + "\n";
    }
  }
  if (!cur.empty()) blocks.push_back(cur);
  return blocks;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
  int code;
};

// Paths to data files are filled in at run time; goldens never contain them.
std::vector<GoldenCase> golden_cases() {
  return {
      {"verify_witt_jacobi.ndjson", {"verify", "witt-jacobi", "--max-index", "8"}, 0},
      {"verify_cocycle_virasoro.ndjson", {"verify", "cocycle", "--virasoro", "--window", "12"}, 0},
      {"verify_cocycle_sign.ndjson", {"verify", "cocycle", "--input", data("sign_w4.tsv")}, 1},
      {"verify_extension.ndjson", {"verify", "extension", "--max-index", "8"}, 0},
      {"verify_sugawara.ndjson",
       {"verify", "sugawara", "--max-index", "6", "--max-level", "8", "--alpha", "1/2"},
       0},
      {"verify_verma.txt",
       {"verify", "verma", "--c", "-22/5", "--h", "-1/5", "--max-index", "3", "--max-level", "4", "--format",
        "text"},
       0},
      {"reduce_virasoro.ndjson", {"reduce", "--input", data("virasoro_w10.tsv")}, 0},
      {"reduce_coboundary.ndjson", {"reduce", "--input", data("coboundary_w10.tsv")}, 0},
      {"nontrivial_virasoro.ndjson", {"nontrivial", "--virasoro", "--window", "6"}, 0},
      {"nontrivial_coboundary.ndjson", {"nontrivial", "--input", data("coboundary_w10.tsv")}, 0},
  };
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden reports are byte-identical across runs and job counts") {
    const bool update = std::getenv("VIRA_UPDATE_GOLDEN") != nullptr;
    for (const auto& g : golden_cases()) {
      CAPTURE(g.file);
      const Result first = cli(g.args);
      CHECK(first.code == g.code);
      const std::string path = kTestDir + "/golden/" + g.file;
      if (update) {
        std::ofstream(path, std::ios::binary) << first.out;
      }
      CHECK(first.out == read_file(path));
      CHECK(cli(g.args).out == first.out);
      auto parallel = g.args;
      parallel.insert(parallel.end(), {"--jobs", "3"});
      CHECK(cli(parallel).out == first.out);
    }
  }

  TEST_CASE("json keys are sorted") {
    for (const auto& g : golden_cases()) {
      if (g.file.ends_with(".txt")) continue;
      for (const auto& r : records(cli(g.args).out)) {
        std::vector<std::string> keys;
        for (const auto& [k, v] : r.items()) keys.push_back(k);
        CHECK(std::is_sorted(keys.begin(), keys.end()));
      }
    }
  }

  TEST_CASE("text and json carry the same records") {
    for (auto g : golden_cases()) {
      CAPTURE(g.file);
      if (g.file.ends_with(".txt")) g.args.resize(g.args.size() - 2);
      auto as_json = g.args;
      as_json.insert(as_json.end(), {"--format", "json"});
      auto as_text = g.args;
      as_text.insert(as_text.end(), {"--format", "text"});
      const auto js = records(cli(as_json).out);
      const auto blocks = text_blocks(cli(as_text).out);
      REQUIRE(js.size() == blocks.size());
      for (std::size_t i = 0; i < js.size(); ++i) {
        CHECK(vira::cli::parse_text(blocks[i]) == vira::cli::flatten(js[i]));
      }
    }
  }

  TEST_CASE("reduce output content") {
    const auto vir = records(cli({"reduce", "--input", data("virasoro_w10.tsv")}).out);
    REQUIRE(vir.size() == 3);
    CHECK(vir[0]["check"] == "cocycle-identity");
    CHECK(vir[0]["status"] == "pass");
    CHECK(vir[1]["record"] == "reduction");
    CHECK(vir[1]["r"] == "1");
    CHECK(vir[1]["window"] == 10);
    REQUIRE(vir[1]["beta"].size() == 21);
    for (const auto& entry : vir[1]["beta"]) CHECK(entry[1] == "0");
    CHECK(vir[2]["check"] == "reduction-residual");
    CHECK(vir[2]["status"] == "pass");

    // The table was built from beta0(l0) = 1, beta0(l2) = -1/2, beta0(l-3) = 2,
    // so the reduction must return beta = -beta0 and r = 0.
    const auto cob = records(cli({"reduce", "--input", data("coboundary_w10.tsv")}).out);
    REQUIRE(cob.size() == 3);
    CHECK(cob[1]["r"] == "0");
    for (const auto& entry : cob[1]["beta"]) {
      const auto n = entry[0].get<long>();
      const std::string want = n == 0 ? "-1" : n == 2 ? "1/2" : n == -3 ? "-2" : "0";
      CHECK(entry[1] == want);
    }
    CHECK(cob[2]["status"] == "pass");
  }

  TEST_CASE("nontrivial output content") {
    const auto vir = records(cli({"nontrivial", "--virasoro", "--window", "6"}).out);
    REQUIRE(vir.size() == 1);
    CHECK(vir[0]["witness"] == json::array({1, 2}));

    const auto cob = cli({"nontrivial", "--input", data("coboundary_w10.tsv")});
    CHECK(cob.code == 0);
    CHECK(records(cob.out)[0]["witness"].is_null());
    CHECK(records(cob.out)[0]["message"] == "no witness in window");

    const auto empty = cli({"nontrivial", "--virasoro", "--window", "0"});
    CHECK(empty.code == 0);
    CHECK(records(empty.out)[0]["witness"].is_null());
  }

  TEST_CASE("exit code contract") {
    // pass
    for (const char* kind : {"witt-jacobi", "extension", "virasoro-constants", "heisenberg", "primary-field",
                             "normal-pair", "sugawara", "verma", "verma-hw", "intertwine", "sum-identity"}) {
      CAPTURE(kind);
      const Result r = cli({"verify", kind});
      CHECK(r.code == 0);
      for (const auto& rec : records(r.out)) CHECK(rec["status"] == "pass");
    }
    CHECK(cli({"verify", "cocycle", "--virasoro"}).code == 0);
    CHECK(cli({"verify", "cocycle", "--input", data("coboundary_w10.tsv")}).code == 0);
    CHECK(cli({"verify", "intertwine", "--alpha", "0"}).code == 0);

    // fail
    const Result fail = cli({"verify", "cocycle", "--input", data("sign_w4.tsv")});
    CHECK(fail.code == 1);
    CHECK(records(fail.out)[0]["counterexample"]["indices"] == "(-4,1,3)");

    // garbage
    const std::vector<std::vector<std::string>> garbage = {
        {},
        {"frobnicate"},
        {"verify"},
        {"verify", "no-such-check"},
        {"verify", "sugawara", "--alpha", "1/0"},
        {"verify", "verma", "--c", "x"},
        {"verify", "verma", "--h", "0.5"},
        {"verify", "witt-jacobi", "--max-index", "-1"},
        {"verify", "witt-jacobi", "--max-index", "two"},
        {"verify", "sugawara", "--format", "yaml"},
        {"verify", "cocycle"},
        {"verify", "cocycle", "--virasoro", "--input", data("virasoro_w10.tsv")},
        {"verify", "cocycle", "--input", data("garbage.tsv")},
        {"reduce", "--input", data("missing_header.tsv")},
        {"reduce", "--input", data("garbage.tsv")},
        {"reduce", "--input", data("does_not_exist.tsv")},
        {"reduce", "--input", data("sign_w4.tsv")},
        {"reduce", "--virasoro", "--window", "1"},
        {"reduce", "--input", data("virasoro_w10.tsv"), "--window", "11"},
        {"nontrivial", "--input", data("garbage.tsv")},
        {"nontrivial", "--input", data("virasoro_w10.tsv"), "--window", "11"},
        {"nontrivial", "--virasoro", "--jobs", "-2"},
    };
    for (const auto& args : garbage) {
      std::string joined;
      for (const auto& a : args) joined += a + " ";
      CAPTURE(joined);
      const Result r = cli(args);
      CHECK(r.code == 2);
      CHECK_FALSE(r.err.empty());
    }
    CHECK(cli({"verify", "sugawara", "--alpha", "1/0"}).err.find("invalid scalar") != std::string::npos);
    const Result not_cocycle = cli({"reduce", "--input", data("sign_w4.tsv")});
    CHECK(not_cocycle.err.find("(-4,1,3)") != std::string::npos);

    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"verify", "--help"}).code == 0);
  }

  TEST_CASE("environment defaults and flag precedence") {
    ::setenv("VIRA_FORMAT", "text", 1);
    ::setenv("VIRA_MAX_INDEX", "2", 1);
    const Result from_env = cli({"verify", "witt-jacobi"});
    CHECK(from_env.out.find("parameters.max_index: 2") != std::string::npos);
    const Result flags = cli({"verify", "witt-jacobi", "--format", "json", "--max-index", "3"});
    CHECK(records(flags.out)[0]["parameters"]["max_index"] == "3");
    ::setenv("VIRA_JOBS", "2", 1);
    CHECK(cli({"verify", "witt-jacobi", "--format", "json"}).out ==
          cli({"verify", "witt-jacobi", "--format", "json", "--jobs", "1"}).out);
    ::unsetenv("VIRA_FORMAT");
    ::unsetenv("VIRA_MAX_INDEX");
    ::unsetenv("VIRA_JOBS");

    const Result defaults = cli({"verify", "sugawara"});
    const auto rec = records(defaults.out)[0];
    CHECK(rec["parameters"]["max_index"] == "4");
    CHECK(rec["parameters"]["max_level"] == "5");
    CHECK(rec["parameters"]["alpha"] == "1/2");
    const auto verma = records(cli({"verify", "verma"}).out)[0];
    CHECK(verma["parameters"]["c"] == "1");
    CHECK(verma["parameters"]["h"] == "1/8");
  }

  TEST_CASE("text record parsing") {
    const json j = {{"a", "x: y"}, {"b", json::array({1, "2"})}, {"c", nullptr}, {"d", json::object()}};
    const std::string text = vira::cli::to_text(j);
    CHECK(text == "a: x: y\nb[0]: 1\nb[1]: 2\nc: null\nd: {}\n");
    CHECK(vira::cli::parse_text(text) == vira::cli::flatten(j));
    CHECK_THROWS_AS(vira::cli::parse_text("no separator\n"), std::invalid_argument);
  }
}
