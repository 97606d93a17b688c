#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "../tools/cli_impl.hpp"
#include "fixtures.hpp"

using namespace midls;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = midls_cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Writes `text` to a scratch file and returns its path.
std::string scratch_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  f.close();
  return path.string();
}

}  // namespace

TEST_CASE("cli dist", "[cli]") {
  auto r = run({"dist", "1", "6", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(r.err.empty());

  CHECK(run({"dist", "2", "5", "6"}).out == "3\n");
  CHECK(run({"dist", "4", "4", "9"}).out == "0\n");

  auto j = json::parse(run({"--format", "json", "dist", "1", "6", "6"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["a"] == 1);
  CHECK(j["b"] == 6);
  CHECK(j["n"] == 6);
  CHECK(j["dist"] == 1);

  // Global options may follow the subcommand too.
  auto jr = run({"dist", "1", "6", "6", "--format", "json"});
  CHECK(jr.code == 0);
  CHECK(json::parse(jr.out)["dist"] == 1);

  auto bad = run({"dist", "7", "1", "6"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  auto csv = run({"--format", "csv", "dist", "1", "6", "6"});
  CHECK(csv.code == 2);
  CHECK(csv.err.find("csv") != std::string::npos);
}

TEST_CASE("cli max-distance", "[cli]") {
  CHECK(run({"max-distance", "9"}).out == "4\n");
  CHECK(run({"max-distance", "10"}).out == "4\n");
  CHECK(json::parse(run({"max-distance", "7", "--format", "json"}).out)["max_inner_distance"] == 3);
  CHECK(run({"max-distance", "2"}).code == 2);
}

TEST_CASE("cli inner-distance", "[cli]") {
  auto path = scratch_file("midls_cli_grid.txt", to_text(fixtures::ls6_distance2()));
  auto r = run({"inner-distance", path});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  auto j = json::parse(run({"inner-distance", path, "--format", "json"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["rows"] == 6);
  CHECK(j["cols"] == 6);
  CHECK(j["order"] == 6);
  CHECK(j["inner_distance"] == 2);

  auto wide = scratch_file("midls_cli_rect.txt", to_text(fixtures::lr_3x6()));
  CHECK(run({"inner-distance", wide}).out == "2\n");

  SECTION("malformed grid lists violations and exits 2") {
    auto bad = scratch_file("midls_cli_bad.txt", "2 3\n1 2 3\n1 7 2\n");
    auto res = run({"inner-distance", bad});
    CHECK(res.code == 2);
    CHECK(res.out.empty());
    CHECK(res.err.find("symbol out of range") != std::string::npos);
    std::filesystem::remove(bad);
  }
  SECTION("missing file") {
    auto res = run({"inner-distance", "/nonexistent/grid.txt"});
    CHECK(res.code == 2);
    CHECK_FALSE(res.err.empty());
  }
  std::filesystem::remove(path);
  std::filesystem::remove(std::filesystem::temp_directory_path() / "midls_cli_rect.txt");
}

TEST_CASE("cli enumerate-paths", "[cli]") {
  auto count = run({"enumerate-paths", "6", "--count-only"});
  CHECK(count.code == 0);
  CHECK(count.out == "10\n");

  auto listing = run({"enumerate-paths", "6"});
  CHECK(listing.code == 0);
  std::istringstream lines(listing.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  CHECK(rows.front() == "1 3 5 2 4 6");
  CHECK(std::is_sorted(rows.begin(), rows.end()));

  auto j = json::parse(run({"enumerate-paths", "8", "--format", "json"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["n"] == 8);
  CHECK(j["k"] == 3);  // defaulted to the maximum
  CHECK(j["count"] == 18);
  REQUIRE(j["rows"].size() == 18);
  for (const auto& row : j["rows"]) {
    Row r = row.get<Row>();
    CHECK(is_latin_row(r));
    CHECK(ext_inner_distance(ext_diff_row(r)) == 3);
  }

  // Explicit k below the maximum; k=1 over n=6 is every normal permutation.
  CHECK(run({"enumerate-paths", "6", "1", "--count-only"}).out == "120\n");
  CHECK(run({"--threads", "2", "enumerate-paths", "8", "--count-only"}).out == "18\n");

  CHECK(run({"enumerate-paths", "2"}).code == 2);
  CHECK(run({"enumerate-paths", "6", "4"}).code == 2);
}

TEST_CASE("cli enumerate-cycles", "[cli]") {
  auto r = run({"enumerate-cycles", "6"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  CHECK(rows.size() == 6);

  auto j = json::parse(run({"enumerate-cycles", "8", "--format", "json"}).out);
  CHECK(j["count"] == 10);
  for (const auto& row : j["rows"]) CHECK(is_cycle_ext(ext_diff_row(row.get<Row>())));

  // Cycles are always materialized; there is no --count-only here.
  CHECK(run({"enumerate-cycles", "6", "--count-only"}).code == 2);
}

TEST_CASE("cli classify-row", "[cli]") {
  auto seed = run({"classify-row", "1 1 0 -1 -1 | 0", "6"});
  CHECK(seed.code == 0);
  CHECK(seed.out == "cycle-rotation(offset=0)\n");

  // Same row with the order prefix spelled out.
  CHECK(run({"classify-row", "6: 1 1 0 -1 -1 | 0", "6"}).out == "cycle-rotation(offset=0)\n");

  auto j = json::parse(run({"classify-row", "0 -1 -1 0 1 | 1", "6", "--format", "json"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["variant"] == "cycle-rotation");
  CHECK(j["offset"] == 4);
  CHECK(j["h"] == 1);
  CHECK(j["sign"] == 1);
  CHECK(j["m"] == 0);
  CHECK(j["alternating"] == false);
  CHECK(j["row"] == "6: 0 -1 -1 0 1 | 1");

  auto t2 = json::parse(run({"classify-row", "1 0 -1 -1 0 -1 0 | 2", "8", "--format", "json"}).out);
  CHECK(t2["name"] == "type-2(h=2, m=1, sign=+1)");
  CHECK(t2["offset"].is_null());

  CHECK(run({"classify-row", "0 1 0 1 0 | -2", "6"}).out == "type-1(alternating, sign=-1)\n");

  SECTION("rows outside the family are rejected") {
    auto res = run({"classify-row", "1 1 1 1 1 | 1", "6"});
    CHECK(res.code == 2);
    CHECK(res.err.find("maximum-inner-distance") != std::string::npos);
  }
  SECTION("malformed text") {
    CHECK(run({"classify-row", "1 1 nope | 0", "6"}).code == 2);
    CHECK(run({"classify-row", "8: 1 1 0 -1 -1 | 0", "6"}).code == 2);
  }
}

TEST_CASE("cli mid-count", "[cli]") {
  CHECK(run({"mid-count", "6"}).out == "672\n");  // formula is the default
  CHECK(run({"mid-count", "6", "--method", "constructive"}).out == "672\n");
  CHECK(run({"mid-count", "5", "--method", "brute"}).out == "20\n");
  CHECK(run({"mid-count", "7", "--method", "brute"}).out == "28\n");

  auto j = json::parse(run({"mid-count", "10", "--format", "json"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["n"] == 10);
  CHECK(j["method"] == "formula");
  CHECK(j["count"] == 6960);

  auto csv = run({"mid-count", "6", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,k,count,method\n6,2,672,formula\n");

  SECTION("guard refusal surfaces as usage error") {
    auto res = run({"mid-count", "9", "--method", "brute"});
    CHECK(res.code == 2);
    CHECK(res.err.find("guard") != std::string::npos);
  }
  CHECK(run({"mid-count", "6", "--method", "magic"}).code == 2);
  CHECK(run({"mid-count", "4"}).code == 2);  // no formula below 5
}

TEST_CASE("cli census", "[cli][slow]") {
  auto text = run({"census", "5"});
  CHECK(text.code == 0);
  CHECK(text.out.find("k 1 count 161260") != std::string::npos);
  CHECK(text.out.find("k 2 count 20") != std::string::npos);
  CHECK(text.out.find("mid formula 20 constructive 20 brute 20") != std::string::npos);
  CHECK(text.out.find("structure circulant 10 back-circulant 10 row-product 20 overlap 20") !=
        std::string::npos);
  CHECK(text.out.find("check ls-total PASS") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);

  auto j = json::parse(run({"census", "5", "--format", "json"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["n"] == 5);
  CHECK(j["per_k"]["1"] == 161260);
  CHECK(j["per_k"]["2"] == 20);
  CHECK(j["mid"]["formula"] == 20);
  CHECK(j["mid"]["constructive"] == 20);
  CHECK(j["mid"]["brute"] == 20);
  CHECK(j["structure"]["circulant"] == 10);
  CHECK(j["structure"]["back_circulant"] == 10);
  CHECK(j["structure"]["row_product"] == 20);
  CHECK(j["structure"]["overlap"] == 20);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

  auto csv = run({"census", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("n,k,count,method\n") == 0);
  CHECK(csv.out.find("5,1,161260,brute\n") != std::string::npos);
  CHECK(csv.out.find("5,2,20,brute\n") != std::string::npos);
  CHECK(csv.out.find("5,2,20,formula\n") != std::string::npos);
  CHECK(csv.out.find("5,2,20,constructive\n") != std::string::npos);

  auto j8 = json::parse(run({"census", "8", "--max-k-only", "--format", "json"}).out);
  CHECK(j8["per_k"].size() == 1);
  CHECK(j8["per_k"]["3"] == 2720);
  CHECK(j8["structure"]["overlap"] == 32);
  CHECK(j8["mid"]["brute"] == 2720);

  // Small orders have no counting formula; the fields degrade to null.
  auto j4 = json::parse(run({"census", "4", "--format", "json"}).out);
  CHECK(j4["per_k"]["1"] == 576);
  CHECK(j4["mid"]["formula"].is_null());
  CHECK(j4["structure"].is_null());

  SECTION("full census above the guard is refused") {
    auto res = run({"census", "8"});
    CHECK(res.code == 2);
    CHECK(res.err.find("guard") != std::string::npos);
  }
}

TEST_CASE("cli verify", "[cli][slow]") {
  auto r = run({"verify", "--n-range", "6..6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS P-formula") != std::string::npos);
  CHECK(r.out.find("8/8 checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto j = json::parse(run({"verify", "--n-range", "6..6", "--format", "json"}).out);
  CHECK(j["schema"] == "1");
  CHECK(j["n_lo"] == 6);
  CHECK(j["n_hi"] == 6);
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == 8);
  std::set<std::string> tags;
  for (const auto& c : j["checks"]) tags.insert(c["tag"].get<std::string>());
  CHECK(tags == std::set<std::string>{"P-formula", "cycle-count", "midls-even", "midls-odd",
                                      "structure", "determined", "oeis", "self-test"});

  CHECK(run({"verify", "--n-range", "6-8"}).code == 2);
  CHECK(run({"verify", "--n-range", "8..6"}).code == 2);
}

TEST_CASE("cli construct", "[cli]") {
  SECTION("circulant from a first row") {
    auto r = run({"construct", "--circulant", "--first-row", "1 3 5 2 6 4"});
    CHECK(r.code == 0);
    Square sq = parse_rectangle(r.out);
    CHECK(sq == fixtures::ls6_distance2());
    CHECK(inner_distance(sq) == 2);
  }
  SECTION("order option must agree with the row") {
    CHECK(run({"construct", "--circulant", "--first-row", "1 3 5 2 6 4", "-n", "6"}).code == 0);
    CHECK(run({"construct", "--circulant", "--first-row", "1 3 5 2 6 4", "-n", "7"}).code == 2);
  }
  SECTION("back-circulant") {
    auto r = run({"construct", "--back-circulant", "--first-row", "1 3 5 2 6 4"});
    REQUIRE(r.code == 0);
    Square sq = parse_rectangle(r.out);
    CHECK(is_back_circulant(sq));
    CHECK(inner_distance(sq) == 2);
  }
  SECTION("row product of difference rows") {
    auto r = run({"construct", "--row-product", "--d", "6: 3 4 3 4 3"});
    REQUIRE(r.code == 0);
    Square sq = parse_rectangle(r.out);
    CHECK(is_row_product(sq));
    CHECK(inner_distance(sq) == 2);

    auto mixed = run({"construct", "--row-product", "--d", "6: 3 4 3 4 3", "--dprime",
                      "6: 2 2 3 2 2"});
    REQUIRE(mixed.code == 0);
    CHECK(inner_distance(parse_rectangle(mixed.out)) == 2);
  }
  SECTION("odd closed form") {
    auto j = json::parse(
        run({"construct", "--odd", "1", "2", "2", "-n", "5", "--format", "json"}).out);
    CHECK(j["schema"] == "1");
    CHECK(j["order"] == 5);
    CHECK(j["inner_distance"] == 2);
    std::vector<Row> rows;
    for (const auto& row : j["grid"]) rows.push_back(row.get<Row>());
    Square sq = make_square(rows);
    CHECK(grid_errors(sq).empty());
    CHECK(is_back_circulant(sq));  // equal slopes shift rows leftward
    CHECK(sq == odd_construction(5, 1, 2, 2));

    auto circ = run({"construct", "--odd", "3", "2", "-2", "-n", "5"});
    REQUIRE(circ.code == 0);
    CHECK(is_circulant(parse_rectangle(circ.out)));
  }
  SECTION("input validation") {
    CHECK(run({"construct"}).code == 2);
    CHECK(run({"construct", "--circulant"}).code == 2);
    CHECK(run({"construct", "--circulant", "--first-row", "1 1 5 2 6 4"}).code == 2);
    CHECK(run({"construct", "--row-product"}).code == 2);
    CHECK(run({"construct", "--odd", "1", "2", "2"}).code == 2);
    CHECK(run({"construct", "--odd", "1", "2", "1", "-n", "5"}).code == 2);  // slope not +-2
    CHECK(run({"construct", "--circulant", "--back-circulant", "--first-row", "1 3 5 2 6 4"})
              .code == 2);
  }
}

TEST_CASE("cli json grids re-validate", "[cli]") {
  // A square emitted as JSON parses back into a grid that passes validation
  // and reports the same inner distance.
  auto j = json::parse(
      run({"construct", "--circulant", "--first-row", "1 4 2 6 3 5", "--format", "json"}).out);
  std::vector<Symbol> cells;
  for (const auto& row : j["grid"])
    for (const auto& v : row) cells.push_back(v.get<Symbol>());
  Rectangle g = make_rectangle(j["rows"].get<int>(), j["cols"].get<int>(), cells,
                               j["order"].get<int>());
  CHECK(grid_errors(g).empty());
  CHECK(inner_distance(g) == j["inner_distance"].get<int>());
}

TEST_CASE("cli usage errors and help", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dist", "1", "2"}).code == 2);  // missing n

  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("census") != std::string::npos);
  CHECK(help.out.find("enumerate-paths") != std::string::npos);

  auto sub_help = run({"construct", "--help"});
  CHECK(sub_help.code == 0);
  CHECK(sub_help.out.find("--circulant") != std::string::npos);

  CHECK(run({"--format", "yaml", "dist", "1", "2", "6"}).code == 2);
  CHECK(run({"--threads", "0", "dist", "1", "2", "6"}).code == 2);
  CHECK(run({"--seed", "42", "dist", "1", "2", "6"}).code == 0);
}
