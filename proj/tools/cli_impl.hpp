#pragma once

// Command-line front end. All command logic lives here, driven off plain
// streams, so the test suite can run commands in-process; main() is a shim.
// Exit codes: 0 success, 1 failed check, 2 usage error or guard refusal.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "midls/census.hpp"

namespace midls_cli {

using nlohmann::json;
using namespace midls;

namespace detail {

inline std::string row_text(const Row& r) {
  std::string s;
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(r[i]);
  }
  return s;
}

inline Row parse_symbols(const std::string& text) {
  Row r;
  std::istringstream iss(text);
  int x;
  while (iss >> x) r.push_back(x);
  if (iss.fail() && !iss.eof()) throw std::invalid_argument("row: expected whitespace-separated integers");
  if (r.empty()) throw std::invalid_argument("row: no symbols given");
  return r;
}

inline json row_to_json(const Row& r) {
  json a = json::array();
  for (Symbol s : r) a.push_back(s);
  return a;
}

inline json grid_to_json(const Rectangle& g) {
  json rows = json::array();
  for (int i = 0; i < g.rows; ++i) rows.push_back(row_to_json(g.row(i)));
  return rows;
}

inline json checks_to_json(const std::vector<TheoremCheck>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back({{"tag", c.tag}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

inline void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

struct Format {
  std::string value = "text";
  bool text() const { return value == "text"; }
  bool is_json() const { return value == "json"; }
  bool csv() const { return value == "csv"; }
};

}  // namespace detail

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::emit;

  CLI::App app{"Latin squares by inner distance: construction, classification, census"};
  app.require_subcommand(1);

  detail::Format format;
  int threads = 1;
  uint64_t seed = 0;  // reserved for randomized property tests
  app.add_option("--format", format.value, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for search subcommands")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized property tests");

  int exit_code = 0;
  auto want_csv_refusal = [&](const std::string& sub) {
    err << sub << ": csv output is only available for census and mid-count\n";
    exit_code = 2;
  };

  // dist a b n
  int d_a = 0, d_b = 0, d_n = 0;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two symbols mod n");
  dist_cmd->add_option("a", d_a)->required();
  dist_cmd->add_option("b", d_b)->required();
  dist_cmd->add_option("n", d_n)->required();
  dist_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("dist");
    int v = dist(d_a, d_b, d_n);
    if (format.is_json())
      emit({{"schema", "1"}, {"a", d_a}, {"b", d_b}, {"n", d_n}, {"dist", v}}, out);
    else
      out << v << "\n";
  });

  // inner-distance FILE
  std::string grid_path;
  auto* inner_cmd = app.add_subcommand("inner-distance", "Inner distance of a grid file");
  inner_cmd->add_option("file", grid_path, "Grid file (\"m n\" header then rows), or - for stdin")
      ->required();
  inner_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("inner-distance");
    Rectangle g;
    if (grid_path == "-") {
      g = read_rectangle(std::cin);
    } else {
      std::ifstream in(grid_path);
      if (!in) throw std::invalid_argument("cannot open " + grid_path);
      g = read_rectangle(in);
    }
    auto problems = grid_errors(g);
    if (!problems.empty()) {
      for (const auto& p : problems) err << p << "\n";
      exit_code = 2;
      return;
    }
    int v = inner_distance(g);
    if (format.is_json())
      emit({{"schema", "1"}, {"rows", g.rows}, {"cols", g.cols}, {"order", g.order},
            {"inner_distance", v}},
           out);
    else
      out << v << "\n";
  });

  // max-distance n
  int md_n = 0;
  auto* max_cmd = app.add_subcommand("max-distance", "Maximum inner distance of order n");
  max_cmd->add_option("n", md_n)->required();
  max_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("max-distance");
    int v = max_inner_distance(md_n);
    if (format.is_json())
      emit({{"schema", "1"}, {"n", md_n}, {"max_inner_distance", v}}, out);
    else
      out << v << "\n";
  });

  // enumerate-paths n [k] [--count-only]
  int ep_n = 0, ep_k = -1;
  bool ep_count_only = false;
  auto* paths_cmd =
      app.add_subcommand("enumerate-paths", "Normal rows of inner distance >= k (k defaults max)");
  paths_cmd->add_option("n", ep_n)->required();
  paths_cmd->add_option("k", ep_k);
  paths_cmd->add_flag("--count-only", ep_count_only, "Print only the number of rows");
  paths_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("enumerate-paths");
    int k = ep_k < 0 ? max_inner_distance(ep_n) : ep_k;
    auto g = build_graph(ep_n, k);
    if (ep_count_only) {
      uint64_t count = ham_path_count(g, 1, threads);
      if (format.is_json())
        emit({{"schema", "1"}, {"n", ep_n}, {"k", k}, {"count", count}}, out);
      else
        out << count << "\n";
      return;
    }
    auto rows = ham_paths(g, 1);
    if (format.is_json()) {
      json jr = json::array();
      for (const Row& r : rows) jr.push_back(detail::row_to_json(r));
      emit({{"schema", "1"}, {"n", ep_n}, {"k", k}, {"count", rows.size()}, {"rows", jr}}, out);
    } else {
      for (const Row& r : rows) out << detail::row_text(r) << "\n";
    }
  });

  // enumerate-cycles n [k]
  int ec_n = 0, ec_k = -1;
  auto* cycles_cmd =
      app.add_subcommand("enumerate-cycles", "Rows whose endpoints also sit >= k apart");
  cycles_cmd->add_option("n", ec_n)->required();
  cycles_cmd->add_option("k", ec_k);
  cycles_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("enumerate-cycles");
    int k = ec_k < 0 ? max_inner_distance(ec_n) : ec_k;
    auto rows = ham_cycles(build_graph(ec_n, k), 1);
    if (format.is_json()) {
      json jr = json::array();
      for (const Row& r : rows) jr.push_back(detail::row_to_json(r));
      emit({{"schema", "1"}, {"n", ec_n}, {"k", k}, {"count", rows.size()}, {"rows", jr}}, out);
    } else {
      for (const Row& r : rows) out << detail::row_text(r) << "\n";
    }
  });

  // classify-row "eps... | h" n
  std::string cr_text;
  int cr_n = 0;
  auto* classify_cmd =
      app.add_subcommand("classify-row", "Name the generator of an extended difference row");
  classify_cmd->add_option("row", cr_text, "Extended difference row, e.g. \"1 1 0 -1 -1 | 0\"")
      ->required();
  classify_cmd->add_option("n", cr_n)->required();
  classify_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("classify-row");
    ExtDiffRow e = parse_ext_diff_row(cr_text, cr_n);
    PathClass c = classify_row(e);
    if (format.is_json()) {
      json j{{"schema", "1"},
             {"row", to_string(e)},
             {"variant", to_string(c.variant)},
             {"name", c.name()},
             {"sign", c.sign},
             {"h", c.h},
             {"alternating", c.alternating}};
      j["m"] = c.m >= 0 ? json(c.m) : json(nullptr);
      j["offset"] = c.variant == PathVariant::CycleRotation ? json(c.offset) : json(nullptr);
      emit(j, out);
    } else {
      out << c.name() << "\n";
    }
  });

  // mid-count n --method formula|constructive|brute
  int mc_n = 0;
  std::string mc_method = "formula";
  auto* mid_cmd = app.add_subcommand("mid-count", "Number of maximum-inner-distance squares");
  mid_cmd->add_option("n", mc_n)->required();
  mid_cmd->add_option("--method", mc_method, "Counting method")
      ->check(CLI::IsMember({"formula", "constructive", "brute"}))
      ->capture_default_str();
  mid_cmd->callback([&] {
    uint64_t count = 0;
    if (mc_method == "formula")
      count = midls_count_formula(mc_n);
    else if (mc_method == "constructive")
      count = enumerate_mid_constructive(mc_n).size();
    else
      count = brute_count(mc_n, max_inner_distance(mc_n), {.threads = threads});
    if (format.is_json())
      emit({{"schema", "1"}, {"n", mc_n}, {"method", mc_method}, {"count", count}}, out);
    else if (format.csv())
      out << "n,k,count,method\n"
          << mc_n << "," << max_inner_distance(mc_n) << "," << count << "," << mc_method << "\n";
    else
      out << count << "\n";
  });

  // census n [--max-k-only]
  int cs_n = 0;
  bool cs_max_only = false;
  auto* census_cmd = app.add_subcommand("census", "Per-distance counts for order n");
  census_cmd->add_option("n", cs_n)->required();
  census_cmd->add_flag("--max-k-only", cs_max_only, "Only the maximum-distance count");
  census_cmd->callback([&] {
    CensusReport rep = census(cs_n, cs_max_only, {.threads = threads});
    bool all_pass = true;
    for (const auto& c : rep.checks) all_pass = all_pass && c.pass;
    if (format.is_json()) {
      json per_k = json::object();
      for (auto& [k, count] : rep.per_k) per_k[std::to_string(k)] = count;
      json mid{{"formula", rep.mid_formula ? json(*rep.mid_formula) : json(nullptr)},
               {"constructive", rep.mid_constructive ? json(*rep.mid_constructive) : json(nullptr)},
               {"brute", rep.mid_brute ? json(*rep.mid_brute) : json(nullptr)}};
      json structure(nullptr);
      if (rep.structure)
        structure = {{"circulant", rep.structure->circulant},
                     {"back_circulant", rep.structure->back_circulant},
                     {"row_product", rep.structure->row_product},
                     {"overlap", rep.structure->overlap}};
      emit({{"schema", "1"}, {"n", rep.n}, {"per_k", per_k}, {"mid", mid},
            {"structure", structure}, {"checks", detail::checks_to_json(rep.checks)}},
           out);
    } else if (format.csv()) {
      out << "n,k,count,method\n";
      for (auto& [k, count] : rep.per_k)
        out << rep.n << "," << k << "," << count << ",brute\n";
      int maxk = max_inner_distance(rep.n);
      if (rep.mid_formula) out << rep.n << "," << maxk << "," << *rep.mid_formula << ",formula\n";
      if (rep.mid_constructive)
        out << rep.n << "," << maxk << "," << *rep.mid_constructive << ",constructive\n";
    } else {
      out << "n " << rep.n << "\n";
      for (auto& [k, count] : rep.per_k)
        out << "k " << k << " count " << count << " method brute\n";
      if (rep.mid_formula) {
        out << "mid formula " << *rep.mid_formula;
        if (rep.mid_constructive) out << " constructive " << *rep.mid_constructive;
        if (rep.mid_brute) out << " brute " << *rep.mid_brute;
        out << "\n";
      }
      if (rep.structure)
        out << "structure circulant " << rep.structure->circulant << " back-circulant "
            << rep.structure->back_circulant << " row-product " << rep.structure->row_product
            << " overlap " << rep.structure->overlap << "\n";
      for (const auto& c : rep.checks)
        out << "check " << c.tag << (c.pass ? " PASS" : " FAIL") << " (" << c.detail << ")\n";
    }
    if (!all_pass) exit_code = 1;
  });

  // verify [--n-range A..B] [--long]
  std::string vr_range = "5..8";
  bool vr_long = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem suite");
  verify_cmd->add_option("--n-range", vr_range, "Order range A..B")->capture_default_str();
  verify_cmd->add_flag("--long", vr_long, "Lift search guards one notch");
  verify_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("verify");
    auto sep = vr_range.find("..");
    if (sep == std::string::npos)
      throw std::invalid_argument("verify: --n-range expects A..B, got " + vr_range);
    int lo = std::stoi(vr_range.substr(0, sep));
    int hi = std::stoi(vr_range.substr(sep + 2));
    auto checks = theorem_suite(lo, hi, {.threads = threads, .allow_long = vr_long});
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;
    if (format.is_json()) {
      emit({{"schema", "1"}, {"n_lo", lo}, {"n_hi", hi}, {"pass", all_pass},
            {"checks", detail::checks_to_json(checks)}},
           out);
    } else {
      size_t passed = 0;
      for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.tag << "  " << c.detail << "\n";
        passed += c.pass;
      }
      out << passed << "/" << checks.size() << " checks passed\n";
    }
    if (!all_pass) exit_code = 1;
  });

  // construct --circulant|--back-circulant|--row-product|--odd s r c
  bool c_circ = false, c_back = false, c_prod = false;
  std::vector<int> c_odd;
  int c_n = -1;
  std::string c_first_row, c_d, c_dprime;
  auto* construct_cmd = app.add_subcommand("construct", "Build a square from one of the families");
  auto* f_circ = construct_cmd->add_flag("--circulant", c_circ, "Rows shift right; needs --first-row");
  auto* f_back =
      construct_cmd->add_flag("--back-circulant", c_back, "Rows shift left; needs --first-row");
  auto* f_prod =
      construct_cmd->add_flag("--row-product", c_prod, "Product of difference rows --d and --dprime");
  auto* f_odd = construct_cmd
                    ->add_option("--odd", c_odd,
                                 "Odd-order closed form: start symbol s and slopes r c (needs -n)")
                    ->expected(3);
  f_circ->excludes(f_back, f_prod, f_odd);
  f_back->excludes(f_prod, f_odd);
  f_prod->excludes(f_odd);
  construct_cmd->add_option("-n,--order", c_n, "Order of the square");
  construct_cmd->add_option("--first-row", c_first_row, "Row symbols, e.g. \"1 3 5 2 6 4\"");
  construct_cmd->add_option("--d", c_d, "Difference row, e.g. \"6: 2 2 3 4 4\"");
  construct_cmd->add_option("--dprime", c_dprime, "Second difference row (defaults to --d)");
  construct_cmd->callback([&] {
    if (format.csv()) return want_csv_refusal("construct");
    Square sq;
    if (c_circ || c_back) {
      if (c_first_row.empty())
        throw std::invalid_argument("construct: --circulant/--back-circulant need --first-row");
      Row r = detail::parse_symbols(c_first_row);
      if (c_n > 0 && c_n != static_cast<int>(r.size()))
        throw std::invalid_argument("construct: --order disagrees with the first row length");
      if (!is_latin_row(r))
        throw std::invalid_argument("construct: first row is not a permutation of [1,n]");
      sq = c_circ ? make_circulant(r) : make_back_circulant(r);
    } else if (c_prod) {
      if (c_d.empty()) throw std::invalid_argument("construct: --row-product needs --d");
      DifferenceRow d = parse_diff_row(c_d, c_n);
      DifferenceRow dp = c_dprime.empty() ? d : parse_diff_row(c_dprime, c_n);
      sq = row_product(d, dp);
    } else if (!c_odd.empty()) {
      if (c_n <= 0) throw std::invalid_argument("construct: --odd needs -n/--order");
      sq = odd_construction(c_n, c_odd[0], c_odd[1], c_odd[2]);
    } else {
      throw std::invalid_argument(
          "construct: pick one of --circulant, --back-circulant, --row-product, --odd");
    }
    if (format.is_json())
      emit({{"schema", "1"}, {"rows", sq.rows}, {"cols", sq.cols}, {"order", sq.order},
            {"grid", detail::grid_to_json(sq)}, {"inner_distance", inner_distance(sq)}},
           out);
    else
      out << to_text(sq);
  });

  // Let the global --format/--threads/--seed options also appear after the
  // subcommand name, which is how people actually type them.
  for (auto* sc : app.get_subcommands(std::function<bool(CLI::App*)>{})) sc->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const GuardRefusal& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace midls_cli
