// qcanon: compute canonical bases and run the verification suites.
//
//   qcanon basis  --type A2 --word 1,2,1 --max-height 4 [--output b.json]
//   qcanon verify --checks tropical,thm317 [--type B2] [--max-height 8] [--grid 8]
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcanon/checks.hpp"

using namespace qcanon;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kHeightCap = 16;

const std::vector<std::string> kAllChecks = {"serre",  "pbw",     "canonical", "prop39", "thm317",
                                             "folding", "tropical", "crystal",   "bullet"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string label_key(const PBWIndex& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s;
}

// Integers that fit in 64 bits are written as numbers, anything wider as a
// decimal string.
Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json poly_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [deg, c] : p.terms()) j[std::to_string(deg)] = integer_json(c);
  return j;
}

void write_json(const Json& doc, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

int cmd_basis(const std::string& type, const std::string& word_csv, int max_height, const std::string& out) {
  CartanDatum d;
  Word w;
  try {
    d = build_cartan(type);
    w = word_csv.empty() ? seed_reduced_word(d) : parse_word(d, word_csv);
    ReducedWord check(d, w);
  } catch (const CartanError& e) {
    throw UsageError(e.what());
  }
  Algebra alg(d, std::max(max_height, 1));
  PBWBasis pbw(alg, ReducedWord(d, w));
  CanonicalBasis cb(pbw);

  Json word_labels = Json::array();
  for (int i : w) word_labels.push_back(d.labels[i]);
  Json elements = Json::array();
  long count = 0;
  for (const auto& g : weights_up_to_height(d, max_height))
    for (const auto& e : cb.elements(g)) {
      Json coeffs = Json::object();
      for (const auto& [c, p] : e.pbw_coeffs) coeffs[label_key(c)] = poly_json(p);
      elements.push_back({{"label", e.label}, {"word", word_labels}, {"coeffs", coeffs}});
      ++count;
    }
  Json doc = {{"type", d.name}, {"word", word_labels}, {"max_height", max_height}, {"elements", elements}};
  if (out.empty())
    std::cout << doc.dump(2) << "\n";
  else {
    write_json(doc, out);
    std::cout << count << " canonical basis elements of " << d.name << " on " << format_word(d, w)
              << " up to height " << max_height << " written to " << out << "\n";
  }
  return 0;
}

std::vector<std::string> split_csv(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& s : items) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

int cmd_verify(std::vector<std::string> checks, const std::string& type, int max_height, int grid,
               std::uint64_t seed, const std::string& out) {
  checks = split_csv(checks);
  if (checks.empty()) checks = kAllChecks;
  for (const auto& c : checks)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
      throw UsageError("unknown check '" + c + "'");

  auto types_or = [&](std::vector<std::string> defaults) {
    return type.empty() ? defaults : std::vector<std::string>{type};
  };
  auto height_for = [&](const std::string& t) { return max_height >= 0 ? max_height : default_height(t); };

  std::vector<CheckResult> results;
  try {
    for (const auto& name : checks) {
      if (name == "serre")
        for (const auto& t : types_or({"A2", "B2", "A3", "D4", "G2"})) results.push_back(check_serre(t, height_for(t), seed));
      else if (name == "pbw")
        for (const auto& t : types_or({"A2", "B2", "A3", "G2"})) results.push_back(check_pbw(t, height_for(t)));
      else if (name == "canonical")
        for (const auto& t : types_or({"A2", "B2", "A3", "D4", "G2"}))
          results.push_back(check_canonical(t, height_for(t)));
      else if (name == "prop39")
        results.push_back(check_b2_closed_forms());
      else if (name == "thm317")
        results.push_back(check_label_matching(max_height >= 0 ? max_height : 8));
      else if (name == "folding")
        for (const auto& t : types_or({"A3:B2", "D4:G2"}))
          results.push_back(check_folding(t, max_height >= 0 ? max_height : (t == "A3:B2" ? 6 : 5)));
      else if (name == "tropical")
        results.push_back(check_tropical(grid));
      else if (name == "crystal")
        for (const auto& t : types_or({"A2", "B2", "A3", "G2"})) results.push_back(check_crystal(t, height_for(t)));
      else if (name == "bullet")
        results.push_back(check_bullet_terms(max_height >= 0 ? max_height : 6));
    }
  } catch (const CartanError& e) {
    throw UsageError(e.what());
  }

  bool all = true;
  Json list = Json::array();
  for (const auto& r : results) {
    all = all && r.pass();
    list.push_back({{"name", r.name},
                    {"range", r.range},
                    {"instances", r.instances},
                    {"failures", r.failures},
                    {"pass", r.pass()},
                    {"counterexamples", r.counterexamples},
                    {"notes", r.notes}});
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << "  " << r.range << "  (" << r.instances
              << " instances, " << r.failures << " failures)\n";
    for (const auto& c : r.counterexamples) std::cout << "    counterexample: " << c << "\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
  }
  Json config = {
      {"checks", checks}, {"type", type}, {"max_height", max_height}, {"grid", grid}, {"seed", seed}};
  write_json({{"config", config}, {"pass", all}, {"results", list}}, out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases of quantum groups: bases, transitions and verification suites"};
  app.require_subcommand(1);

  std::string type, word, out;
  int max_height = -1, basis_height = 4, grid = 8;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;

  auto* basis = app.add_subcommand("basis", "emit the canonical basis of one reduced word as JSON");
  basis->add_option("--type", type, "A1, A1xA1, A2, A3, B2, D4 or G2")->required();
  basis->add_option("--word", word, "reduced word as comma-separated node labels (default: a fixed one)");
  basis->add_option("--max-height", basis_height, "largest weight height")->default_val(4);
  basis->add_option("-o,--output", out, "JSON output path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--checks", checks, "comma-separated subset of " + [] {
    std::string s;
    for (const auto& c : kAllChecks) s += (s.empty() ? "" : ",") + c;
    return s;
  }());
  verify->add_option("--type", type, "restrict to one type (or A3:B2 / D4:G2 for folding)");
  verify->add_option("--max-height", max_height, "height bound (default per type)");
  verify->add_option("--grid", grid, "grid bound for the piecewise-linear checks")->default_val(8);
  verify->add_option("--seed", seed, "seed for the randomized rank certificate")->default_val(1);
  verify->add_option("-o,--output", out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (std::max(max_height, basis_height) > kHeightCap) throw UsageError("--max-height above the safety limit " + std::to_string(kHeightCap));
    if (grid < 0 || grid > 64) throw UsageError("--grid must lie in 0..64");
    if (*basis) return cmd_basis(type, word, std::max(basis_height, 0), out);
    return cmd_verify(checks, type, max_height, grid, seed, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
