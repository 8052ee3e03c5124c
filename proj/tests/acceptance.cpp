// One line per acceptance criterion; exit status 0 only if all of them pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qcanon/checks.hpp"

using namespace qcanon;

namespace {

struct Line {
  int number;
  std::string title;
  double budget_seconds;  // 0: none
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> per_type(const std::vector<std::string>& types,
                                  const std::function<CheckResult(const std::string&, int)>& f) {
  std::vector<CheckResult> out;
  for (const auto& t : types) out.push_back(f(t, default_height(t)));
  return out;
}

}  // namespace

int main() {
  const std::vector<Line> lines = {
      {1, "Serre quotient dimensions and rank certificate", 300,
       [] { return per_type({"A2", "B2", "A3", "D4", "G2"}, [](auto& t, int h) { return check_serre(t, h); }); }},
      {2, "PBW transitions over Z[q], invertible, permutations mod q", 0,
       [] { return per_type({"A2", "B2", "A3", "G2"}, [](auto& t, int h) { return check_pbw(t, h); }); }},
      {3, "f_2 L(c,h) and f_1 L(c,h') closed forms, 2 x 81 instances", 0, [] { return std::vector{check_b2_closed_forms(2)}; }},
      {4, "canonical basis solve and re-verification", 0,
       [] {
         return per_type({"A2", "B2", "A3", "D4", "G2"}, [](auto& t, int h) { return check_canonical(t, h, 16); });
       }},
      {5, "B2/A2 label matching equals the PL maps with sign +1; G2 signs", 0,
       [] { return std::vector{check_label_matching(8)}; }},
      {6, "folding A3->B2 mod 2 and D4->G2 mod 3", 0,
       [] { return std::vector{check_folding("A3:B2", 6), check_folding("D4:G2", 5)}; }},
      {7, "piecewise-linear maps on full grids", 30, [] { return std::vector{check_tropical(8)}; }},
      {8, "epsilon_j, B_{j,0} -> B_{j,a} bijections, Kashiwara operators", 0,
       [] {
         return per_type({"A2", "B2", "A3", "D4", "G2"}, [](auto& t, int h) { return check_crystal(t, h); });
       }},
      {9, "lowest term of the coefficient of b° (height <= 6)", 0, [] { return std::vector{check_bullet_terms(6)}; }},
  };

  bool all = true;
  for (const auto& line : lines) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = line.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = error.empty() && !results.empty();
    long instances = 0, failures = 0;
    for (const auto& r : results) {
      ok = ok && r.pass();
      instances += r.instances;
      failures += r.failures;
    }
    bool in_time = line.budget_seconds == 0 || dt < line.budget_seconds;
    ok = ok && in_time;
    all = all && ok;

    std::ostringstream time;
    time << std::fixed << std::setprecision(1) << dt << "s";
    if (line.budget_seconds > 0) time << " of " << line.budget_seconds << "s";
    std::cout << "criterion " << line.number << ": " << (ok ? "PASS" : "FAIL") << "  " << line.title << "  ["
              << instances << " instances, " << failures << " failures, " << time.str() << "]\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& r : results) {
      std::cout << "    " << (r.pass() ? "ok   " : "FAIL ") << r.name << " " << r.range << " (" << r.instances << ")\n";
      for (const auto& c : r.counterexamples) std::cout << "        counterexample: " << c << "\n";
      for (const auto& n : r.notes) std::cout << "        note: " << n << "\n";
    }
    if (!in_time) std::cout << "    over the runtime target\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
