#pragma once

// Verification suites shared by the acceptance binary and the command line
// tool. Each suite returns counts and a few counterexamples; ResourceLimit
// escapes when a requested height is out of reach.

#include <cstdint>
#include <string>
#include <vector>

#include "qcanon/canonical.hpp"
#include "qcanon/folding.hpp"
#include "qcanon/tropical.hpp"

namespace qcanon {

struct CheckResult {
  std::string name;
  std::string range;
  long instances = 0;
  long failures = 0;
  std::vector<std::string> counterexamples;
  /// Side observations that do not affect pass/fail.
  std::vector<std::string> notes;

  bool pass() const { return instances > 0 && failures == 0; }
  void record(bool ok, const std::string& what);
};

/// Default height bound of a type: 8 for A1, A1xA1, A2, B2; 6 for A3; 5 for D4, G2.
int default_height(const std::string& type);

/// Quotient dimensions against Kostant counts with the rank certificate.
CheckResult check_serre(const std::string& type, int max_height, std::uint64_t seed = 1);
/// Transition matrices between all pairs of reduced words.
CheckResult check_pbw(const std::string& type, int max_height);
/// Canonical basis solve and re-verification on every weight, for all
/// reduced words when there are at most `max_words` of them.
CheckResult check_canonical(const std::string& type, int max_height, std::size_t max_words = 16);
/// f_2 L(c, h) and f_1 L(c, h') for B2 against the closed forms, a,b,c,d <= top.
CheckResult check_b2_closed_forms(int top = 2);
/// B2 and A2 label matching equals the tropical maps with sign +1; G2 signs.
CheckResult check_label_matching(int max_height);
/// "A3:B2" or "D4:G2".
CheckResult check_folding(const std::string& pair, int max_height);
/// Grid checks of the piecewise-linear maps and the braid-move chain.
CheckResult check_tropical(int grid);
/// epsilon_j, the correspondences B_{j,0} -> B_{j,a} and the Kashiwara
/// operators on j-initial words.
CheckResult check_crystal(const std::string& type, int max_height, int max_a = 3);
/// Lowest terms of the coefficient of b° in f_2 L(c, h) and f_1 L(c, h').
/// On the h' side the exponent -a' is taken in q_1 = q^2, the variable of
/// the long letter f_1; the count under the plain q reading goes to notes.
CheckResult check_bullet_terms(int max_height);

/// Reduced words of B2 used throughout: h = (1,2,1,2), h' = (2,1,2,1).
Word b2_h();
Word b2_hprime();

}  // namespace qcanon
