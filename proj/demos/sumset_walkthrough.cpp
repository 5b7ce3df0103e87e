// Builds a restricted-sumset instance in code, enumerates it, and runs
// a bound check, mirroring what `starsum sumset --check` does for JSON
// configs.

#include <iostream>

#include "starsum/sumset.hpp"

using namespace starsum;

int main() {
  RationalField field;

  // Integer sets with positive scaling and congruence avoidance.
  SumsetProblem<RationalField> prob{field, {}, {}};
  for (int i = 0; i < 2; ++i)
    prob.sets.push_back({Rational(0), Rational(1), Rational(2), Rational(5)});
  prob.constraints.push_back(
      ConstraintSpec<RationalField>::scaled({Rational(1), Rational(3, 2)}));
  prob.constraints.push_back(ConstraintSpec<RationalField>::congruent_apart(0, 1, 11, {4, -2}));

  auto sums = enumerate_restricted_sumset(prob);
  std::cout << "restricted sumset:";
  for (const auto& s : sums) std::cout << " " << s.to_string();
  std::cout << "\n";

  auto rep = check_bound(prob, ResultId::thm1_3);
  std::cout << "check " << rep.result_id << ": claimed > " << rep.claimed_bound << ", actual "
            << rep.actual_cardinality << " -> " << (rep.pass ? "pass" : "fail") << "\n";

  // The coefficient-to-bound driver on the same shape of problem.
  auto poly = build_difference_product(field, 2, 1);
  auto lem = lemma11_lower_bound(poly, prob.sets);
  std::cout << "lemma driver: coefficient " << lem.coefficient.to_string();
  if (lem.bound) std::cout << ", distinct-sum bound " << *lem.bound;
  std::cout << "\n";

  return rep.pass ? 0 : 1;
}
