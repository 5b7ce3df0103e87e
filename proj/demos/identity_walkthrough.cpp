// Walks the closed-form catalog on a few small instances and shows the
// two independent evaluation routes agreeing.

#include <iostream>

#include "starsum/identities.hpp"

using namespace starsum;

int main() {
  RationalField field;

  // Star transform of the squared difference product on the diagonal:
  // closed form vs brute expansion.
  IdentityParams p;
  p.n = 3;
  p.m = 1;
  auto rep = verify_identity(IdentityId::hs3_1, p);
  std::cout << "hs3.1 (n=3, m=1)\n  expansion: " << rep.lhs << "\n  closed:    " << rep.rhs
            << "\n  match: " << (rep.pass ? "yes" : "NO") << "\n\n";

  // A scalar identity: signed coefficient of the odd difference product.
  IdentityParams q;
  q.n = 3;
  q.m = 2;
  auto rep2 = verify_identity(IdentityId::eq2_8, q);
  std::cout << "eq2.8 (n=3, m=2)\n  expansion: " << rep2.lhs << "\n  closed:    " << rep2.rhs
            << "\n  match: " << (rep2.pass ? "yes" : "NO") << "\n\n";

  // The constant-term identity with mixed exponents.
  IdentityParams d;
  d.n = 3;
  d.m_vec = {2, 0, 1};
  auto rep3 = verify_identity(IdentityId::dyson, d);
  std::cout << "dyson (n=3, m=(2,0,1))\n  expansion: " << rep3.lhs << "\n  closed:    " << rep3.rhs
            << "\n  match: " << (rep3.pass ? "yes" : "NO") << "\n";

  return rep.pass && rep2.pass && rep3.pass ? 0 : 1;
}
