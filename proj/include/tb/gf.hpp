#ifndef TB_GF_HPP
#define TB_GF_HPP

#include <vector>

namespace tb {

// GF(q) by full operation tables. Elements are indices 0..q-1 with 0 and 1
// the additive and multiplicative identities. Prime fields use modular
// arithmetic; prime powers reduce polynomials by a fixed irreducible, so the
// tables are reproducible across runs.
struct FiniteField {
  int q = 0;
  int characteristic = 0;
  int degree = 1;
  std::vector<int> add_table; // q*q, row-major
  std::vector<int> mul_table; // q*q
  std::vector<int> neg_table; // q
  std::vector<int> inv_table; // q, inv_table[0] = -1

  int add(int a, int b) const { return add_table[a * q + b]; }
  int mul(int a, int b) const { return mul_table[a * q + b]; }
  int neg(int a) const { return neg_table[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const { return inv_table[a]; }
};

// Supported orders: {2,3,4,5,7,8,9}. Throws UnsupportedOrder otherwise.
FiniteField make_field(int q);

// Exhaustive field-axiom check (associativity, commutativity, distributivity,
// identities, inverses). Intended for tests; O(q^3).
bool field_axioms_hold(const FiniteField &f);

} // namespace tb

#endif
