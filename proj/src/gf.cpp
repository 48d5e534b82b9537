#include "tb/gf.hpp"
#include "tb/errors.hpp"

#include <array>

namespace tb {

namespace {

// Fixed irreducible polynomials for the prime-power orders, written as the
// coefficients of x^deg = -(c_0 + c_1 x + ... + c_{deg-1} x^{deg-1}).
//   GF(4):  x^2 + x + 1         over GF(2)
//   GF(8):  x^3 + x + 1         over GF(2)
//   GF(9):  x^2 + 1             over GF(3)
struct PrimePowerSpec {
  int q, p, deg;
  std::array<int, 3> reduction; // low-to-high coefficients of the remainder
};

const PrimePowerSpec kPrimePowers[] = {
    {4, 2, 2, {1, 1, 0}},
    {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {2, 0, 0}}, // x^2 = -1 = 2
};

bool is_supported_prime(int q) { return q == 2 || q == 3 || q == 5 || q == 7; }

FiniteField make_prime_field(int p) {
  FiniteField f;
  f.q = p;
  f.characteristic = p;
  f.degree = 1;
  f.add_table.resize(p * p);
  f.mul_table.resize(p * p);
  f.neg_table.resize(p);
  f.inv_table.assign(p, -1);
  for (int a = 0; a < p; ++a) {
    f.neg_table[a] = (p - a) % p;
    for (int b = 0; b < p; ++b) {
      f.add_table[a * p + b] = (a + b) % p;
      f.mul_table[a * p + b] = (a * b) % p;
    }
  }
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) f.inv_table[a] = b;
  return f;
}

// Element index = sum coeff_i * p^i, so 0 -> 0 and 1 -> 1 as required.
FiniteField make_prime_power_field(const PrimePowerSpec &spec) {
  const int p = spec.p, deg = spec.deg, q = spec.q;
  auto decode = [&](int idx, int *c) {
    for (int i = 0; i < deg; ++i) { c[i] = idx % p; idx /= p; }
  };
  auto encode = [&](const int *c) {
    int idx = 0, w = 1;
    for (int i = 0; i < deg; ++i) { idx += c[i] * w; w *= p; }
    return idx;
  };

  FiniteField f;
  f.q = q;
  f.characteristic = p;
  f.degree = deg;
  f.add_table.resize(q * q);
  f.mul_table.resize(q * q);
  f.neg_table.resize(q);
  f.inv_table.assign(q, -1);

  int a[3], b[3], prod[6], red[3];
  for (int i = 0; i < deg; ++i) red[i] = spec.reduction[i];

  for (int ia = 0; ia < q; ++ia) {
    decode(ia, a);
    int na[3];
    for (int i = 0; i < deg; ++i) na[i] = (p - a[i]) % p;
    f.neg_table[ia] = encode(na);
    for (int ib = 0; ib < q; ++ib) {
      decode(ib, b);
      int s[3];
      for (int i = 0; i < deg; ++i) s[i] = (a[i] + b[i]) % p;
      f.add_table[ia * q + ib] = encode(s);

      for (int i = 0; i < 2 * deg; ++i) prod[i] = 0;
      for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
      // reduce x^k for k >= deg using x^deg = red
      for (int k = 2 * deg - 2; k >= deg; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < deg; ++i) prod[k - deg + i] = (prod[k - deg + i] + c * red[i]) % p;
      }
      f.mul_table[ia * q + ib] = encode(prod);
    }
  }
  for (int ia = 1; ia < q; ++ia)
    for (int ib = 1; ib < q; ++ib)
      if (f.mul_table[ia * q + ib] == 1) f.inv_table[ia] = ib;
  return f;
}

} // namespace

FiniteField make_field(int q) {
  if (is_supported_prime(q)) return make_prime_field(q);
  for (const auto &spec : kPrimePowers)
    if (spec.q == q) return make_prime_power_field(spec);
  fail(Err::UnsupportedOrder, "q=" + std::to_string(q) + " not in {2,3,4,5,7,8,9}");
}

bool field_axioms_hold(const FiniteField &f) {
  const int q = f.q;
  for (int a = 0; a < q; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a || f.mul(a, 0) != 0) return false;
    if (f.add(a, f.neg(a)) != 0) return false;
    if (a != 0 && (f.inv(a) < 0 || f.mul(a, f.inv(a)) != 1)) return false;
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return false;
      for (int c = 0; c < q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
      }
    }
  return true;
}

} // namespace tb
