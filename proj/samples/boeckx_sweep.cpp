// Tangent sphere bundle example: Boeckx invariant sqrt(n) on both branches.
#include <iostream>

#include "nkt/classification.hpp"

int main() {
  int failures = 0;
  for (long n : {2, 3, 4, 5, 9, 16, 25}) {
    for (int sign : {-1, 1}) {
      nkt::Example1Report r = nkt::example1_check(n, sign);
      auto c = nkt::value_at(r.c, n);
      std::cout << "n = " << n << (sign < 0 ? " (-)" : " (+)") << "  c = " << (c ? nkt::to_string(*c) : r.c.to_string())
                << "  I = " << r.boeckx_value.to_string() << "  " << (r.passed() ? "ok" : "FAIL") << "\n";
      failures += !r.passed();
    }
  }
  return failures == 0 ? 0 : 1;
}
