// Minimal tour of the library: the equal-ψ′ pair of different orders, the
// ψ′ ladder over groups of order 2^5, and ψ_k for a small group.
#include <iostream>

#include "psiprime/psiprime.hpp"

int main() {
  using namespace psiprime;

  const auto a = parse_group("Z4xZ3^2");
  const auto b = parse_group("Z2^4xZ3");
  std::cout << format_group(a) << " (order " << a.order() << "): psi' = " << psi_prime(a).key() << '\n';
  std::cout << format_group(b) << " (order " << b.order() << "): psi' = " << psi_prime(b).key() << '\n';

  const auto ladder = check_theorem_c(2, 5);
  for (const auto& row : ladder.rows)
    std::cout << format_partition(row.partition) << "  log2 psi' = " << row.exponent << '\n';
  std::cout << (ladder.holds() ? "strictly increasing\n" : "NOT increasing\n");

  const auto z6 = parse_group("Z6");
  std::cout << "psi_k(Z6):";
  for (const auto& v : psi_all(z6)) std::cout << ' ' << v;
  std::cout << '\n';
}
