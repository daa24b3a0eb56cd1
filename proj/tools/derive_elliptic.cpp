// Prints the ring fixture for the cone over (elliptic curve) x P^1, derived by elimination.
#include <iostream>

#include "skoda/blowup.hpp"
#include "skoda/workbench.hpp"

int main() {
  std::cout << skoda::presentation_json(*skoda::elliptic_cross_p1()).dump(2) << "\n";
  return 0;
}
