// Prints the oracle rendering of the penguin demo; redirect it to
// tests/golden/figure1.txt.

#include <iostream>

#include "figure1_oracle.hpp"

int main() {
  std::cout << oracle_figure1_text();
  return 0;
}
