// Prints the twisted-module table and the first terms of each twisted
// character for a given m (default 1).

#include <cstdlib>
#include <iostream>

#include "swtwist/characters.hpp"
#include "swtwist/zhu.hpp"

using namespace swtwist;

int main(int argc, char** argv) {
  int m = argc > 1 ? std::atoi(argv[1]) : 1;
  if (m < 1) {
    std::cerr << "usage: example_characters [m >= 1]\n";
    return 2;
  }
  std::cout << "c = " << central_charge(m) << "\n";
  for (const auto& r : classify_twisted(m)) {
    auto ch = twisted_char(r.label, Rational(5));
    std::cout << r.label.name() << "  h = " << r.lowest_weight << "  top dim " << r.top_dim_graded << "\n  " << ch
              << "\n";
  }
}
