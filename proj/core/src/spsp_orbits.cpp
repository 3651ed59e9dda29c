#include "lagorb/spsp_orbits.hpp"

namespace lagorb {

std::vector<Rational> default_curve_parameters() {
  std::vector<Rational> ts;
  Rational t = 1;
  for (int k = 0; k <= 10; ++k) {
    ts.push_back(t);
    t /= 2;
  }
  return ts;
}

}  // namespace lagorb
