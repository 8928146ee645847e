// Segre product of two polynomial rings in two variables, seen three ways.
#include "segre/cohomo.hpp"
#include "segre/oracle.hpp"
#include "segre/series.hpp"
#include "segre/toric.hpp"

#include <iostream>

int main() {
  using namespace segre;

  auto i2 = toric::validate(toric::parse_matrix("2 2\n1 0\n0 1\n"));
  auto p = toric::segre(i2, i2);
  std::cout << "segre matrix:\n" << toric::format_matrix(p.matrix());
  std::cout << "census:";
  for (auto c : toric::census(p, 5).counts) std::cout << ' ' << c;
  std::cout << '\n';

  auto h = series::hadamard(series::HilbertSeries::free(2), series::HilbertSeries::free(2));
  std::cout << "hilbert series: " << series::format(h) << '\n';

  // P^1 x P^1: both factors have dimension 2 and a-invariant -2.
  auto rep = cohomo::cohomology_support({{{2, -2}, 0}, {{2, -2}, 3}});
  std::cout << "depth of R # S(3): " << rep.depth << " of " << rep.dim << '\n';

  auto iv = cohomo::cm_twist_interval({4, 2});
  std::cout << "CM twists for rho = (4,2):";
  for (auto a : iv.integer_points()) std::cout << ' ' << a;
  std::cout << '\n';

  auto f = oracle::friendliness_witness(oracle::parse_monomial_ring("x:3"),
                                        oracle::parse_monomial_ring("y:2"), 2, 1, -6, 6);
  std::cout << "K[x]/(x^3), K[y]/(y^2), shifts (2,1): " << oracle::to_string(f.verdict) << '\n';
}
