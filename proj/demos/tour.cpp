// Walks through the main objects on small inputs.
#include <iostream>

#include "sandpoly/json_io.hpp"
#include "sandpoly/sandpoly.hpp"

using namespace sandpoly;

int main() {
  // a stable configuration on D_{3,4} and its canonical toppling
  const BipartiteConfig u(3, 4, {0, 2, 1, 2, 1, 2});
  std::cout << "u = " << to_json(u).dump() << "\n";
  std::cout << "recurrent: " << std::boolalpha << is_recurrent(u) << "\n";
  std::cout << "waves: " << to_json(canon_top(u)).dump() << "\n";

  const DecoratedPolyomino d = rtosp(u);
  std::cout << "polyomino: " << to_json(d).dump() << "\n";
  std::cout << "bounce:";
  for (int c : bounce_seq(d.poly)) std::cout << ' ' << c;
  std::cout << "\narea " << area(d.poly) << ", parabounce " << parabounce(d.poly) << "\n\n";

  // F_{3,3}(q,t) three ways
  const BivarPoly f = narayana_poly(3, 3);
  std::cout << "F_{3,3} = " << f << "\n";
  std::cout << "transfer matrix agrees: " << (transfer_matrix_F(3, 3).back() == f) << "\n";
  std::cout << "series agrees: " << (rational_qt_series(f3_star(), 3).coeffs[3] == f) << "\n";
  std::cout << "q,t-symmetric: " << check_qt_symmetry(f).holds << "\n\n";

  // K_7 and Haglund's statistics
  const KnConfig x(7, {5, 5, 3, 2, 2, 1});
  const DyckPath D = dyck_of(diag(x));
  std::cout << "dyck(diag(x)) = " << D.word << ", area " << dyck_area(D) << ", hagbounce " << hagbounce(D)
            << "\n";
  std::cout << "Olson identity for n = 6: " << olson_check(6).holds << "\n";
}
