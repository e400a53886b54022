#include "levels/sphere_layout.hpp"

namespace levels {

int sphere_arity(Shape shape, int k) {
  switch (shape) {
    case Shape::simplicial:
    case Shape::cyclic:
      return k + 1;
    case Shape::cubical:
      return 2 * k;
    case Shape::globular:
      return 2;
  }
  return 0;
}

std::vector<CycleEquation> cycle_equations(Shape shape, int k) {
  std::vector<CycleEquation> out;
  if (k < 2) return out;
  switch (shape) {
    case Shape::simplicial:
    case Shape::cyclic:
      // c_j delta_i = c_i delta_{j-1} for i < j
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          out.push_back({j, i, i, j - 1, "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")"});
      break;
    case Shape::cubical:
      // c^iota_j alpha^upsilon_i = c^upsilon_i alpha^iota_{j-1} for i < j
      for (int j = 2; j <= k; ++j)
        for (int iota = 0; iota <= 1; ++iota)
          for (int i = 1; i < j; ++i)
            for (int ups = 0; ups <= 1; ++ups)
              out.push_back({2 * (j - 1) + iota, 2 * (i - 1) + ups, 2 * (i - 1) + ups, 2 * (j - 2) + iota,
                             "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", iota=" + std::to_string(iota) +
                                 ", upsilon=" + std::to_string(ups) + ")"});
      break;
    case Shape::globular:
      out.push_back({1, 0, 0, 0, "(source)"});
      out.push_back({1, 1, 0, 1, "(target)"});
      break;
  }
  return out;
}

}  // namespace levels
