#pragma once

#include <string>
#include <vector>

#include "levels/shape.hpp"

namespace levels {

// One cycle equation between two faces of a k-sphere:
//   faces[later] . face(later_face) == faces[earlier] . face(earlier_face)
// Face positions and face indices use the per-shape numbering of ShapeTraits.
struct CycleEquation {
  int later;
  int later_face;
  int earlier;
  int earlier_face;
  std::string label;  // (i, j) for simplices, (i, j, iota, upsilon) for cubes
};

int sphere_arity(Shape shape, int k);

// All cycle equations a k-sphere must satisfy, grouped so that every
// equation's `later` position is greater than its `earlier` position. Ordered
// by `later`, then by `earlier`.
std::vector<CycleEquation> cycle_equations(Shape shape, int k);

}  // namespace levels
