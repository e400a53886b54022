#include "levels/shape.hpp"

#include "levels/errors.hpp"

namespace levels {

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::simplicial:
      return "simplicial";
    case Shape::cubical:
      return "cubical";
    case Shape::globular:
      return "globular";
    case Shape::cyclic:
      return "cyclic";
  }
  return "unknown";
}

Shape parse_shape(std::string_view text) {
  if (text == "simplicial") return Shape::simplicial;
  if (text == "cubical") return Shape::cubical;
  if (text == "globular") return Shape::globular;
  if (text == "cyclic") return Shape::cyclic;
  throw ArgumentError("unknown shape '" + std::string(text) + "'");
}

}  // namespace levels
