#pragma once

#include <string_view>

#include "levels/cube.hpp"
#include "levels/cyclic.hpp"
#include "levels/globe.hpp"
#include "levels/simplex.hpp"

namespace levels {

// Whitespace-separated generator words, applied right to left.
//   simplicial: d0 d1 s2
//   cubical:    a0@1 b2        (alpha^0_1, beta_2)
//   globular:   sig tau iot
//   cyclic:     d0 s1 t s3x    (t is the rotation, s3x the extra degeneracy)
// The token "id" and the empty string denote the empty word. Malformed
// tokens raise WordError naming the 1-based column.
SimplexWord parse_simplex_word(std::string_view text);
CubeWord parse_cube_word(std::string_view text);
GlobeWord parse_globe_word(std::string_view text);
CyclicWord parse_cyclic_word(std::string_view text);

}  // namespace levels
