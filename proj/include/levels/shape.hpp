#pragma once

#include <string>
#include <string_view>

namespace levels {

// The four shape categories: simplex, cube, reflexive globe and cyclic.
enum class Shape { simplicial, cubical, globular, cyclic };

std::string_view to_string(Shape shape);

// Accepts the file-format spellings ("simplicial", "cubical", ...). Throws
// ArgumentError on anything else.
Shape parse_shape(std::string_view text);

}  // namespace levels
