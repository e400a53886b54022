#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "levels/complex.hpp"
#include "levels/fillers.hpp"

namespace levels {

// Line-oriented complex files; the grammar is in docs/complex-format.md.
//
//   shape cubical
//   skeletal 1
//   truncate 4
//   gen v dim 0
//   gen x dim 1 faces v[] v[]      # faces in the shape's order
using AnyComplex = std::variant<SkeletalComplex<SimplexMorphism>, SkeletalComplex<CubeMorphism>, SkeletalComplex<GlobeMorphism>,
                                SkeletalComplex<CyclicMorphism>>;

// Throws ParseError with the 1-based line and column of the offending token.
AnyComplex parse_complex(std::string_view text);

Shape shape_of(const AnyComplex& X);

template <class M>
std::string print_complex(const SkeletalComplex<M>& X) {
  std::string out;
  out += "shape " + std::string(to_string(ShapeTraits<M>::shape)) + "\n";
  out += "skeletal " + std::to_string(X.skeletal_level()) + "\n";
  out += "truncate " + std::to_string(X.truncation()) + "\n";
  for (const auto& g : X.generators()) {
    out += "gen " + g.id + " dim " + std::to_string(g.dim);
    if (!g.faces.empty()) {
      out += " faces";
      for (const auto& f : g.faces) out += " " + to_literal(X, f);
    }
    out += "\n";
  }
  return out;
}

std::string print_complex(const AnyComplex& X);

// A single cell literal `id[word]`. Without a dimension the word's domain is
// inferred from the generator's dimension.
template <class M>
Cell<M> parse_cell(const SkeletalComplex<M>& X, std::string_view text);
template <class M>
Cell<M> parse_cell(const SkeletalComplex<M>& X, std::string_view text, int dim);

// Comma-separated cell literals in face order. The dimension is one more
// than that of the cells, which must agree.
template <class M>
Sphere<M> parse_sphere(const SkeletalComplex<M>& X, std::string_view text);

template <class M>
std::string print_sphere(const SkeletalComplex<M>& X, const Sphere<M>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.faces.size(); ++i) out += (i ? ", " : "") + to_literal(X, s.faces[i]);
  return out;
}

}  // namespace levels
