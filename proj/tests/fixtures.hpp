#pragma once

// Small hand-built complexes shared by the test suites.

#include <string>
#include <vector>

#include "levels/complex.hpp"

namespace fixtures {

using namespace levels;

// Cell over a named generator, epi given as a word on [dim].
template <class M>
Cell<M> lit(const SkeletalComplex<M>& X, const std::string& gen, int dim, const std::string& word = "") {
  return X.make_cell(*X.find(gen), ShapeTraits<M>::parse(word, dim));
}

// Three vertices, three edges, a triangle, and a 2-simplex with a degenerate face.
inline SkeletalComplex<SimplexMorphism> triangle() {
  SkeletalComplex<SimplexMorphism> X(2, 7);
  for (auto v : {"a0", "a1", "a2"}) X.add_generator(v, 0, {});
  X.add_generator("e01", 1, {lit(X, "a1", 0), lit(X, "a0", 0)});
  X.add_generator("e12", 1, {lit(X, "a2", 0), lit(X, "a1", 0)});
  X.add_generator("e02", 1, {lit(X, "a2", 0), lit(X, "a0", 0)});
  X.add_generator("T", 2, {lit(X, "e12", 1), lit(X, "e02", 1), lit(X, "e01", 1)});
  X.add_generator("U", 2, {lit(X, "e01", 1), lit(X, "e01", 1), lit(X, "a0", 1, "s0")});
  return X;
}

// A vertex, a loop, and a square whose vertical faces are the loop.
inline SkeletalComplex<CubeMorphism> square() {
  SkeletalComplex<CubeMorphism> X(2, 6);
  X.add_generator("v", 0, {});
  X.add_generator("x", 1, {lit(X, "v", 0), lit(X, "v", 0)});
  X.add_generator("q", 2, {lit(X, "x", 1), lit(X, "x", 1), lit(X, "v", 1, "b1"), lit(X, "v", 1, "b1")});
  return X;
}

inline SkeletalComplex<GlobeMorphism> globes() {
  SkeletalComplex<GlobeMorphism> X(2, 6);
  X.add_generator("v", 0, {});
  X.add_generator("w", 0, {});
  X.add_generator("x", 1, {lit(X, "v", 0), lit(X, "w", 0)});
  X.add_generator("y", 1, {lit(X, "v", 0), lit(X, "w", 0)});
  X.add_generator("z", 2, {lit(X, "x", 1), lit(X, "y", 1)});
  return X;
}

// A vertex, an edge and a triangle freely closed under rotation.
inline SkeletalComplex<CyclicMorphism> cyclic_triangle() {
  SkeletalComplex<CyclicMorphism> X(2, 5);
  X.add_generator("v", 0, {});
  X.add_generator("x", 1, {lit(X, "v", 0), lit(X, "v", 0)});
  X.add_generator("t", 2, {lit(X, "x", 1), lit(X, "x", 1, "t"), lit(X, "x", 1)});
  return X;
}

}  // namespace fixtures
