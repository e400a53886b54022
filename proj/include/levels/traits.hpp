#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levels/cube.hpp"
#include "levels/cyclic.hpp"
#include "levels/errors.hpp"
#include "levels/globe.hpp"
#include "levels/shape.hpp"
#include "levels/simplex.hpp"
#include "levels/syntax.hpp"

namespace levels {

// Per-shape glue used by the generic complex, tabulation and filler code.
//
// Elementary faces of a d-cell are numbered 0 .. face_count(d)-1:
//   simplicial, cyclic: delta_0 .. delta_d
//   cubical:            (1,0), (1,1), ..., (d,0), (d,1)  ->  2(i-1) + sign
//   globular:           source, target
template <class M>
struct ShapeTraits;

// One elementary generator in table numbering: faces by face index,
// degeneracies by their position in degeneracy_maps, and the rotation.
struct Step {
  enum class Kind : std::uint8_t { face, degeneracy, rotation };
  Kind kind;
  int index;
};

template <>
struct ShapeTraits<SimplexMorphism> {
  using Morphism = SimplexMorphism;
  static constexpr Shape shape = Shape::simplicial;

  static Morphism identity(int n) { return Morphism::identity(n); }
  static int face_count(int dim) { return dim >= 1 ? dim + 1 : 0; }
  static Morphism face_map(int dim, int idx) { return Morphism::face(dim, idx); }
  static std::vector<Morphism> degeneracy_maps(int dim) {
    std::vector<Morphism> out;
    for (int j = 0; j <= dim; ++j) out.push_back(Morphism::degeneracy(dim + 1, j));
    return out;
  }
  static std::vector<Morphism> automorphisms(int) { return {}; }
  static std::vector<Morphism> epis(int n, int m) { return simplex_epis(n, m); }
  static std::vector<Morphism> monos(int m, int n) { return simplex_monos(m, n); }
  static std::pair<int, Morphism> split_leftmost(const Morphism& mono) {
    std::vector<int> rest(mono.monos().begin() + 1, mono.monos().end());
    return {mono.monos().front(), Morphism::from_canonical(mono.dom(), mono.cod() - 1, std::move(rest), {})};
  }
  static Morphism parse(std::string_view text, int dom) { return normalize(parse_simplex_word(text), dom); }
  static Morphism parse_inferred(std::string_view text) {
    auto w = parse_simplex_word(text);
    return normalize(w, infer_domain(w));
  }
  // Outermost generator first; a cell x acted on by f is x . s_1 . s_2 ...
  static std::vector<Step> steps(const Morphism& f) {
    std::vector<Step> out;
    for (const auto& g : f.word())
      out.push_back({g.kind == SimplexGen::Kind::face ? Step::Kind::face : Step::Kind::degeneracy, g.index});
    return out;
  }
  static std::string face_label(int, int idx) { return "d" + std::to_string(idx); }
};

template <>
struct ShapeTraits<CubeMorphism> {
  using Morphism = CubeMorphism;
  static constexpr Shape shape = Shape::cubical;

  static Morphism identity(int n) { return Morphism::identity(n); }
  static int face_count(int dim) { return 2 * dim; }
  static Morphism face_map(int dim, int idx) { return Morphism::face(dim, idx / 2 + 1, idx % 2); }
  static std::vector<Morphism> degeneracy_maps(int dim) {
    std::vector<Morphism> out;
    for (int i = 1; i <= dim + 1; ++i) out.push_back(Morphism::degeneracy(dim + 1, i));
    return out;
  }
  static std::vector<Morphism> automorphisms(int) { return {}; }
  static std::vector<Morphism> epis(int n, int m) { return cube_epis(n, m); }
  static std::vector<Morphism> monos(int m, int n) { return cube_monos(m, n); }
  static std::pair<int, Morphism> split_leftmost(const Morphism& mono) {
    const auto& first = mono.inserts().front();
    std::vector<CubeInsert> rest(mono.inserts().begin() + 1, mono.inserts().end());
    return {2 * (first.position - 1) + first.sign, Morphism::from_canonical(mono.dom(), mono.cod() - 1, std::move(rest), {})};
  }
  static Morphism parse(std::string_view text, int dom) { return normalize(parse_cube_word(text), dom); }
  static Morphism parse_inferred(std::string_view text) {
    auto w = parse_cube_word(text);
    return normalize(w, infer_domain(w));
  }
  static std::vector<Step> steps(const Morphism& f) {
    std::vector<Step> out;
    for (const auto& g : f.word()) {
      if (g.kind == CubeGen::Kind::face)
        out.push_back({Step::Kind::face, 2 * (g.index - 1) + g.sign});
      else
        out.push_back({Step::Kind::degeneracy, g.index - 1});
    }
    return out;
  }
  static std::string face_label(int, int idx) { return "a" + std::to_string(idx % 2) + "@" + std::to_string(idx / 2 + 1); }
};

template <>
struct ShapeTraits<GlobeMorphism> {
  using Morphism = GlobeMorphism;
  static constexpr Shape shape = Shape::globular;

  static Morphism identity(int n) { return Morphism::identity(n); }
  static int face_count(int dim) { return dim >= 1 ? 2 : 0; }
  static Morphism face_map(int dim, int idx) { return idx == 0 ? Morphism::source(dim - 1) : Morphism::target(dim - 1); }
  static std::vector<Morphism> degeneracy_maps(int dim) { return {Morphism::reflexivity(dim + 1)}; }
  static std::vector<Morphism> automorphisms(int) { return {}; }
  static std::vector<Morphism> epis(int n, int m) { return globe_epis(n, m); }
  static std::vector<Morphism> monos(int m, int n) { return globe_monos(m, n); }
  static std::pair<int, Morphism> split_leftmost(const Morphism& mono) {
    if (mono.ups() > 0) return {0, Morphism::from_normal_form(mono.dom(), mono.ups() - 1, mono.tau(), 0)};
    return {1, Morphism::from_normal_form(mono.dom(), 0, false, 0)};
  }
  static Morphism parse(std::string_view text, int dom) { return normalize(parse_globe_word(text), dom); }
  static Morphism parse_inferred(std::string_view text) {
    auto w = parse_globe_word(text);
    return normalize(w, infer_domain(w));
  }
  static std::vector<Step> steps(const Morphism& f) {
    std::vector<Step> out;
    for (auto g : f.word()) {
      if (g == GlobeGen::reflexivity)
        out.push_back({Step::Kind::degeneracy, 0});
      else
        out.push_back({Step::Kind::face, g == GlobeGen::source ? 0 : 1});
    }
    return out;
  }
  static std::string face_label(int, int idx) { return idx == 0 ? "sig" : "tau"; }
};

template <>
struct ShapeTraits<CyclicMorphism> {
  using Morphism = CyclicMorphism;
  static constexpr Shape shape = Shape::cyclic;

  static Morphism identity(int n) { return Morphism::identity(n); }
  static int face_count(int dim) { return dim >= 1 ? dim + 1 : 0; }
  static Morphism face_map(int dim, int idx) { return Morphism::from_delta(SimplexMorphism::face(dim, idx)); }
  static std::vector<Morphism> degeneracy_maps(int dim) {
    std::vector<Morphism> out;
    for (int j = 0; j <= dim; ++j) out.push_back(Morphism::from_delta(SimplexMorphism::degeneracy(dim + 1, j)));
    return out;
  }
  static std::vector<Morphism> automorphisms(int dim) { return {Morphism::rotation(dim, 1)}; }
  static std::vector<Morphism> epis(int n, int m) { return cyclic_epis(n, m); }
  static std::vector<Morphism> monos(int m, int n) { return cyclic_monos(m, n); }
  static std::pair<int, Morphism> split_leftmost(const Morphism& mono) {
    auto [idx, rest] = ShapeTraits<SimplexMorphism>::split_leftmost(mono.delta_part());
    return {idx, Morphism::from_parts(mono.rotation(), std::move(rest))};
  }
  static Morphism parse(std::string_view text, int dom) { return normalize(parse_cyclic_word(text), dom); }
  static Morphism parse_inferred(std::string_view text) {
    auto w = parse_cyclic_word(text);
    return normalize(w, infer_domain(w));
  }
  static std::vector<Step> steps(const Morphism& f) {
    std::vector<Step> out;
    for (const auto& g : f.word()) {
      switch (g.kind) {
        case CyclicGen::Kind::face:
          out.push_back({Step::Kind::face, g.index});
          break;
        case CyclicGen::Kind::degeneracy:
          out.push_back({Step::Kind::degeneracy, g.index});
          break;
        default:
          out.push_back({Step::Kind::rotation, 0});
          break;
      }
    }
    return out;
  }
  static std::string face_label(int, int idx) { return "d" + std::to_string(idx); }
};

// Word of a morphism for cell literals: the empty string for identities.
template <class M>
std::string literal_word(const M& f) {
  return f.is_identity() ? std::string() : to_string(f.word());
}

}  // namespace levels
