#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levels/errors.hpp"
#include "levels/sphere_layout.hpp"
#include "levels/traits.hpp"

namespace levels {

// A cell of a finitely presented presheaf, stored as its Eilenberg-Zilber
// decomposition: a generator acted on by a canonical epimorphism from the
// cell's dimension onto the generator's. For cyclic complexes the epimorphism
// may include a rotation, so the non-degenerate cells over a generator are
// its rotations.
template <class M>
struct Cell {
  int generator = 0;
  M epi;

  int dim() const { return epi.dom(); }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

template <class M>
struct GeneratorDecl {
  std::string id;
  int dim = 0;
  std::vector<Cell<M>> faces;  // in the shape's face order
};

// An n-skeletal presheaf presented by generators and attaching data. All
// cells above the generators are formal degeneracies; nothing above
// `truncation` is ever materialised.
template <class M>
class SkeletalComplex {
 public:
  using Traits = ShapeTraits<M>;
  static constexpr Shape shape = Traits::shape;

  explicit SkeletalComplex(int skeletal_level, std::optional<int> truncation = std::nullopt)
      : skeletal_level_(skeletal_level), truncation_(truncation.value_or(2 * skeletal_level + 2)) {
    if (skeletal_level < 0) throw ArgumentError("skeletal level must be non-negative");
    if (truncation_ < skeletal_level_) throw ArgumentError("truncation below the skeletal level");
  }

  int skeletal_level() const noexcept { return skeletal_level_; }
  int truncation() const noexcept { return truncation_; }
  void set_truncation(int n) {
    if (n < skeletal_level_) throw ArgumentError("truncation below the skeletal level");
    truncation_ = n;
  }

  const std::vector<GeneratorDecl<M>>& generators() const noexcept { return generators_; }
  const GeneratorDecl<M>& generator(int g) const { return generators_.at(static_cast<std::size_t>(g)); }

  std::optional<int> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Checks ids, arity and face dimensions; the cycle equations are left to
  // validate so malformed complexes can still be reported on.
  int add_generator(std::string id, int dim, std::vector<Cell<M>> faces) {
    if (id.empty()) throw ArgumentError("empty generator id");
    if (index_.count(id)) throw ArgumentError("duplicate generator '" + id + "'");
    if (dim < 0 || dim > truncation_) throw ArgumentError("generator '" + id + "' has dimension outside [0, truncation]");
    if (static_cast<int>(faces.size()) != Traits::face_count(dim))
      throw ArgumentError("generator '" + id + "' needs " + std::to_string(Traits::face_count(dim)) + " faces, got " +
                          std::to_string(faces.size()));
    for (const auto& f : faces) {
      if (f.generator < 0 || f.generator >= static_cast<int>(generators_.size()))
        throw ArgumentError("generator '" + id + "' references an unknown generator");
      const auto& g = generators_[static_cast<std::size_t>(f.generator)];
      if (f.epi.dom() != dim - 1 || f.epi.cod() != g.dim || !f.epi.is_epi())
        throw ArgumentError("generator '" + id + "' has a face that is not a (" + std::to_string(dim - 1) + ")-cell");
    }
    const int g = static_cast<int>(generators_.size());
    index_.emplace(id, g);
    generators_.push_back({std::move(id), dim, std::move(faces)});
    return g;
  }

  Cell<M> generator_cell(int g) const { return {g, Traits::identity(generator(g).dim)}; }

  // Cell over generator g with the given epi, validated.
  Cell<M> make_cell(int g, M epi) const {
    const auto& decl = generator(g);
    if (!epi.is_epi() || epi.cod() != decl.dim) throw ArgumentError("not an epimorphism onto '" + decl.id + "'");
    return {g, std::move(epi)};
  }

 private:
  int skeletal_level_;
  int truncation_;
  std::vector<GeneratorDecl<M>> generators_;
  std::map<std::string, int> index_;
};

namespace detail {

template <class M>
Cell<M> act_unchecked(const SkeletalComplex<M>& X, const Cell<M>& c, const M& f) {
  using Traits = ShapeTraits<M>;
  auto [mono, epi] = epi_mono_factor(compose(c.epi, f));
  int g = c.generator;
  // push the mono part into the attaching data one face at a time
  while (!mono.is_identity()) {
    auto [idx, rest] = Traits::split_leftmost(mono);
    const Cell<M>& face = X.generator(g).faces[static_cast<std::size_t>(idx)];
    auto next = epi_mono_factor(compose(face.epi, compose(rest, epi)));
    mono = std::move(next.first);
    epi = std::move(next.second);
    g = face.generator;
  }
  return {g, std::move(epi)};
}

}  // namespace detail

// Right action c . f of a morphism f : [m] -> [dim c].
template <class M>
Cell<M> act(const SkeletalComplex<M>& X, const Cell<M>& c, const M& f) {
  if (f.cod() != c.dim())
    throw CompositionError("morphism codomain " + std::to_string(f.cod()) + " does not match cell dimension " + std::to_string(c.dim()));
  if (f.dom() > X.truncation())
    throw TruncationError("cell of dimension " + std::to_string(f.dom()) + " exceeds truncation " + std::to_string(X.truncation()));
  return detail::act_unchecked(X, c, f);
}

template <class M>
Cell<M> face(const SkeletalComplex<M>& X, const Cell<M>& c, int idx) {
  if (idx < 0 || idx >= ShapeTraits<M>::face_count(c.dim())) throw ArgumentError("face index out of range");
  return detail::act_unchecked(X, c, ShapeTraits<M>::face_map(c.dim(), idx));
}

template <class M>
std::vector<Cell<M>> faces(const SkeletalComplex<M>& X, const Cell<M>& c) {
  std::vector<Cell<M>> out;
  const int count = ShapeTraits<M>::face_count(c.dim());
  out.reserve(static_cast<std::size_t>(count));
  for (int idx = 0; idx < count; ++idx) out.push_back(face(X, c, idx));
  return out;
}

// (non-degenerate cell, epimorphism) with c = y . epi.
template <class M>
std::pair<Cell<M>, M> ez_decompose(const SkeletalComplex<M>& X, const Cell<M>& c) {
  return {X.generator_cell(c.generator), c.epi};
}

template <class M>
int dgn(const SkeletalComplex<M>& X, const Cell<M>& c) {
  return c.dim() - X.generator(c.generator).dim;
}

template <class M>
bool is_degenerate(const SkeletalComplex<M>& X, const Cell<M>& c) {
  return dgn(X, c) > 0;
}

// Every cell of dimension k: generators in declaration order, then epis in
// enumeration order.
template <class M>
std::vector<Cell<M>> cells_of_dim(const SkeletalComplex<M>& X, int k) {
  if (k > X.truncation()) throw TruncationError("dimension " + std::to_string(k) + " exceeds truncation");
  std::vector<Cell<M>> out;
  for (int g = 0; g < static_cast<int>(X.generators().size()); ++g)
    for (auto& e : ShapeTraits<M>::epis(k, X.generator(g).dim)) out.push_back({g, std::move(e)});
  return out;
}

template <class M>
std::string to_literal(const SkeletalComplex<M>& X, const Cell<M>& c) {
  return X.generator(c.generator).id + "[" + literal_word(c.epi) + "]";
}

struct ValidationIssue {
  std::string generator;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

template <class M>
ValidationReport validate(const SkeletalComplex<M>& X) {
  ValidationReport report;
  auto issue = [&](const std::string& gen, std::string msg) {
    report.ok = false;
    report.issues.push_back({gen, std::move(msg)});
  };
  for (const auto& g : X.generators()) {
    if (g.dim > X.skeletal_level())
      issue(g.id, "dimension " + std::to_string(g.dim) + " exceeds skeletal level " + std::to_string(X.skeletal_level()));
    for (const auto& eq : cycle_equations(SkeletalComplex<M>::shape, g.dim)) {
      const auto lhs = face(X, g.faces[static_cast<std::size_t>(eq.later)], eq.later_face);
      const auto rhs = face(X, g.faces[static_cast<std::size_t>(eq.earlier)], eq.earlier_face);
      if (lhs != rhs)
        issue(g.id, "cycle equation " + eq.label + " fails: " + to_literal(X, lhs) + " != " + to_literal(X, rhs));
    }
  }
  return report;
}

// i reduces a simplex x when dgn(x delta_i) = dgn(x) - 1.
inline bool reduces(const SkeletalComplex<SimplexMorphism>& X, const Cell<SimplexMorphism>& c, int i) {
  if (i < 0 || i > c.dim() || c.dim() < 1) throw ArgumentError("index " + std::to_string(i) + " out of range");
  return dgn(X, face(X, c, i)) == dgn(X, c) - 1;
}

// i properly reduces x when x = x delta_i sigma_i.
inline bool properly_reduces(const SkeletalComplex<SimplexMorphism>& X, const Cell<SimplexMorphism>& c, int i) {
  if (i < 0 || i > c.dim() || c.dim() < 1) throw ArgumentError("index " + std::to_string(i) + " out of range");
  if (i == c.dim()) return false;
  return act(X, face(X, c, i), SimplexMorphism::degeneracy(c.dim(), i)) == c;
}

// i reduces a cube x when dgn(x alpha^iota_i) = dgn(x) - 1 for some iota.
inline bool reduces(const SkeletalComplex<CubeMorphism>& X, const Cell<CubeMorphism>& c, int i) {
  if (i < 1 || i > c.dim()) throw ArgumentError("index " + std::to_string(i) + " out of range");
  const int target = dgn(X, c) - 1;
  return dgn(X, face(X, c, 2 * (i - 1))) == target || dgn(X, face(X, c, 2 * (i - 1) + 1)) == target;
}

inline std::vector<int> reducing_indices(const SkeletalComplex<SimplexMorphism>& X, const Cell<SimplexMorphism>& c) {
  std::vector<int> out;
  for (int i = 0; i <= c.dim() && c.dim() >= 1; ++i)
    if (reduces(X, c, i)) out.push_back(i);
  return out;
}

inline std::vector<int> properly_reducing_indices(const SkeletalComplex<SimplexMorphism>& X, const Cell<SimplexMorphism>& c) {
  std::vector<int> out;
  for (int i = 0; i < c.dim(); ++i)
    if (properly_reduces(X, c, i)) out.push_back(i);
  return out;
}

inline std::vector<int> reducing_indices(const SkeletalComplex<CubeMorphism>& X, const Cell<CubeMorphism>& c) {
  std::vector<int> out;
  for (int i = 1; i <= c.dim(); ++i)
    if (reduces(X, c, i)) out.push_back(i);
  return out;
}

}  // namespace levels
