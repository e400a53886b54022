#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levels/complex.hpp"
#include "levels/errors.hpp"
#include "levels/traits.hpp"

namespace levels {

struct TabulateOptions {
  std::size_t max_cells = 2'000'000;  // across all dimensions
};

// Explicit cell sets for dimensions 0..top with total action tables for
// every elementary generator. Used as the oracle representation: once built,
// every query goes through the tables and never through the rewriting code.
template <class M>
class TabulatedPresheaf {
 public:
  using Traits = ShapeTraits<M>;

  TabulatedPresheaf(const SkeletalComplex<M>& X, int up_to, const TabulateOptions& opts = {}) : top_(up_to) {
    if (up_to < 0) throw ArgumentError("negative tabulation bound");
    if (up_to > X.truncation())
      throw TruncationError("tabulation bound " + std::to_string(up_to) + " exceeds truncation " + std::to_string(X.truncation()));
    std::size_t total = 0;
    levels_.resize(static_cast<std::size_t>(up_to) + 1);
    for (int k = 0; k <= up_to; ++k) {
      auto& L = level(k);
      L.cells = cells_of_dim(X, k);
      total += L.cells.size();
      if (total > opts.max_cells)
        throw ResourceError("tabulation needs more than " + std::to_string(opts.max_cells) + " cells");
      for (int id = 0; id < static_cast<int>(L.cells.size()); ++id) L.index.emplace(L.cells[static_cast<std::size_t>(id)], id);
    }
    for (int k = 0; k <= up_to; ++k) {
      auto& L = level(k);
      const int nf = Traits::face_count(k);
      L.face_count = nf;
      L.faces.reserve(L.cells.size() * static_cast<std::size_t>(nf));
      for (const auto& c : L.cells)
        for (int idx = 0; idx < nf; ++idx) L.faces.push_back(lookup(k - 1, levels::face(X, c, idx)));
      if (k < up_to) {
        const auto degens = Traits::degeneracy_maps(k);
        L.degeneracy_count = static_cast<int>(degens.size());
        for (const auto& c : L.cells)
          for (const auto& s : degens) L.degeneracies.push_back(lookup(k + 1, act(X, c, s)));
      }
      for (const auto& a : Traits::automorphisms(k))
        for (const auto& c : L.cells) L.rotations.push_back(lookup(k, act(X, c, a)));
    }
    mark_degenerate();
  }

  int top() const noexcept { return top_; }
  std::size_t size(int k) const { return level(k).cells.size(); }
  std::size_t total_cells() const {
    std::size_t n = 0;
    for (const auto& L : levels_) n += L.cells.size();
    return n;
  }
  const Cell<M>& cell(int k, int id) const { return level(k).cells.at(static_cast<std::size_t>(id)); }
  const std::vector<Cell<M>>& cells(int k) const { return level(k).cells; }

  std::optional<int> find(int k, const Cell<M>& c) const {
    if (k < 0 || k > top_) return std::nullopt;
    const auto& L = level(k);
    auto it = L.index.find(c);
    if (it == L.index.end()) return std::nullopt;
    return it->second;
  }

  int face(int k, int id, int idx) const {
    const auto& L = level(k);
    return L.faces[static_cast<std::size_t>(id) * static_cast<std::size_t>(L.face_count) + static_cast<std::size_t>(idx)];
  }
  int face_count(int k) const { return level(k).face_count; }
  int degeneracy(int k, int id, int j) const {
    const auto& L = level(k);
    if (L.degeneracy_count == 0) throw TruncationError("no degeneracy table above the tabulation bound");
    return L.degeneracies[static_cast<std::size_t>(id) * static_cast<std::size_t>(L.degeneracy_count) + static_cast<std::size_t>(j)];
  }
  bool has_rotation() const { return !level(0).rotations.empty(); }
  int rotate(int k, int id) const { return level(k).rotations.at(static_cast<std::size_t>(id)); }

  // Degeneracy read off the tables: the cell lies in the image of a
  // degeneracy (closed under rotation for the cyclic shape).
  bool degenerate(int k, int id) const { return level(k).degenerate[static_cast<std::size_t>(id)] != 0; }

  // x . f, one elementary generator at a time through the tables.
  int apply(int k, int id, const M& f) const {
    if (f.cod() != k) throw CompositionError("morphism codomain does not match the cell dimension");
    if (f.dom() > top_) throw TruncationError("result dimension exceeds the tabulation bound");
    return apply_steps(k, id, Traits::steps(f)).second;
  }

  std::pair<int, int> apply_steps(int k, int id, const std::vector<Step>& steps) const {
    for (const auto& s : steps) {
      switch (s.kind) {
        case Step::Kind::face:
          id = face(k, id, s.index);
          --k;
          break;
        case Step::Kind::degeneracy:
          id = degeneracy(k, id, s.index);
          ++k;
          break;
        case Step::Kind::rotation:
          id = rotate(k, id);
          break;
      }
    }
    return {k, id};
  }

  // Checks every relation between elementary generators of length <= 2 on
  // every cell, plus the order of the rotation. Returns the failures.
  std::vector<std::string> check_relations() const {
    std::vector<std::string> failures;
    for (int b = 0; b <= top_; ++b) {
      // elementary generators with codomain b
      std::vector<std::pair<M, Step>> gens;
      for (int idx = 0; idx < Traits::face_count(b); ++idx) gens.push_back({Traits::face_map(b, idx), {Step::Kind::face, idx}});
      if (b < top_) {
        auto degens = Traits::degeneracy_maps(b);
        for (int j = 0; j < static_cast<int>(degens.size()); ++j) gens.push_back({degens[static_cast<std::size_t>(j)], {Step::Kind::degeneracy, j}});
      }
      for (auto& a : Traits::automorphisms(b)) gens.push_back({a, {Step::Kind::rotation, 0}});

      std::map<M, std::vector<std::vector<Step>>> groups;
      groups[Traits::identity(b)].push_back({});
      for (const auto& [g, sg] : gens) {
        groups[g].push_back({sg});
        const int mid = g.dom();
        std::vector<std::pair<M, Step>> inner;
        for (int idx = 0; idx < Traits::face_count(mid); ++idx) inner.push_back({Traits::face_map(mid, idx), {Step::Kind::face, idx}});
        if (mid < top_) {
          auto degens = Traits::degeneracy_maps(mid);
          for (int j = 0; j < static_cast<int>(degens.size()); ++j) inner.push_back({degens[static_cast<std::size_t>(j)], {Step::Kind::degeneracy, j}});
        }
        for (auto& a : Traits::automorphisms(mid)) inner.push_back({a, {Step::Kind::rotation, 0}});
        for (const auto& [h, sh] : inner) groups[compose(g, h)].push_back({sg, sh});
      }
      for (const auto& [f, words] : groups) {
        if (words.size() < 2) continue;
        for (int x = 0; x < static_cast<int>(size(b)); ++x) {
          const auto ref = apply_steps(b, x, words.front());
          for (std::size_t w = 1; w < words.size(); ++w)
            if (apply_steps(b, x, words[w]) != ref)
              failures.push_back("relation for " + to_string(f) + " fails on cell " + std::to_string(x) + " of dimension " + std::to_string(b));
        }
      }
      if (has_rotation()) {
        for (int x = 0; x < static_cast<int>(size(b)); ++x) {
          int y = x;
          for (int r = 0; r <= b; ++r) y = rotate(b, y);
          if (y != x) failures.push_back("rotation order fails on cell " + std::to_string(x) + " of dimension " + std::to_string(b));
        }
      }
    }
    return failures;
  }

 private:
  struct Level {
    std::vector<Cell<M>> cells;
    std::map<Cell<M>, int> index;
    int face_count = 0;
    int degeneracy_count = 0;
    std::vector<int> faces;
    std::vector<int> degeneracies;
    std::vector<int> rotations;
    std::vector<char> degenerate;
  };

  Level& level(int k) { return levels_.at(static_cast<std::size_t>(k)); }
  const Level& level(int k) const {
    if (k < 0 || k > top_) throw TruncationError("dimension " + std::to_string(k) + " is not tabulated");
    return levels_[static_cast<std::size_t>(k)];
  }

  int lookup(int k, const Cell<M>& c) const {
    auto id = find(k, c);
    if (!id) throw AlgorithmViolation("action produced a cell outside the tabulation");
    return *id;
  }

  void mark_degenerate() {
    for (int k = 0; k <= top_; ++k) level(k).degenerate.assign(size(k), 0);
    for (int k = 0; k < top_; ++k) {
      auto& up = level(k + 1);
      for (int id = 0; id < static_cast<int>(size(k)); ++id)
        for (int j = 0; j < level(k).degeneracy_count; ++j) up.degenerate[static_cast<std::size_t>(degeneracy(k, id, j))] = 1;
    }
    if (!has_rotation()) return;
    for (int k = 0; k <= top_; ++k) {
      auto& L = level(k);
      bool changed = true;
      while (changed) {
        changed = false;
        for (int id = 0; id < static_cast<int>(size(k)); ++id)
          if (L.degenerate[static_cast<std::size_t>(id)] && !L.degenerate[static_cast<std::size_t>(rotate(k, id))]) {
            L.degenerate[static_cast<std::size_t>(rotate(k, id))] = 1;
            changed = true;
          }
      }
    }
  }

  int top_;
  std::vector<Level> levels_;
};

template <class M>
struct TabulatedDecomposition {
  int dim;  // of the non-degenerate cell
  int cell;
  M epi;
};

// All ways of writing cell x as y . epi with y non-degenerate in the tables,
// by exhaustive search over epimorphisms and cells.
template <class M>
std::vector<TabulatedDecomposition<M>> ez_decompose_tabulated(const TabulatedPresheaf<M>& T, int k, int x) {
  std::vector<TabulatedDecomposition<M>> out;
  for (int m = 0; m <= k; ++m)
    for (const auto& e : ShapeTraits<M>::epis(k, m))
      for (int y = 0; y < static_cast<int>(T.size(m)); ++y) {
        if (T.degenerate(m, y)) continue;
        if (T.apply(m, y, e) == x) out.push_back({m, y, e});
      }
  return out;
}

}  // namespace levels
