#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace levels {

// Elementary generator of the simplex category: the face delta_i or the
// degeneracy sigma_j. Indices are 0-based.
struct SimplexGen {
  enum class Kind : std::uint8_t { face, degeneracy };
  Kind kind;
  int index;

  friend auto operator<=>(const SimplexGen&, const SimplexGen&) = default;
};

inline SimplexGen delta(int i) { return {SimplexGen::Kind::face, i}; }
inline SimplexGen sigma(int j) { return {SimplexGen::Kind::degeneracy, j}; }

// A word w = [g_1, ..., g_k] denotes the composite g_1 o ... o g_k, so g_k is
// applied first. This matches the right action notation x g_1 ... g_k.
using SimplexWord = std::vector<SimplexGen>;

// A morphism [dom] -> [cod] of the simplex category in canonical form
// delta_{i_1} ... delta_{i_s} sigma_{j_1} ... sigma_{j_t} with
// i_1 > ... > i_s (the points missed by the image) and j_1 < ... < j_t (the
// points j with f(j) = f(j+1)).
class SimplexMorphism {
 public:
  SimplexMorphism() = default;

  static SimplexMorphism identity(int n);
  // delta_i : [cod-1] -> [cod]
  static SimplexMorphism face(int cod, int i);
  // sigma_j : [dom] -> [dom-1]
  static SimplexMorphism degeneracy(int dom, int j);
  // Validates the canonical-form invariants; throws ArgumentError.
  static SimplexMorphism from_canonical(int dom, int cod, std::vector<int> monos, std::vector<int> epis);
  // Reads the canonical form off a monotone map given by its values on [dom].
  static SimplexMorphism from_values(int dom, int cod, std::span<const int> values);

  int dom() const noexcept { return dom_; }
  int cod() const noexcept { return cod_; }
  const std::vector<int>& monos() const noexcept { return monos_; }
  const std::vector<int>& epis() const noexcept { return epis_; }

  bool is_identity() const noexcept { return monos_.empty() && epis_.empty(); }
  bool is_mono() const noexcept { return epis_.empty(); }
  bool is_epi() const noexcept { return monos_.empty(); }

  // Throws DomainError unless 0 <= point <= dom.
  int eval(int point) const;
  std::vector<int> values() const;

  SimplexWord word() const;

  friend auto operator<=>(const SimplexMorphism&, const SimplexMorphism&) = default;

 private:
  int dom_ = 0;
  int cod_ = 0;
  std::vector<int> monos_;
  std::vector<int> epis_;
};

// Codomain of the word applied to [dom]; throws WordError if some index is
// out of range along the way.
int word_codomain(std::span<const SimplexGen> word, int dom);

// Smallest dom for which the word is dimension-consistent.
int infer_domain(std::span<const SimplexGen> word);

// Rewrites with the simplicial identities until the word is canonical.
SimplexMorphism normalize(std::span<const SimplexGen> word, int dom);

// f o g (g applied first). Throws CompositionError if cod(g) != dom(f).
SimplexMorphism compose(const SimplexMorphism& f, const SimplexMorphism& g);

// Returns (mono, epi) with f = mono o epi.
std::pair<SimplexMorphism, SimplexMorphism> epi_mono_factor(const SimplexMorphism& f);

std::vector<SimplexMorphism> simplex_epis(int n, int m);
std::vector<SimplexMorphism> simplex_monos(int m, int n);
// Every mono mu with epi o mu = id. Throws ArgumentError for non-epis.
std::vector<SimplexMorphism> sections_of(const SimplexMorphism& epi);

std::string to_string(const SimplexGen& gen);
std::string to_string(const SimplexWord& word);
// "id" for identities, otherwise the canonical word.
std::string to_string(const SimplexMorphism& f);

}  // namespace levels
