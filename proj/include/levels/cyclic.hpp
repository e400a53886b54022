#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "levels/simplex.hpp"

namespace levels {

// Generators accepted by the cyclic word syntax: the simplicial faces and
// degeneracies, the cyclic rotation tau_n : [n] -> [n], and the extra
// degeneracy sigma_n : [n] -> [n-1] (index must equal the domain).
struct CyclicGen {
  enum class Kind : std::uint8_t { face, degeneracy, rotation, extra_degeneracy };
  Kind kind;
  int index = 0;
  friend auto operator<=>(const CyclicGen&, const CyclicGen&) = default;
};

using CyclicWord = std::vector<CyclicGen>;

// A morphism [dom] -> [cod] of the cyclic category, held as the unique pair
// f = delta_part o tau_dom^rotation with 0 <= rotation <= dom.
//
// Function semantics: a morphism is a nondecreasing map F : Z -> Z with
// F(x + dom + 1) = F(x) + cod + 1, taken modulo adding multiples of cod + 1.
// tau_n is x -> x + 1 and a simplicial map is extended periodically. Under
// this model the extra degeneracy sigma_n is sigma_0 o tau_n and
// sigma_n o delta_0 = tau_{n-1}.
class CyclicMorphism {
 public:
  CyclicMorphism() = default;

  static CyclicMorphism identity(int n);
  static CyclicMorphism rotation(int n, int power = 1);
  static CyclicMorphism from_delta(SimplexMorphism delta);
  static CyclicMorphism from_parts(int rotation, SimplexMorphism delta);
  // sigma_n : [n] -> [n-1]
  static CyclicMorphism extra_degeneracy(int n);

  int dom() const noexcept { return delta_.dom(); }
  int cod() const noexcept { return delta_.cod(); }
  int rotation() const noexcept { return rotation_; }
  const SimplexMorphism& delta_part() const noexcept { return delta_; }

  bool is_identity() const noexcept { return rotation_ == 0 && delta_.is_identity(); }
  bool is_automorphism() const noexcept { return delta_.is_identity(); }
  bool is_epi() const noexcept { return delta_.is_epi(); }
  bool is_mono() const noexcept { return delta_.is_mono(); }

  // Value of the canonical lift F at 0 <= point <= dom; F(0) lies in [0, cod].
  int eval_lift(int point) const;
  // eval_lift reduced modulo cod + 1.
  int eval(int point) const;

  // Generator word: the Delta word followed by `rotation` copies of t.
  CyclicWord word() const;

  friend auto operator<=>(const CyclicMorphism&, const CyclicMorphism&) = default;

 private:
  int rotation_ = 0;
  SimplexMorphism delta_;
};

int word_codomain(std::span<const CyclicGen> word, int dom);
int infer_domain(std::span<const CyclicGen> word);
CyclicMorphism normalize(std::span<const CyclicGen> word, int dom);
CyclicMorphism compose(const CyclicMorphism& f, const CyclicMorphism& g);
// mono is a Delta monomorphism, epi is (rotation, Delta epimorphism).
std::pair<CyclicMorphism, CyclicMorphism> epi_mono_factor(const CyclicMorphism& f);

// Rotation commutation: tau_n^r o h = h' o tau_k^s for a Delta map h : [k] -> [n].
std::pair<SimplexMorphism, int> commute_rotation(int r, const SimplexMorphism& h);

// The Delta component of the unique factorisation.
SimplexMorphism underlying_simplex_morphism(const CyclicMorphism& f);

std::vector<CyclicMorphism> cyclic_epis(int n, int m);
std::vector<CyclicMorphism> cyclic_monos(int m, int n);
std::vector<CyclicMorphism> sections_of(const CyclicMorphism& epi);

std::string to_string(const CyclicGen& gen);
std::string to_string(const CyclicWord& word);
std::string to_string(const CyclicMorphism& f);

}  // namespace levels
