#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace levels {

// Elementary generator of the cube category. Coordinates are 1-based:
// alpha^sign_i inserts `sign` at position i, beta_i deletes coordinate i.
struct CubeGen {
  enum class Kind : std::uint8_t { face, degeneracy };
  Kind kind;
  int index;
  int sign = 0;  // faces only

  friend auto operator<=>(const CubeGen&, const CubeGen&) = default;
};

inline CubeGen alpha(int sign, int i) { return {CubeGen::Kind::face, i, sign}; }
inline CubeGen beta(int i) { return {CubeGen::Kind::degeneracy, i, 0}; }

using CubeWord = std::vector<CubeGen>;
using CubePoint = std::vector<std::uint8_t>;

struct CubeInsert {
  int position;
  int sign;
  friend auto operator<=>(const CubeInsert&, const CubeInsert&) = default;
};

// A morphism I^dom -> I^cod in canonical form
// alpha^{s_1}_{i_1} ... alpha^{s_k}_{i_k} beta_{j_1} ... beta_{j_t}
// with cod >= i_1 > ... > i_k >= 1 and 1 <= j_1 < ... < j_t <= dom.
class CubeMorphism {
 public:
  CubeMorphism() = default;

  static CubeMorphism identity(int n);
  // alpha^sign_i : I^{cod-1} -> I^cod
  static CubeMorphism face(int cod, int i, int sign);
  // beta_i : I^dom -> I^{dom-1}
  static CubeMorphism degeneracy(int dom, int i);
  static CubeMorphism from_canonical(int dom, int cod, std::vector<CubeInsert> inserts, std::vector<int> deletes);

  int dom() const noexcept { return dom_; }
  int cod() const noexcept { return cod_; }
  const std::vector<CubeInsert>& inserts() const noexcept { return inserts_; }
  const std::vector<int>& deletes() const noexcept { return deletes_; }

  bool is_identity() const noexcept { return inserts_.empty() && deletes_.empty(); }
  bool is_mono() const noexcept { return deletes_.empty(); }
  bool is_epi() const noexcept { return inserts_.empty(); }

  // Throws DomainError unless the point is a 0/1 tuple of length dom.
  CubePoint eval(std::span<const std::uint8_t> point) const;

  CubeWord word() const;

  friend auto operator<=>(const CubeMorphism&, const CubeMorphism&) = default;

 private:
  int dom_ = 0;
  int cod_ = 0;
  std::vector<CubeInsert> inserts_;
  std::vector<int> deletes_;
};

int word_codomain(std::span<const CubeGen> word, int dom);
int infer_domain(std::span<const CubeGen> word);
CubeMorphism normalize(std::span<const CubeGen> word, int dom);
CubeMorphism compose(const CubeMorphism& f, const CubeMorphism& g);
std::pair<CubeMorphism, CubeMorphism> epi_mono_factor(const CubeMorphism& f);

std::vector<CubeMorphism> cube_epis(int n, int m);
std::vector<CubeMorphism> cube_monos(int m, int n);
std::vector<CubeMorphism> sections_of(const CubeMorphism& epi);

std::string to_string(const CubeGen& gen);
std::string to_string(const CubeWord& word);
std::string to_string(const CubeMorphism& f);

}  // namespace levels
