#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace levels {

// Generators of the reflexive globe category: source and target inclusions
// n -> n+1 and the reflexivity n+1 -> n.
enum class GlobeGen : std::uint8_t { source, target, reflexivity };

using GlobeWord = std::vector<GlobeGen>;

// A point of the object n: either one of the boundary globes s_d / t_d with
// d < n, or the top globe at level n.
struct GlobePoint {
  enum class Kind : std::uint8_t { source, target, top };
  int level;
  Kind kind;
  friend auto operator<=>(const GlobePoint&, const GlobePoint&) = default;
};

// Normal form sigma^ups tau^[tau] iota^downs. The relations
// tau sigma = sigma sigma, tau tau = sigma tau and iota sigma = id = iota tau
// leave exactly these words.
class GlobeMorphism {
 public:
  GlobeMorphism() = default;

  static GlobeMorphism identity(int n);
  static GlobeMorphism source(int dom);       // dom -> dom+1
  static GlobeMorphism target(int dom);       // dom -> dom+1
  static GlobeMorphism reflexivity(int dom);  // dom -> dom-1
  static GlobeMorphism from_normal_form(int dom, int ups, bool tau, int downs);

  int dom() const noexcept { return dom_; }
  int cod() const noexcept { return dom_ - downs_ + ups_ + (tau_ ? 1 : 0); }
  int ups() const noexcept { return ups_; }
  bool tau() const noexcept { return tau_; }
  int downs() const noexcept { return downs_; }

  bool is_identity() const noexcept { return ups_ == 0 && !tau_ && downs_ == 0; }
  bool is_mono() const noexcept { return downs_ == 0; }
  bool is_epi() const noexcept { return ups_ == 0 && !tau_; }

  GlobePoint eval(GlobePoint point) const;
  GlobeWord word() const;

  friend auto operator<=>(const GlobeMorphism&, const GlobeMorphism&) = default;

 private:
  int dom_ = 0;
  int ups_ = 0;
  bool tau_ = false;
  int downs_ = 0;
};

int word_codomain(std::span<const GlobeGen> word, int dom);
int infer_domain(std::span<const GlobeGen> word);
// Leftmost-first rewriting with the three defining relations.
GlobeMorphism normalize(std::span<const GlobeGen> word, int dom);
GlobeMorphism compose(const GlobeMorphism& f, const GlobeMorphism& g);
std::pair<GlobeMorphism, GlobeMorphism> epi_mono_factor(const GlobeMorphism& f);

std::vector<GlobeMorphism> globe_epis(int n, int m);
std::vector<GlobeMorphism> globe_monos(int m, int n);
std::vector<GlobeMorphism> sections_of(const GlobeMorphism& epi);

std::string to_string(GlobeGen gen);
std::string to_string(const GlobeWord& word);
std::string to_string(const GlobeMorphism& f);

}  // namespace levels
