#include "levels/syntax.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "levels/errors.hpp"

namespace levels {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t p = 0;
  while (p < text.size()) {
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\n' || text[p] == '\r')) ++p;
    const std::size_t start = p;
    while (p < text.size() && !(text[p] == ' ' || text[p] == '\t' || text[p] == '\n' || text[p] == '\r')) ++p;
    if (p > start) {
      auto tok = text.substr(start, p - start);
      if (tok != "id") out.push_back({tok, static_cast<int>(start) + 1});
    }
  }
  return out;
}

[[noreturn]] void bad(const Token& t) {
  throw WordError("column " + std::to_string(t.column) + ": unrecognised generator '" + std::string(t.text) + "'");
}

// Parses a non-negative decimal integer occupying the whole of text.
bool parse_index(std::string_view text, int& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && out >= 0;
}

}  // namespace

SimplexWord parse_simplex_word(std::string_view text) {
  SimplexWord w;
  for (const auto& t : tokenize(text)) {
    int idx = 0;
    if (t.text.size() < 2 || !parse_index(t.text.substr(1), idx)) bad(t);
    if (t.text[0] == 'd')
      w.push_back(delta(idx));
    else if (t.text[0] == 's')
      w.push_back(sigma(idx));
    else
      bad(t);
  }
  return w;
}

CubeWord parse_cube_word(std::string_view text) {
  CubeWord w;
  for (const auto& t : tokenize(text)) {
    int idx = 0;
    if (t.text.size() < 2) bad(t);
    if (t.text[0] == 'b') {
      if (!parse_index(t.text.substr(1), idx)) bad(t);
      w.push_back(beta(idx));
    } else if (t.text[0] == 'a') {
      const auto at = t.text.find('@');
      int sign = 0;
      if (at == std::string_view::npos || !parse_index(t.text.substr(1, at - 1), sign) || sign > 1 ||
          !parse_index(t.text.substr(at + 1), idx))
        bad(t);
      w.push_back(alpha(sign, idx));
    } else {
      bad(t);
    }
  }
  return w;
}

GlobeWord parse_globe_word(std::string_view text) {
  GlobeWord w;
  for (const auto& t : tokenize(text)) {
    if (t.text == "sig")
      w.push_back(GlobeGen::source);
    else if (t.text == "tau")
      w.push_back(GlobeGen::target);
    else if (t.text == "iot")
      w.push_back(GlobeGen::reflexivity);
    else
      bad(t);
  }
  return w;
}

CyclicWord parse_cyclic_word(std::string_view text) {
  CyclicWord w;
  for (const auto& t : tokenize(text)) {
    int idx = 0;
    if (t.text == "t") {
      w.push_back({CyclicGen::Kind::rotation, 0});
    } else if (t.text.size() >= 3 && t.text[0] == 's' && t.text.back() == 'x') {
      if (!parse_index(t.text.substr(1, t.text.size() - 2), idx)) bad(t);
      w.push_back({CyclicGen::Kind::extra_degeneracy, idx});
    } else if (t.text.size() >= 2 && (t.text[0] == 'd' || t.text[0] == 's')) {
      if (!parse_index(t.text.substr(1), idx)) bad(t);
      w.push_back({t.text[0] == 'd' ? CyclicGen::Kind::face : CyclicGen::Kind::degeneracy, idx});
    } else {
      bad(t);
    }
  }
  return w;
}

}  // namespace levels
