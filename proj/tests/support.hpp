#pragma once

#include "schottky/construction.hpp"
#include "schottky/rational.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace testing_support {

using namespace schottky;

inline Rational Q(const char* text) { return parse_rational(text); }

inline PaperParams params(const char* lambda, const char* kappa) { return {Q(lambda), Q(kappa)}; }

inline MobiusMap M(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

inline AlgebraicPoint surd(const char* base, const char* coeff, const char* radicand) {
  return {Q(base), Q(coeff), Q(radicand)};
}

inline std::string golden_path(const std::string& name) { return std::string(SCHOTTKY_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares with the golden file; SCHOTTKY_UPDATE_GOLDEN=1 rewrites it.
inline bool matches_golden(const std::string& name, const std::string& text) {
  const std::string path = golden_path(name);
  if (const char* u = std::getenv("SCHOTTKY_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path, std::ios::binary) << text;
    return true;
  }
  return read_text(path) == text;
}

}  // namespace testing_support
