#pragma once
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"

namespace leibcoh {

// Algebra documents are UTF-8 JSON objects with fields
//   name            string
//   kind            "lie" | "leibniz"
//   basis           array of distinct labels (commas not allowed in labels)
//   grading         optional object label -> int or [int, int], every label
//   windowed        optional bool
//   window          optional {"radius": int, "degree_saturated": bool}
//   brackets        optional object "a,b" -> {result label: rational string}
//   out_of_window   optional array of "a,b" keys
// Coefficients are rational strings "p/q" or integers; floats are rejected.
// For kind=lie each unordered pair may appear under one orientation only.
AlgebraPresentation parse_algebra(const std::string& path);
AlgebraPresentation parse_algebra_text(const std::string& text,
                                       const std::string& origin);

// Deterministic serialization: fixed field order, bracket keys in basis
// order, one orientation per pair for lie kind.
std::string algebra_to_json(const AlgebraPresentation& a);
void emit_algebra(const AlgebraPresentation& a, const std::string& path);

// Structural equality: same labels in the same order, same kind, grading,
// window marks and structure constants.
bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b);

// Cocycle, bilinear form and derivation files share one shape: a flat JSON
// object {"a,b": rational string} over basis labels of a given algebra.
// For a derivation file the entry "x,y" is the coefficient of y in d(x).
struct PairEntry {
    long i = 0;
    long j = 0;
    Rational val;
};
std::vector<PairEntry> parse_pair_map(const std::string& path,
                                      const AlgebraPresentation& g);
std::vector<PairEntry> parse_pair_map_text(const std::string& text,
                                           const std::string& origin,
                                           const AlgebraPresentation& g);
std::string pair_map_to_json(std::vector<PairEntry> entries,
                             const AlgebraPresentation& g);
void emit_pair_map(const std::vector<PairEntry>& entries,
                   const AlgebraPresentation& g, const std::string& path);

} // namespace leibcoh
