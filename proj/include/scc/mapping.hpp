#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scc/drawing.hpp"
#include "scc/surface.hpp"

namespace scc {

// Image of a single closed curve b under the n-th power of the twist along
// the single closed curve a; the result is the canonical weight vector.
// Realized by resolving b against i(a,b) parallel copies of a drawn in
// pairwise minimal position: every crossing is smoothed with one fixed
// handedness (the sign of n picks which), which merges the copies into the
// rerouted curve. Throws BadCurve unless a and b are single closed curves.
Weights apply_twist(const TriangulatedSurface& ts, const Weights& a, const Weights& b, int n);

// Words over named mapping classes: "c1^2.c3^-1.swap". Steps apply left to
// right, i.e. the leftmost acts on the argument curve first. Step names
// resolve to fixture curves (twists), to "swap" (the boundary-exchanging
// edge relabelling of the two-holed torus reference), or to "h" (its marked
// half twist).
struct WordStep {
    std::string name;
    int exp = 1;
    auto operator<=>(const WordStep&) const = default;
};
using Word = std::vector<WordStep>;

Word parse_word(const std::string& text); // throws BadWord on syntax errors
std::string word_to_string(const Word& w);

// Apply a word on the reference surface of `sig` to a curve or arc.
Weights apply_word(const SurfaceSig& sig, const Word& w, const Weights& target);

// Deterministic pseudorandom word over the twist-generator table of `sig`:
// `length` steps, generator and exponent (+1/-1) drawn from mt19937_64(seed).
Word random_word(const SurfaceSig& sig, int length, std::uint64_t seed);

// Marked half twist on the two-holed torus reference: exchanges the two
// boundary components, fixes every curve class in the handle cut off by
// "alpha" (in particular "alpha", "b", "c"), and its square acts on curves
// and arcs as the twist along "alpha". Pinned as a fixed twist word followed
// by the deck swap; regression tests hold it to the three properties above.
Weights apply_half_twist(const Weights& target, int n);

} // namespace scc
