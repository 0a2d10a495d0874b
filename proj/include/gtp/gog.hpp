#pragma once

#include "gtp/pattern.hpp"

// Gog triangles: Gelfand-Tsetlin triangles with strictly increasing rows and
// top row 1..n. Trapezoids and rectangles are the sub-arrays extractable from
// some Gog triangle; membership is decided through canonical (minimal)
// completions, except for left trapezoids which also have a direct test.
namespace gtp::gog {

bool is_triangle(const Pattern& p);

// GT on present cells, strictly increasing rows, and X_{i,j} <= n - i + j.
bool is_left_trapezoid(const Pattern& p);
bool is_right_trapezoid(const Pattern& p);
bool is_rectangle(const Pattern& p);

// Throw InvalidShape for widths out of range, ShapeMismatch for non-triangles.
Pattern extract_left(const Pattern& triangle, int k);
Pattern extract_right(const Pattern& triangle, int l);
Pattern extract_rectangle(const Pattern& triangle, int k, int l);

// X~_{i,j} = n + 1 - X_{i,i+1-j}. Swaps left and right extractions of equal
// width. Throws InvalidInput unless p is a Gog triangle.
Pattern mirror(const Pattern& p);

// Completion formula for a left (n,k) array, applied without checking:
//   X_{i,j} = max_{0 <= t <= j-k} (X_{i-t,k} + j - k - t)   for j > k.
Pattern fill_left(const Pattern& t);
// Same, but throws InvalidInput unless t is a left Gog trapezoid.
Pattern complete_left(const Pattern& t);

// X_{i,j} = j on every absent cell. Validity is checked by callers.
Pattern complete_right(const Pattern& t);

// Rectangle (n,k,l) -> left (n,k) trapezoid with X_{i,j} = j where i - j >= l.
Pattern rectangle_to_left(const Pattern& r);
// Canonical path: rectangle -> left trapezoid -> triangle. Unchecked.
Pattern complete_rectangle(const Pattern& r);

}  // namespace gtp::gog
