#pragma once

#include <string>
#include <vector>

#include "gtp/pattern.hpp"

namespace gtp {

// Lower member (i,j) of an equal pair X_{i,j} = X_{i+1,j}.
struct Inversion {
  int i;
  int j;

  friend bool operator==(const Inversion&, const Inversion&) = default;
};

// All inversions, ordered by diagonal j descending then row i descending.
std::vector<Inversion> inversions(const Pattern& p);

// Rows i (descending) with X_{i,1} = X_{i+1,1}.
std::vector<int> first_column_inversions(const Pattern& p);

// Cells (i+q, j+q), 1 <= q <= n-i, over every inversion (i,j); sorted.
std::vector<Cell> covered_cells(const Pattern& triangle);

struct ProcedureResult {
  Pattern pattern;
  // False when the result is not Gelfand-Tsetlin or an entry would drop
  // below 1; in the latter case `pattern` is the state before that step.
  bool gt_valid;
};

/// Scans the `diagonals` rightmost NW-SE diagonals from the right, each one
/// from NW to SE, and for every inversion met in the current pattern
/// subtracts 1 from the cells it covers.
ProcedureResult standard_procedure(const Pattern& triangle, int diagonals);

/// For a left (n,k) Gog trapezoid: the procedure on the n-k+1 rightmost
/// diagonals of its completion stays GT and leaves Y_{i+l,k+l} = X_{i,k}.
bool left_completion_invariance(const Pattern& left_gog);

enum class Direction { gog_to_gogam, gogam_to_gog };

struct TraceStep {
  int step;       // l
  int inversion;  // i_l forward, iota_l inverse
  int pivot;      // m forward, p inverse
  Pattern pattern;
};

struct BijectionTrace {
  Direction direction;
  std::vector<TraceStep> steps;
  bool valid = true;
};

struct MapResult {
  Pattern image;
  BijectionTrace trace;
};

// Left (n,1) or (n,2) Gog trapezoid -> left GOGAm trapezoid of the same
// shape. Width 1 is the identity. Throws InvalidInput for inputs outside the
// family or widths >= 3.
MapResult gog_to_gogam_left(const Pattern& t);
// Inverse of gog_to_gogam_left; replays the same intermediates in reverse.
MapResult gogam_to_gog_left(const Pattern& t);

// (n,2,l) rectangles: complete to the canonical (n,2) left trapezoid, map,
// and cut back to the rectangle.
Pattern rectangle_map_n2(const Pattern& r, Direction direction);

// "# step l=<l> inv=<i> pivot=<m>" followed by the text block, per step.
std::string dump_trace(const BijectionTrace& trace);

}  // namespace gtp
