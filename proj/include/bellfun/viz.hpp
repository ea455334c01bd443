#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bellfun/truth_table.hpp"

namespace bellfun {

enum class metric_kind { degree, uncertainty, equiv_class, violation };

//! Grid cell for function B on the 2^(2^(n-1)) square: row-major, 1-based,
//! B = (i-1)*side + (j-1).
std::pair<std::uint64_t, std::uint64_t> cell_of_function(int n, std::uint64_t b);

/*! All 2^(2^n) functions arranged on the square, each cell holding a small
 *  integer id into `labels`. Ids are assigned by sorting the distinct metric
 *  values ascending, so the same input always yields the same grid.
 */
struct square_grid {
  int n = 1;
  std::uint64_t side = 2;
  std::vector<int> cells;           // indexed by function number
  std::vector<std::string> labels;  // id -> printable metric value
};

//! Compute the metric for every function of arity n (n <= 4). Violation is
//! computed once per equivalence class and broadcast to its members.
square_grid render(int n, metric_kind metric);

struct rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

struct color_map {
  std::vector<rgb> colors;  // indexed by cell id
};

//! Fixed anchor colors per metric (white first, then the named colors),
//! followed by a deterministic HSV ramp when there are more values.
color_map default_color_map(metric_kind metric, std::size_t values);

//! Binary PPM, header "P6\n<w> <h>\n255\n", each cell a scale x scale block.
std::string encode_ppm(const square_grid& grid, const color_map& map, int scale);

//! "value,red,green,blue" rows, one per cell id, LF endings.
std::string legend_csv(const square_grid& grid, const color_map& map);

//! "B,i,j,value" rows for every function, LF endings.
std::string cells_csv(const square_grid& grid);

}  // namespace bellfun
