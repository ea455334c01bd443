#include "bellfun/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "bellfun/bell.hpp"
#include "bellfun/equivalence.hpp"
#include "bellfun/rational.hpp"
#include "bellfun/spectral.hpp"

namespace bellfun {

namespace {

std::uint64_t side_length(int n) { return std::uint64_t{1} << (std::uint64_t{1} << (n - 1)); }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

truth_table table_of(int n, std::uint64_t b) { return truth_table::from_index(n, b); }

// Assign ids by ascending metric value; Key must be totally ordered.
template <typename Key>
square_grid grid_from_values(int n, const std::vector<Key>& value_of,
                             const std::map<Key, std::string>& label_of) {
  square_grid grid;
  grid.n = n;
  grid.side = side_length(n);
  std::map<Key, int> id_of;
  for (const auto& [key, label] : label_of) {
    id_of.emplace(key, static_cast<int>(grid.labels.size()));
    grid.labels.push_back(label);
  }
  grid.cells.resize(value_of.size());
  for (std::size_t b = 0; b < value_of.size(); ++b) grid.cells[b] = id_of.at(value_of[b]);
  return grid;
}

square_grid render_degree(int n) {
  const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<int> value(functions);
  std::map<int, std::string> labels;
  for (std::uint64_t b = 0; b < functions; ++b) {
    value[b] = degree(table_of(n, b));
    labels.emplace(value[b], std::to_string(value[b]));
  }
  return grid_from_values(n, value, labels);
}

square_grid render_uncertainty(int n) {
  const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<rational> value(functions);
  std::map<rational, std::string> labels;
  for (std::uint64_t b = 0; b < functions; ++b) {
    value[b] = uncertainty(table_of(n, b));
    labels.emplace(value[b], to_string(value[b]));
  }
  return grid_from_values(n, value, labels);
}

square_grid render_class(int n) {
  const orbit_partition part = classify(n);
  square_grid grid;
  grid.n = n;
  grid.side = side_length(n);
  grid.cells.assign(part.class_of.begin(), part.class_of.end());
  for (int c = 0; c < part.classes(); ++c) grid.labels.push_back(std::to_string(c));
  return grid;
}

square_grid render_violation(int n) {
  const orbit_partition part = classify(n);
  std::vector<double> class_value(part.classes());
  for (int c = 0; c < part.classes(); ++c)
    class_value[c] = max_violation(table_of(n, part.representative[c])).value;
  // Classes whose values agree to 1e-9 share a cell value.
  std::vector<long long> value(part.class_of.size());
  std::map<long long, std::string> labels;
  for (std::size_t b = 0; b < value.size(); ++b) {
    const double v = class_value[part.class_of[b]];
    const long long key = std::llround(v * 1e9);
    value[b] = key;
    labels.emplace(key, format_double(v));
  }
  return grid_from_values(n, value, labels);
}

rgb hsv_to_rgb(double hue_deg, double sat, double val) {
  const double c = val * sat;
  const double hp = hue_deg / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = val - c;
  auto channel = [m](double t) {
    return static_cast<std::uint8_t>(std::lround(255.0 * (t + m)));
  };
  return rgb{channel(r), channel(g), channel(b)};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> cell_of_function(int n, std::uint64_t b) {
  check_arity(n, 1, max_exhaustive_arity, "cell_of_function");
  const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
  if (b >= functions) throw std::invalid_argument("cell_of_function: function number out of range");
  const std::uint64_t side = side_length(n);
  return {b / side + 1, b % side + 1};
}

square_grid render(int n, metric_kind metric) {
  check_arity(n, 1, max_exhaustive_arity, "render");
  switch (metric) {
    case metric_kind::degree: return render_degree(n);
    case metric_kind::uncertainty: return render_uncertainty(n);
    case metric_kind::equiv_class: return render_class(n);
    default: return render_violation(n);
  }
}

color_map default_color_map(metric_kind metric, std::size_t values) {
  static const rgb white{255, 255, 255};
  static const rgb green{0, 158, 64};
  static const rgb red{219, 43, 43};
  static const rgb yellow{242, 199, 34};
  static const rgb blue{43, 75, 217};
  std::vector<rgb> anchors;
  if (metric == metric_kind::uncertainty)
    anchors = {white, yellow, red, blue};
  else
    anchors = {white, green, red, yellow, blue};
  color_map map;
  for (std::size_t i = 0; i < values; ++i) {
    if (i < anchors.size()) {
      map.colors.push_back(anchors[i]);
    } else {
      const std::size_t extra = i - anchors.size();
      const std::size_t total = values - anchors.size();
      map.colors.push_back(hsv_to_rgb(360.0 * static_cast<double>(extra) / static_cast<double>(total),
                                      0.65, 0.85));
    }
  }
  return map;
}

std::string encode_ppm(const square_grid& grid, const color_map& map, int scale) {
  if (scale < 1) throw std::invalid_argument("encode_ppm: scale must be positive");
  if (map.colors.size() < grid.labels.size())
    throw std::invalid_argument("encode_ppm: color map smaller than value set");
  const std::uint64_t pixels = grid.side * static_cast<std::uint64_t>(scale);
  std::string out = "P6\n" + std::to_string(pixels) + " " + std::to_string(pixels) + "\n255\n";
  out.reserve(out.size() + pixels * pixels * 3);
  for (std::uint64_t i = 1; i <= grid.side; ++i)
    for (int row_rep = 0; row_rep < scale; ++row_rep)
      for (std::uint64_t j = 1; j <= grid.side; ++j) {
        const rgb color = map.colors[grid.cells[(i - 1) * grid.side + (j - 1)]];
        for (int col_rep = 0; col_rep < scale; ++col_rep) {
          out.push_back(static_cast<char>(color.r));
          out.push_back(static_cast<char>(color.g));
          out.push_back(static_cast<char>(color.b));
        }
      }
  return out;
}

std::string legend_csv(const square_grid& grid, const color_map& map) {
  if (map.colors.size() < grid.labels.size())
    throw std::invalid_argument("legend_csv: color map smaller than value set");
  std::string out = "value,red,green,blue\n";
  for (std::size_t id = 0; id < grid.labels.size(); ++id) {
    const rgb color = map.colors[id];
    out += grid.labels[id] + "," + std::to_string(color.r) + "," + std::to_string(color.g) +
           "," + std::to_string(color.b) + "\n";
  }
  return out;
}

std::string cells_csv(const square_grid& grid) {
  std::string out = "B,i,j,value\n";
  for (std::uint64_t b = 0; b < grid.cells.size(); ++b) {
    const auto [i, j] = cell_of_function(grid.n, b);
    out += std::to_string(b) + "," + std::to_string(i) + "," + std::to_string(j) + "," +
           grid.labels[grid.cells[b]] + "\n";
  }
  return out;
}

}  // namespace bellfun
