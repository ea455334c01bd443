// bellfun: boolean-function spectra, Bell violations, classification and
// counting from the command line. Every output is deterministic: identical
// argv produces identical bytes.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellfun/bell.hpp"
#include "bellfun/equivalence.hpp"
#include "bellfun/polya.hpp"
#include "bellfun/spectral.hpp"
#include "bellfun/truth_table.hpp"
#include "bellfun/viz.hpp"

using json = nlohmann::ordered_json;
using namespace bellfun;

namespace {

// Flag combinations the parser cannot express (e.g. exactly one of --index
// and --all); reported as usage errors, exit code 1.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Doubles enter JSON rounded to 12 significant digits.
json json_double(double v) { return json::parse(format_double(v)); }

truth_table parse_table(int n, const std::string& text) {
  if (text.rfind("0b", 0) == 0) return truth_table::from_bit_string(n, text.substr(2));
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw usage_error("--index must be a decimal number or a 0b bit string");
  return truth_table::from_index(n, std::stoull(text));
}

// Canonical index representation: a plain number while it fits one word, the
// full bit string beyond that.
json index_repr(const truth_table& t) {
  if (t.arity() <= 6) return t.index();
  return "0b" + t.to_bit_string();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

void run_wht(int n, const std::string& index, bool naive) {
  const truth_table t = parse_table(n, index);
  const walsh_spectrum w = naive ? wht_naive(t) : wht_fast(t);
  std::cout << json(w.coeffs).dump() << "\n";
}

void run_analyze(int n, const std::string& index) {
  const truth_table t = parse_table(n, index);
  const walsh_spectrum w = wht_fast(t);
  json out;
  out["n"] = n;
  out["index"] = index_repr(t);
  out["weight"] = t.weight();
  out["balanced"] = t.is_balanced();
  out["degree"] = degree(t);
  out["anf_indices"] = mobius(t).monomials();
  out["nonlinearity"] = nonlinearity(t);
  out["NW"] = walsh_support_size(w);
  out["NDelta"] = autocorr_support_size(autocorrelation(t));
  out["uncertainty"] = to_string(uncertainty(t));
  std::cout << out.dump() << "\n";
}

void run_violation(int n, const std::string& index, bool all, double tol, int starts) {
  if (all == !index.empty()) throw usage_error("violation needs exactly one of --index and --all");
  violation_options opts;
  opts.tol = tol;
  opts.extra_starts = starts;
  if (!all) {
    const truth_table t = parse_table(n, index);
    const violation_result res = max_violation(t, opts);
    json out;
    out["n"] = n;
    out["index"] = index_repr(t);
    out["v"] = json_double(res.value);
    json phases = json::array();
    for (double phi : res.phases) phases.push_back(json_double(phi));
    out["phases"] = phases;
    out["starts_used"] = res.starts_used;
    std::cout << out.dump() << "\n";
    return;
  }
  // One optimizer run per equivalence class; v_f is class-invariant.
  const orbit_partition part = classify(n);
  std::vector<double> class_value(part.classes());
  for (int c = 0; c < part.classes(); ++c)
    class_value[c] = max_violation(truth_table::from_index(n, part.representative[c]), opts).value;
  std::cout << "B,class,v\n";
  for (std::size_t b = 0; b < part.class_of.size(); ++b) {
    const int c = part.class_of[b];
    std::cout << b << "," << c << "," << format_double(class_value[c]) << "\n";
  }
}

void run_mermin(int n) {
  json out;
  out["n"] = n;
  out["coefficients"] = mermin_coefficients(n).coeffs;
  out["index"] = index_repr(mermin_function(n));
  out["closed_form"] = mermin_closed_form_tag(n);
  std::cout << out.dump() << "\n";
}

void run_classify(int n, bool members) {
  const orbit_partition part = classify(n);
  std::cout << (members ? "class,representative,size,members\n" : "class,representative,size\n");
  for (int c = 0; c < part.classes(); ++c) {
    std::cout << c << "," << part.representative[c] << "," << part.size[c];
    if (members) {
      std::cout << ",";
      bool first = true;
      for (std::size_t b = 0; b < part.class_of.size(); ++b)
        if (part.class_of[b] == c) {
          std::cout << (first ? "" : " ") << b;
          first = false;
        }
    }
    std::cout << "\n";
  }
  json summary;
  summary["n"] = n;
  summary["N_n"] = part.classes();
  std::cout << summary.dump() << "\n";
}

void run_polya(int n) {
  std::cout << to_string(cycle_index_jevons(n)) << "\n";
  std::cout << "Nbar " << count_nbar(n).str() << "\n";
}

void run_viz(int n, const std::string& metric_name, const std::string& out_path, int scale,
             std::string legend_path, const std::string& cells_path) {
  static const std::map<std::string, metric_kind> metrics{
      {"degree", metric_kind::degree},
      {"uncertainty", metric_kind::uncertainty},
      {"class", metric_kind::equiv_class},
      {"violation", metric_kind::violation},
  };
  const auto it = metrics.find(metric_name);
  if (it == metrics.end())
    throw usage_error("--metric must be one of degree, uncertainty, class, violation");
  const square_grid grid = render(n, it->second);
  const color_map map = default_color_map(it->second, grid.labels.size());
  write_file(out_path, encode_ppm(grid, map, scale));
  if (legend_path.empty()) legend_path = out_path + ".legend.csv";
  write_file(legend_path, legend_csv(grid, map));
  if (!cells_path.empty()) write_file(cells_path, cells_csv(grid));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolean functions: spectra, Bell violations, classification, counting"};
  app.require_subcommand(1);

  int n = 2;
  std::string index;
  bool naive = false, all = false, members = false;
  double tol = violation_options{}.tol;
  int starts = violation_options{}.extra_starts;
  std::string metric, out_path, legend_path, cells_path;
  int scale = 1;

  CLI::App* wht = app.add_subcommand("wht", "Walsh-Hadamard spectrum as a JSON array");
  wht->add_option("--n", n, "arity")->required();
  wht->add_option("--index", index, "function number or 0b bit string")->required();
  wht->add_flag("--naive", naive, "use the reference transform");
  wht->callback([&] { run_wht(n, index, naive); });

  CLI::App* analyze = app.add_subcommand("analyze", "ANF, degree, nonlinearity, uncertainty");
  analyze->add_option("--n", n, "arity")->required();
  analyze->add_option("--index", index, "function number or 0b bit string")->required();
  analyze->callback([&] { run_analyze(n, index); });

  CLI::App* violation = app.add_subcommand("violation", "maximal quantum violation");
  violation->add_option("--n", n, "arity")->required();
  violation->add_option("--index", index, "function number or 0b bit string");
  violation->add_flag("--all", all, "CSV of every function of the arity (n <= 4)");
  violation->add_option("--tol", tol, "ascent stopping tolerance");
  violation->add_option("--starts", starts, "extra pseudo-random starts");
  violation->callback([&] { run_violation(n, index, all, tol, starts); });

  CLI::App* mermin = app.add_subcommand("mermin", "Mermin coefficients and extremal function");
  mermin->add_option("--n", n, "arity")->required();
  mermin->callback([&] { run_mermin(n); });

  CLI::App* classify = app.add_subcommand("classify", "equivalence classes (n <= 4)");
  classify->add_option("--n", n, "arity")->required();
  classify->add_flag("--members", members, "list every class member");
  classify->callback([&] { run_classify(n, members); });

  CLI::App* polya = app.add_subcommand("polya", "Jevons cycle index and class count");
  polya->add_option("--n", n, "arity")->required();
  polya->callback([&] { run_polya(n); });

  CLI::App* viz = app.add_subcommand("viz", "render a function-square PPM with CSV legend");
  viz->add_option("--n", n, "arity (n <= 4)")->required();
  viz->add_option("--metric", metric, "degree | uncertainty | class | violation")->required();
  viz->add_option("--out", out_path, "output PPM path")->required();
  viz->add_option("--scale", scale, "pixels per cell");
  viz->add_option("--legend", legend_path, "legend CSV path (default <out>.legend.csv)");
  viz->add_option("--cells", cells_path, "also write a per-function CSV here");
  viz->callback([&] { run_viz(n, metric, out_path, scale, legend_path, cells_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
