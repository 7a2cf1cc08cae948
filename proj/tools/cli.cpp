#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cechkit/aabb.hpp"
#include "cechkit/cech.hpp"
#include "cechkit/filtration.hpp"
#include "cechkit/geometry.hpp"
#include "cechkit/io.hpp"
#include "svg.hpp"

namespace cechkit::cli {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "cech-kit/1";

struct GlobalOptions {
  double tol = Tolerance{}.eps;
  std::string format = "text";
  std::string input_format = "auto";
  bool preprocess = false;
  bool strict = false;
};

struct Input {
  DiskSystem system;
  std::vector<std::size_t> index_map;  // row in the input file for each disk
};

Input load(const std::string& path, const GlobalOptions& options, std::ostream& err) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }

  Format format = Format::csv;
  if (options.input_format == "json" ||
      (options.input_format == "auto" && path.size() >= 5 && path.ends_with(".json")))
    format = Format::json;

  DiskSystem system = parse_disk_system(text, format);
  if (!options.preprocess) {
    std::vector<std::size_t> identity(system.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return {std::move(system), std::move(identity)};
  }
  Reduction reduced = remove_dominated(system, Tolerance{options.tol});
  if (reduced.system.size() != system.size())
    err << "preprocess: kept " << reduced.system.size() << " of " << system.size() << " disks\n";
  return {std::move(reduced.system), std::move(reduced.index_map)};
}

std::string point_text(const Vector& p) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? "," : "") + format_number(p[i]);
  return s + ")";
}

std::string box_text(const Box& box) {
  std::string s;
  for (std::size_t q = 0; q < box.dimension(); ++q) {
    if (q) s += "x";
    s += "[" + format_number(box[q].lower) + "," + format_number(box[q].upper) + "]";
  }
  return s;
}

json point_json(const Vector& p) { return std::vector<double>(p.begin(), p.end()); }

json box_json(const Box& box) {
  json intervals = json::array();
  for (const auto& interval : box.intervals()) intervals.push_back({interval.lower, interval.upper});
  return intervals;
}

std::vector<std::size_t> map_indices(std::span<const std::size_t> indices,
                                     const std::vector<std::size_t>& index_map) {
  std::vector<std::size_t> mapped;
  for (auto i : indices) mapped.push_back(index_map[i]);
  return mapped;
}

int finish(int code, bool degenerate, const GlobalOptions& options, std::ostream& err) {
  if (!degenerate) return code;
  err << "warning: degenerate configuration (affinely dependent or coincident disks were skipped)\n";
  return options.strict ? kDegenerate : code;
}

int cmd_check(const Input& input, const GlobalOptions& options, std::ostream& out, std::ostream& err) {
  const CechDecision decision = is_cech_system(input.system, Tolerance{options.tol});
  if (options.format == "json") {
    json doc{{"schema", kSchema}, {"command", "check"}, {"is_cech", decision.is_cech},
             {"degenerate", decision.degenerate()}};
    doc["witness"] = decision.witness ? point_json(*decision.witness) : json(nullptr);
    doc["generating_subset"] = map_indices(decision.generating_subset, input.index_map);
    out << doc.dump(2) << "\n";
  } else if (decision.is_cech) {
    out << "TRUE witness=" << point_text(*decision.witness) << "\n";
  } else {
    out << "FALSE\n";
  }
  return finish(decision.is_cech ? kSuccess : kNegative, decision.degenerate(), options, err);
}

int cmd_rips(const Input& input, const GlobalOptions& options, std::ostream& out) {
  const double nu = rips_scale(input.system);
  if (options.format == "json")
    out << json{{"schema", kSchema}, {"command", "rips-scale"}, {"rips_scale", nu}}.dump(2) << "\n";
  else
    out << "rips_scale=" << format_number(nu) << "\n";
  return kSuccess;
}

int cmd_cech(const Input& input, double eta, const GlobalOptions& options, std::ostream& out,
             std::ostream& err) {
  const ScaleReport report = cech_scale(input.system, eta, Tolerance{options.tol});
  if (options.format == "json") {
    json doc{{"schema", kSchema},
             {"command", "cech-scale"},
             {"rips_scale", report.rips_scale},
             {"cech_scale", report.cech_scale},
             {"eta", report.eta},
             {"bracket", {report.bracket.first, report.bracket.second}},
             {"iterations", report.iterations},
             {"degenerate", report.degenerate}};
    doc["witness"] = report.witness ? point_json(*report.witness) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "rips_scale=" << format_number(report.rips_scale) << "\n"
        << "cech_scale=" << format_number(report.cech_scale) << "\n"
        << "bracket=[" << format_number(report.bracket.first) << ","
        << format_number(report.bracket.second) << "]\n"
        << "iterations=" << report.iterations << "\n";
    if (report.witness) out << "witness=" << point_text(*report.witness) << "\n";
  }
  return finish(kSuccess, report.degenerate, options, err);
}

int cmd_aabb(const Input& input, const GlobalOptions& options, std::ostream& out) {
  const auto box = aabb_minimal(input.system, Tolerance{options.tol});
  if (options.format == "json") {
    json doc{{"schema", kSchema}, {"command", "aabb"}, {"intersects", box.has_value()}};
    doc["box"] = box ? box_json(*box) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << (box ? box_text(*box) : "NO-INTERSECTION") << "\n";
  }
  return box ? kSuccess : kNegative;
}

int cmd_filtration(const Input& input, std::size_t max_dim, double eta, const GlobalOptions& options,
                   std::ostream& out, std::ostream& err) {
  FiltrationOptions fopts;
  fopts.max_dimension = max_dim;
  fopts.eta = eta;
  fopts.tol = Tolerance{options.tol};
  const Filtration filtration = build_filtration(input.system, fopts);

  // Report vertices as rows of the input file.
  std::vector<std::size_t> to_input(filtration.index_map.size());
  for (std::size_t i = 0; i < to_input.size(); ++i) to_input[i] = input.index_map[filtration.index_map[i]];

  if (options.format == "json") {
    json simplices = json::array();
    for (const auto& s : filtration.simplices)
      simplices.push_back({{"scale", s.scale}, {"vertices", map_indices(s.vertices, to_input)}});
    out << json{{"schema", kSchema},
                {"command", "filtration"},
                {"max_dimension", filtration.max_dimension},
                {"eta", eta},
                {"index_map", to_input},
                {"degenerate", filtration.degenerate},
                {"simplices", simplices}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& s : filtration.simplices) {
      out << format_number(s.scale);
      for (auto v : s.vertices) out << " " << to_input[v];
      out << "\n";
    }
  }
  return finish(kSuccess, filtration.degenerate, options, err);
}

int cmd_plot(const Input& input, const std::string& output, const GlobalOptions& options,
             std::ostream& out) {
  if (input.system.dimension() != 2) throw std::invalid_argument("plot requires a 2-dimensional disk system");
  const Tolerance tol{options.tol};
  const std::string svg =
      render_svg(input.system, retained_poles(input.system, tol), aabb_minimal(input.system, tol));
  if (output.empty() || output == "-") {
    out << svg;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + output + "'");
    file << svg;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection tests, Rips/Čech scales, minimal boxes and Čech filtrations of disk systems",
               "cechkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  app.add_option("--tol", options.tol, "Membership tolerance eps (slack eps*(1+scale))")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", options.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input-format", options.input_format, "Input format (auto picks by extension)")
      ->check(CLI::IsMember({"auto", "csv", "json"}));
  app.add_flag("--preprocess", options.preprocess, "Drop disks that contain another disk");
  app.add_flag("--strict", options.strict, "Exit with code 3 on degenerate configurations");

  std::string path;
  double eta = kDefaultEta;
  std::size_t max_dim = 2;
  std::string plot_output;

  auto* check = app.add_subcommand("check", "Decide whether all disks share a point");
  auto* rips = app.add_subcommand("rips-scale", "Vietoris-Rips scale");
  auto* cech = app.add_subcommand("cech-scale", "Čech scale by bisection");
  auto* aabb = app.add_subcommand("aabb", "Minimal axis-aligned box of the intersection");
  auto* filtration = app.add_subcommand("filtration", "Filtered generalized Čech complex");
  auto* plot = app.add_subcommand("plot", "SVG of a planar system with poles and box");
  for (auto* sub : {check, rips, cech, aabb, filtration, plot})
    sub->add_option("input", path, "Disk system file (csv or json, '-' for stdin)")->required();
  cech->add_option("--eta", eta, "Bisection precision")->check(CLI::PositiveNumber);
  filtration->add_option("--eta", eta, "Bisection precision")->check(CLI::PositiveNumber);
  filtration->add_option("--max-dim", max_dim, "Largest simplex dimension");
  plot->add_option("-o,--output", plot_output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const Input input = load(path, options, err);
    if (check->parsed()) return cmd_check(input, options, out, err);
    if (rips->parsed()) return cmd_rips(input, options, out);
    if (cech->parsed()) return cmd_cech(input, eta, options, out, err);
    if (aabb->parsed()) return cmd_aabb(input, options, out);
    if (filtration->parsed()) return cmd_filtration(input, max_dim, eta, options, out, err);
    return cmd_plot(input, plot_output, options, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace cechkit::cli
