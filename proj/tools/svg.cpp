#include "svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cechkit/io.hpp"

namespace cechkit::cli {
namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 20.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string render_svg(const DiskSystem& system, const std::vector<Pole>& poles,
                       const std::optional<Box>& box) {
  if (system.dimension() != 2) throw std::invalid_argument("plot requires a 2-dimensional disk system");

  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  for (const auto& disk : system) {
    xmin = std::min(xmin, disk.center()[0] - disk.radius());
    xmax = std::max(xmax, disk.center()[0] + disk.radius());
    ymin = std::min(ymin, disk.center()[1] - disk.radius());
    ymax = std::max(ymax, disk.center()[1] + disk.radius());
  }
  const double scale = (kCanvas - 2.0 * kMargin) / std::max(xmax - xmin, ymax - ymin);
  auto sx = [&](double x) { return format_number(kMargin + (x - xmin) * scale); };
  auto sy = [&](double y) { return format_number(kMargin + (ymax - y) * scale); };
  const double width = 2.0 * kMargin + (xmax - xmin) * scale;
  const double height = 2.0 * kMargin + (ymax - ymin) * scale;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_number(width)
      << "\" height=\"" << format_number(height) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& disk = system[i];
    const char* color = kPalette[i % std::size(kPalette)];
    svg << "  <circle class=\"disk\" cx=\"" << sx(disk.center()[0]) << "\" cy=\"" << sy(disk.center()[1])
        << "\" r=\"" << format_number(disk.radius() * scale) << "\" fill=\"" << color
        << "\" fill-opacity=\"0.15\" stroke=\"" << color << "\"/>\n";
  }

  if (box && box->proper()) {
    svg << "  <rect class=\"aabb\" x=\"" << sx((*box)[0].lower) << "\" y=\"" << sy((*box)[1].upper)
        << "\" width=\"" << format_number((*box)[0].width() * scale) << "\" height=\""
        << format_number((*box)[1].width() * scale)
        << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n";
  }

  for (const auto& pole : poles) {
    svg << "  <circle class=\"pole\" cx=\"" << sx(pole.point[0]) << "\" cy=\"" << sy(pole.point[1])
        << "\" r=\"3\" fill=\"" << (pole.orientation == Orientation::north ? "black" : "gray") << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cechkit::cli
