#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <locale>
#include <sstream>

#include "affine2/classify.hpp"

namespace affine2::tools {
namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 120.0;
constexpr double kMargin = 40.0;
constexpr double kAxis = 60.0;

const char* fill_for(Index v) { return v % 2 == 0 ? "red" : "blue"; }

}  // namespace

std::string render_ascii(const AffineTask& a) {
  std::string out;
  const Index n = a.path_edges();
  out.reserve(2 * n + 2);
  for (Index v = 0; v <= n; ++v) {
    out += static_cast<char>('0' + v % 2);
    if (v < n) out += a.has_edge(v) ? '=' : '-';
  }
  out += '\n';
  return out;
}

std::string render_svg(const AffineTask& a) {
  const Index n = a.path_edges();
  const double step = (kWidth - 2 * kMargin) / static_cast<double>(n);
  const double radius = std::min(6.0, std::max(1.0, step / 3));
  auto x = [&](Index v) { return kMargin + step * static_cast<double>(v); };

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "  <title>" << describe(classify(a)) << ", level " << a.level() << "</title>\n";
  for (Index e = 0; e < n; ++e) {
    const bool present = a.has_edge(e);
    os << "  <line x1=\"" << x(e) << "\" y1=\"" << kAxis << "\" x2=\"" << x(e + 1) << "\" y2=\"" << kAxis
       << "\" stroke=\"" << (present ? "black" : "gray") << "\" stroke-width=\""
       << (present ? 6.0 : 1.5) << "\"/>\n";
  }
  for (Index v = 0; v <= n; ++v) {
    os << "  <circle cx=\"" << x(v) << "\" cy=\"" << kAxis << "\" r=\"" << radius << "\" fill=\""
       << fill_for(v) << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace affine2::tools
