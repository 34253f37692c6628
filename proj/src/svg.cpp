#include <iomanip>
#include <sstream>

#include "selfsim/io.hpp"

namespace selfsim {

namespace {

constexpr double kWidth = 800.0;
constexpr double kMargin = 40.0;
constexpr double kRowHeight = 36.0;

std::string fixed(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

std::string render_cover_svg(const Ifs& ifs, int depth, std::uint64_t budget) {
  const auto levels = cover_levels(ifs, depth, budget);
  const Interval& hull = ifs.hull();
  const double lo = hull.lo.to_double();
  const double span = hull.length().to_double();
  auto x = [&](const Rational& r) { return kMargin + (r.to_double() - lo) / span * (kWidth - 2 * kMargin); };

  const double height = kMargin * 2 + kRowHeight * (depth + 1) + 20;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth) << "\" height=\"" << fixed(height)
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<!-- " << family_name(ifs.family()) << " hull " << hull << " -->\n";

  // hull ticks and endpoint labels
  const double top = kMargin;
  for (const Rational* end : {&hull.lo, &hull.hi}) {
    os << "<line x1=\"" << fixed(x(*end)) << "\" y1=\"" << fixed(top - 10) << "\" x2=\"" << fixed(x(*end)) << "\" y2=\""
       << fixed(top + kRowHeight * (depth + 1)) << "\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
    os << "<text x=\"" << fixed(x(*end)) << "\" y=\"" << fixed(top - 14) << "\" text-anchor=\"middle\">" << *end
       << "</text>\n";
  }

  for (int n = 0; n <= depth; ++n) {
    const double y = top + kRowHeight * n + kRowHeight / 2;
    os << "<g id=\"depth-" << n << "\">\n";
    os << "<text x=\"4\" y=\"" << fixed(y + 4) << "\">n=" << n << "</text>\n";
    for (const auto& part : levels[static_cast<std::size_t>(n)].parts()) {
      os << "<line x1=\"" << fixed(x(part.lo)) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x(part.hi)) << "\" y2=\""
         << fixed(y) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }
    if (n == 1) {
      for (int i = 1; i <= ifs.size(); ++i) {
        const Interval piece = ifs.map(i)(hull);
        os << "<text x=\"" << fixed((x(piece.lo) + x(piece.hi)) / 2) << "\" y=\"" << fixed(y + 14)
           << "\" text-anchor=\"middle\">phi" << i << "</text>\n";
      }
      const auto level_gaps = gaps(levels[1]);
      const bool three = std::holds_alternative<ThreeMapFamily>(ifs.family());
      for (std::size_t g = 0; g < level_gaps.size(); ++g) {
        std::string label = "(" + level_gaps[g].lo.str() + ", " + level_gaps[g].hi.str() + ")";
        if (three) label = (level_gaps.size() == 2 ? "G" + std::to_string(g + 1) : "G2") + " " + label;
        os << "<text x=\"" << fixed((x(level_gaps[g].lo) + x(level_gaps[g].hi)) / 2) << "\" y=\"" << fixed(y - 6)
           << "\" text-anchor=\"middle\" fill=\"#a33\">" << label << "</text>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace selfsim
