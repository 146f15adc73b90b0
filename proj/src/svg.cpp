#include "scm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scm/format.hpp"

namespace scm::svg {

namespace {

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_scatter(const std::vector<std::pair<std::string, PolarPoint>>& points) {
    double max_abs = 1e-9;
    for (const auto& [label, p] : points)
        max_abs = std::max({max_abs, std::abs(p.warmth), std::abs(p.competence)});
    double range = max_abs * 1.15;

    auto to_x = [&](double warmth) { return 400.0 + 400.0 * warmth / range; };
    auto to_y = [&](double competence) { return 400.0 - 400.0 * competence / range; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    out << "<!-- scm scatter generator 1 -->\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
    out << "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    out << "<text x=\"792\" y=\"396\" text-anchor=\"end\" font-size=\"13\" fill=\"#555555\">warmth</text>\n";
    out << "<text x=\"408\" y=\"14\" font-size=\"13\" fill=\"#555555\">competence</text>\n";
    out << "<text x=\"792\" y=\"26\" text-anchor=\"end\" font-size=\"14\" fill=\"#888888\">HC-HW</text>\n";
    out << "<text x=\"8\" y=\"26\" font-size=\"14\" fill=\"#888888\">HC-LW</text>\n";
    out << "<text x=\"8\" y=\"788\" font-size=\"14\" fill=\"#888888\">LC-LW</text>\n";
    out << "<text x=\"792\" y=\"788\" text-anchor=\"end\" font-size=\"14\" fill=\"#888888\">LC-HW</text>\n";
    for (const auto& [label, p] : points) {
        std::string x = format::number(to_x(p.warmth));
        std::string y = format::number(to_y(p.competence));
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
        out << "<text x=\"" << format::number(to_x(p.warmth) + 6.0) << "\" y=\""
            << format::number(to_y(p.competence) - 6.0) << "\" font-size=\"12\">"
            << escape_xml(label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace scm::svg
