#include "annulus/render.hpp"

#include <cmath>
#include <sstream>

namespace annulus {

namespace {

struct Canvas {
    const Surface& s;
    int translates;
    double unit = 220, margin = 30, top = 40, bottom = 260;
    double mid() const { return (top + bottom) / 2; }
    double width() const { return 2 * margin + unit * translates; }
    // x of a lift index on a boundary line
    double x(const CPt& p) const { return margin + unit * (double)cover_abscissa(s, p) / (s.p * s.q); }
    double y(const CPt& p) const { return p.t == 0 ? bottom : top; }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << v;
    return os.str();
}

void draw(std::ostringstream& os, const Canvas& c, const Arc& a, long k, const std::string& colour) {
    Chord ch = lift(c.s, a, k);
    std::string stroke = "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"1.5\"/>\n";
    switch (a.kind) {
        case Arc::Kind::Bridging:
            os << "<line x1=\"" << fmt(c.x(ch.x)) << "\" y1=\"" << fmt(c.y(ch.x)) << "\" x2=\"" << fmt(c.x(ch.y))
               << "\" y2=\"" << fmt(c.y(ch.y)) << stroke;
            break;
        case Arc::Kind::Peripheral: {
            double x1 = c.x(ch.x), x2 = c.x(ch.y), y = c.y(ch.x);
            double bulge = std::min(0.9 * (c.bottom - c.top) / 2, 0.35 * std::abs(x2 - x1) + 10);
            double cy = ch.x.t == 0 ? y - 2 * bulge : y + 2 * bulge;
            os << "<path d=\"M " << fmt(x1) << " " << fmt(y) << " Q " << fmt((x1 + x2) / 2) << " " << fmt(cy) << " "
               << fmt(x2) << " " << fmt(y) << stroke;
            break;
        }
        case Arc::Kind::Asymptotic: {
            double x0 = c.x(ch.x), y0 = c.y(ch.x);
            double dir = ch.y.t == 1 ? 1 : -1;
            os << "<polyline points=\"";
            for (int i = 0; i <= 40; ++i) {
                double t = i / 8.0;
                os << (i ? " " : "") << fmt(x0 + dir * t * c.unit / 3) << ","
                   << fmt(c.mid() + (y0 - c.mid()) * std::exp(-t));
            }
            os << stroke;
            break;
        }
        case Arc::Kind::Band:
            os << "<line x1=\"0\" y1=\"" << fmt(c.mid()) << "\" x2=\"" << fmt(c.width()) << "\" y2=\"" << fmt(c.mid())
               << stroke;
            break;
    }
}

}  // namespace

std::string cover_svg(const Model& m, const std::vector<Arc>& extra, int translates) {
    const Surface& s = m.g.surf;
    if (translates < 1) throw std::invalid_argument("need at least one translate");
    Canvas c{s, translates};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(c.width()) << "\" height=\"300\">\n";
    os << "<line x1=\"0\" y1=\"" << fmt(c.bottom) << "\" x2=\"" << fmt(c.width()) << "\" y2=\"" << fmt(c.bottom)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"0\" y1=\"" << fmt(c.top) << "\" x2=\"" << fmt(c.width()) << "\" y2=\"" << fmt(c.top)
       << "\" stroke=\"black\"/>\n";
    for (long k = -1; k <= translates; ++k) {
        for (auto& a : m.g.arcs) draw(os, c, a, k, "grey");
        for (auto& a : extra)
            if (a.kind != Arc::Kind::Band || k == 0) draw(os, c, a, k, "red");
    }
    for (long k = 0; k < translates; ++k) {
        for (int j = 0; j < s.p; ++j) {
            CPt pt{0, k * s.p + j};
            os << "<circle cx=\"" << fmt(c.x(pt)) << "\" cy=\"" << fmt(c.bottom) << "\" r=\"3\"/>\n";
            os << "<text x=\"" << fmt(c.x(pt) - 4) << "\" y=\"" << fmt(c.bottom + 18) << "\" font-size=\"12\">" << j
               << "</text>\n";
        }
        for (int j = 0; j < s.q; ++j) {
            CPt pt{2, k * s.q + j};
            os << "<circle cx=\"" << fmt(c.x(pt)) << "\" cy=\"" << fmt(c.top) << "\" r=\"3\"/>\n";
            os << "<text x=\"" << fmt(c.x(pt) - 4) << "\" y=\"" << fmt(c.top - 8) << "\" font-size=\"12\">" << j
               << "'</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace annulus
