#include "ctw/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "ctw/error.hpp"

namespace ctw {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

double ArcDrawing::height(int arc, double x) const {
    const Arc& a = arcs.at(arc);
    double m = 0.5 * a.twice_center(), r = 0.5 * (a.right - a.left);
    double h2 = r * r - (x - m) * (x - m);
    return h2 > 0 ? std::sqrt(h2) : 0.0;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Sorts crossings into element order. Crossings with equal x that share an
// arc are the same point of the drawing; such a point is ordered as a unit by
// its smallest key, and its crossings are spread by lifting each arc through
// the point by eps * slope^2. Two arcs with slopes s_i, s_j then meet at
// dx = -eps * (s_i + s_j), and s_i + s_j decreases with the sum of centers.
void sort_crossings(const std::vector<Arc>& arcs, std::vector<Crossing>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Crossing& a, const Crossing& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.key < b.key;
    });
    std::size_t lo = 0;
    while (lo < cs.size()) {
        std::size_t hi = lo + 1;
        while (hi < cs.size() && cs[hi].x == cs[lo].x) ++hi;
        if (hi - lo > 1) {
            std::map<int, int> arc_slot;
            for (std::size_t i = lo; i < hi; ++i) {
                arc_slot.emplace(cs[i].first, static_cast<int>(arc_slot.size()));
                arc_slot.emplace(cs[i].second, static_cast<int>(arc_slot.size()));
            }
            UnionFind uf(static_cast<int>(arc_slot.size()));
            for (std::size_t i = lo; i < hi; ++i) uf.unite(arc_slot[cs[i].first], arc_slot[cs[i].second]);
            std::map<int, std::array<int, 4>> point_key;
            for (std::size_t i = lo; i < hi; ++i) {
                int root = uf.find(arc_slot[cs[i].first]);
                auto [it, fresh] = point_key.emplace(root, cs[i].key);
                if (!fresh) it->second = std::min(it->second, cs[i].key);
            }
            auto rank = [&](const Crossing& c) {
                int center_sum = arcs[c.first].twice_center() + arcs[c.second].twice_center();
                return std::make_tuple(point_key[uf.find(arc_slot[c.first])], -center_sum, c.key);
            };
            std::sort(cs.begin() + static_cast<std::ptrdiff_t>(lo), cs.begin() + static_cast<std::ptrdiff_t>(hi),
                      [&](const Crossing& a, const Crossing& b) { return rank(a) < rank(b); });
        }
        lo = hi;
    }
}

}  // namespace

ArcDrawing build_arc_drawing(const Graph& g, const LinearLayout& layout) {
    layout.check_for(g);
    ArcDrawing d{g, layout, {}, {}};
    d.arcs.reserve(g.edge_count());
    for (Edge e : g.edges()) {
        int a = layout.position(e.u) + 1, b = layout.position(e.v) + 1;
        d.arcs.push_back(Arc{e, std::min(a, b), std::max(a, b)});
    }
    std::vector<int> by_left(d.arcs.size());
    std::iota(by_left.begin(), by_left.end(), 0);
    std::sort(by_left.begin(), by_left.end(), [&](int i, int j) {
        return std::pair(d.arcs[i].left, d.arcs[i].right) < std::pair(d.arcs[j].left, d.arcs[j].right);
    });
    for (std::size_t i = 0; i < by_left.size(); ++i) {
        const Arc& p = d.arcs[by_left[i]];
        for (std::size_t j = i + 1; j < by_left.size(); ++j) {
            const Arc& q = d.arcs[by_left[j]];
            if (q.left >= p.right) break;
            // strict interleaving p.left < q.left < p.right < q.right
            if (q.left == p.left || q.right <= p.right) continue;
            Crossing c;
            c.first = by_left[i];
            c.second = by_left[j];
            std::int64_t num = std::int64_t{p.left} * p.right - std::int64_t{q.left} * q.right;
            std::int64_t den = std::int64_t{p.left} + p.right - q.left - q.right;
            c.x = Rational(num, den);
            c.key = {p.left, p.right, q.left, q.right};
            if (!(Rational(q.left) < c.x && c.x < Rational(p.right)))
                throw InvariantViolation("crossing outside the inner endpoint interval");
            d.crossings.push_back(c);
        }
    }
    sort_crossings(d.arcs, d.crossings);
    return d;
}

std::vector<Element> element_order(const ArcDrawing& d) {
    std::vector<Element> out;
    const int n = d.layout.size();
    out.reserve(n + d.crossings.size());
    std::size_t c = 0;
    for (int pos = 0; pos < n; ++pos) {
        Rational vx(pos + 1);
        while (c < d.crossings.size() && d.crossings[c].x < vx) {
            out.push_back({Element::Kind::crossing, static_cast<int>(c), d.crossings[c].x});
            ++c;
        }
        out.push_back({Element::Kind::vertex, d.layout.at(pos), vx});
    }
    for (; c < d.crossings.size(); ++c) out.push_back({Element::Kind::crossing, static_cast<int>(c), d.crossings[c].x});
    return out;
}

std::vector<Edge> vertical_cut_edges(const ArcDrawing& d, const Rational& x0) {
    if (x0.is_integer() && x0.num() >= 1 && x0.num() <= d.layout.size())
        throw PreconditionError("vertical line x = " + x0.str() + " passes through a vertex");
    std::vector<Edge> out;
    for (const Arc& a : d.arcs)
        if (Rational(a.left) < x0 && x0 < Rational(a.right)) out.push_back(a.edge);
    return out;
}

std::string arc_drawing_svg(const ArcDrawing& d) {
    const int n = d.layout.size();
    const double unit = 40.0, margin = 30.0;
    int longest = 0;
    for (const Arc& a : d.arcs) longest = std::max(longest, a.right - a.left);
    const double width = 2 * margin + unit * std::max(0, n - 1);
    const double base = margin + unit * longest / 2.0;
    const double height = base + margin;
    auto px = [&](double x) { return margin + unit * (x - 1.0); };

    char buf[256];
    std::ostringstream ss;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.1f\" height=\"%.1f\" viewBox=\"0 0 %.1f %.1f\">\n",
                  width, height, width, height);
    ss << buf;
    ss << "<line x1=\"0\" y1=\"" << base << "\" x2=\"" << width << "\" y2=\"" << base
       << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    ss << "<g class=\"arcs\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.2\">\n";
    for (const Arc& a : d.arcs) {
        double r = unit * (a.right - a.left) / 2.0;
        std::snprintf(buf, sizeof buf, "<path d=\"M %.2f %.2f A %.2f %.2f 0 0 1 %.2f %.2f\"/>\n", px(a.left), base, r, r,
                      px(a.right), base);
        ss << buf;
    }
    ss << "</g>\n<g class=\"crossings\" fill=\"#d22\">\n";
    for (const Crossing& c : d.crossings) {
        double x = c.x.to_double();
        std::snprintf(buf, sizeof buf, "<circle class=\"crossing\" cx=\"%.2f\" cy=\"%.2f\" r=\"3\"/>\n", px(x),
                      base - unit * d.height(c.first, x));
        ss << buf;
    }
    ss << "</g>\n<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (int pos = 0; pos < n; ++pos) {
        Vertex v = d.layout.at(pos);
        std::snprintf(buf, sizeof buf, "<circle class=\"vertex\" cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#000\"/>\n",
                      px(pos + 1), base);
        ss << buf;
        std::string text = d.graph.label(v).empty() ? std::to_string(v + 1) : d.graph.label(v);
        std::string escaped;
        for (char ch : text) {
            if (ch == '<') escaped += "&lt;";
            else if (ch == '>') escaped += "&gt;";
            else if (ch == '&') escaped += "&amp;";
            else if (ch == '"') escaped += "&quot;";
            else escaped.push_back(ch);
        }
        std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\">", px(pos + 1), base + 16);
        ss << buf << escaped << "</text>\n";
    }
    ss << "</g>\n</svg>\n";
    return ss.str();
}

}  // namespace ctw
