#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ctw/graph.hpp"

namespace ctw {

/// Exact rational with 64-bit parts; comparisons go through 128-bit products.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const noexcept { return den_ == 1; }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Semicircle above the x-axis joining the 1-based positions left < right.
struct Arc {
    Edge edge;
    int left = 0;
    int right = 0;

    /// 2 * center, kept integral.
    int twice_center() const noexcept { return left + right; }
};

struct Crossing {
    /// Index into ArcDrawing::arcs; `first` has the smaller left position.
    int first = 0;
    int second = 0;
    Rational x;
    /// Positions (l1, r1, l2, r2) of the two arcs; used as the tiebreak key.
    std::array<int, 4> key{};
};

struct ArcDrawing {
    Graph graph;
    LinearLayout layout;
    /// One per edge, in the order of graph.edges().
    std::vector<Arc> arcs;
    /// Sorted by element order.
    std::vector<Crossing> crossings;

    /// Height of arc `a` above x, as a double (rendering only).
    double height(int arc, double x) const;
};

ArcDrawing build_arc_drawing(const Graph& g, const LinearLayout& layout);

struct Element {
    enum class Kind { vertex = 0, crossing = 1 };
    Kind kind = Kind::vertex;
    /// Vertex id or index into ArcDrawing::crossings.
    int index = 0;
    Rational x;
};

/// Vertices at x = position + 1, crossings at their exact x. Equal x is
/// resolved by kind (vertex first), then by the key of the crossing point,
/// then within a point where three or more arcs meet by a fixed local
/// perturbation of the arcs.
std::vector<Element> element_order(const ArcDrawing& d);

/// Edges {u,v} whose arcs span x0. Throws PreconditionError when x0 is a
/// vertex position.
std::vector<Edge> vertical_cut_edges(const ArcDrawing& d, const Rational& x0);

/// Deterministic SVG arc diagram: vertices as labeled dots, arcs, crossing markers.
std::string arc_drawing_svg(const ArcDrawing& d);

}  // namespace ctw
