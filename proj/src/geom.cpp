#include "thicksat/geom.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace thicksat {

Rational rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    std::string den_part = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    auto is_integer = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_integer(num_part) || !is_integer(den_part)) return std::nullopt;
    Integer num, den;
    if (num.set_str(num_part, 10) != 0) return std::nullopt;
    if (den.set_str(den_part, 10) != 0) return std::nullopt;
    if (den == 0) return std::nullopt;
    Rational value(num);
    value /= Rational(den);
    value.canonicalize();
    return value;
}

std::string rational_text(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool lex_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return cmp(a.y, b.y) < 0;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    const int s = sgn(cross);
    if (s > 0) return Orientation::CounterClockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

namespace {

int orient_sign(const Point& p, const Point& q, const Point& r) {
    return static_cast<int>(orientation(p, q, r));
}

// Open-interval overlap of two collinear segments, projected on the dominant
// axis of their common line.
bool collinear_interiors_meet(const Segment& s, const Segment& t) {
    const bool use_x = s.a.x != s.b.x;
    auto coord = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    Rational s_lo = coord(s.a), s_hi = coord(s.b);
    if (s_lo > s_hi) std::swap(s_lo, s_hi);
    Rational t_lo = coord(t.a), t_hi = coord(t.b);
    if (t_lo > t_hi) std::swap(t_lo, t_hi);
    return std::max(s_lo, t_lo) < std::min(s_hi, t_hi);
}

}  // namespace

bool segments_cross(const Segment& s, const Segment& t) {
    const int o1 = orient_sign(s.a, s.b, t.a);
    const int o2 = orient_sign(s.a, s.b, t.b);
    const int o3 = orient_sign(t.a, t.b, s.a);
    const int o4 = orient_sign(t.a, t.b, s.b);
    if (o1 == 0 && o2 == 0) {
        // All four points on one line; interiors meet iff the open intervals
        // overlap.
        return collinear_interiors_meet(s, t);
    }
    // A single interior-interior point requires strict straddling both ways.
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != Orientation::Collinear) return false;
    const Rational lo_x = std::min(s.a.x, s.b.x), hi_x = std::max(s.a.x, s.b.x);
    const Rational lo_y = std::min(s.a.y, s.b.y), hi_y = std::max(s.a.y, s.b.y);
    return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
}

std::vector<std::size_t> convex_hull(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    if (n < 3) throw std::invalid_argument("convex_hull: need at least 3 points");
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points[a], points[b]);
    });

    // Monotone chain with strict turns; collinear middle points are dropped.
    std::vector<std::size_t> hull;
    auto build = [&](auto begin, auto end) {
        const std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   orientation(points[hull[hull.size() - 2]], points[hull.back()], points[*it]) !=
                       Orientation::CounterClockwise) {
                hull.pop_back();
            }
            hull.push_back(*it);
        }
    };
    build(order.begin(), order.end());
    hull.pop_back();
    build(order.rbegin(), order.rend());
    hull.pop_back();
    return hull;
}

bool general_position(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                if (orientation(points[i], points[j], points[l]) == Orientation::Collinear)
                    return false;
    return true;
}

}  // namespace thicksat
