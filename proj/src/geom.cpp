#include "slipsim/geom.hpp"

#include <algorithm>
#include <cmath>

#include "slipsim/errors.hpp"

namespace slipsim::geom {

namespace {
constexpr double kPi = 3.141592653589793;
}

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }
double norm(Point2 a) { return std::hypot(a.x, a.y); }
double distance(Point2 a, Point2 b) { return norm(a - b); }

Point2 rotate(Point2 p, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

Point2 OrientedRect::axis_a() const { return {std::cos(angle), std::sin(angle)}; }
Point2 OrientedRect::axis_b() const { return {-std::sin(angle), std::cos(angle)}; }

bool OrientedRect::contains(Point2 p) const {
    Point2 d = p - center;
    return std::abs(dot(d, axis_a())) <= half_a + 1e-12 &&
           std::abs(dot(d, axis_b())) <= half_b + 1e-12;
}

Polygon convex_hull(std::span<const Point2> points) {
    if (points.size() < 3) raise(ErrorCode::DegenerateInput, "convex hull needs >= 3 points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) raise(ErrorCode::DegenerateInput, "fewer than 3 distinct points");

    // Monotone chain with strict turns, so collinear points never survive.
    auto build = [&](auto begin, auto end) {
        std::vector<Point2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient(chain[chain.size() - 2], chain.back(), *it) <= 0.0) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());

    Polygon hull;
    hull.vertices.assign(lower.begin(), lower.end() - 1);
    hull.vertices.insert(hull.vertices.end(), upper.begin(), upper.end() - 1);
    if (hull.vertices.size() < 3) raise(ErrorCode::DegenerateInput, "all points collinear");
    return hull;
}

double polygon_area(const Polygon& p) {
    double twice = 0.0;
    const auto& v = p.vertices;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        twice += cross(v[i], v[(i + 1) % n]);
    }
    return 0.5 * twice;
}

Point2 polygon_centroid(const Polygon& p) {
    const auto& v = p.vertices;
    double a2 = 0.0;
    Point2 c{0.0, 0.0};
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        double w = cross(v[i], v[(i + 1) % n]);
        a2 += w;
        c.x += (v[i].x + v[(i + 1) % n].x) * w;
        c.y += (v[i].y + v[(i + 1) % n].y) * w;
    }
    if (std::abs(a2) < 1e-12) {
        // Degenerate sliver: fall back to the vertex mean.
        Point2 m{0.0, 0.0};
        for (auto q : v) m = m + q;
        return m * (1.0 / static_cast<double>(v.size()));
    }
    return c * (1.0 / (3.0 * a2));
}

OrientedRect min_area_rect(std::span<const Point2> points) {
    Polygon hull = convex_hull(points);
    const auto& v = hull.vertices;
    const std::size_t n = v.size();

    OrientedRect best;
    double best_area = std::numeric_limits<double>::infinity();
    bool have_best = false;

    // Near-ties in area are resolved by the largest aspect ratio first: the
    // aspect is similarity-invariant, which keeps elongation() stable under
    // rotation and scaling when two supporting edges give the same area.
    // Only then does the smallest angle in [0, pi) break exact symmetry ties.
    auto better = [&](double area, double aspect, double angle) {
        if (!have_best) return true;
        double eps = 1e-9 * std::max(area, best_area);
        if (area < best_area - eps) return true;
        if (area > best_area + eps) return false;
        double best_aspect = best.aspect();
        double aeps = 1e-9 * std::max(aspect, best_aspect);
        if (aspect > best_aspect + aeps) return true;
        if (aspect < best_aspect - aeps) return false;
        return angle < best.angle;
    };

    for (std::size_t i = 0; i < n; ++i) {
        Point2 e = v[(i + 1) % n] - v[i];
        double len = norm(e);
        if (len < 1e-15) continue;
        Point2 ux{e.x / len, e.y / len};
        Point2 uy{-ux.y, ux.x};

        double min_u = 0.0, max_u = 0.0, min_w = 0.0, max_w = 0.0;
        bool first = true;
        for (Point2 q : v) {
            Point2 d = q - v[i];
            double pu = dot(d, ux), pw = dot(d, uy);
            if (first) {
                min_u = max_u = pu;
                min_w = max_w = pw;
                first = false;
            } else {
                min_u = std::min(min_u, pu);
                max_u = std::max(max_u, pu);
                min_w = std::min(min_w, pw);
                max_w = std::max(max_w, pw);
            }
        }
        double du = max_u - min_u, dw = max_w - min_w;
        double area = du * dw;

        double ha = 0.5 * du, hb = 0.5 * dw;
        double edge_angle = std::atan2(ux.y, ux.x);
        double angle = edge_angle;
        if (hb > ha) {
            std::swap(ha, hb);
            angle += kPi / 2.0;
        }
        angle = std::fmod(angle, kPi);
        if (angle < 0.0) angle += kPi;

        Point2 mid_local{0.5 * (min_u + max_u), 0.5 * (min_w + max_w)};
        Point2 center = v[i] + ux * mid_local.x + uy * mid_local.y;

        double aspect = hb > 0.0 ? ha / hb : std::numeric_limits<double>::infinity();
        if (better(area, aspect, angle)) {
            best_area = area;
            best = OrientedRect{center, angle, ha, hb};
            have_best = true;
        }
    }
    if (!have_best) raise(ErrorCode::DegenerateInput, "no rectangle");
    return best;
}

double elongation(std::span<const Point2> points) {
    OrientedRect r = min_area_rect(points);
    if (r.half_b <= 0.0) return std::numeric_limits<double>::infinity();
    return r.half_a / r.half_b;
}

bool point_in_polygon(Point2 p, const Polygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        Point2 a = v[j], b = v[i];
        // On-segment check (boundary inclusive).
        double o = orient(a, b, p);
        if (std::abs(o) < 1e-12 && dot(p - a, p - b) <= 1e-12) return true;
        if ((b.y > p.y) != (a.y > p.y)) {
            double x_int = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (p.x < x_int) inside = !inside;
        }
    }
    return inside;
}

std::size_t Mask::count() const {
    std::size_t c = 0;
    for (auto v : cells) c += (v != 0);
    return c;
}

Point2 raster_to_world(int ix, int iy, int w, int h, const OrientedRect& workspace) {
    double u = ((ix + 0.5) / static_cast<double>(w) - 0.5) * 2.0 * workspace.half_a;
    double vv = ((iy + 0.5) / static_cast<double>(h) - 0.5) * 2.0 * workspace.half_b;
    return workspace.center + workspace.axis_a() * u + workspace.axis_b() * vv;
}

std::optional<std::pair<int, int>> world_to_raster(Point2 p, int w, int h,
                                                   const OrientedRect& workspace) {
    Point2 d = p - workspace.center;
    double u = dot(d, workspace.axis_a()) / (2.0 * workspace.half_a) + 0.5;
    double vv = dot(d, workspace.axis_b()) / (2.0 * workspace.half_b) + 0.5;
    int ix = static_cast<int>(std::floor(u * w));
    int iy = static_cast<int>(std::floor(vv * h));
    if (ix < 0 || ix >= w || iy < 0 || iy >= h) return std::nullopt;
    return std::make_pair(ix, iy);
}

Mask rasterize(const Polygon& p, int w, int h, const OrientedRect& workspace) {
    if (w <= 0 || h <= 0) raise(ErrorCode::InvalidArgument, "grid must be positive");
    Mask m;
    m.width = w;
    m.height = h;
    m.cells.assign(static_cast<std::size_t>(w) * h, 0);
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            if (point_in_polygon(raster_to_world(ix, iy, w, h, workspace), p)) {
                m.set(ix, iy, true);
            }
        }
    }
    if (m.count() == 0) raise(ErrorCode::EmptyRaster, "polygon covers no cell center");
    return m;
}

Polygon clip_half_plane(const Polygon& poly, Point2 origin, Point2 normal) {
    Polygon out;
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point2 a = v[i], b = v[(i + 1) % n];
        double da = dot(a - origin, normal);
        double db = dot(b - origin, normal);
        if (da <= 0.0) out.vertices.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            double t = da / (da - db);
            out.vertices.push_back(a + (b - a) * t);
        }
    }
    return out;
}

Polygon translated(const Polygon& poly, Point2 d) {
    Polygon out = poly;
    for (auto& q : out.vertices) q = q + d;
    return out;
}

Polygon rotated_about(const Polygon& poly, Point2 pivot, double angle) {
    Polygon out = poly;
    for (auto& q : out.vertices) q = pivot + rotate(q - pivot, angle);
    return out;
}

Polygon scaled_about(const Polygon& poly, Point2 pivot, double sx, double sy,
                     double axis_angle) {
    Polygon out = poly;
    for (auto& q : out.vertices) {
        Point2 d = rotate(q - pivot, -axis_angle);
        d.x *= sx;
        d.y *= sy;
        q = pivot + rotate(d, axis_angle);
    }
    return out;
}

Polygon scaled_to_area(const Polygon& poly, double target_area) {
    double area = polygon_area(poly);
    if (area <= 0.0 || target_area <= 0.0) return poly;
    double s = std::sqrt(target_area / area);
    return scaled_about(poly, polygon_centroid(poly), s, s);
}

}  // namespace slipsim::geom
