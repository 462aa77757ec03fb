#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace slipsim::geom {

/// Workspace units are centimeters throughout.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point2&) const = default;
};

double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
/// Twice the signed area of triangle (a, b, c); > 0 when c is left of a->b.
double orient(Point2 a, Point2 b, Point2 c);
double norm(Point2 a);
double distance(Point2 a, Point2 b);
Point2 rotate(Point2 p, double angle);
/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

/// Simple polygon, vertices in counter-clockwise order (signed area > 0).
struct Polygon {
    std::vector<Point2> vertices;
};

/// Oriented rectangle with half-extents a >= b; `angle` is the direction of
/// the long (a) axis, normalized to [0, pi).
struct OrientedRect {
    Point2 center;
    double angle = 0.0;
    double half_a = 0.0;
    double half_b = 0.0;

    double area() const { return 4.0 * half_a * half_b; }
    double aspect() const { return half_a / half_b; }
    Point2 axis_a() const;
    Point2 axis_b() const;
    bool contains(Point2 p) const;
};

/// Strictly convex hull (collinear boundary points dropped), CCW, vertices a
/// subset of the inputs. Throws DegenerateInput for < 3 points or an
/// all-collinear set.
Polygon convex_hull(std::span<const Point2> points);

/// Shoelace area; positive for CCW polygons.
double polygon_area(const Polygon& p);

Point2 polygon_centroid(const Polygon& p);

/// Minimum-area enclosing rectangle via rotating calipers over the hull
/// edges; ties resolved by the smallest angle in [0, pi).
OrientedRect min_area_rect(std::span<const Point2> points);

/// Aspect ratio a/b of the minimum-area enclosing rectangle; >= 1, invariant
/// under rigid motion and uniform scaling.
double elongation(std::span<const Point2> points);

/// Boundary-inclusive point-in-polygon for simple polygons (crossing rule
/// with an explicit on-edge test).
bool point_in_polygon(Point2 p, const Polygon& poly);

struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> cells;  // row-major, height rows of width

    bool at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * width + ix] != 0; }
    void set(int ix, int iy, bool v) { cells[static_cast<std::size_t>(iy) * width + ix] = v ? 1 : 0; }
    std::size_t count() const;
};

/// Center of raster cell (ix, iy) in workspace coordinates. The u axis of
/// the grid runs along the workspace rect's a axis, v along b.
Point2 raster_to_world(int ix, int iy, int w, int h, const OrientedRect& workspace);

/// Inverse of raster_to_world; empty when p falls outside the grid.
std::optional<std::pair<int, int>> world_to_raster(Point2 p, int w, int h,
                                                   const OrientedRect& workspace);

/// Pixel-center rasterization: cell marked iff its center lies inside the
/// polygon. Throws EmptyRaster when no cell center is covered.
Mask rasterize(const Polygon& p, int w, int h, const OrientedRect& workspace);

/// Clip to the half-plane { p : dot(p - origin, normal) <= 0 }.
/// May return a polygon with fewer than 3 vertices (empty result).
Polygon clip_half_plane(const Polygon& poly, Point2 origin, Point2 normal);

Polygon translated(const Polygon& poly, Point2 d);
Polygon rotated_about(const Polygon& poly, Point2 pivot, double angle);
/// Anisotropic scale about `pivot` with the sx axis rotated by `axis_angle`.
Polygon scaled_about(const Polygon& poly, Point2 pivot, double sx, double sy,
                     double axis_angle = 0.0);
/// Uniform rescale about the centroid so the area becomes `target_area`.
Polygon scaled_to_area(const Polygon& poly, double target_area);

}  // namespace slipsim::geom
