#pragma once

// Numeric certification for the convex-pentagon configuration: ABCDE convex
// with an interior point T satisfying TB = TD, TC = TE, BC = DE and
// angle ABT = angle TEA. Samples random instances of the hypotheses and
// certifies the derived equalities (TQ*TC = TS*TD, CDQS and PSQR concyclic)
// by residuals that are exact claims up to floating rounding.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>

#include "oslo/errors.hpp"

namespace oslo::pentagon_geometry {

inline constexpr double kTauHyp = 1e-9;       // relative hypothesis tolerance
inline constexpr double kTauAngle = 1e-9;     // radians
inline constexpr double kConcyclicTol = 1e-6; // relative certification bound
inline constexpr double kDetEps = 1e-12;      // line-intersection conditioning

struct Point {
    double x = 0;
    double y = 0;
    bool operator==(const Point&) const = default;
};

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point rotate(Point p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Undirected angle at vertex v between rays v->a and v->b, in [0, pi].
inline double angle_at(Point v, Point a, Point b) {
    const Point u = a - v, w = b - v;
    if (norm(u) == 0 || norm(w) == 0) throw degenerate_error("angle at zero-length ray");
    return std::abs(std::atan2(cross(u, w), dot(u, w)));
}

struct PentagonConfig {
    Point a, b, c, d, e, t;
    double theta = 0;  // rotation angle taking B to D and C to E about T
    double scale = 0;  // max pairwise distance over the six points

    std::array<Point, 5> vertices() const { return {a, b, c, d, e}; }
    std::array<Point, 6> all_points() const { return {a, b, c, d, e, t}; }
};

inline double config_scale(const PentagonConfig& cfg) {
    const auto pts = cfg.all_points();
    double s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            s = std::max(s, distance(pts[i], pts[j]));
    return s;
}

/// Strict convexity of the closed polygon in listed order.
inline bool convex_in_order(const std::array<Point, 5>& pts) {
    int sign = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point p0 = pts[i];
        const Point p1 = pts[(i + 1) % pts.size()];
        const Point p2 = pts[(i + 2) % pts.size()];
        const double cr = cross(p1 - p0, p2 - p1);
        if (cr == 0) return false;
        const int s = cr > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

inline bool strictly_inside(Point p, const std::array<Point, 5>& pts) {
    int sign = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point a = pts[i];
        const Point b = pts[(i + 1) % pts.size()];
        const double cr = cross(b - a, p - a);
        if (cr == 0) return false;
        const int s = cr > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

/// Intersection of lines a + t*da and b + u*db via a 2x2 solve.
inline Point line_intersection(Point a, Point da, Point b, Point db, double scale) {
    if (norm(da) == 0 || norm(db) == 0) throw degenerate_error("zero-length line direction");
    const double den = cross(da, db);
    if (std::abs(den) <= kDetEps * scale * scale)
        throw ill_conditioned_error("near-parallel lines in intersection");
    const double t = cross(b - a, db) / den;
    return a + da * t;
}

struct DerivedPoints {
    Point p, q, r, s;
    bool order_pbaq = false;  // P, B, A, Q in that order along line AB
    bool order_reas = false;  // R, E, A, S in that order along line AE
};

/// P = AB x CD, Q = AB x CT, R = AE x CD, S = AE x DT. Ordering flags come
/// from parameter comparison along each line.
inline DerivedPoints derive_points(const PentagonConfig& cfg) {
    const double scale = cfg.scale > 0 ? cfg.scale : config_scale(cfg);
    DerivedPoints out;
    out.p = line_intersection(cfg.a, cfg.b - cfg.a, cfg.c, cfg.d - cfg.c, scale);
    out.q = line_intersection(cfg.a, cfg.b - cfg.a, cfg.c, cfg.t - cfg.c, scale);
    out.r = line_intersection(cfg.a, cfg.e - cfg.a, cfg.c, cfg.d - cfg.c, scale);
    out.s = line_intersection(cfg.a, cfg.e - cfg.a, cfg.d, cfg.t - cfg.d, scale);
    // parameters along AB measured from A: t(B) > t(A) = 0, so the required
    // order P, B, A, Q means t(P) > t(B) > 0 > t(Q)
    const Point u = cfg.b - cfg.a;
    out.order_pbaq = dot(out.p - cfg.a, u) > dot(u, u) && dot(u, u) > 0 &&
                     0 > dot(out.q - cfg.a, u);
    const Point v = cfg.e - cfg.a;
    out.order_reas = dot(out.r - cfg.a, v) > dot(v, v) && dot(v, v) > 0 &&
                     0 > dot(out.s - cfg.a, v);
    return out;
}

struct HypothesisReport {
    double tb_td_residual = 0;  // relative to scale
    double tc_te_residual = 0;
    double bc_de_residual = 0;
    double angle_residual = 0;  // radians
    bool convex = false;
    bool t_inside = false;
    bool derived_ok = false;    // intersections exist and are well-conditioned
    bool order_pbaq = false;
    bool order_reas = false;

    bool pass(double tau_hyp = kTauHyp, double tau_angle = kTauAngle) const {
        return tb_td_residual <= tau_hyp && tc_te_residual <= tau_hyp &&
               bc_de_residual <= tau_hyp && angle_residual <= tau_angle && convex &&
               t_inside && derived_ok && order_pbaq && order_reas;
    }
};

inline HypothesisReport hypothesis_check(const PentagonConfig& cfg) {
    const double scale = cfg.scale > 0 ? cfg.scale : config_scale(cfg);
    if (scale <= 0) throw degenerate_error("all points coincide");
    for (const Point seg :
         {cfg.b - cfg.t, cfg.c - cfg.t, cfg.d - cfg.t, cfg.e - cfg.t, cfg.c - cfg.b,
          cfg.e - cfg.d, cfg.a - cfg.b, cfg.a - cfg.e})
        if (norm(seg) < 1e-15 * scale) throw degenerate_error("zero-length segment");

    HypothesisReport rep;
    rep.tb_td_residual =
        std::abs(distance(cfg.t, cfg.b) - distance(cfg.t, cfg.d)) / scale;
    rep.tc_te_residual =
        std::abs(distance(cfg.t, cfg.c) - distance(cfg.t, cfg.e)) / scale;
    rep.bc_de_residual =
        std::abs(distance(cfg.b, cfg.c) - distance(cfg.d, cfg.e)) / scale;
    rep.angle_residual =
        std::abs(angle_at(cfg.b, cfg.a, cfg.t) - angle_at(cfg.e, cfg.t, cfg.a));
    rep.convex = convex_in_order(cfg.vertices());
    rep.t_inside = strictly_inside(cfg.t, cfg.vertices());
    try {
        const auto derived = derive_points(cfg);
        rep.derived_ok = true;
        rep.order_pbaq = derived.order_pbaq;
        rep.order_reas = derived.order_reas;
    } catch (const ill_conditioned_error&) {
        rep.derived_ok = false;
    }
    return rep;
}

/// |TQ*TC - TS*TD| / scale^2. Exactly zero in theory for every configuration
/// satisfying the hypotheses.
inline double power_residual(const PentagonConfig& cfg, const DerivedPoints& derived) {
    const double scale = cfg.scale > 0 ? cfg.scale : config_scale(cfg);
    return std::abs(distance(cfg.t, derived.q) * distance(cfg.t, cfg.c) -
                    distance(cfg.t, derived.s) * distance(cfg.t, cfg.d)) /
           (scale * scale);
}

/// Normalized 4x4 concyclicity determinant with rows (x, y, x^2+y^2, 1);
/// vanishes exactly when the four points are concyclic (or collinear).
inline double concyclic_residual(Point p1, Point p2, Point p3, Point p4) {
    const std::array<Point, 4> pts{p1, p2, p3, p4};
    double scale = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            scale = std::max(scale, distance(pts[i], pts[j]));
    if (scale == 0) return 0;

    // subtract the p4 row first; the determinant drops to 3x3 and the
    // entries stay O(scale) for better conditioning
    std::array<std::array<double, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i) {
        m[i][0] = pts[i].x - p4.x;
        m[i][1] = pts[i].y - p4.y;
        m[i][2] = (pts[i].x * pts[i].x + pts[i].y * pts[i].y) -
                  (p4.x * p4.x + p4.y * p4.y);
    }
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return std::abs(det) / (scale * scale * scale * scale);
}

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic per-attempt seed stream; workers sampling disjoint attempt
/// ranges reproduce the single-worker partition.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

struct SampleResult {
    PentagonConfig config;
    int attempts_used = 0;
};

/// Rejection sampler over the hypothesis family. Constructs T at the
/// origin, B and C at random polar positions, D and E as their rotations by
/// theta (forcing TB = TD, TC = TE, BC = DE), then places A at the
/// intersection of the rays from B and E that each make the same drawn
/// angle phi with BT and ET: that forces angle ABT = angle TEA directly
/// and avoids any root-finding. Draws failing any hypothesis, convexity,
/// interiority, conditioning, or collinear-ordering check are rejected.
inline std::optional<SampleResult> sample_config(std::uint64_t seed, int attempts) {
    if (attempts < 1) throw std::invalid_argument("attempts must be >= 1");
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::uniform_real_distribution<double> radius(0.5, 2.0);
        std::uniform_real_distribution<double> full_angle(0.0, 2 * std::numbers::pi);
        std::uniform_real_distribution<double> theta_dist(0.2, 2.9);
        std::uniform_real_distribution<double> fraction(0.05, 0.95);
        std::uniform_real_distribution<double> phi_dist(0.10, 1.45);

        PentagonConfig cfg;
        cfg.t = {0, 0};
        const double r1 = radius(rng);
        const double r2 = radius(rng);
        const double beta = full_angle(rng);
        cfg.theta = theta_dist(rng);
        const double gamma = beta + fraction(rng) * cfg.theta;
        const double phi = phi_dist(rng);

        cfg.b = {r1 * std::cos(beta), r1 * std::sin(beta)};
        cfg.c = {r2 * std::cos(gamma), r2 * std::sin(gamma)};
        cfg.d = rotate(cfg.b, cfg.theta);
        cfg.e = rotate(cfg.c, cfg.theta);

        const Point to_t_from_b = (cfg.t - cfg.b) * (1.0 / norm(cfg.t - cfg.b));
        const Point to_t_from_e = (cfg.t - cfg.e) * (1.0 / norm(cfg.t - cfg.e));
        const Point db = rotate(to_t_from_b, +phi);
        const Point de = rotate(to_t_from_e, -phi);
        const double den = cross(db, de);
        if (std::abs(den) < 1e-12) continue;
        const double tb = cross(cfg.e - cfg.b, de) / den;
        const double te = cross(cfg.e - cfg.b, db) / den;
        if (tb <= 1e-9 || te <= 1e-9) continue;  // rays must meet forward
        cfg.a = cfg.b + db * tb;

        cfg.scale = config_scale(cfg);
        try {
            if (hypothesis_check(cfg).pass()) return SampleResult{cfg, attempt + 1};
        } catch (const degenerate_error&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace oslo::pentagon_geometry
