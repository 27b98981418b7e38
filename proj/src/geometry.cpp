#include "regge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "regge/error.hpp"

namespace regge {

namespace {

// Opposite-edge slot pairs and the slot triples of faces 0..3.
constexpr std::array<std::array<int, 2>, 3> kOppositePairs{{{0, 5}, {1, 4}, {2, 3}}};
constexpr std::array<std::array<int, 3>, 4> kFaceSlots{{
    {tet_face_edge_slot(0, 0), tet_face_edge_slot(0, 1), tet_face_edge_slot(0, 2)},
    {tet_face_edge_slot(1, 0), tet_face_edge_slot(1, 1), tet_face_edge_slot(1, 2)},
    {tet_face_edge_slot(2, 0), tet_face_edge_slot(2, 1), tet_face_edge_slot(2, 2)},
    {tet_face_edge_slot(3, 0), tet_face_edge_slot(3, 1), tet_face_edge_slot(3, 2)},
}};

double len(const TetLengths& l, int i, int j) { return l[tet_edge_slot(i, j)]; }

void require_admissible(const TetLengths& l, double cm) {
    if (!(cm > 0.0))
        throw DomainError("edge lengths do not span a tetrahedron (CM3 = " + std::to_string(cm) +
                              ")",
                          -1, cm);
    for (double x : l)
        if (!(x > 0.0)) throw DomainError("non-positive edge length", -1, cm);
}

// Cosine of the angle opposite a, from the cosine law.
double cos_opposite(double a, double b, double c) { return (b * b + c * c - a * a) / (2.0 * b * c); }

} // namespace

double cayley_menger(const TetLengths& l) {
    std::array<double, 6> x{};
    for (int k = 0; k < 6; ++k) x[k] = l[k] * l[k];
    double sum = 0.0;
    for (double v : x) sum += v;
    double g = 0.0;
    for (const auto& [p, q] : kOppositePairs) g += x[p] * x[q] * (sum - 2.0 * x[p] - 2.0 * x[q]);
    for (const auto& [a, b, c] : kFaceSlots) g -= x[a] * x[b] * x[c];
    return 2.0 * g;
}

std::array<double, 6> cayley_menger_gradient(const TetLengths& l) {
    std::array<double, 6> x{};
    for (int k = 0; k < 6; ++k) x[k] = l[k] * l[k];
    double sum = 0.0;
    for (double v : x) sum += v;

    std::array<double, 6> dg{};  // d(CM/2)/d(x_m)
    for (int m = 0; m < 6; ++m) {
        for (const auto& [p, q] : kOppositePairs) {
            if (m == p)
                dg[m] += x[q] * (sum - 3.0 * x[p] - 2.0 * x[q]);
            else if (m == q)
                dg[m] += x[p] * (sum - 3.0 * x[q] - 2.0 * x[p]);
            else
                dg[m] += x[p] * x[q];
        }
        for (const auto& [a, b, c] : kFaceSlots) {
            if (m == a) dg[m] -= x[b] * x[c];
            if (m == b) dg[m] -= x[a] * x[c];
            if (m == c) dg[m] -= x[a] * x[b];
        }
    }
    std::array<double, 6> out{};
    for (int m = 0; m < 6; ++m) out[m] = 4.0 * l[m] * dg[m];
    return out;
}

double tet_volume(const TetLengths& l) {
    const double cm = cayley_menger(l);
    require_admissible(l, cm);
    return std::sqrt(cm / 288.0);
}

std::array<double, 6> tet_volume_gradient(const TetLengths& l) {
    const double volume = tet_volume(l);
    auto grad = cayley_menger_gradient(l);
    for (double& g : grad) g /= 576.0 * volume;
    return grad;
}

double triangle_area(double a, double b, double c) {
    std::array<double, 3> s{a, b, c};
    std::sort(s.begin(), s.end(), std::greater<>());
    const auto [x, y, z] = s;
    if (!(z > 0.0) || !(x < y + z))
        throw DomainError("side lengths violate the strict triangle inequality");
    return 0.25 * std::sqrt((x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z)));
}

double face_angle(double a, double b, double c) {
    const double area = triangle_area(a, b, c);
    return std::atan2(4.0 * area, b * b + c * c - a * a);
}

double dihedral_angle_at(const TetLengths& l, int slot, int pivot) {
    const double cm = cayley_menger(l);
    require_admissible(l, cm);
    const double volume = std::sqrt(cm / 288.0);

    const int i = kTetEdgePairs[slot][pivot];
    const int j = kTetEdgePairs[slot][1 - pivot];
    int k = -1;
    int m = -1;
    for (int v = 0; v < 4; ++v) {
        if (v == i || v == j) continue;
        (k < 0 ? k : m) = v;
    }
    // Face angles at vertex i between the edges towards (j,k), (j,m), (k,m).
    const double cos_jk = cos_opposite(len(l, j, k), len(l, i, j), len(l, i, k));
    const double cos_jm = cos_opposite(len(l, j, m), len(l, i, j), len(l, i, m));
    const double cos_km = cos_opposite(len(l, k, m), len(l, i, k), len(l, i, m));
    const double area_ijk = triangle_area(len(l, i, j), len(l, i, k), len(l, j, k));
    const double area_ijm = triangle_area(len(l, i, j), len(l, i, m), len(l, j, m));
    const double sin_jk = 2.0 * area_ijk / (len(l, i, j) * len(l, i, k));
    const double sin_jm = 2.0 * area_ijm / (len(l, i, j) * len(l, i, m));

    const double cos_beta = (cos_km - cos_jk * cos_jm) / (sin_jk * sin_jm);
    const double sin_beta = 1.5 * volume * l[slot] / (area_ijk * area_ijm);
    return std::atan2(sin_beta, cos_beta);
}

std::array<double, 6> dihedral_angles(const TetLengths& l) {
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k) out[k] = dihedral_angle_at(l, k, 0);
    return out;
}

std::array<Eigen::Vector3d, 4> embed_tet(const TetLengths& l) {
    const double cm = cayley_menger(l);
    require_admissible(l, cm);
    const double volume = std::sqrt(cm / 288.0);

    const double d01 = l[0], d02 = l[1], d03 = l[2], d12 = l[3], d13 = l[4], d23 = l[5];
    std::array<Eigen::Vector3d, 4> p;
    p[0] = Eigen::Vector3d::Zero();
    p[1] = Eigen::Vector3d(d01, 0.0, 0.0);

    const double area012 = triangle_area(d01, d02, d12);
    const double x2 = (d01 * d01 + d02 * d02 - d12 * d12) / (2.0 * d01);
    p[2] = Eigen::Vector3d(x2, 2.0 * area012 / d01, 0.0);

    const double x3 = (d01 * d01 + d03 * d03 - d13 * d13) / (2.0 * d01);
    // |p3 - p2|^2 = d23^2 fixes y3 once x3 is known.
    const double y3 = (d03 * d03 - d23 * d23 + x2 * x2 + p[2].y() * p[2].y() - 2.0 * x2 * x3) /
                      (2.0 * p[2].y());
    p[3] = Eigen::Vector3d(x3, y3, 3.0 * volume / area012);
    return p;
}

namespace {

Eigen::Vector3d circumcenter_of(const std::array<Eigen::Vector3d, 4>& p) {
    Eigen::Matrix3d a;
    Eigen::Vector3d rhs;
    for (int r = 0; r < 3; ++r) {
        const Eigen::Vector3d d = p[r + 1] - p[0];
        a.row(r) = 2.0 * d.transpose();
        rhs[r] = p[r + 1].squaredNorm() - p[0].squaredNorm();
    }
    return a.partialPivLu().solve(rhs);
}

Eigen::Vector3d triangle_circumcenter(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                      const Eigen::Vector3d& c) {
    const Eigen::Vector3d u = b - a;
    const Eigen::Vector3d w = c - a;
    Eigen::Matrix2d gram;
    gram << u.dot(u), u.dot(w), u.dot(w), w.dot(w);
    const Eigen::Vector2d coef = gram.ldlt().solve(Eigen::Vector2d(0.5 * u.dot(u), 0.5 * w.dot(w)));
    return a + coef[0] * u + coef[1] * w;
}

} // namespace

TetGeometry tet_geometry(const TetLengths& l) {
    TetGeometry g;
    g.lengths = l;
    g.cayley_menger = cayley_menger(l);
    require_admissible(l, g.cayley_menger);
    g.volume = std::sqrt(g.cayley_menger / 288.0);
    g.volume_gradient = cayley_menger_gradient(l);
    for (double& d : g.volume_gradient) d /= 576.0 * g.volume;
    g.dihedral = dihedral_angles(l);

    g.vertices = embed_tet(l);
    g.circumcenter = circumcenter_of(g.vertices);

    for (int i = 0; i < 4; ++i) {
        const auto fv = tet_face_vertices(i);
        const std::array<double, 3> side{l[kFaceSlots[i][0]], l[kFaceSlots[i][1]],
                                         l[kFaceSlots[i][2]]};
        // Side k of the face joins kFaceEdgePairs[k]; the corner opposite side
        // k is the remaining local vertex 2 - k.
        const double area = triangle_area(side[0], side[1], side[2]);
        g.face_areas[i] = area;
        for (int k = 0; k < 3; ++k) {
            const double a = side[k];
            const double b = side[(k + 1) % 3];
            const double c = side[(k + 2) % 3];
            // h_{e<f} = (l_e / 2) cot(opposite angle) = l_e (b^2 + c^2 - a^2) / (8 A).
            g.edge_heights[i][k] = a * (b * b + c * c - a * a) / (8.0 * area);
            g.face_angles[i][2 - k] = std::atan2(4.0 * area, b * b + c * c - a * a);
        }

        const Eigen::Vector3d& pa = g.vertices[fv[0]];
        Eigen::Vector3d normal = (g.vertices[fv[1]] - pa).cross(g.vertices[fv[2]] - pa).normalized();
        if (normal.dot(g.vertices[i] - pa) < 0.0) normal = -normal;
        g.face_heights[i] = normal.dot(g.circumcenter - pa);
        g.face_circumcenters[i] =
            triangle_circumcenter(g.vertices[fv[0]], g.vertices[fv[1]], g.vertices[fv[2]]);
    }
    return g;
}

HeightsAndAreas heights_and_areas(const TetLengths& l) {
    const TetGeometry g = tet_geometry(l);
    return {g.face_areas, g.face_heights, g.edge_heights};
}

TetLengths tet_lengths(const Complex& complex, const Eigen::VectorXd& lengths, int t) {
    const Tet& tet = complex.tet(t);
    TetLengths out{};
    for (int k = 0; k < 6; ++k) out[k] = lengths[tet.edges[k]];
    return out;
}

namespace {

// Smallest Heron product (16 A^2) over the faces, scaled by the largest
// squared side; positive exactly when every face is a proper triangle.
double faces_positive(const TetLengths& l) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        const double a = l[tet_face_edge_slot(i, 0)];
        const double b = l[tet_face_edge_slot(i, 1)];
        const double c = l[tet_face_edge_slot(i, 2)];
        const double m = std::max({a, b, c});
        worst = std::min(worst, (a + b + c) * (b + c - a) * (a - b + c) * (a + b - c) / (m * m * m * m));
    }
    return worst;
}

} // namespace

void check_admissible(const Complex& complex, const Eigen::VectorXd& lengths) {
    if (lengths.size() != complex.edge_count())
        throw DomainError("metric has " + std::to_string(lengths.size()) + " lengths for " +
                          std::to_string(complex.edge_count()) + " edges");
    for (int t = 0; t < complex.tet_count(); ++t) {
        const TetLengths l = tet_lengths(complex, lengths, t);
        const double cm = cayley_menger(l);
        bool positive = true;
        for (double x : l) positive = positive && x > 0.0;
        if (positive && cm > 0.0 && faces_positive(l) <= 0.0)
            throw DomainError("tetrahedron " + std::to_string(t) +
                                  " has a face violating the strict triangle inequality",
                              t, cm);
        if (!(cm > 0.0) || !positive)
            throw DomainError("tetrahedron " + std::to_string(t) +
                                  " is not realizable (CM3 = " + std::to_string(cm) + ")",
                              t, cm);
    }
}

bool is_admissible(const Complex& complex, const Eigen::VectorXd& lengths) {
    if (lengths.size() != complex.edge_count() || !lengths.allFinite()) return false;
    if ((lengths.array() <= 0.0).any()) return false;
    return admissibility_margin(complex, lengths) > 0.0;
}

double admissibility_margin(const Complex& complex, const Eigen::VectorXd& lengths) {
    double margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < complex.tet_count(); ++t) {
        const TetLengths l = tet_lengths(complex, lengths, t);
        double mean_sq = 0.0;
        for (double x : l) mean_sq += x * x / 6.0;
        const double faces = faces_positive(l);
        if (!(faces > 0.0)) return std::isnan(faces) ? -1.0 : faces - 1.0;
        const double ratio = cayley_menger(l) / (mean_sq * mean_sq * mean_sq);
        // Overflowing squared lengths give NaN, which check_admissible rejects too.
        if (std::isnan(ratio)) return -1.0;
        margin = std::min(margin, ratio);
    }
    return margin;
}

Eigen::VectorXd dual_lengths(const Complex& complex, const Metric& metric) {
    check_admissible(complex, metric.lengths());
    Eigen::VectorXd out = Eigen::VectorXd::Zero(complex.edge_count());
    for (int t = 0; t < complex.tet_count(); ++t) {
        const TetGeometry g = tet_geometry(tet_lengths(complex, metric.lengths(), t));
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 3; ++k) {
                const int slot = tet_face_edge_slot(i, k);
                out[complex.tet(t).edges[slot]] += 0.5 * g.edge_heights[i][k] * g.face_heights[i];
            }
    }
    return out;
}

} // namespace regge
