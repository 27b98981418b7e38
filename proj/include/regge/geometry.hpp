#pragma once

#include <array>

#include <Eigen/Core>

#include "regge/complex.hpp"

namespace regge {

/// Six edge lengths of a tetrahedron in `kTetEdgePairs` order.
using TetLengths = std::array<double, 6>;

/// Cayley-Menger determinant CM3: det of the bordered 5x5 matrix of squared
/// lengths, equal to 288 V^2 for a Euclidean tetrahedron. Evaluated from its
/// closed-form degree-6 polynomial; the sign conveys degeneracy.
double cayley_menger(const TetLengths& l);

/// Partial derivatives dCM3/dl_k.
std::array<double, 6> cayley_menger_gradient(const TetLengths& l);

/// sqrt(CM3 / 288). Throws DomainError when CM3 <= 0.
double tet_volume(const TetLengths& l);

/// dV/dl_k, by the chain rule through the square root.
std::array<double, 6> tet_volume_gradient(const TetLengths& l);

/// Angle opposite side a in the triangle with sides a, b, c. Throws
/// DomainError unless the strict triangle inequalities hold.
double face_angle(double a, double b, double c);

/// Area of the triangle with sides a, b, c (Kahan's form of Heron's formula).
double triangle_area(double a, double b, double c);

/// Dihedral angles at the six edges. The cosine comes from the spherical
/// cosine law on the face angles at the first endpoint of each edge; the sine
/// from 3 V l_e / (2 A_f A_f'), which keeps angles near 0 and pi accurate.
std::array<double, 6> dihedral_angles(const TetLengths& l);

/// Dihedral angle at local edge `slot`, with the spherical cosine law applied
/// at local endpoint `pivot` (0 or 1) of that edge.
double dihedral_angle_at(const TetLengths& l, int slot, int pivot);

/// Local vertices of face i (opposite vertex i), ascending.
constexpr std::array<int, 3> tet_face_vertices(int i) {
    std::array<int, 3> out{};
    int n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != i) out[n++] = v;
    return out;
}

/// Tet-local edge slot of edge k (in `kFaceEdgePairs` order) of face i.
constexpr int tet_face_edge_slot(int i, int k) {
    const auto fv = tet_face_vertices(i);
    return tet_edge_slot(fv[kFaceEdgePairs[k][0]], fv[kFaceEdgePairs[k][1]]);
}

/// Vertex coordinates realizing the lengths: vertex 0 at the origin, vertex 1
/// on the x axis, vertex 2 in the xy plane (y > 0), vertex 3 with z > 0.
std::array<Eigen::Vector3d, 4> embed_tet(const TetLengths& l);

/// Circumcentric data of a tetrahedron.
///
/// Signs: `edge_heights[i][k]` (h_{e<f}) is the signed distance from the
/// circumcenter of face i to its edge k, positive when the circumcenter is on
/// the same side as the face's opposite vertex; `face_heights[i]` (h_{f<t}) is
/// the signed distance from the tet circumcenter to the plane of face i,
/// positive on the side of vertex i.
struct HeightsAndAreas {
    std::array<double, 4> face_areas{};
    std::array<double, 4> face_heights{};
    std::array<std::array<double, 3>, 4> edge_heights{};
};

HeightsAndAreas heights_and_areas(const TetLengths& l);

/// Everything derived from the six lengths of one tetrahedron.
struct TetGeometry {
    TetLengths lengths{};
    double cayley_menger = 0.0;
    double volume = 0.0;
    std::array<double, 6> volume_gradient{};
    /// face_angles[i][a]: angle of face i at its local vertex a.
    std::array<std::array<double, 3>, 4> face_angles{};
    std::array<double, 6> dihedral{};
    std::array<double, 4> face_areas{};
    std::array<double, 4> face_heights{};
    std::array<std::array<double, 3>, 4> edge_heights{};
    std::array<Eigen::Vector3d, 4> vertices;
    Eigen::Vector3d circumcenter;
    std::array<Eigen::Vector3d, 4> face_circumcenters;
};

/// Throws DomainError when CM3 <= 0.
TetGeometry tet_geometry(const TetLengths& l);

/// The six lengths of tet t of `complex` in local slot order.
TetLengths tet_lengths(const Complex& complex, const Eigen::VectorXd& lengths, int t);

/// Throws DomainError naming the first tetrahedron with CM3 <= 0 or a face
/// that violates the strict triangle inequality.
void check_admissible(const Complex& complex, const Eigen::VectorXd& lengths);
bool is_admissible(const Complex& complex, const Eigen::VectorXd& lengths);

/// Smallest CM3 / (mean squared edge length)^3 over all tetrahedra: a scale-free
/// margin that is positive exactly on admissible metrics and equals 4 for a
/// regular tetrahedron. Negative when some face is not a proper triangle.
double admissibility_margin(const Complex& complex, const Eigen::VectorXd& lengths);

/// Circumcentric dual lengths: l*_e = sum over t > e of
/// (h_{e<f} h_{f<t} + h_{e<f'} h_{f'<t}) / 2, with f, f' the faces of t at e.
Eigen::VectorXd dual_lengths(const Complex& complex, const Metric& metric);

} // namespace regge
