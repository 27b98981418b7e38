#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace regge {

/// Local vertex pairs of a tetrahedron, in the order used for the six edge
/// slots (12, 13, 14, 23, 24, 34 in one-based notation). Slot k and slot 5-k
/// are opposite edges.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdgePairs{{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

/// Local vertex pairs of a triangle, in the order used for the three edge
/// slots of a face.
inline constexpr std::array<std::array<int, 2>, 3> kFaceEdgePairs{{
    {0, 1}, {0, 2}, {1, 2},
}};

/// Tet-local edge slot joining local vertices i != j.
constexpr int tet_edge_slot(int i, int j) {
    if (i > j) {
        const int tmp = i;
        i = j;
        j = tmp;
    }
    constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[i][j];
}

struct Edge {
    std::array<int, 2> vertices;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A triangle. `edges[k]` joins the local vertex pair `kFaceEdgePairs[k]`.
struct Face {
    std::array<int, 3> edges;
    std::array<int, 3> vertices;

    friend bool operator==(const Face&, const Face&) = default;
};

/// A tetrahedron. `edges[k]` joins local vertices `kTetEdgePairs[k]` and
/// `faces[i]` is the face opposite local vertex i.
struct Tet {
    std::array<int, 4> vertices;
    std::array<int, 6> edges;
    std::array<int, 4> faces;

    friend bool operator==(const Tet&, const Tet&) = default;
};

/// One occurrence of an edge inside a tetrahedron.
struct EdgeSlot {
    int tet;
    int local;

    friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

/// Combinatorics of a closed triangulated 3-manifold.
///
/// Incidences are explicit: edges and faces are addressed by id, never by
/// their vertex sets, so gluings where two tetrahedra share the same four
/// vertices (the double tetrahedron) are represented faithfully. Instances are
/// validated on construction and immutable afterwards.
class Complex {
public:
    /// Throws ValidationError if the data is not a closed 3-manifold
    /// triangulation with consistent local labels.
    Complex(int vertex_count, std::vector<Edge> edges, std::vector<Face> faces,
            std::vector<Tet> tets);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int face_count() const noexcept { return static_cast<int>(faces_.size()); }
    int tet_count() const noexcept { return static_cast<int>(tets_.size()); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Face> faces() const noexcept { return faces_; }
    std::span<const Tet> tets() const noexcept { return tets_; }

    const Edge& edge(int e) const { return edges_.at(e); }
    const Face& face(int f) const { return faces_.at(f); }
    const Tet& tet(int t) const { return tets_.at(t); }

    std::span<const int> edges_at_vertex(int v) const { return edges_at_vertex_.at(v); }
    std::span<const EdgeSlot> tets_at_edge(int e) const { return tets_at_edge_.at(e); }

    /// Number of tetrahedra incident to e, counted with multiplicity.
    int edge_degree(int e) const { return static_cast<int>(tets_at_edge_.at(e).size()); }

    int euler_characteristic() const noexcept {
        return vertex_count() - edge_count() + face_count() - tet_count();
    }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
               a.faces_ == b.faces_ && a.tets_ == b.tets_;
    }

private:
    void validate() const;
    void build_incidence();

    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<Tet> tets_;
    std::vector<std::vector<int>> edges_at_vertex_;
    std::vector<std::vector<EdgeSlot>> tets_at_edge_;
};

/// Two tetrahedra glued along all four boundary faces. Edge ids follow
/// `kTetEdgePairs`, so a length vector reads (l12, l13, l14, l23, l24, l34).
Complex double_tetrahedron();

/// Boundary of the 600-cell: vertices are the 120 unit quaternions of the
/// binary icosahedral group, edges join nearest neighbours, tetrahedra are the
/// 4-cliques of the edge graph.
Complex six_hundred_cell();

/// Boundary of the 4-simplex (5 vertices, every edge of degree 3).
Complex pentachoron_boundary();

/// Builds a simplicial complex from tetrahedra given as vertex quadruples;
/// edges and faces are derived and numbered in order of first appearance.
Complex simplicial_complex(int vertex_count, std::span<const std::array<int, 4>> tets);

int max_edge_degree(const Complex& complex);

/// Parses the triangulation document format (see README). Throws ParseError
/// for malformed text and ValidationError for non-manifold data.
Complex load_complex(std::string_view document);
Complex load_complex_file(const std::filesystem::path& path);
std::string save_complex(const Complex& complex);

/// Per-edge lengths. Only positivity is enforced here; whether the lengths
/// realize every tetrahedron is a property of the pair (complex, metric), see
/// `check_admissible`.
class Metric {
public:
    explicit Metric(Eigen::VectorXd lengths);

    static Metric uniform(int edge_count, double length);

    const Eigen::VectorXd& lengths() const noexcept { return lengths_; }
    double operator[](int e) const { return lengths_[e]; }
    int size() const noexcept { return static_cast<int>(lengths_.size()); }
    Metric scaled(double factor) const { return Metric(lengths_ * factor); }

private:
    Eigen::VectorXd lengths_;
};

} // namespace regge
