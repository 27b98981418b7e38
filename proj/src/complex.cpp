#include "regge/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "regge/error.hpp"

namespace regge {

namespace {

std::string describe(const char* kind, int id) {
    return std::string(kind) + " " + std::to_string(id);
}

bool same_pair(const std::array<int, 2>& ends, int a, int b) {
    return (ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a);
}

int local_index(const std::array<int, 4>& verts, int v) {
    const auto it = std::find(verts.begin(), verts.end(), v);
    return it == verts.end() ? -1 : static_cast<int>(it - verts.begin());
}

} // namespace

Complex::Complex(int vertex_count, std::vector<Edge> edges, std::vector<Face> faces,
                 std::vector<Tet> tets)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      tets_(std::move(tets)) {
    validate();
    build_incidence();
}

void Complex::validate() const {
    if (vertex_count_ <= 0) throw ValidationError("complex has no vertices");
    if (tets_.empty()) throw ValidationError("complex has no tetrahedra");

    const int n_edges = edge_count();
    const int n_faces = face_count();
    auto check_vertex = [&](int v, const std::string& where) {
        if (v < 0 || v >= vertex_count_)
            throw ValidationError(where + " references missing vertex " + std::to_string(v));
    };
    auto check_edge = [&](int e, const std::string& where) {
        if (e < 0 || e >= n_edges)
            throw ValidationError(where + " references missing edge " + std::to_string(e));
    };

    for (int e = 0; e < n_edges; ++e) {
        const auto& ends = edges_[e].vertices;
        check_vertex(ends[0], describe("edge", e));
        check_vertex(ends[1], describe("edge", e));
        if (ends[0] == ends[1]) throw ValidationError(describe("edge", e) + " is a loop");
    }

    for (int f = 0; f < n_faces; ++f) {
        const Face& face = faces_[f];
        const std::string where = describe("face", f);
        for (int v : face.vertices) check_vertex(v, where);
        for (int e : face.edges) check_edge(e, where);
        for (int k = 0; k < 3; ++k) {
            const auto [i, j] = kFaceEdgePairs[k];
            if (!same_pair(edges_[face.edges[k]].vertices, face.vertices[i], face.vertices[j]))
                throw ValidationError(where + ": edge slot " + std::to_string(k) +
                                      " does not join its face vertices");
        }
    }

    std::vector<int> face_uses(n_faces, 0);
    std::vector<int> edge_in_tet(n_edges, 0);
    for (int t = 0; t < tet_count(); ++t) {
        const Tet& tet = tets_[t];
        const std::string where = describe("tet", t);
        for (int v : tet.vertices) check_vertex(v, where);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (tet.vertices[i] == tet.vertices[j])
                    throw ValidationError(where + " repeats a vertex");
        for (int k = 0; k < 6; ++k) {
            check_edge(tet.edges[k], where);
            const auto [i, j] = kTetEdgePairs[k];
            if (!same_pair(edges_[tet.edges[k]].vertices, tet.vertices[i], tet.vertices[j]))
                throw ValidationError(where + ": edge slot " + std::to_string(k) +
                                      " does not join its local vertices");
            ++edge_in_tet[tet.edges[k]];
        }
        for (int i = 0; i < 4; ++i) {
            const int f = tet.faces[i];
            if (f < 0 || f >= n_faces)
                throw ValidationError(where + " references missing face " + std::to_string(f));
            const Face& face = faces_[f];
            std::array<int, 3> locals{};
            for (int a = 0; a < 3; ++a) {
                locals[a] = local_index(tet.vertices, face.vertices[a]);
                if (locals[a] < 0 || locals[a] == i)
                    throw ValidationError(where + ": face slot " + std::to_string(i) +
                                          " is not opposite its local vertex");
            }
            for (int k = 0; k < 3; ++k) {
                const auto [a, b] = kFaceEdgePairs[k];
                if (tet.edges[tet_edge_slot(locals[a], locals[b])] != face.edges[k])
                    throw ValidationError(where + ": face slot " + std::to_string(i) +
                                          " has edges inconsistent with the tet");
            }
            ++face_uses[f];
        }
    }

    for (int f = 0; f < n_faces; ++f)
        if (face_uses[f] != 2)
            throw ValidationError(describe("face", f) + " belongs to " +
                                  std::to_string(face_uses[f]) + " tetrahedra (expected 2)");

    std::vector<int> edge_in_face(n_edges, 0);
    for (const Face& face : faces_)
        for (int e : face.edges) ++edge_in_face[e];
    for (int e = 0; e < n_edges; ++e)
        if (edge_in_face[e] == 0 || edge_in_tet[e] == 0)
            throw ValidationError(describe("edge", e) + " is not in any face");

    const int chi = vertex_count_ - n_edges + n_faces - tet_count();
    if (chi != 0)
        throw ValidationError("Euler characteristic is " + std::to_string(chi) +
                              ", not 0 as for a closed 3-manifold");
}

void Complex::build_incidence() {
    edges_at_vertex_.assign(vertex_count_, {});
    for (int e = 0; e < edge_count(); ++e)
        for (int v : edges_[e].vertices) edges_at_vertex_[v].push_back(e);

    tets_at_edge_.assign(edge_count(), {});
    for (int t = 0; t < tet_count(); ++t)
        for (int k = 0; k < 6; ++k) tets_at_edge_[tets_[t].edges[k]].push_back({t, k});
}

Complex double_tetrahedron() {
    std::vector<Edge> edges;
    for (const auto& [i, j] : kTetEdgePairs) edges.push_back({{i, j}});

    // Face i is opposite vertex i; vertices ascending.
    std::vector<Face> faces;
    for (int i = 0; i < 4; ++i) {
        std::array<int, 3> verts{};
        int n = 0;
        for (int v = 0; v < 4; ++v)
            if (v != i) verts[n++] = v;
        std::array<int, 3> face_edges{};
        for (int k = 0; k < 3; ++k)
            face_edges[k] = tet_edge_slot(verts[kFaceEdgePairs[k][0]], verts[kFaceEdgePairs[k][1]]);
        faces.push_back({face_edges, verts});
    }

    const Tet tet{{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3}};
    return Complex(4, std::move(edges), std::move(faces), {tet, tet});
}

Complex simplicial_complex(int vertex_count, std::span<const std::array<int, 4>> tets) {
    std::map<std::array<int, 2>, int> edge_ids;
    std::map<std::array<int, 3>, int> face_ids;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    auto edge_id = [&](int a, int b) {
        std::array<int, 2> key{std::min(a, b), std::max(a, b)};
        auto [it, inserted] = edge_ids.try_emplace(key, static_cast<int>(edges.size()));
        if (inserted) edges.push_back({{a, b}});
        return it->second;
    };

    std::vector<Tet> out;
    out.reserve(tets.size());
    for (const auto& verts : tets) {
        Tet tet{};
        tet.vertices = verts;
        for (int k = 0; k < 6; ++k)
            tet.edges[k] = edge_id(verts[kTetEdgePairs[k][0]], verts[kTetEdgePairs[k][1]]);
        for (int i = 0; i < 4; ++i) {
            std::array<int, 3> fv{};
            int n = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) fv[n++] = verts[j];
            std::array<int, 3> key = fv;
            std::sort(key.begin(), key.end());
            auto [it, inserted] = face_ids.try_emplace(key, static_cast<int>(faces.size()));
            if (inserted) {
                Face face{};
                face.vertices = fv;
                for (int k = 0; k < 3; ++k)
                    face.edges[k] = edge_id(fv[kFaceEdgePairs[k][0]], fv[kFaceEdgePairs[k][1]]);
                faces.push_back(face);
            }
            tet.faces[i] = it->second;
        }
        out.push_back(tet);
    }
    return Complex(vertex_count, std::move(edges), std::move(faces), std::move(out));
}

Complex pentachoron_boundary() {
    std::vector<std::array<int, 4>> tets;
    for (int skip = 0; skip < 5; ++skip) {
        std::array<int, 4> t{};
        int n = 0;
        for (int v = 0; v < 5; ++v)
            if (v != skip) t[n++] = v;
        tets.push_back(t);
    }
    return simplicial_complex(5, tets);
}

Complex six_hundred_cell() {
    using Quat = std::array<double, 4>;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Quat> verts;

    for (int axis = 0; axis < 4; ++axis)
        for (double s : {1.0, -1.0}) {
            Quat q{};
            q[axis] = s;
            verts.push_back(q);
        }
    for (int signs = 0; signs < 16; ++signs) {
        Quat q{};
        for (int k = 0; k < 4; ++k) q[k] = (signs >> k & 1) ? -0.5 : 0.5;
        verts.push_back(q);
    }
    // Even permutations of (0, 1/2, phi/2, 1/(2 phi)) with all sign choices on
    // the nonzero entries.
    const std::array<double, 4> base{0.0, 0.5, phi / 2.0, 1.0 / (2.0 * phi)};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inversions;
        if (inversions % 2 != 0) continue;
        for (int signs = 0; signs < 8; ++signs) {
            Quat q{};
            for (int k = 0; k < 4; ++k) q[perm[k]] = base[k];
            for (int k = 1; k < 4; ++k)
                if (signs >> (k - 1) & 1) q[perm[k]] = -q[perm[k]];
            verts.push_back(q);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    const int n = static_cast<int>(verts.size());
    // Nearest neighbours on the unit sphere have inner product phi/2; the next
    // shell is at 1/2.
    const double threshold = (phi / 2.0 + 0.5) / 2.0;
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            double dot = 0.0;
            for (int k = 0; k < 4; ++k) dot += verts[a][k] * verts[b][k];
            if (dot > threshold) adjacent[a][b] = adjacent[b][a] = 1;
        }

    std::vector<std::array<int, 4>> tets;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adjacent[a][b]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!adjacent[a][c] || !adjacent[b][c]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (adjacent[a][d] && adjacent[b][d] && adjacent[c][d])
                        tets.push_back({a, b, c, d});
            }
        }
    return simplicial_complex(n, tets);
}

int max_edge_degree(const Complex& complex) {
    int best = 0;
    for (int e = 0; e < complex.edge_count(); ++e) best = std::max(best, complex.edge_degree(e));
    return best;
}

Metric::Metric(Eigen::VectorXd lengths) : lengths_(std::move(lengths)) {
    for (Eigen::Index e = 0; e < lengths_.size(); ++e)
        if (!(lengths_[e] > 0.0) || !std::isfinite(lengths_[e]))
            throw DomainError("edge " + std::to_string(e) + " has non-positive length");
}

Metric Metric::uniform(int edge_count, double length) {
    return Metric(Eigen::VectorXd::Constant(edge_count, length));
}

} // namespace regge
