#include <gtest/gtest.h>

#include <array>
#include <filesystem>
#include <fstream>
#include <set>

#include "regge/complex.hpp"
#include "regge/error.hpp"

using namespace regge;

namespace {

std::string replace_first(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return text.replace(pos, from.size(), to);
}

} // namespace

TEST(DoubleTetrahedron, CountsAndDegrees) {
    const Complex dt = double_tetrahedron();
    EXPECT_EQ(dt.vertex_count(), 4);
    EXPECT_EQ(dt.edge_count(), 6);
    EXPECT_EQ(dt.face_count(), 4);
    EXPECT_EQ(dt.tet_count(), 2);
    EXPECT_EQ(dt.euler_characteristic(), 0);
    for (int e = 0; e < 6; ++e) EXPECT_EQ(dt.edge_degree(e), 2);
    EXPECT_EQ(max_edge_degree(dt), 2);
}

TEST(DoubleTetrahedron, EdgeOrderFollowsSlots) {
    const Complex dt = double_tetrahedron();
    for (int k = 0; k < 6; ++k) {
        EXPECT_EQ(dt.edge(k).vertices[0], kTetEdgePairs[k][0]);
        EXPECT_EQ(dt.edge(k).vertices[1], kTetEdgePairs[k][1]);
    }
    // Opposite slots share no vertex.
    for (int k = 0; k < 3; ++k) {
        const auto a = dt.edge(k).vertices;
        const auto b = dt.edge(5 - k).vertices;
        std::set<int> all{a[0], a[1], b[0], b[1]};
        EXPECT_EQ(all.size(), 4u);
    }
}

TEST(DoubleTetrahedron, EveryVertexMeetsThreeEdges) {
    const Complex dt = double_tetrahedron();
    for (int v = 0; v < 4; ++v) EXPECT_EQ(dt.edges_at_vertex(v).size(), 3u);
}

TEST(Pentachoron, CountsAndDegreeThree) {
    const Complex p = pentachoron_boundary();
    EXPECT_EQ(p.vertex_count(), 5);
    EXPECT_EQ(p.edge_count(), 10);
    EXPECT_EQ(p.face_count(), 10);
    EXPECT_EQ(p.tet_count(), 5);
    EXPECT_EQ(p.euler_characteristic(), 0);
    for (int e = 0; e < p.edge_count(); ++e) EXPECT_EQ(p.edge_degree(e), 3);
    EXPECT_EQ(max_edge_degree(p), 3);
}

TEST(SixHundredCell, Counts) {
    const Complex c = six_hundred_cell();
    EXPECT_EQ(c.vertex_count(), 120);
    EXPECT_EQ(c.edge_count(), 720);
    EXPECT_EQ(c.face_count(), 1200);
    EXPECT_EQ(c.tet_count(), 600);
    EXPECT_EQ(c.euler_characteristic(), 0);
    for (int e = 0; e < c.edge_count(); ++e) ASSERT_EQ(c.edge_degree(e), 5) << e;
    for (int v = 0; v < c.vertex_count(); ++v) ASSERT_EQ(c.edges_at_vertex(v).size(), 12u);
}

TEST(SixHundredCell, EveryFaceInTwoTets) {
    const Complex c = six_hundred_cell();
    std::vector<int> uses(c.face_count(), 0);
    for (const Tet& t : c.tets())
        for (int f : t.faces) ++uses[f];
    for (int u : uses) EXPECT_EQ(u, 2);
}

TEST(SimplicialComplex, MatchesPentachoronCounts) {
    const std::array<std::array<int, 4>, 5> tets{{
        {1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3},
    }};
    const Complex c = simplicial_complex(5, tets);
    EXPECT_EQ(c.edge_count(), 10);
    EXPECT_EQ(c.face_count(), 10);
    EXPECT_EQ(max_edge_degree(c), 3);
}

TEST(SimplicialComplex, RejectsOpenBoundary) {
    const std::array<std::array<int, 4>, 1> one{{{0, 1, 2, 3}}};
    EXPECT_THROW(simplicial_complex(4, one), ValidationError);
}

TEST(ComplexIo, RoundTrip) {
    for (const Complex& c : {double_tetrahedron(), pentachoron_boundary()}) {
        const std::string text = save_complex(c);
        EXPECT_EQ(load_complex(text), c);
        EXPECT_EQ(save_complex(load_complex(text)), text);
    }
}

TEST(ComplexIo, RoundTripSixHundredCellThroughFile) {
    const Complex c = six_hundred_cell();
    const auto path = std::filesystem::temp_directory_path() / "regge_cell600.yaml";
    {
        std::ofstream out(path);
        out << save_complex(c);
    }
    EXPECT_EQ(load_complex_file(path), c);
    std::filesystem::remove(path);
}

TEST(ComplexIo, MalformedDocuments) {
    EXPECT_THROW(load_complex("vertices: [oops"), ParseError);
    EXPECT_THROW(load_complex("edges: []"), ParseError);
    EXPECT_THROW(load_complex("vertices: 4\nedges: [[0, 1, 2]]\nfaces: []\ntets: []"), ParseError);
    EXPECT_THROW(load_complex("vertices: four\nedges: []\nfaces: []\ntets: []"), ParseError);
    EXPECT_THROW(load_complex_file("/nonexistent/complex.yaml"), ParseError);
}

TEST(ComplexIo, InvalidCombinatorics) {
    const std::string good = save_complex(double_tetrahedron());
    // Vertex out of range.
    EXPECT_THROW(load_complex(replace_first(good, "- [0, 1]", "- [0, 7]")), ValidationError);
    // Loop edge.
    EXPECT_THROW(load_complex(replace_first(good, "- [0, 1]", "- [1, 1]")), ValidationError);
    // Face whose edges do not join its vertices.
    EXPECT_THROW(load_complex(replace_first(good, "[[3, 4, 5], [1, 2, 3]]", "[[0, 4, 5], [1, 2, 3]]")),
                 ValidationError);
    // Tet listing a face in the wrong slot.
    EXPECT_THROW(load_complex(replace_first(good, "[0, 1, 2, 3, 4, 5], [0, 1, 2, 3]]",
                                            "[0, 1, 2, 3, 4, 5], [1, 0, 2, 3]]")),
                 ValidationError);
}

TEST(ComplexIo, RejectsSingleTet) {
    const std::string text =
        "vertices: 4\n"
        "edges: [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]\n"
        "faces: [[[3, 4, 5], [1, 2, 3]], [[1, 2, 5], [0, 2, 3]], [[0, 2, 4], [0, 1, 3]], "
        "[[0, 1, 3], [0, 1, 2]]]\n"
        "tets: [[[0, 1, 2, 3], [0, 1, 2, 3, 4, 5], [0, 1, 2, 3]]]\n";
    EXPECT_THROW(load_complex(text), ValidationError);
}

TEST(Metric, RejectsNonPositiveAndNonFinite) {
    EXPECT_THROW(Metric(Eigen::VectorXd::Constant(6, 0.0)), DomainError);
    Eigen::VectorXd l = Eigen::VectorXd::Ones(6);
    l[3] = -1.0;
    EXPECT_THROW(Metric{l}, DomainError);
    l[3] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(Metric{l}, DomainError);
    l[3] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(Metric{l}, DomainError);
}

TEST(Metric, UniformAndScaled) {
    const Metric m = Metric::uniform(6, 2.5);
    EXPECT_EQ(m.size(), 6);
    for (int e = 0; e < 6; ++e) EXPECT_DOUBLE_EQ(m[e], 2.5);
    EXPECT_DOUBLE_EQ(m.scaled(2.0)[4], 5.0);
}
