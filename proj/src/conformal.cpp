#include "regge/conformal.hpp"

#include <algorithm>
#include <cmath>

#include "regge/error.hpp"
#include "regge/geometry.hpp"

namespace regge {

ConformalClass::ConformalClass(const Complex& complex, Metric background)
    : complex_(&complex), background_(std::move(background)) {
    check_admissible(complex, background_.lengths());
}

InducedMetric ConformalClass::apply(const ConformalPoint& f) const {
    if (f.size() != complex_->vertex_count())
        throw PreconditionError("conformal point has " + std::to_string(f.size()) +
                                " factors for " + std::to_string(complex_->vertex_count()) +
                                " vertices");
    InducedMetric out;
    out.lengths.resize(complex_->edge_count());
    for (int e = 0; e < complex_->edge_count(); ++e) {
        const auto [v, w] = complex_->edge(e).vertices;
        out.lengths[e] = std::exp(0.5 * (f[v] + f[w])) * background_[e];
    }
    out.admissible = is_admissible(*complex_, out.lengths);
    return out;
}

Metric ConformalClass::metric_at(const ConformalPoint& f) const {
    InducedMetric induced = apply(f);
    check_admissible(*complex_, induced.lengths);
    return Metric(std::move(induced.lengths));
}

std::vector<CrossRatios> cross_ratios(const Complex& complex, const Eigen::VectorXd& lengths) {
    std::vector<CrossRatios> out;
    out.reserve(complex.tet_count());
    for (int t = 0; t < complex.tet_count(); ++t) {
        const TetLengths l = tet_lengths(complex, lengths, t);
        // Slots: 0=12 1=13 2=14 3=23 4=24 5=34.
        out.push_back({l[0] * l[5] / (l[2] * l[3]), l[0] * l[5] / (l[1] * l[4])});
    }
    return out;
}

namespace {

// Edge id per vertex pair of a 4-vertex complex whose edges are exactly the
// six pairs.
std::array<std::array<int, 4>, 4> pair_edges(const Complex& complex) {
    if (complex.vertex_count() != 4 || complex.edge_count() != 6)
        throw PreconditionError("equihedral point needs the double tetrahedron");
    std::array<std::array<int, 4>, 4> ids{};
    for (auto& row : ids) row.fill(-1);
    for (int e = 0; e < 6; ++e) {
        const auto [a, b] = complex.edge(e).vertices;
        if (ids[a][b] >= 0)
            throw PreconditionError("equihedral point needs one edge per vertex pair");
        ids[a][b] = ids[b][a] = e;
    }
    return ids;
}

} // namespace

EquihedralPoint equihedral_point(const ConformalClass& cls) {
    const auto ids = pair_edges(cls.complex());
    const Metric& bg = cls.background();
    auto big_l = [&](int a, int b) { return bg[ids[a][b]]; };

    // Gauge f_3 = 0; vertex i pairs with the two others j, k.
    ConformalPoint f = ConformalPoint::Zero(4);
    for (int i = 0; i < 3; ++i) {
        int j = -1;
        int k = -1;
        for (int v = 0; v < 3; ++v) {
            if (v == i) continue;
            (j < 0 ? j : k) = v;
        }
        f[i] = std::log(big_l(j, 3) * big_l(k, 3) / (big_l(i, j) * big_l(i, k)));
    }

    InducedMetric induced = cls.apply(f);
    return {f, std::move(induced.lengths), induced.admissible};
}

bool is_equihedral(const Eigen::VectorXd& lengths, double tol) {
    if (lengths.size() != 6) return false;
    const double scale = lengths.maxCoeff();
    for (int k = 0; k < 3; ++k)
        if (std::abs(lengths[k] - lengths[5 - k]) > tol * scale) return false;
    return true;
}

} // namespace regge
