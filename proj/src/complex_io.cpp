#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "regge/complex.hpp"
#include "regge/error.hpp"

namespace regge {

namespace {

template <std::size_t N>
std::array<int, N> read_ints(const YAML::Node& node, const std::string& where) {
    if (!node.IsSequence() || node.size() != N)
        throw ParseError(where + ": expected a list of " + std::to_string(N) + " integers");
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = node[i].as<int>();
    return out;
}

YAML::Node section(const YAML::Node& root, const char* key) {
    const YAML::Node node = root[key];
    if (!node) throw ParseError(std::string("missing section '") + key + "'");
    return node;
}

template <std::size_t N>
std::string join(const std::array<int, N>& xs) {
    return fmt::format("[{}]", fmt::join(xs, ", "));
}

} // namespace

Complex load_complex(std::string_view document) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(document));
    } catch (const YAML::Exception& err) {
        throw ParseError(std::string("malformed triangulation document: ") + err.what());
    }
    if (!root.IsMap()) throw ParseError("triangulation document must be a key-value map");

    try {
        const int vertex_count = section(root, "vertices").as<int>();

        std::vector<Edge> edges;
        const YAML::Node edge_list = section(root, "edges");
        if (!edge_list.IsSequence()) throw ParseError("'edges' must be a list");
        for (std::size_t i = 0; i < edge_list.size(); ++i)
            edges.push_back({read_ints<2>(edge_list[i], "edge " + std::to_string(i))});

        std::vector<Face> faces;
        const YAML::Node face_list = section(root, "faces");
        if (!face_list.IsSequence()) throw ParseError("'faces' must be a list");
        for (std::size_t i = 0; i < face_list.size(); ++i) {
            const std::string where = "face " + std::to_string(i);
            const YAML::Node item = face_list[i];
            if (!item.IsSequence() || item.size() != 2)
                throw ParseError(where + ": expected [[e1,e2,e3],[v1,v2,v3]]");
            faces.push_back({read_ints<3>(item[0], where), read_ints<3>(item[1], where)});
        }

        std::vector<Tet> tets;
        const YAML::Node tet_list = section(root, "tets");
        if (!tet_list.IsSequence()) throw ParseError("'tets' must be a list");
        for (std::size_t i = 0; i < tet_list.size(); ++i) {
            const std::string where = "tet " + std::to_string(i);
            const YAML::Node item = tet_list[i];
            if (!item.IsSequence() || item.size() != 3)
                throw ParseError(where + ": expected [[v x4],[e x6],[f x4]]");
            tets.push_back({read_ints<4>(item[0], where), read_ints<6>(item[1], where),
                            read_ints<4>(item[2], where)});
        }
        return Complex(vertex_count, std::move(edges), std::move(faces), std::move(tets));
    } catch (const YAML::Exception& err) {
        throw ParseError(std::string("malformed triangulation document: ") + err.what());
    }
}

Complex load_complex_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open triangulation file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_complex(buffer.str());
}

std::string save_complex(const Complex& complex) {
    std::string out = fmt::format("vertices: {}\nedges:\n", complex.vertex_count());
    for (const Edge& e : complex.edges()) out += fmt::format("  - {}\n", join(e.vertices));
    out += "faces:\n";
    for (const Face& f : complex.faces())
        out += fmt::format("  - [{}, {}]\n", join(f.edges), join(f.vertices));
    out += "tets:\n";
    for (const Tet& t : complex.tets())
        out += fmt::format("  - [{}, {}, {}]\n", join(t.vertices), join(t.edges), join(t.faces));
    return out;
}

} // namespace regge
