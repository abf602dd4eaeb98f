#include "hypermatch/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hypermatch/errors.hpp"
#include "hypermatch/lattice.hpp"

namespace hm {

namespace {

using nlohmann::json;

std::vector<long long> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<long long> out;
    for (const auto& item : j) {
        if (!item.is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " must hold integers");
        }
        out.push_back(item.get<long long>());
    }
    return out;
}

std::vector<Vertex> vertex_array(const json& j, const char* what) {
    std::vector<Vertex> out;
    for (long long v : int_array(j, what)) {
        if (v < 1 || v > 1'000'000) {
            throw std::invalid_argument(std::string(what) + " holds an out-of-range label");
        }
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

}  // namespace

Hypergraph parse_instance(std::istream& in) {
    std::string line;
    long long lineno = 0;
    long long n = -1, k = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate header", lineno);
            std::string fmt;
            if (!(ls >> fmt >> n >> k >> m) || fmt != "hg") {
                throw ParseError("expected \"p hg <n> <k> <m>\"", lineno);
            }
            if (n < 0 || k < 2 || k > 6 || m < 0) {
                throw ParseError("header out of range (need n >= 0, 2 <= k <= 6, m >= 0)",
                                 lineno);
            }
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after header", lineno);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before header", lineno);
            Edge e;
            long long v;
            while (ls >> v) {
                if (v < 1 || v > n) throw ParseError("vertex label outside 1..n", lineno);
                e.push_back(static_cast<Vertex>(v));
            }
            if (!ls.eof()) throw ParseError("malformed edge line", lineno);
            if (static_cast<long long>(e.size()) != k) {
                throw ParseError("edge has " + std::to_string(e.size()) +
                                     " vertices, expected " + std::to_string(k),
                                 lineno);
            }
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
                throw ParseError("edge repeats a vertex", lineno);
            }
            edges.push_back(std::move(e));
        } else {
            throw ParseError("unknown record \"" + tag + "\"", lineno);
        }
    }
    if (n < 0) throw ParseError("missing \"p hg\" header", lineno);
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         lineno);
    }
    try {
        return Hypergraph(static_cast<int>(n), static_cast<int>(k), edges);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), lineno);
    }
}

Hypergraph parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"", 0);
    return parse_instance(in);
}

std::string serialize_instance(const Hypergraph& H, const std::string& comment) {
    int n = H.vertex_count();
    const auto& verts = H.vertices();
    for (int i = 0; i < n; ++i) {
        if (verts[static_cast<std::size_t>(i)] != i + 1) {
            throw std::invalid_argument("instance serialization needs vertex labels 1..n");
        }
    }
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string line;
        while (std::getline(cs, line)) out << "# " << line << "\n";
    }
    out << "p hg " << n << " " << H.uniformity() << " " << H.edge_count() << "\n";
    for (int e = 0; e < H.edge_count(); ++e) {
        out << "e";
        for (Vertex v : H.edge(e)) out << " " << v;
        out << "\n";
    }
    return out.str();
}

json matching_to_json(const Matching& m) {
    json edges = json::array();
    for (const Edge& e : m.edges) edges.push_back(e);
    return json{{"edges", edges}};
}

Matching matching_from_json(const json& j) {
    Matching m;
    for (const auto& e : field(j, "edges")) m.edges.push_back(vertex_array(e, "matching edge"));
    return m;
}

json certificate_to_json(const Certificate& cert) {
    json parts = json::array();
    for (const auto& p : cert.partition.parts) parts.push_back(p);
    json basis = json::array();
    for (const auto& row : cert.lattice.basis()) basis.push_back(row);
    CosetGroup cg = coset_group(cert.lattice);
    return json{
        {"C", cert.C},
        {"far_set", cert.far_set},
        {"partition", parts},
        {"lattice",
         {{"d", cert.lattice.dim()}, {"k", cert.lattice.uniformity()}, {"basis", basis}}},
        {"group",
         {{"invariant_factors", cg.group().factors}, {"g0", cg.g0()}}},
        {"refuted_matching_bound", cert.refuted_matching_bound},
    };
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    const json& jc = field(j, "C");
    if (!jc.is_number_integer() || jc.get<long long>() < 0) {
        throw std::invalid_argument("\"C\" must be a non-negative integer");
    }
    cert.C = jc.get<long long>();
    cert.far_set = vertex_array(field(j, "far_set"), "far_set");
    std::vector<std::vector<Vertex>> parts;
    for (const auto& p : field(j, "partition")) parts.push_back(vertex_array(p, "partition part"));
    cert.partition = OrderedPartition{std::move(parts)};
    cert.partition.validate();

    const json& jl = field(j, "lattice");
    const json& jd = field(jl, "d");
    const json& jk = field(jl, "k");
    if (!jd.is_number_integer() || !jk.is_number_integer()) {
        throw std::invalid_argument("lattice dimensions must be integers");
    }
    int d = jd.get<int>();
    int k = jk.get<int>();
    std::vector<ZVec> rows;
    for (const auto& r : field(jl, "basis")) rows.push_back(int_array(r, "basis row"));
    EdgeLattice L = EdgeLattice::from_generators(rows, d, k);
    if (L.basis() != rows) {
        throw std::invalid_argument("lattice basis is not in canonical (Hermite) form");
    }
    cert.lattice = std::move(L);

    // The group block is derived from the lattice; only its shape is validated here.
    const json& jg = field(j, "group");
    int_array(field(jg, "invariant_factors"), "invariant_factors");
    int_array(field(jg, "g0"), "g0");

    const json& jb = field(j, "refuted_matching_bound");
    if (!jb.is_number_integer()) {
        throw std::invalid_argument("\"refuted_matching_bound\" must be an integer");
    }
    cert.refuted_matching_bound = jb.get<long long>();
    return cert;
}

json decision_to_json(const Decision& dec) {
    json out{{"result", dec.pm_exists ? "pm" : "no_pm"}, {"mode", to_string(dec.mode)}};
    if (dec.matching) out["matching"] = matching_to_json(*dec.matching)["edges"];
    if (dec.certificate) out["certificate"] = certificate_to_json(*dec.certificate);
    return out;
}

}  // namespace hm
