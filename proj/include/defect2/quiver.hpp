#pragma once

/* Ext-quiver of a block, built from layer data: inside every row, each label
 * in an outer layer (J0 or J2) is joined to each label of the middle layer.
 * Labels sharing a layer never produce an edge.  The graph is undirected,
 * loop-free and bipartite with parts given by the relative p-sign. */

#include "defect2/decomposition.hpp"

#include <sstream>

namespace defect2 {

struct ext_quiver {
    std::vector<partition> vertices;        // block regulars, lex descending
    std::vector<int> signs;                 // relative p-sign per vertex
    std::set<std::pair<long, long>> edges;  // i < j index pairs

    bool has_edge(long i, long j) const
    {
        if (i > j)
            std::swap(i, j);
        return edges.count({i, j}) != 0;
    }

    long vertex_index(const partition& mu) const
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == mu)
                return static_cast<long>(i);
        return -1;
    }

    bool operator==(const ext_quiver& o) const
    {
        return vertices == o.vertices && signs == o.signs && edges == o.edges;
    }
};

inline ext_quiver ext_quiver_of(const block_tables& t)
{
    ext_quiver q;
    q.vertices = t.block.regulars;
    for (const partition& mu : q.vertices)
        q.signs.push_back(relative_p_sign(mu, t.block.p));
    for (const auto& layer : t.layers.rows) {
        for (int outer : {0, 2})
            for (long a : layer[outer])
                for (long m : layer[1])
                    q.edges.insert({std::min(a, m), std::max(a, m)});
    }
    return q;
}

struct check_entry {
    std::string id;
    bool pass = true;
    std::string detail;
};

struct check_report {
    std::vector<check_entry> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    void add(std::string id, bool pass, std::string detail = "")
    {
        checks.push_back({std::move(id), pass, std::move(detail)});
    }
};

/* Structural validation of a quiver against the decomposition matrix:
 *  - every edge {lam,mu} has |c_lam cap c_mu| = 2 and one endpoint inside it,
 *  - signs give a bipartition,
 *  - non-edges with a common row are layer-parallel in every common row. */
inline check_report validate_quiver(const ext_quiver& q, const decomposition_matrix& D,
                                    const layer_table& layers)
{
    check_report rep;
    const block_descriptor& b = D.block;

    bool inter_ok = true, member_ok = true;
    std::string inter_detail, member_detail;
    for (auto [i, j] : q.edges) {
        long ci = b.col_index(q.vertices[i]), cj = b.col_index(q.vertices[j]);
        long inter = D.cartan(ci, cj);
        if (inter != 2) {
            inter_ok = false;
            inter_detail += q.vertices[i].str() + "|" + q.vertices[j].str() + " ";
        }
        bool member = false;
        for (long r : D.c_of(ci))
            if (D.entries[r][cj] &&
                (b.parts[r] == q.vertices[i] || b.parts[r] == q.vertices[j]))
                member = true;
        if (!member) {
            member_ok = false;
            member_detail += q.vertices[i].str() + "|" + q.vertices[j].str() + " ";
        }
    }
    rep.add("edge-intersection", inter_ok, inter_detail);
    rep.add("edge-membership", member_ok, member_detail);

    bool bip = true;
    std::string bip_detail;
    for (auto [i, j] : q.edges)
        if (q.signs[i] == q.signs[j]) {
            bip = false;
            bip_detail += q.vertices[i].str() + "|" + q.vertices[j].str() + " ";
        }
    rep.add("bipartite", bip, bip_detail);

    bool parallel_ok = true;
    std::string parallel_detail;
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < q.vertices.size(); ++j) {
            if (q.has_edge(static_cast<long>(i), static_cast<long>(j)))
                continue;
            long ci = b.col_index(q.vertices[i]), cj = b.col_index(q.vertices[j]);
            for (std::size_t r = 0; r < b.parts.size(); ++r) {
                if (!D.entries[r][ci] || !D.entries[r][cj])
                    continue;
                long li = -1, lj = -1;
                for (int l = 0; l < 3; ++l) {
                    for (long c : layers.rows[r][l]) {
                        if (c == ci)
                            li = l;
                        if (c == cj)
                            lj = l;
                    }
                }
                if (std::abs(li - lj) == 1) {
                    parallel_ok = false;
                    parallel_detail += q.vertices[i].str() + "|" + q.vertices[j].str() +
                                       "@" + b.parts[r].str() + " ";
                }
            }
        }
    rep.add("non-edge-parallel", parallel_ok, parallel_detail);
    return rep;
}

/* DOT output; vertex order is lex descending for stable golden files. */
inline std::string emit_dot(const ext_quiver& q)
{
    std::ostringstream os;
    os << "graph extquiver {\n";
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        os << "  \"" << q.vertices[i].str() << "\" [sign=\""
           << (q.signs[i] > 0 ? "+1" : "-1") << "\"];\n";
    for (auto [i, j] : q.edges)
        os << "  \"" << q.vertices[i].str() << "\" -- \"" << q.vertices[j].str() << "\";\n";
    os << "}\n";
    return os.str();
}

inline ext_quiver parse_dot(const std::string& text)
{
    ext_quiver q;
    std::istringstream is(text);
    std::string line;
    auto unquote = [](const std::string& s) {
        auto a = s.find('"'), b = s.rfind('"');
        return s.substr(a + 1, b - a - 1);
    };
    std::vector<std::pair<std::string, std::string>> edge_names;
    while (std::getline(is, line)) {
        if (line.find("--") != std::string::npos) {
            auto mid = line.find("--");
            edge_names.emplace_back(unquote(line.substr(0, mid)),
                                    unquote(line.substr(mid + 2)));
        } else if (line.find("[sign=") != std::string::npos) {
            auto br = line.find('[');
            q.vertices.push_back(parse_partition(unquote(line.substr(0, br))));
            q.signs.push_back(line.find("+1") != std::string::npos ? 1 : -1);
        }
    }
    for (auto& [a, b] : edge_names) {
        long i = q.vertex_index(parse_partition(a));
        long j = q.vertex_index(parse_partition(b));
        if (i < 0 || j < 0)
            throw std::invalid_argument("parse_dot: edge endpoint is not a vertex");
        q.edges.insert({std::min(i, j), std::max(i, j)});
    }
    return q;
}

} // namespace defect2
