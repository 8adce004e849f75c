#pragma once

/* JSON encodings (schema "defect2/1").  ordered_json keeps key order
 * deterministic so golden files are byte-stable.  Big integers are emitted
 * as JSON numbers when they fit in 64 bits and as decimal strings
 * otherwise; the parsers accept both. */

#include "defect2/verify.hpp"

#include <json.hpp>

namespace defect2 {

using json = nlohmann::ordered_json;

inline json json_of_bigint(const bigint& z)
{
    if (z.fits_slong_p())
        return json(z.get_si());
    return json(z.get_str());
}

inline bigint bigint_of_json(const json& j)
{
    if (j.is_string())
        return bigint(j.get<std::string>());
    return bigint(static_cast<long>(j.get<long long>()));
}

inline json json_of_partition(const partition& lam)
{
    json a = json::array();
    for (long p : lam.parts)
        a.push_back(p);
    return a;
}

inline partition partition_of_json(const json& j)
{
    std::vector<long> parts;
    for (const auto& x : j)
        parts.push_back(x.get<long>());
    return partition(std::move(parts));
}

inline json json_of_block(const block_descriptor& b)
{
    json j;
    j["p"] = b.p;
    j["core"] = json_of_partition(b.core);
    j["n"] = b.n;
    j["partitions"] = json::array();
    for (const partition& lam : b.parts)
        j["partitions"].push_back(json_of_partition(lam));
    j["regulars"] = json::array();
    for (const partition& mu : b.regulars)
        j["regulars"].push_back(json_of_partition(mu));
    return j;
}

inline block_descriptor block_of_json(const json& j)
{
    block_descriptor b;
    b.p = j.at("p").get<long>();
    b.core = partition_of_json(j.at("core"));
    b.n = j.at("n").get<long>();
    for (const auto& x : j.at("partitions"))
        b.parts.push_back(partition_of_json(x));
    for (const auto& x : j.at("regulars"))
        b.regulars.push_back(partition_of_json(x));
    return b;
}

inline json json_of_tables(const block_tables& t)
{
    json j;
    j["rows"] = json::array();
    for (const partition& lam : t.block.parts)
        j["rows"].push_back(json_of_partition(lam));
    j["cols"] = json::array();
    for (const partition& mu : t.block.regulars)
        j["cols"].push_back(json_of_partition(mu));
    j["entries"] = t.matrix.entries;
    j["layers"] = json::object();
    for (std::size_t i = 0; i < t.block.parts.size(); ++i) {
        json l;
        for (int k = 0; k < 3; ++k) {
            json a = json::array();
            for (long c : t.layers.rows[i][k])
                a.push_back(json_of_partition(t.block.regulars[c]));
            l["J" + std::to_string(k)] = a;
        }
        j["layers"][t.block.parts[i].str()] = l;
    }
    return j;
}

inline json json_of_quiver(const ext_quiver& q)
{
    json j;
    j["vertices"] = json::array();
    for (const partition& v : q.vertices)
        j["vertices"].push_back(json_of_partition(v));
    j["signs"] = json::object();
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        j["signs"][q.vertices[i].str()] = q.signs[i];
    j["edges"] = json::array();
    for (auto [a, b] : q.edges) {
        json e = json::array();
        e.push_back(json_of_partition(q.vertices[a]));
        e.push_back(json_of_partition(q.vertices[b]));
        j["edges"].push_back(e);
    }
    return j;
}

inline ext_quiver quiver_of_json(const json& j)
{
    ext_quiver q;
    for (const auto& v : j.at("vertices"))
        q.vertices.push_back(partition_of_json(v));
    for (const auto& v : q.vertices)
        q.signs.push_back(j.at("signs").at(v.str()).get<int>());
    for (const auto& e : j.at("edges")) {
        long a = q.vertex_index(partition_of_json(e[0]));
        long b = q.vertex_index(partition_of_json(e[1]));
        q.edges.insert({std::min(a, b), std::max(a, b)});
    }
    return q;
}

inline json json_of_expmat(const exponent_matrix& m)
{
    json j;
    j["label"] = json_of_partition(m.label);
    j["index"] = json::array();
    for (const partition& mu : m.index)
        j["index"].push_back(json_of_partition(mu));
    j["m"] = m.mat;
    return j;
}

inline exponent_matrix expmat_of_json(const json& j)
{
    exponent_matrix m;
    m.label = partition_of_json(j.at("label"));
    for (const auto& x : j.at("index"))
        m.index.push_back(partition_of_json(x));
    m.mat = j.at("m").get<std::vector<std::vector<long>>>();
    return m;
}

inline json json_of_element(const block_descriptor& b, const block_algebra& A,
                            const algebra_element& e)
{
    json terms = json::array();
    for (const auto& [k, c] : e.terms) {
        auto [row, a, bb] = k;
        json t;
        t["lam"] = json_of_partition(b.parts[row]);
        t["row"] = json_of_partition(b.regulars[A.r[row][a]]);
        t["col"] = json_of_partition(b.regulars[A.r[row][bb]]);
        t["num"] = json_of_bigint(bigint(c.get_num()));
        t["den"] = json_of_bigint(bigint(c.get_den()));
        terms.push_back(t);
    }
    return terms;
}

inline algebra_element element_of_json(const block_descriptor& b, const block_algebra& A,
                                       const json& terms)
{
    algebra_element e;
    for (const auto& t : terms) {
        long row = b.row_index(partition_of_json(t.at("lam")));
        long a = A.pos_in_row(row, b.col_index(partition_of_json(t.at("row"))));
        long c = A.pos_in_row(row, b.col_index(partition_of_json(t.at("col"))));
        rational q(bigint_of_json(t.at("num")), bigint_of_json(t.at("den")));
        q.canonicalize();
        e.add_term(row, a, c, q);
    }
    return e;
}

inline json json_of_presentation(const presentation& pres, const block_algebra& A)
{
    json j;
    j["idempotents"] = json::object();
    for (const auto& [mu, e] : pres.idempotents)
        j["idempotents"][mu.str()] = json_of_element(pres.block, A, e);
    j["generators"] = json::array();
    for (const auto& [from, to, x] : pres.generators) {
        json g;
        g["from"] = json_of_partition(from);
        g["to"] = json_of_partition(to);
        g["terms"] = json_of_element(pres.block, A, x);
        j["generators"].push_back(g);
    }
    j["hull"] = json::array();
    for (const auto& m : pres.hull)
        j["hull"].push_back(json_of_expmat(m));
    return j;
}

inline json json_of_analysis(const block_analysis& an)
{
    const block_descriptor& b = an.tables.block;
    block_algebra A(an.tables);
    json j;
    j["schema"] = "defect2/1";
    j["block"] = json_of_block(b);
    j["dimensions"] = json::array();
    for (const partition& lam : b.parts)
        j["dimensions"].push_back(json_of_bigint(specht_dimension(lam)));
    j["decomposition"] = json_of_tables(an.tables);
    j["simple_dimensions"] = json::object();
    for (const partition& mu : b.regulars)
        j["simple_dimensions"][mu.str()] = json_of_bigint(an.dims.at(mu));
    j["mullineux"] = json::object();
    for (std::size_t i = 0; i < an.mull.from.regulars.size(); ++i)
        j["mullineux"][an.mull.from.regulars[i].str()] =
            json_of_partition(an.mull.to.regulars[an.mull.map[i]]);
    j["quiver"] = json_of_quiver(an.quiver);
    j["exponent_matrices"] = json::array();
    for (const auto& m : an.expmats)
        j["exponent_matrices"].push_back(json_of_expmat(m));
    j["dimension_vectors"] = json::object();
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        json v = json::array();
        for (const bigint& d : dimension_vector(an.expmats[i], an.dims))
            v.push_back(json_of_bigint(d));
        j["dimension_vectors"][b.parts[i].str()] = v;
    }
    j["presentation"] = json_of_presentation(an.pres, A);
    return j;
}

/* Rebuild the bundle from its JSON image; conjugate-block tables are
 * reconstructed on demand since they are derived data. */
inline block_analysis analysis_of_json(const json& j)
{
    block_analysis an;
    block_descriptor b = block_of_json(j.at("block"));
    an.tables.block = b;
    an.tables.matrix.block = b;
    an.tables.matrix.entries =
        j.at("decomposition").at("entries").get<std::vector<std::vector<int>>>();
    an.tables.layers.rows.assign(b.parts.size(), {});
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        const json& l = j.at("decomposition").at("layers").at(b.parts[i].str());
        for (int k = 0; k < 3; ++k)
            for (const auto& x : l.at("J" + std::to_string(k)))
                an.tables.layers.rows[i][k].push_back(
                    b.col_index(partition_of_json(x)));
    }
    an.self_conjugate = conjugate(b.core) == b.core;
    for (const partition& mu : b.regulars)
        an.dims[mu] = bigint_of_json(j.at("simple_dimensions").at(mu.str()));
    an.quiver = quiver_of_json(j.at("quiver"));
    for (const auto& m : j.at("exponent_matrices"))
        an.expmats.push_back(expmat_of_json(m));

    an.mull.to = b;
    an.mull.from = an.self_conjugate ? b : conjugate_block(b);
    for (const partition& mu : an.mull.from.regulars)
        an.mull.map.push_back(
            b.col_index(partition_of_json(j.at("mullineux").at(mu.str()))));

    block_algebra A(an.tables);
    an.pres.block = b;
    for (const auto& [key, val] : j.at("presentation").at("idempotents").items())
        an.pres.idempotents.emplace_back(parse_partition(key),
                                         element_of_json(b, A, val));
    for (const auto& g : j.at("presentation").at("generators"))
        an.pres.generators.emplace_back(partition_of_json(g.at("from")),
                                        partition_of_json(g.at("to")),
                                        element_of_json(b, A, g.at("terms")));
    for (const auto& m : j.at("presentation").at("hull"))
        an.pres.hull.push_back(expmat_of_json(m));
    return an;
}

inline json json_of_report(const block_descriptor& b, const check_report& rep)
{
    json j;
    j["schema"] = "defect2/1";
    j["block"] = json_of_block(b);
    j["checks"] = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j;
}

} // namespace defect2
