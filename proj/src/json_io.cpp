#include "latchroma/json_io.hpp"

#include <fstream>

namespace latchroma {

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw Error(ErrorCode::NotRational, "expected integer or \"p/q\" string");
}

json rat_to_json(const Rat& q) {
    if (is_integer(q) && numer(q) >= Int(std::numeric_limits<long long>::min()) &&
        numer(q) <= Int(std::numeric_limits<long long>::max()))
        return numer(q).convert_to<long long>();
    return rat_to_string(q);
}

} // namespace

QMat qmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::BadInput, "expected a matrix");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols)
            throw Error(ErrorCode::BadInput, "ragged matrix");
        for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j.at(i).at(c));
    }
    return m;
}

json qmat_to_json(const QMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat imat_from_json(const json& j) { return to_integer(qmat_from_json(j)); }

json imat_to_json(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

json ivec_to_json(const IVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(x.convert_to<long long>());
    return out;
}

json lattice_to_json(const Lattice& l) {
    json j;
    if (!l.name.empty()) j["name"] = l.name;
    j["basis"] = qmat_to_json(l.basis);
    json meta = json::object();
    if (l.meta.min_norm2) meta["min_norm2"] = rat_to_json(*l.meta.min_norm2);
    if (l.meta.relevant_norm2) {
        json arr = json::array();
        for (const Rat& x : *l.meta.relevant_norm2) arr.push_back(rat_to_json(x));
        meta["relevant_norm2"] = std::move(arr);
    }
    if (!meta.empty()) j["meta"] = std::move(meta);
    return j;
}

Lattice lattice_from_json(const json& j) {
    QMat basis = qmat_from_json(j.at("basis"));
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
    Lattice l = make_lattice(basis, name);
    if (j.contains("meta")) {
        const json& meta = j.at("meta");
        if (meta.contains("min_norm2")) l.meta.min_norm2 = rat_from_json(meta.at("min_norm2"));
        if (meta.contains("relevant_norm2")) {
            std::vector<Rat> r;
            for (const auto& x : meta.at("relevant_norm2")) r.push_back(rat_from_json(x));
            l.meta.relevant_norm2 = std::move(r);
        }
    }
    return l;
}

json relevant_to_json(const RelevantVectorSet& s) {
    json j;
    j["count"] = s.count;
    json vecs = json::array();
    for (const IVec& v : s.vectors) vecs.push_back(ivec_to_json(v));
    j["vectors"] = std::move(vecs);
    json norms = json::array();
    for (const Rat& x : s.norm2) norms.push_back(rat_to_string(x));
    j["norm2"] = std::move(norms);
    return j;
}

RelevantVectorSet relevant_from_json(const json& j) {
    RelevantVectorSet s;
    for (const auto& v : j.at("vectors")) {
        IVec iv;
        for (const auto& x : v) iv.push_back(Int(x.get<long long>()));
        s.vectors.push_back(std::move(iv));
    }
    for (const auto& x : j.at("norm2")) s.norm2.push_back(rat_from_json(x));
    s.count = s.vectors.size();
    if (j.contains("count") && j.at("count").get<size_t>() != s.count)
        throw Error(ErrorCode::BadInput, "relevant vector count mismatch");
    return s;
}

json graph_to_json(const FiniteGraph& g) {
    json j;
    j["labels"] = g.labels();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

FiniteGraph graph_from_json(const json& j) {
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    FiniteGraph g(static_cast<int>(labels.size()), std::move(labels));
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    g.finalize();
    return g;
}

std::string graph_to_dimacs(const FiniteGraph& g) {
    std::string out = "p edge " + std::to_string(g.n_vertices()) + " " +
                      std::to_string(g.n_edges()) + "\n";
    for (auto [a, b] : g.edges())
        out += "e " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

json certificate_to_json(const QuotientColoring& cert) {
    json j;
    j["sublattice"] = imat_to_json(cert.sublattice);
    j["k"] = cert.k;
    json colors = json::object();
    for (size_t i = 0; i < cert.colors.size(); ++i)
        colors[std::to_string(i)] = cert.colors[i];
    j["colors"] = std::move(colors);
    return j;
}

QuotientColoring certificate_from_json(const json& j) {
    QuotientColoring cert;
    cert.sublattice = imat_from_json(j.at("sublattice"));
    cert.k = j.at("k").get<int>();
    const json& colors = j.at("colors");
    cert.colors.assign(colors.size(), -1);
    for (auto it = colors.begin(); it != colors.end(); ++it) {
        size_t idx = std::stoull(it.key());
        if (idx >= cert.colors.size())
            throw Error(ErrorCode::BadInput, "certificate color index out of range");
        cert.colors[idx] = it.value().get<int>();
    }
    for (int c : cert.colors)
        if (c < 0) throw Error(ErrorCode::BadInput, "certificate misses a representative");
    return cert;
}

json superbasis_to_json(const Superbasis& sb) {
    json j;
    j["vectors"] = qmat_to_json(sb.vectors);
    return j;
}

Superbasis superbasis_from_json(const json& j) {
    return check_obtuse_superbasis(qmat_from_json(j.at("vectors")));
}

json spectral_to_json(const SpectralResult& r) {
    json j;
    j["min_value"] = r.min_value;
    j["argmin"] = r.argmin;
    j["hoffman"] = r.hoffman;
    j["hoffman_int"] = r.hoffman_int;
    j["starts_used"] = r.starts_used;
    j["converged_count"] = r.converged_count;
    j["certified"] = r.certified;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

} // namespace latchroma
