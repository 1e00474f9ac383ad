#pragma once

#include <json.hpp>

#include "latchroma/bounds.hpp"
#include "latchroma/first_kind.hpp"
#include "latchroma/graph.hpp"
#include "latchroma/spectral.hpp"

namespace latchroma {

using json = nlohmann::ordered_json;

// Lattice JSON: {"name": ..., "basis": [["p/q", ...]], "meta": {...}}
json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

// {"count": N, "vectors": [[int]], "norm2": ["p/q"]}
json relevant_to_json(const RelevantVectorSet& s);
RelevantVectorSet relevant_from_json(const json& j);

// {"labels": [...], "edges": [[i, j]]}
json graph_to_json(const FiniteGraph& g);
FiniteGraph graph_from_json(const json& j);

// DIMACS-like edge list ("p edge n m" header, "e i j" lines, 1-based).
std::string graph_to_dimacs(const FiniteGraph& g);

// {"sublattice": [[int]], "k": k, "colors": {"rep-index": color}}
json certificate_to_json(const QuotientColoring& cert);
QuotientColoring certificate_from_json(const json& j);

json superbasis_to_json(const Superbasis& sb);
Superbasis superbasis_from_json(const json& j);

json spectral_to_json(const SpectralResult& r);

QMat qmat_from_json(const json& j);
json qmat_to_json(const QMat& m);
IMat imat_from_json(const json& j);
json imat_to_json(const IMat& m);
json ivec_to_json(const IVec& v);

json load_json_file(const std::string& path);

} // namespace latchroma
