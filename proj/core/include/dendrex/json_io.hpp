#pragma once

#include "dendrex/drawing.hpp"
#include "dendrex/graphalg.hpp"
#include "dendrex/identities.hpp"
#include "dendrex/presheaf.hpp"

#include <nlohmann/json.hpp>

namespace dendrex {

using Json = nlohmann::json;

/// {"edge": name, "node": {"children": [...]}}; no "node" means a leaf and
/// empty children a stump. Readers throw ValidationError with a JSON path.
Json to_json(const Tree& t);
Tree tree_from_json(const Json& j);

/// {"source": tree, "target": tree, "edge_map": {source edge: target edge}}.
Json to_json(const TreeMorphism& m);
/// PreconditionError if the edge map is not an arrow.
TreeMorphism morphism_from_json(const Json& j);
/// Edge map of a morphism file between two given trees; the file may omit
/// "source" and "target".
TreeMorphism morphism_from_json(const Json& j, const Tree& source, const Tree& target);

Json to_json(const NormalForm& nf);
Json to_json(const StarPresentation& p);
/// {"source": origin, "target": origin, "label": ..., "images": {generator: [target generators]}}.
Json to_json(const StarHom& h);
Json to_json(const HomReport& r);

/// {"bound": B, "name": ..., "values": {code: [ids]}, "actions": [{"from":
/// code, "to": code, "map_kind": ..., "site": ..., "edge_map": {...},
/// "table": {id at "to": id at "from"}}]}.
Json to_json(const FinDendroidalSet& x);
/// Validated as a presheaf; ValidationError otherwise.
std::shared_ptr<const FinDendroidalSet> presheaf_from_json(const Json& j);

Json to_json(const Drawing& d);
Json to_json(const DrawingReport& r);

/// {"vertices": [...], "edges": [{"name": ..., "source": vertex, "range": vertex}]}.
Json to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const Json& j);
Json to_json(const CKPresentation& p);
/// {"dimension": n, "matrices": {name: rows of [numerator, denominator]}}.
Json to_json(const MatrixAssignment& m);
Json to_json(const MatrixReport& r);

Json to_json(const IdentityReport& r);

}  // namespace dendrex
