#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxsds/coxeter.hpp"
#include "coxsds/dynamics_group.hpp"
#include "coxsds/field.hpp"
#include "coxsds/graph.hpp"
#include "coxsds/orientation.hpp"
#include "coxsds/sds.hpp"

namespace coxsds::io {

// Text formats. Every parser throws InvalidInput on malformed documents.
// Vertices and states are 1-based / tuple-formatted in every document.

/// {"n": 4, "edges": [[1,2],...], "labels": [[1,2,5],[2,3,"inf"]],
///  "names": ["a","b",...]}; "labels" and "names" are optional.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);

/// {"graph": <graph>, "rules": {"all": "eca:60"}} or
/// {"graph": <graph>, "rules": {"per_vertex": ["nor","parity",...]}}.
SdsSpec sds_spec_from_json(std::string_view text);

/// Eight "p/q" strings over {1, √2, √3, √5, √6, √10, √15, √30}.
std::string field_scalar_to_json(const FieldScalar& x);
FieldScalar field_scalar_from_json(std::string_view text);

/// {"arcs": [[1,2],...], "linear_extension": "1324"}.
std::string orientation_to_json(const Graph& g, Orientation o);
/// Array of classes, each an array of orientation documents.
std::string partition_to_json(const Graph& g,
                              const OrientationPartition& partition);
std::string orientation_to_dot(const Graph& g, Orientation o);

/// {"n": 4, "edges": [["(0,0,0,0)","(1,0,1,0)"], ...]} in state order.
std::string phase_space_to_json(const PhaseSpace& ps);
PhaseSpace phase_space_from_json(std::string_view text);
std::string phase_space_to_dot(const PhaseSpace& ps);

/// {"n": 4, "edges": [["(0,0,0,0)","(1,0,0,0)",1], ...]}, label 1-based.
std::string state_automaton_to_json(const StateAutomaton& aut);
StateAutomaton state_automaton_from_json(std::string_view text);
std::string state_automaton_to_dot(const StateAutomaton& aut);

/// {"rank": n, "roots": [{"coords": [<scalar>,...], "positive": bool}],
///  "edges": [[from,to,generator],...], "hasse": [[lower,upper],...]},
/// root indices 0-based into "roots", generators 1-based.
std::string root_automaton_to_json(const RootAutomaton& aut);
RootAutomaton root_automaton_from_json(std::string_view text);
/// Positive roots drawn as boxes, negative roots as ellipses, each side in
/// its own cluster.
std::string root_automaton_to_dot(const CoxeterSystem& sys,
                                  const RootAutomaton& aut);

/// {"k": 60, "n": 5, "pi_independent": true, "per_size": 32}.
std::string eca_classification_to_json(const EcaClassification& c);

/// Dynamics-group report; `k` is -1 for specs that are not a single ECA rule
/// and is then omitted.
std::string dynamics_report_to_json(int k, const RestrictedDynamics& dyn,
                                    const GroupFingerprint& fp,
                                    const QuotientPresentation& q);

}  // namespace coxsds::io
