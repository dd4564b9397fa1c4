#pragma once

// JSON instance files.
//
// Three instance kinds share one envelope keyed by "type":
//   graph:      {"type":"graph", "n":N, "edges":[[u,v],...]}
//   hypergraph: {"type":"hypergraph", "k":K, "parts":[n1,...,nk],
//                "edges":[[o1,...,ok],...]}
//   ksum:       {"type":"ksum", "k":K, "bound":B, "values":[v1,...,vn]}
//
// Graph instances carry no k of their own: the problem (clique / dominating
// set) and its k are chosen at run time.  Ksum files fix k because the value
// list's zero-tuple count depends on it.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hycount/problems/graph.hpp"

namespace hycount {

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Instance {
    enum class Type { kGraph, kHypergraph, kKSum };

    Type type = Type::kGraph;

    // kGraph
    SimpleGraph graph;

    // kHypergraph
    std::vector<std::uint32_t> parts;
    std::vector<std::vector<std::uint32_t>> edges;
    std::uint32_t k = 0; // kHypergraph and kKSum

    // kKSum
    std::vector<long long> values;
    long long bound = 0;
};

// Parse / serialize.  load_instance throws InstanceError on malformed input
// (bad JSON, unknown type, out-of-range ordinals, wrong arity).
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Canonical serialization used by save_instance; exposed so determinism can
// be asserted without touching the filesystem.
std::string instance_to_json(const Instance& inst);

} // namespace hycount
