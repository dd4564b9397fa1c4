#include "hycount/instance_io.hpp"

#include <fstream>
#include <json.hpp>

namespace hycount {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw InstanceError(what); }

std::uint32_t get_u32(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        fail(std::string("instance field '") + key + "' missing or not a nonnegative integer");
    }
    const std::uint64_t v = j[key].get<std::uint64_t>();
    if (v > 0xffffffffull) fail(std::string("instance field '") + key + "' too large");
    return static_cast<std::uint32_t>(v);
}

Instance parse_graph(const ordered_json& j) {
    Instance inst;
    inst.type = Instance::Type::kGraph;
    const std::uint32_t n = get_u32(j, "n");
    inst.graph = SimpleGraph(n);
    if (!j.contains("edges") || !j["edges"].is_array()) fail("graph instance needs an edge list");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) fail("graph edge must be a pair [u, v]");
        const std::uint64_t u = e[0].get<std::uint64_t>();
        const std::uint64_t v = e[1].get<std::uint64_t>();
        if (u >= n || v >= n || u == v) fail("graph edge endpoint out of range or a self-loop");
        inst.graph.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    return inst;
}

Instance parse_hypergraph(const ordered_json& j) {
    Instance inst;
    inst.type = Instance::Type::kHypergraph;
    inst.k = get_u32(j, "k");
    if (inst.k == 0) fail("hypergraph instance needs k >= 1");
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].size() != inst.k) {
        fail("hypergraph 'parts' must list one class size per class");
    }
    for (const auto& p : j["parts"]) {
        if (!p.is_number_unsigned()) fail("hypergraph class size must be a nonnegative integer");
        inst.parts.push_back(static_cast<std::uint32_t>(p.get<std::uint64_t>()));
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        fail("hypergraph instance needs an edge list");
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != inst.k) fail("hyperedge must list one ordinal per class");
        std::vector<std::uint32_t> edge(inst.k);
        for (std::uint32_t c = 0; c < inst.k; ++c) {
            const std::uint64_t o = e[c].get<std::uint64_t>();
            if (o >= inst.parts[c]) fail("hyperedge ordinal out of range");
            edge[c] = static_cast<std::uint32_t>(o);
        }
        inst.edges.push_back(std::move(edge));
    }
    return inst;
}

Instance parse_ksum(const ordered_json& j) {
    Instance inst;
    inst.type = Instance::Type::kKSum;
    inst.k = get_u32(j, "k");
    if (inst.k == 0) fail("ksum instance needs k >= 1");
    if (!j.contains("bound") || !j["bound"].is_number_integer()) {
        fail("ksum instance needs an integer 'bound'");
    }
    inst.bound = j["bound"].get<long long>();
    if (inst.bound < 0) fail("ksum bound must be nonnegative");
    if (!j.contains("values") || !j["values"].is_array()) fail("ksum instance needs 'values'");
    for (const auto& v : j["values"]) {
        if (!v.is_number_integer()) fail("ksum values must be integers");
        const long long x = v.get<long long>();
        if (x > inst.bound || x < -inst.bound) fail("ksum value outside [-bound, bound]");
        inst.values.push_back(x);
    }
    return inst;
}

} // namespace

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open instance file: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("instance is not valid JSON: ") + e.what());
    }
    try {
        if (!j.contains("type") || !j["type"].is_string()) fail("instance needs a 'type' field");
        const std::string type = j["type"].get<std::string>();
        if (type == "graph") return parse_graph(j);
        if (type == "hypergraph") return parse_hypergraph(j);
        if (type == "ksum") return parse_ksum(j);
        fail("unknown instance type: " + type);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("malformed instance: ") + e.what());
    }
}

std::string instance_to_json(const Instance& inst) {
    ordered_json j;
    switch (inst.type) {
        case Instance::Type::kGraph: {
            j["type"] = "graph";
            j["n"] = inst.graph.n();
            auto edges = ordered_json::array();
            for (const auto& [u, v] : inst.graph.edges()) edges.push_back({u, v});
            j["edges"] = std::move(edges);
            break;
        }
        case Instance::Type::kHypergraph: {
            j["type"] = "hypergraph";
            j["k"] = inst.k;
            j["parts"] = inst.parts;
            auto edges = ordered_json::array();
            for (const auto& e : inst.edges) edges.push_back(e);
            j["edges"] = std::move(edges);
            break;
        }
        case Instance::Type::kKSum: {
            j["type"] = "ksum";
            j["k"] = inst.k;
            j["bound"] = inst.bound;
            j["values"] = inst.values;
            break;
        }
    }
    return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write instance file: " + path);
    out << instance_to_json(inst);
    if (!out) fail("write failed: " + path);
}

} // namespace hycount
