#include "gef/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gef {

namespace {

template <class T>
T field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw InvalidInstance(std::string("missing field: ") + key);
    try {
        return doc.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw InvalidInstance(std::string("bad field ") + key + ": " + e.what());
    }
}

std::map<std::string, int> index_of(const std::vector<std::string>& names) {
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) idx.emplace(names[i], i);
    return idx;
}

}  // namespace

Instance parse_instance(const Json& doc) {
    auto agents = field<std::vector<std::string>>(doc, "agents");
    auto resources = field<std::vector<std::string>>(doc, "resources");
    auto utilities = field<std::vector<std::vector<Utility>>>(doc, "utilities");
    auto named_arcs = field<std::vector<std::vector<std::string>>>(doc, "arcs");
    const auto idx = index_of(agents);
    std::vector<Arc> arcs;
    for (const auto& a : named_arcs) {
        if (a.size() != 2) throw InvalidInstance("arc must have two endpoints");
        auto from = idx.find(a[0]), to = idx.find(a[1]);
        if (from == idx.end() || to == idx.end()) throw InvalidInstance("arc names unknown agent");
        arcs.emplace_back(from->second, to->second);
    }
    return make_instance(std::move(agents), std::move(resources), utilities, std::move(arcs));
}

Json instance_to_json(const Instance& inst, std::optional<Utility> threshold) {
    Json doc;
    doc["agents"] = inst.agents;
    doc["resources"] = inst.resources;
    Json rows = Json::array();
    for (int a = 0; a < inst.n(); ++a) rows.push_back(inst.row(a));
    doc["utilities"] = std::move(rows);
    Json arcs = Json::array();
    for (const auto& [a, b] : inst.arcs) arcs.push_back({inst.agents[a], inst.agents[b]});
    doc["arcs"] = std::move(arcs);
    if (threshold) doc["threshold"] = *threshold;
    return doc;
}

Allocation parse_allocation(const Json& doc, const Instance& inst) {
    if (!doc.is_object() || !doc.contains("assignment"))
        throw InvalidInstance("missing field: assignment");
    const auto agents = index_of(inst.agents);
    const auto resources = index_of(inst.resources);
    Allocation alloc(inst.m());
    std::vector<char> seen(inst.m(), 0);
    auto resource = [&](const std::string& name) {
        auto it = resources.find(name);
        if (it == resources.end()) throw InvalidInstance("unknown resource: " + name);
        if (seen[it->second]++) throw InvalidInstance("resource listed twice: " + name);
        return it->second;
    };
    const Json& assignment = doc.at("assignment");
    if (!assignment.is_object()) throw InvalidInstance("assignment must be an object");
    for (auto it = assignment.begin(); it != assignment.end(); ++it) {
        if (!it.value().is_string()) throw InvalidInstance("assignment values must be agent names");
        auto a = agents.find(it.value().get<std::string>());
        if (a == agents.end()) throw InvalidInstance("unknown agent: " + it.value().get<std::string>());
        alloc.owner[resource(it.key())] = a->second;
    }
    if (doc.contains("unassigned"))
        for (const auto& name : field<std::vector<std::string>>(doc, "unassigned")) resource(name);
    return alloc;
}

Json allocation_to_json(const Instance& inst, const Allocation& alloc) {
    Json assignment = Json::object();
    Json unassigned = Json::array();
    for (int r = 0; r < inst.m(); ++r) {
        if (alloc.owner[r] == kUnassigned) unassigned.push_back(inst.resources[r]);
        else assignment[inst.resources[r]] = inst.agents[alloc.owner[r]];
    }
    return {{"assignment", std::move(assignment)}, {"unassigned", std::move(unassigned)}};
}

Json result_to_json(const Instance& inst, const SolveResult& r) {
    Json doc;
    doc["verdict"] = r.verdict == Verdict::Feasible     ? "feasible"
                     : r.verdict == Verdict::Infeasible ? "infeasible"
                                                        : "budget";
    doc["allocation"] = r.feasible() ? allocation_to_json(inst, r.allocation) : Json(nullptr);
    doc["welfare"] = r.welfare;
    doc["algorithm"] = r.algorithm;
    doc["nodes"] = r.nodes;
    return doc;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInstance("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInstance(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInstance("cannot write " + path);
    out << text;
}

FairnessNotion parse_notion(const std::string& s) {
    if (s == "weak") return FairnessNotion::Weak;
    if (s == "strict") return FairnessNotion::Strict;
    throw InvalidInstance("unknown notion: " + s);
}

EfficiencyGoal parse_goal(const std::string& s) {
    if (s == "complete") return EfficiencyGoal::Complete;
    if (s == "pareto") return EfficiencyGoal::Pareto;
    if (s == "welfare") return EfficiencyGoal::MaxWelfare;
    throw InvalidInstance("unknown goal: " + s);
}

}  // namespace gef
