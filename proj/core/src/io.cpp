#include "dimapf/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dimapf {

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(int lineno, const std::string &msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

Instance parse_instance(std::istream &in) {
    Instance inst;
    std::map<std::string, int> agent_index;
    std::map<int, std::string> init_at, goal_at; // agent -> node label
    auto agent_id = [&](const std::string &name) {
        auto it = agent_index.find(name);
        if (it != agent_index.end())
            return it->second;
        int id = static_cast<int>(inst.agent_names.size());
        inst.agent_names.push_back(name);
        agent_index[name] = id;
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty())
            continue;
        const std::string &kw = tok[0];
        if (kw == "node" && tok.size() == 2) {
            inst.graph.add_node(tok[1]);
        } else if (kw == "arc" && tok.size() == 3) {
            inst.graph.add_arc(tok[1], tok[2]);
        } else if (kw == "edge" && tok.size() == 3) {
            inst.graph.add_arc(tok[1], tok[2]);
            inst.graph.add_arc(tok[2], tok[1]);
        } else if (kw == "agent" && tok.size() == 2) {
            agent_id(tok[1]);
        } else if ((kw == "init" || kw == "goal") && tok.size() == 3) {
            auto &table = kw == "init" ? init_at : goal_at;
            if (!table.emplace(agent_id(tok[1]), tok[2]).second)
                fail(lineno, "duplicate " + kw + " for agent " + tok[1]);
        } else if (kw == "regime" && tok.size() == 2) {
            if (tok[1] == "simple")
                inst.regime = Regime::Simple;
            else if (tok[1] == "rotation")
                inst.regime = Regime::Rotation;
            else if (tok[1] == "both")
                inst.regime = Regime::Both;
            else
                fail(lineno, "unknown regime '" + tok[1] + "'");
        } else if (kw == "rot2" && tok.size() == 2) {
            if (tok[1] == "allow")
                inst.rot2 = Rot2::Allow;
            else if (tok[1] == "forbid")
                inst.rot2 = Rot2::Forbid;
            else
                fail(lineno, "unknown rot2 policy '" + tok[1] + "'");
        } else {
            fail(lineno, "unrecognized directive '" + kw + "'");
        }
    }

    int k = static_cast<int>(inst.agent_names.size());
    std::vector<int> init_pos(k), goal_pos(k);
    for (int a = 0; a < k; ++a) {
        auto ii = init_at.find(a), gi = goal_at.find(a);
        if (ii == init_at.end() || gi == goal_at.end())
            throw ParseError("agent " + inst.agent_names[a] +
                             " needs both an init and a goal node");
        init_pos[a] = inst.graph.require_node(ii->second);
        goal_pos[a] = inst.graph.require_node(gi->second);
    }
    try {
        inst.init = MapfState(inst.graph.n(), std::move(init_pos));
        inst.goal = MapfState(inst.graph.n(), std::move(goal_pos));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    return inst;
}

Instance parse_instance_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_instance(in);
}

std::string render_instance(const Instance &inst) {
    std::ostringstream out;
    for (int v = 0; v < inst.graph.n(); ++v)
        out << "node " << inst.graph.label(v) << "\n";
    for (auto [u, v] : inst.graph.arcs())
        out << "arc " << inst.graph.label(u) << " " << inst.graph.label(v) << "\n";
    out << "regime "
        << (inst.regime == Regime::Simple
                ? "simple"
                : inst.regime == Regime::Rotation ? "rotation" : "both")
        << "\n";
    out << "rot2 " << (inst.rot2 == Rot2::Allow ? "allow" : "forbid") << "\n";
    for (size_t a = 0; a < inst.agent_names.size(); ++a) {
        out << "agent " << inst.agent_names[a] << "\n";
        out << "init " << inst.agent_names[a] << " "
            << inst.graph.label(inst.init.pos(static_cast<int>(a))) << "\n";
        out << "goal " << inst.agent_names[a] << " "
            << inst.graph.label(inst.goal.pos(static_cast<int>(a))) << "\n";
    }
    return out.str();
}

Plan parse_plan(std::istream &in, const Instance &inst) {
    std::map<std::string, int> agent_index;
    for (size_t a = 0; a < inst.agent_names.size(); ++a)
        agent_index[inst.agent_names[a]] = static_cast<int>(a);
    Plan plan;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty())
            continue;
        if (tok[0] == "move" && tok.size() == 4) {
            auto it = agent_index.find(tok[1]);
            if (it == agent_index.end())
                fail(lineno, "unknown agent '" + tok[1] + "'");
            plan.push_back(Move{it->second, inst.graph.require_node(tok[2]),
                                inst.graph.require_node(tok[3])});
        } else if (tok[0] == "rot" && tok.size() >= 3) {
            std::vector<int> cyc;
            for (size_t i = 1; i < tok.size(); ++i)
                cyc.push_back(inst.graph.require_node(tok[i]));
            plan.push_back(Rotation{canonical_cycle(std::move(cyc))});
        } else {
            fail(lineno, "unrecognized plan step '" + tok[0] + "'");
        }
    }
    return plan;
}

Plan parse_plan_file(const std::string &path, const Instance &inst) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_plan(in, inst);
}

std::string render_plan(const Plan &plan, const Instance &inst) {
    std::ostringstream out;
    for (const Step &s : plan) {
        if (const Move *m = std::get_if<Move>(&s)) {
            out << "move " << inst.agent_names.at(m->agent) << " "
                << inst.graph.label(m->from) << " " << inst.graph.label(m->to) << "\n";
        } else {
            out << "rot";
            for (int v : std::get<Rotation>(s).cycle)
                out << " " << inst.graph.label(v);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace dimapf
