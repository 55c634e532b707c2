#include "rekit/automaton_io.hpp"

#include "rekit/error.hpp"

#include <sstream>

namespace rekit {

nlohmann::json toJson(const Nfa &a) {
    nlohmann::json doc;
    doc["states"] = a.numStates();
    auto &alphabet = doc["alphabet"] = nlohmann::json::array();
    for (Symbol s : a.alphabet())
        alphabet.push_back(symbolName(s));
    doc["initials"] = a.initials();
    doc["finals"] = a.finals();
    auto &transitions = doc["transitions"] = nlohmann::json::array();
    for (const Transition &t : a.transitions())
        transitions.push_back({t.from, symbolName(a.symbolOf(t.label)), t.to});
    return doc;
}

Nfa nfaFromJson(const nlohmann::json &doc) {
    try {
        Alphabet alphabet;
        for (const auto &name : doc.at("alphabet"))
            alphabet.push_back(symbolFromName(name.get<std::string>()));
        NfaBuilder b(alphabet, doc.at("states").get<std::size_t>());
        for (const auto &q : doc.at("initials"))
            b.addInitial(q.get<State>());
        for (const auto &q : doc.at("finals"))
            b.addFinal(q.get<State>());
        for (const auto &t : doc.at("transitions")) {
            if (!t.is_array() || t.size() != 3)
                throw Error("transition must be a [from, symbol, to] triple");
            b.addTransition(t[0].get<State>(), symbolFromName(t[1].get<std::string>()), t[2].get<State>());
        }
        return std::move(b).build();
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("malformed automaton JSON: ") + e.what());
    }
}

std::string toDot(const Nfa &a, const std::string &name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n";
    for (State q = 0; q < a.numStates(); ++q)
        out << "  " << q << " [shape=" << (a.isFinal(q) ? "doublecircle" : "circle") << "];\n";
    for (State q : a.initials())
        out << "  init" << q << " [shape=point];\n  init" << q << " -> " << q << ";\n";
    for (const Transition &t : a.transitions())
        out << "  " << t.from << " -> " << t.to << " [label=\"" << symbolName(a.symbolOf(t.label)) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace rekit
