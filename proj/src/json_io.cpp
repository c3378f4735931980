#include "rhyper/json_io.hpp"

#include <stdexcept>

namespace rhyper {

json perm_to_json(const Perm& p) { return json(p.images()); }

Perm perm_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation must be an integer array");
    return Perm(j.get<std::vector<int>>());
}

json letter_to_json(const Letter& w) {
    json j;
    j["alpha"] = w.alpha;
    j["p"] = w.p;
    if (!w.is_plain()) j["l"] = w.l;
    return j;
}

Letter letter_from_json(const json& j) {
    int alpha = j.at("alpha").get<int>();
    int p = j.value("p", 0);
    if (j.contains("l")) return expanded_letter(alpha, j.at("l").get<int>(), p);
    return plain_letter(alpha, p);
}

json word_to_json(const CycWord& w) {
    json letters = json::array();
    for (const auto& x : w.letters) letters.push_back(letter_to_json(x));
    return json{{"letters", letters}};
}

CycWord word_from_json(const json& j) {
    std::vector<Letter> letters;
    const json& arr = j.is_array() ? j : j.at("letters");
    for (const auto& x : arr) letters.push_back(letter_from_json(x));
    auto canon = canonical_cyclic(letters);
    if (!canon) throw std::invalid_argument("word is zero in Cyc(W) (odd rotation symmetry)");
    return canon->first;
}

json wordsum_to_json(const WordSum& ws) {
    json out = json::array();
    for (const auto& [tuple, c] : ws.terms()) {
        json t = json::array();
        for (const auto& w : tuple) {
            json letters = json::array();
            for (const auto& x : w.letters) letters.push_back(letter_to_json(x));
            t.push_back(letters);
        }
        out.push_back(json{{"tuple", t}, {"coeff", c.str()}});
    }
    return out;
}

json term_to_json(const GraphTerm& g) {
    json j;
    j["edges"] = g.edges;
    j["sigma0"] = perm_to_json(g.sigma0);
    j["sigma1"] = perm_to_json(g.sigma1);
    if (g.isolated) j["isolated"] = g.isolated;
    json vl = json::object(), bl = json::object();
    for (const auto& [k, v] : g.vertex_labels) vl[std::to_string(k)] = v;
    for (const auto& [k, v] : g.boundary_labels) bl[std::to_string(k)] = v;
    j["vertex_labels"] = vl;
    j["boundary_labels"] = bl;
    j["d"] = g.d;
    j["orientation"] = g.orientation;
    j["coeff"] = g.coeff.str();
    return j;
}

GraphTerm term_from_json(const json& j) {
    GraphTerm g;
    g.edges = j.at("edges").get<int>();
    g.sigma0 = perm_from_json(j.at("sigma0"));
    g.sigma1 = perm_from_json(j.at("sigma1"));
    g.isolated = j.value("isolated", 0);
    for (const auto& [k, v] : j.at("vertex_labels").items())
        g.vertex_labels[std::stoi(k)] = v.get<int>();
    for (const auto& [k, v] : j.at("boundary_labels").items())
        g.boundary_labels[std::stoi(k)] = v.get<int>();
    g.d = j.at("d").get<int>();
    g.orientation = j.value("orientation", std::vector<int>{});
    if (g.orientation.empty() && g.edges > 0) {
        if (g.d % 2 != 0)
            for (int e = 0; e < g.edges; ++e) g.orientation.push_back(e);
        else
            for (const auto& c : g.sigma1.cycles()) g.orientation.push_back(c.front());
    }
    g.coeff = Rational::parse(j.value("coeff", std::string("1")));
    validate_term(g);
    return g;
}

json hsum_to_json(const HSum& h) {
    json out = json::array();
    for (const auto& [t, c] : h.terms()) {
        GraphTerm g = t;
        g.coeff = c;
        out.push_back(term_to_json(g));
    }
    return out;
}

HSum hsum_from_json(const json& j) {
    std::vector<GraphTerm> terms;
    if (j.is_array()) {
        for (const auto& t : j) terms.push_back(term_from_json(t));
    } else {
        terms.push_back(term_from_json(j));
    }
    return hsum_normalize(terms);
}

ThetaFamily family_from_json(const json& j, int N) {
    ThetaFamily base;
    json spec = j;
    std::vector<Rational> lambdas;
    if (j.is_object() && j.contains("name")) {
        spec = j.at("name");
        if (j.contains("lambdas"))
            for (const auto& s : j.at("lambdas")) lambdas.push_back(Rational::parse(s.get<std::string>()));
    }
    if (spec.is_string()) {
        std::string name = spec.get<std::string>();
        if (name == "darboux")
            base = darboux_family(N);
        else if (name == "graded")
            base = graded_family(N);
        else if (name == "zero")
            base = zero_family(1);
        else
            throw std::invalid_argument("unknown family name: " + name);
    } else if (spec.is_object()) {
        int d = spec.at("d").get<int>();
        std::vector<std::pair<std::vector<Letter>, Rational>> entries;
        for (const auto& e : spec.at("entries")) {
            std::vector<Letter> seq;
            for (const auto& x : e.at("letters")) seq.push_back(letter_from_json(x));
            entries.push_back({seq, Rational::parse(e.at("value").get<std::string>())});
        }
        base = custom_family(d, entries);
        if (spec.contains("lambdas"))
            for (const auto& s : spec.at("lambdas")) lambdas.push_back(Rational::parse(s.get<std::string>()));
    } else {
        throw std::invalid_argument("malformed family spec");
    }
    if (!lambdas.empty()) base = rescale(base, lambdas);
    return base;
}

json report_to_json(const Report& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(json{{"instance", f.instance}, {"residue", f.residue}});
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return json{{"suite", r.suite}, {"cases", r.cases}, {"failures", fails}, {"params", params},
                {"pass", r.pass()}};
}

std::string report_to_csv(const Report& r) {
    std::string out = "suite,cases,failures,pass\n";
    out += r.suite + "," + std::to_string(r.cases) + "," + std::to_string(r.failures.size()) +
           "," + (r.pass() ? "1" : "0") + "\n";
    return out;
}

}  // namespace rhyper
