#include "convkit/io.hpp"

#include <json.hpp>

#include <map>

namespace convkit {

using nlohmann::json;

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

json parse_doc(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("", "not valid JSON");
    return j;
}

}  // namespace

std::string emit_space(const ConvSpace& s, const std::vector<std::string>& labels) {
    std::vector<std::string> lab = labels.empty() ? default_labels(s.size()) : labels;
    if (static_cast<int>(lab.size()) != s.size())
        throw std::invalid_argument("label count must match the carrier");
    json v = json::object();
    for (int x = 0; x < s.size(); ++x) {
        json row = json::array();
        for (int y : s.V(x).points()) row.push_back(lab[y]);
        v[lab[x]] = row;
    }
    json j{{"points", lab}, {"V", v}};
    return j.dump(2) + "\n";
}

ConvSpace parse_space(const std::string& text, std::vector<std::string>* labels) {
    json j = parse_doc(text);
    if (!j.is_object() || !j.contains("points") || !j.contains("V"))
        throw ParseError("", "expected an object with 'points' and 'V'");
    if (!j["points"].is_array()) throw ParseError("points", "expected a label array");
    std::vector<std::string> lab;
    std::map<std::string, int> id;
    for (const auto& p : j["points"]) {
        if (!p.is_string()) throw ParseError("points", "labels must be strings");
        std::string name = p.get<std::string>();
        if (id.count(name)) throw ParseError("points", "duplicate label '" + name + "'");
        id[name] = static_cast<int>(lab.size());
        lab.push_back(name);
    }
    int n = static_cast<int>(lab.size());
    if (n == 0 || n > PointSet::kMaxCarrier) throw ParseError("points", "carrier size out of range");
    if (!j["V"].is_object()) throw ParseError("V", "expected a label->labels map");
    std::vector<PointSet> v(n, PointSet::empty(n));
    for (int x = 0; x < n; ++x) {
        if (!j["V"].contains(lab[x])) throw ParseError("V." + lab[x], "missing entry");
        const json& row = j["V"][lab[x]];
        if (!row.is_array()) throw ParseError("V." + lab[x], "expected a label array");
        for (const auto& e : row) {
            if (!e.is_string() || !id.count(e.get<std::string>()))
                throw ParseError("V." + lab[x], "unknown label");
            v[x].add(id[e.get<std::string>()]);
        }
        if (!v[x].contains(x)) throw ParseError("V." + lab[x], "x must belong to V[x]");
    }
    for (const auto& [key, _] : j["V"].items())
        if (!id.count(key)) throw ParseError("V." + key, "unknown label");
    if (labels) *labels = lab;
    return ConvSpace(n, std::move(v));
}

std::string emit_net(const Net& n) {
    json le = json::array();
    for (int i = 0; i < n.index.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < n.index.size(); ++j) row.push_back(n.index.le(i, j));
        le.push_back(row);
    }
    json j{{"carrier_size", n.carrier_size}, {"index_le", le}, {"values", n.values}};
    return j.dump(2) + "\n";
}

Net parse_net(const std::string& text) {
    json j = parse_doc(text);
    if (!j.is_object() || !j.contains("carrier_size") || !j.contains("index_le") ||
        !j.contains("values"))
        throw ParseError("", "expected 'carrier_size', 'index_le' and 'values'");
    if (!j["carrier_size"].is_number_integer()) throw ParseError("carrier_size", "expected an integer");
    int carrier = j["carrier_size"].get<int>();
    if (!j["index_le"].is_array()) throw ParseError("index_le", "expected a matrix");
    std::vector<std::vector<bool>> le;
    for (const auto& row : j["index_le"]) {
        if (!row.is_array()) throw ParseError("index_le", "expected a matrix");
        std::vector<bool> r;
        for (const auto& e : row) {
            if (!e.is_boolean()) throw ParseError("index_le", "entries must be booleans");
            r.push_back(e.get<bool>());
        }
        le.push_back(std::move(r));
    }
    if (!j["values"].is_array()) throw ParseError("values", "expected an integer array");
    std::vector<int> vals;
    for (const auto& e : j["values"]) {
        if (!e.is_number_integer()) throw ParseError("values", "entries must be integers");
        vals.push_back(e.get<int>());
    }
    try {
        return Net(DirectedIndex(le), std::move(vals), carrier);
    } catch (const std::exception& e) {
        throw ParseError("", e.what());
    }
}

namespace {

const std::map<std::string, CarrierTag> kCarrierNames{
    {"QVec", CarrierTag::QVec},
    {"LexR2", CarrierTag::LexR2},
    {"FinSeqC0", CarrierTag::FinSeqC0},
    {"FinSeqLinf", CarrierTag::FinSeqLinf},
    {"StepFn", CarrierTag::StepFn},
};

std::string carrier_name(CarrierTag c) {
    for (const auto& [name, tag] : kCarrierNames)
        if (tag == c) return name;
    return "?";
}

json vec_json(const QVec& v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(rat_str(r));
    return out;
}

QVec vec_parse(const json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError(field, "expected an array of rationals");
    QVec v;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(field, "rationals are 'p/q' strings");
        try {
            v.push_back(parse_rat(e.get<std::string>()));
        } catch (const std::exception& ex) {
            throw ParseError(field, ex.what());
        }
    }
    return v;
}

json term_json(const TermPtr& t) {
    json j;
    j["carrier"] = carrier_name(t->carrier);
    switch (t->kind) {
        case SeqTerm::Kind::Const:
            j["kind"] = "Const";
            j["v"] = vec_json(t->v);
            break;
        case SeqTerm::Kind::Geom:
            j["kind"] = "Geom";
            j["v"] = vec_json(t->v);
            j["r"] = rat_str(t->r);
            break;
        case SeqTerm::Kind::Harmonic:
            j["kind"] = "Harmonic";
            j["v"] = vec_json(t->v);
            break;
        case SeqTerm::Kind::Sum: {
            j["kind"] = "Sum";
            json kids = json::array();
            for (const auto& ch : t->children) kids.push_back(term_json(ch));
            j["terms"] = kids;
            break;
        }
        case SeqTerm::Kind::Shift:
            j["kind"] = "Shift";
            j["k0"] = t->k0;
            j["term"] = term_json(t->children[0]);
            break;
        case SeqTerm::Kind::Braid: {
            j["kind"] = "Braid";
            j["period"] = t->period;
            j["selector"] = t->selector;
            json kids = json::array();
            for (const auto& ch : t->children) kids.push_back(term_json(ch));
            j["terms"] = kids;
            break;
        }
        case SeqTerm::Kind::UnitVectors:
            j["kind"] = "UnitVectors";
            break;
        case SeqTerm::Kind::Typewriter:
            j["kind"] = "Typewriter";
            break;
    }
    return j;
}

TermPtr term_parse(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("carrier"))
        throw ParseError(field, "expected a term object with 'kind' and 'carrier'");
    std::string kind = j["kind"].get<std::string>();
    auto cit = kCarrierNames.find(j["carrier"].get<std::string>());
    if (cit == kCarrierNames.end()) throw ParseError(field + ".carrier", "unknown carrier");
    CarrierTag c = cit->second;
    try {
        if (kind == "Const") return t_const(c, vec_parse(j.at("v"), field + ".v"));
        if (kind == "Geom")
            return t_geom(c, vec_parse(j.at("v"), field + ".v"),
                          parse_rat(j.at("r").get<std::string>()));
        if (kind == "Harmonic") return t_harmonic(c, vec_parse(j.at("v"), field + ".v"));
        if (kind == "Sum") {
            std::vector<TermPtr> kids;
            int i = 0;
            for (const auto& ch : j.at("terms"))
                kids.push_back(term_parse(ch, field + ".terms[" + std::to_string(i++) + "]"));
            return t_sum(std::move(kids));
        }
        if (kind == "Shift")
            return t_shift(term_parse(j.at("term"), field + ".term"), j.at("k0").get<long>());
        if (kind == "Braid") {
            std::vector<TermPtr> kids;
            int i = 0;
            for (const auto& ch : j.at("terms"))
                kids.push_back(term_parse(ch, field + ".terms[" + std::to_string(i++) + "]"));
            return t_braid(j.at("period").get<int>(),
                           j.at("selector").get<std::vector<int>>(), std::move(kids));
        }
        if (kind == "UnitVectors")
            return t_unit_vectors(c == CarrierTag::FinSeqC0 ? Ambient::c0 : Ambient::linf);
        if (kind == "Typewriter") return t_typewriter();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(field, e.what());
    }
    throw ParseError(field + ".kind", "unknown term kind '" + kind + "'");
}

}  // namespace

std::string emit_term(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    return term_json(t).dump(2) + "\n";
}

TermPtr parse_term(const std::string& text) { return term_parse(parse_doc(text), "term"); }

}  // namespace convkit
