#include "idlogic/io/structure_json.hpp"

#include <sstream>

#include "idlogic/error.hpp"

namespace idlogic {

using nlohmann::json;

namespace {

SyntaxError shape_error(const std::string& expected) { return SyntaxError({1, 1}, expected); }

bool is_scalar(const json& j) { return j.is_string() || j.is_number_integer() || j.is_number_unsigned(); }

std::string scalar_name(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
    throw shape_error("an element name (string or integer), found " + j.dump());
}

Element element(const Domain& d, const json& j) { return d.element(scalar_name(j)); }

std::size_t nesting_depth(const json& j) {
    std::size_t depth = 0;
    const json* cur = &j;
    while (cur->is_array() && !cur->empty()) {
        ++depth;
        cur = &cur->front();
    }
    return depth;
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> out;
    if (key.empty()) return out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
}

void fill_nested(const json& j, const Domain& d, std::size_t arity, std::vector<Element>& out,
                 const std::string& name) {
    if (arity == 0) {
        out.push_back(element(d, j));
        return;
    }
    if (!j.is_array() || j.size() != d.size())
        throw ArityMismatch("table of '" + name + "' must list one entry per element at every level");
    for (const json& item : j) fill_nested(item, d, arity - 1, out, name);
}

FunctionTable function_table(const std::string& name, const json& j, const Domain& d, const Vocabulary& vocab) {
    std::size_t arity = 0;
    if (const Symbol* s = vocab.find(name)) {
        if (!s->is_function()) throw ArityMismatch("'" + name + "' is declared as a predicate");
        arity = s->arity;
    } else if (j.is_array()) {
        arity = nesting_depth(j);
    } else if (j.is_object()) {
        if (j.empty()) throw shape_error("a non-empty table for '" + name + "'");
        arity = split_key(j.begin().key()).size();
    }

    const std::size_t n = d.size();
    std::vector<Element> values;
    if (is_scalar(j)) {
        if (arity != 0) throw ArityMismatch("'" + name + "' has arity " + std::to_string(arity) + " but got a constant");
        values.push_back(element(d, j));
    } else if (j.is_array()) {
        fill_nested(j, d, arity, values, name);
    } else if (j.is_object()) {
        std::vector<bool> seen(tuple_count(n, arity), false);
        values.assign(seen.size(), Element{0});
        for (const auto& [key, value] : j.items()) {
            std::vector<std::string> parts = split_key(key);
            if (parts.size() != arity)
                throw ArityMismatch("key '" + key + "' of '" + name + "' does not have " + std::to_string(arity) +
                                    " arguments");
            Tuple t;
            for (const std::string& p : parts) t.push_back(d.element(p));
            const std::size_t idx = tuple_index(t, n);
            seen[idx] = true;
            values[idx] = element(d, value);
        }
        for (bool s : seen)
            if (!s) throw ArityMismatch("table of '" + name + "' is not total");
    } else {
        throw shape_error("a function table for '" + name + "'");
    }
    return FunctionTable(n, arity, std::move(values));
}

Relation relation(const std::string& name, const json& j, const Domain& d, const Vocabulary& vocab) {
    if (!j.is_array()) throw shape_error("a list of tuples for '" + name + "'");
    std::optional<std::size_t> arity;
    if (const Symbol* s = vocab.find(name)) {
        if (!s->is_predicate()) throw ArityMismatch("'" + name + "' is declared as a function");
        arity = s->arity;
    } else if (!j.empty()) {
        arity = j.front().is_array() ? j.front().size() : 1;
    } else {
        throw ArityMismatch("cannot infer the arity of the empty relation '" + name + "'; declare it");
    }
    TupleSet tuples;
    for (const json& item : j) {
        Tuple t;
        if (item.is_array()) {
            for (const json& e : item) t.push_back(element(d, e));
        } else {
            t.push_back(element(d, item));
        }
        if (t.size() != *arity)
            throw ArityMismatch("tuple " + item.dump() + " of '" + name + "' does not have arity " +
                                std::to_string(*arity));
        tuples.push_back(std::move(t));
    }
    return Relation::from_tuples(d.size(), *arity, tuples);
}

}  // namespace

Structure structure_from_json(const json& doc, const Vocabulary& vocab) {
    if (!doc.is_object()) throw shape_error("a JSON object with a \"domain\" field");
    if (!doc.contains("domain") || !doc["domain"].is_array()) throw shape_error("a \"domain\" array");
    std::vector<std::string> names;
    for (const json& e : doc["domain"]) names.push_back(scalar_name(e));
    Structure s(std::make_shared<const Domain>(std::move(names)));
    const Domain& d = s.domain();

    if (doc.contains("functions")) {
        if (!doc["functions"].is_object()) throw shape_error("\"functions\" to be an object");
        for (const auto& [name, value] : doc["functions"].items())
            s = s.with_function(name, function_table(name, value, d, vocab));
    }
    if (doc.contains("relations")) {
        if (!doc["relations"].is_object()) throw shape_error("\"relations\" to be an object");
        for (const auto& [name, value] : doc["relations"].items())
            s = s.with_relation(name, relation(name, value, d, vocab));
    }
    for (const auto& [key, _] : doc.items())
        if (key != "domain" && key != "functions" && key != "relations")
            throw shape_error("only \"domain\", \"functions\" and \"relations\" fields, found \"" + key + "\"");
    return s;
}

Structure parse_structure(std::string_view text, const Vocabulary& vocab) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError({1, e.byte}, "valid JSON (" + std::string(e.what()) + ")");
    }
    return structure_from_json(doc, vocab);
}

json structure_to_json(const Structure& s) {
    const Domain& d = s.domain();
    json out;
    out["domain"] = d.names();
    json funcs = json::object();
    json rels = json::object();
    for (const Symbol& sym : s.vocab().symbols()) {
        if (sym.is_function()) {
            const FunctionTable& f = s.function(sym.name);
            if (sym.arity == 0) {
                funcs[sym.name] = d.name(f.at(0));
                continue;
            }
            json table = json::object();
            for (std::size_t i = 0; i < f.values().size(); ++i) {
                Tuple t = tuple_at(i, d.size(), sym.arity);
                std::string key;
                for (std::size_t k = 0; k < t.size(); ++k) key += (k ? "," : "") + d.name(t[k]);
                table[key] = d.name(f.at(i));
            }
            funcs[sym.name] = table;
        } else {
            json tuples = json::array();
            for (const Tuple& t : s.relation(sym.name).tuples()) {
                json row = json::array();
                for (Element e : t) row.push_back(d.name(e));
                tuples.push_back(row);
            }
            rels[sym.name] = tuples;
        }
    }
    out["functions"] = funcs;
    out["relations"] = rels;
    return out;
}

}  // namespace idlogic
