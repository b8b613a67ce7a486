// Command-line front end: evaluate, check and transform ID-logic theories over
// finite structures. Exit codes: 0 success/total, 1 parse or input error,
// 2 semantic error, 3 not total / unsatisfied / no model, 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idlogic/checker/checker.hpp"
#include "idlogic/engine/engine.hpp"
#include "idlogic/error.hpp"
#include "idlogic/io/structure_json.hpp"
#include "idlogic/syntax/analysis.hpp"
#include "idlogic/syntax/parser.hpp"
#include "idlogic/syntax/printer.hpp"
#include "idlogic/transform/transform.hpp"

using namespace idlogic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitNegative = 3;
constexpr int kExitBudget = 4;

constexpr const char* kSchema = "idlogic/v1";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budgets {
    std::uint64_t enumeration = kDefaultEnumerationBudget;
    std::size_t atoms = kDefaultAtomBudget;
};

Budgets budgets_from_env() {
    Budgets b;
    if (const char* v = std::getenv("IDLOGIC_BUDGET")) {
        try {
            const unsigned long long n = std::stoull(v);
            b.enumeration = n;
            b.atoms = static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw InputError(std::string("IDLOGIC_BUDGET must be a number, got '") + v + "'");
        }
    }
    return b;
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Structure load_structure(const std::string& path, const Theory& th) {
    if (path.empty()) return Structure(std::make_shared<const Domain>(std::vector<std::string>{"o"}));
    return parse_structure(read_source(path), th.vocab);
}

std::vector<Definition> top_level_definitions(const Theory& th) {
    std::vector<Definition> out;
    for (const Formula& f : th.axioms)
        if (auto d = f.as<DefNode>()) out.push_back(*d->definition);
    return out;
}

Definition pick_definition(const Theory& th, std::size_t index) {
    std::vector<Definition> defs = top_level_definitions(th);
    if (defs.empty()) throw VocabularyError("the theory contains no top-level definition");
    if (index == 0 || index > defs.size())
        throw VocabularyError("definition " + std::to_string(index) + " does not exist (the theory has " +
                              std::to_string(defs.size()) + ")");
    return defs[index - 1];
}

std::string tuple_text(const Tuple& t, const Domain& d) {
    if (t.size() == 1) return d.name(t[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + d.name(t[i]);
    return out + ")";
}

std::string atom_text(const std::string& pred, const Tuple& t, const Domain& d) {
    if (t.empty()) return pred;
    std::string out = pred + "[";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + d.name(t[i]);
    return out + "]";
}

json relation_json(const Relation& r, const Domain& d) {
    json rows = json::array();
    for (const Tuple& t : r.tuples()) {
        json row = json::array();
        for (Element e : t) row.push_back(d.name(e));
        rows.push_back(row);
    }
    return rows;
}

json atoms_json(const Structure& s, const std::vector<std::string>& preds) {
    json out = json::object();
    for (const std::string& p : preds) out[p] = relation_json(s.relation(p), s.domain());
    return out;
}

std::string atoms_text(const Structure& s, const std::vector<std::string>& preds) {
    Vocabulary v;
    for (const std::string& p : preds) v.add(s.vocab().at(p));
    return restrict(s, v).atoms_string();
}

// wfm -------------------------------------------------------------------------------

int cmd_wfm(const Theory& th, const Structure& s, std::size_t index, bool trace, bool as_json,
            const Budgets& budgets) {
    Definition def = pick_definition(th, index);
    std::vector<std::string> defined = defined_symbols(def);
    EngineOptions opts;
    opts.atom_budget = budgets.atoms;
    opts.enumeration_budget = budgets.enumeration;
    WfPair p = well_founded_pair(def, s.without(defined), trace, opts);
    const Domain& d = s.domain();

    std::vector<std::string> undefined;
    std::string summary = std::string("total: ") + (p.total ? "yes" : "no");
    for (const std::string& pred : defined) {
        const Relation& lb = p.lb.relation(pred);
        const Relation& ub = p.ub.relation(pred);
        if (lb.arity() == 0) {
            if (lb == ub) summary += "; " + pred + (lb.test(0) ? "=true" : "=false");
        } else {
            std::string set;
            for (const Tuple& t : lb.tuples()) set += (set.empty() ? "" : ",") + tuple_text(t, d);
            summary += "; " + pred + "={" + set + "}";
        }
        for (std::size_t k = 0; k < lb.capacity(); ++k)
            if (lb.test(k) != ub.test(k))
                undefined.push_back(atom_text(pred, tuple_at(k, d.size(), lb.arity()), d));
    }
    for (const std::string& a : undefined) summary += "; " + a + ": undefined";

    if (as_json) {
        json out{{"schema", kSchema}, {"command", "wfm"}, {"total", p.total},
                 {"lb", atoms_json(p.lb, defined)}, {"ub", atoms_json(p.ub, defined)}, {"undefined", undefined}};
        if (trace) {
            json stages = json::array();
            for (std::size_t k = 0; k < p.trace.size(); ++k)
                stages.push_back({{"stage", k},
                                  {"I", atoms_json(p.trace[k].first, defined)},
                                  {"J", atoms_json(p.trace[k].second, defined)}});
            out["trace"] = stages;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (trace) std::cout << trace_string(p);
        std::cout << summary << "\n";
    }
    return p.total ? kExitOk : kExitNegative;
}

// check -----------------------------------------------------------------------------

int cmd_check(const Theory& th, const Structure& s, bool as_json, const Budgets& budgets) {
    Checker checker(CheckerOptions{budgets.enumeration});
    std::vector<bool> verdicts;
    for (const Formula& f : th.axioms) verdicts.push_back(checker.satisfies(s, f));
    const bool all = std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
    if (as_json) {
        std::cout << json{{"schema", kSchema}, {"command", "check"}, {"satisfied", all}, {"axioms", verdicts}}.dump(2)
                  << "\n";
    } else {
        for (std::size_t i = 0; i < verdicts.size(); ++i)
            std::cout << "axiom " << i + 1 << ": " << (verdicts[i] ? "true" : "false") << "\n";
        std::cout << "satisfied: " << (all ? "yes" : "no") << "\n";
    }
    return all ? kExitOk : kExitNegative;
}

// models ----------------------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

int cmd_models(const Theory& th, const Structure& s, const std::string& free_spec, std::size_t max, bool as_json,
               const Budgets& budgets) {
    std::set<std::string> free;
    if (free_spec.empty()) {
        for (const Symbol& p : th.vocab.predicates())
            if (!s.interprets(p.name)) free.insert(p.name);
    } else {
        for (const std::string& p : split(free_spec, ',')) free.insert(p);
    }
    const std::vector<std::string> shown(free.begin(), free.end());
    ModelStream stream(th, s, free, CheckerOptions{budgets.enumeration});
    json models = json::array();
    std::size_t count = 0;
    while (max == 0 || count < max) {
        auto m = stream.next();
        if (!m) break;
        ++count;
        if (as_json)
            models.push_back(atoms_json(*m, shown));
        else
            std::cout << "model " << count << ": " << atoms_text(*m, shown) << "\n";
    }
    if (as_json)
        std::cout << json{{"schema", kSchema}, {"command", "models"}, {"count", count}, {"models", models}}.dump(2)
                  << "\n";
    else
        std::cout << "models: " << count << "\n";
    return count > 0 ? kExitOk : kExitNegative;
}

// transform -------------------------------------------------------------------------

Formula rewrite_definitions(const Formula& f, const std::function<Formula(const Definition&)>& op) {
    if (auto d = f.as<DefNode>()) return op(*d->definition);
    if (auto n = f.as<NotNode>()) return negate(rewrite_definitions(n->sub, op));
    if (auto b = f.as<BinaryNode>())
        return binary(b->op, rewrite_definitions(b->lhs, op), rewrite_definitions(b->rhs, op));
    if (auto q = f.as<QuantNode>())
        return quantify(q->quantifier, q->kind, q->name, q->arity, rewrite_definitions(q->body, op));
    return f;
}

void flatten_conjunction(const Formula& f, std::vector<Formula>& out) {
    if (auto b = f.as<BinaryNode>(); b && b->op == Connective::And) {
        flatten_conjunction(b->lhs, out);
        flatten_conjunction(b->rhs, out);
        return;
    }
    out.push_back(f);
}

int cmd_transform(const Theory& th, const std::string& op_name, bool as_json) {
    std::function<Formula(const Definition&)> op;
    if (op_name == "complete")
        op = completion;
    else if (op_name == "posind")
        op = pos_ind;
    else if (op_name == "circ")
        op = circumscription;
    else
        throw InputError("unknown transformation '" + op_name + "' (expected complete, posind or circ)");

    Theory out;
    out.vocab = th.vocab;
    for (const Formula& f : th.axioms) {
        Formula g = rewrite_definitions(f, op);
        if (f.as<DefNode>())
            flatten_conjunction(g, out.axioms);
        else
            out.axioms.push_back(g);
    }
    const std::string text = to_string(out);
    if (as_json)
        std::cout << json{{"schema", kSchema}, {"command", "transform"}, {"op", op_name}, {"theory", text}}.dump(2)
                  << "\n";
    else
        std::cout << text;
    return kExitOk;
}

// partition -------------------------------------------------------------------------

json report_json(const CertificateReport& r) {
    return {{"status", to_string(r.status)}, {"witness", r.witness}, {"reason", r.reason}};
}

std::string report_text(const CertificateReport& r) {
    std::string out = to_string(r.status);
    if (r.status == Certificate::Unknown) {
        std::string w;
        for (const std::string& a : r.witness) w += (w.empty() ? "" : ", ") + a;
        out += " (witness: " + w + "; " + r.reason + ")";
    }
    return out;
}

int cmd_partition(const Theory& th, const Structure& s, std::size_t index, const std::vector<std::string>& groups,
                  bool as_json, const Budgets& budgets) {
    Definition def = pick_definition(th, index);
    std::map<std::string, std::size_t> grouping;
    std::vector<std::string> parts_spec;
    for (const std::string& g : groups)
        for (std::string& part : split(g, ';')) parts_spec.push_back(std::move(part));
    for (std::size_t i = 0; i < parts_spec.size(); ++i)
        for (const std::string& p : split(parts_spec[i], ',')) grouping[p] = i;
    Partition partition = make_partition(def, grouping);
    const std::vector<std::string> defined = defined_symbols(def);
    const Structure open = s.without(defined);

    CertificateReport reduction = certify_reduction_partition(def, partition, open, budgets.atoms);
    CertificateReport strict = certify_strict_reduction(def, open, budgets.atoms);
    EngineOptions opts;
    opts.atom_budget = budgets.atoms;
    opts.enumeration_budget = budgets.enumeration;
    std::vector<std::string> totality;
    for (const Definition& part : partition.parts) {
        try {
            totality.push_back(is_total(part, open, opts) ? "total" : "not total");
        } catch (const BudgetExceeded&) {
            totality.push_back("unknown (budget)");
        }
    }
    const bool all_total = std::all_of(totality.begin(), totality.end(), [](const std::string& t) { return t == "total"; });
    const bool modular = reduction.status == Certificate::Certified && all_total;

    if (as_json) {
        std::cout << json{{"schema", kSchema},
                          {"command", "partition"},
                          {"parts", partition.parts.size()},
                          {"reduction_partition", report_json(reduction)},
                          {"strict_reduction", report_json(strict)},
                          {"part_totality", totality},
                          {"modularity_applies", modular}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "parts: " << partition.parts.size() << "\n";
        std::cout << "reduction partition: " << report_text(reduction) << "\n";
        for (std::size_t i = 0; i < totality.size(); ++i) std::cout << "part " << i + 1 << ": " << totality[i] << "\n";
        std::cout << "modularity applies: " << (modular ? "yes" : "no") << "\n";
        std::cout << "strict reduction: " << report_text(strict) << "\n";
    }
    return kExitOk;
}

int exit_code(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Parse: return kExitParse;
        case ErrorCategory::Semantic: return kExitSemantic;
        case ErrorCategory::Budget: return kExitBudget;
    }
    return kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-model engine for logic with inductive definitions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output (schema idlogic/v1)");

    std::string theory_path, structure_path, free_spec, op_name;
    std::vector<std::string> groups;
    std::size_t def_index = 1, max_models = 0;
    bool trace = false;

    auto* wfm = app.add_subcommand("wfm", "Well-founded model of a definition");
    wfm->add_option("theory", theory_path, "Theory file ('-' for stdin)")->required();
    wfm->add_option("structure", structure_path, "Structure file (JSON) for the open symbols");
    wfm->add_option("--def", def_index, "1-based index of the top-level definition")->check(CLI::PositiveNumber);
    wfm->add_flag("--trace", trace, "Print every stage of the alternating fixpoint");

    auto* check = app.add_subcommand("check", "Check that a structure satisfies a theory");
    check->add_option("theory", theory_path, "Theory file ('-' for stdin)")->required();
    check->add_option("structure", structure_path, "Structure file (JSON)")->required();

    auto* models = app.add_subcommand("models", "Enumerate models extending a structure");
    models->add_option("theory", theory_path, "Theory file ('-' for stdin)")->required();
    models->add_option("structure", structure_path, "Structure file (JSON)");
    models->add_option("--free", free_spec, "Comma-separated predicates to enumerate (default: all uninterpreted)");
    models->add_option("--max", max_models, "Stop after this many models (0: all)");

    auto* transform = app.add_subcommand("transform", "Replace definitions by an equivalent-under-conditions formula");
    transform->add_option("theory", theory_path, "Theory file ('-' for stdin)")->required();
    transform->add_option("--op", op_name, "complete, posind or circ")
        ->required()
        ->check(CLI::IsMember({"complete", "posind", "circ"}));

    auto* partition = app.add_subcommand("partition", "Certify a partition of a definition");
    partition->add_option("theory", theory_path, "Theory file ('-' for stdin)")->required();
    partition->add_option("structure", structure_path, "Structure file (JSON)");
    partition->add_option("--groups", groups,
                          "Parts separated by ';' or given by repeating the option; predicates by ','")
        ->required()
        ->expected(1)
        ->allow_extra_args(false)
        ->take_all();
    partition->add_option("--def", def_index, "1-based index of the top-level definition")->check(CLI::PositiveNumber);

    for (CLI::App* sub : {wfm, check, models, transform, partition})
        sub->add_flag("--json", as_json, "Machine-readable output (schema idlogic/v1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        const Budgets budgets = budgets_from_env();
        const Theory th = parse_theory(read_source(theory_path));
        if (*transform) return cmd_transform(th, op_name, as_json);
        const Structure s = load_structure(structure_path, th);
        if (*wfm) return cmd_wfm(th, s, def_index, trace, as_json, budgets);
        if (*check) return cmd_check(th, s, as_json, budgets);
        if (*models) return cmd_models(th, s, free_spec, max_models, as_json, budgets);
        return cmd_partition(th, s, def_index, groups, as_json, budgets);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.category());
    }
}
