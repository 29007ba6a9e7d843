// tg: command-line front end for the tanglegroup shared library. Talks to
// the engine only through the public C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tanglegroup.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSyntax = 1;
constexpr int kExitArity = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitOther = 4;

int exit_code_for(tg_status status) {
    switch (status) {
        case TG_OK:
            return kExitOk;
        case TG_ERR_ARITY:
        case TG_ERR_NOT_A_LINK:
            return kExitArity;
        case TG_ERR_SYNTAX:
        case TG_ERR_UNKNOWN_BUILTIN:
        case TG_ERR_INVALID_GROUP_TABLE:
        case TG_ERR_UNKNOWN_GENERATOR:
        case TG_ERR_BAD_ARGUMENT:
            return kExitSyntax;
        default:
            return kExitOther;
    }
}

[[noreturn]] void die(tg_status status) {
    std::cerr << "tg: " << tg_status_name(status) << ": " << tg_last_error() << "\n";
    std::exit(exit_code_for(status));
}

struct StringDeleter {
    void operator()(char* s) const { tg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ExprDeleter {
    void operator()(tg_expr* e) const { tg_expr_free(e); }
};
using OwnedExpr = std::unique_ptr<tg_expr, ExprDeleter>;

struct CospanDeleter {
    void operator()(tg_cospan* c) const { tg_cospan_free(c); }
};
using OwnedCospan = std::unique_ptr<tg_cospan, CospanDeleter>;

struct PresentationDeleter {
    void operator()(tg_presentation* p) const { tg_presentation_free(p); }
};
using OwnedPresentation = std::unique_ptr<tg_presentation, PresentationDeleter>;

struct GroupDeleter {
    void operator()(tg_group* g) const { tg_group_free(g); }
};
using OwnedGroup = std::unique_ptr<tg_group, GroupDeleter>;

// Shared input selection: inline expression, file, or builtin name.
struct InputOptions {
    std::string inline_expr;
    std::string file;
    std::string builtin;

    void attach(CLI::App* cmd) {
        auto* positional = cmd->add_option("expr", inline_expr, "Inline tangle expression");
        auto* from_file = cmd->add_option("-f,--file", file, "Read the expression from a file");
        auto* from_builtin =
            cmd->add_option("-b,--builtin", builtin,
                            "Builtin tangle: unknot, unlink2, hopf, trefoil, figure8");
        positional->excludes(from_file);
        positional->excludes(from_builtin);
        from_file->excludes(from_builtin);
    }

    OwnedExpr load() const {
        tg_expr* raw = nullptr;
        tg_status status = TG_ERR_BAD_ARGUMENT;
        if (!builtin.empty()) {
            status = tg_expr_builtin(builtin.c_str(), &raw);
        } else if (!file.empty()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "tg: cannot open '" << file << "'\n";
                std::exit(kExitSyntax);
            }
            std::ostringstream text;
            text << in.rdbuf();
            status = tg_expr_parse(text.str().c_str(), &raw);
        } else if (!inline_expr.empty()) {
            status = tg_expr_parse(inline_expr.c_str(), &raw);
        } else {
            std::cerr << "tg: no input; pass an expression, --file, or --builtin\n";
            std::exit(kExitSyntax);
        }
        if (status != TG_OK) die(status);
        return OwnedExpr(raw);
    }
};

std::string read_file_or_die(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "tg: cannot open '" << path << "'\n";
        std::exit(kExitSyntax);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string table_name_from_path(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base.empty() ? path : base;
}

nlohmann::ordered_json eval_options_json(bool simplify_every_node, bool timing,
                                         const std::vector<std::string>& homs,
                                         const std::vector<std::string>& tables) {
    nlohmann::ordered_json options;
    options["simplify_every_node"] = simplify_every_node;
    options["timing"] = timing;
    auto hom_names = nlohmann::ordered_json::array();
    auto table_map = nlohmann::ordered_json::object();
    for (const std::string& name : homs) hom_names.push_back(name);
    for (const std::string& path : tables) {
        const std::string name = table_name_from_path(path);
        const auto parsed = nlohmann::ordered_json::parse(read_file_or_die(path), nullptr, false);
        if (parsed.is_discarded()) {
            std::cerr << "tg: '" << path << "' is not valid JSON\n";
            std::exit(kExitSyntax);
        }
        table_map[name] = parsed;
        hom_names.push_back(name);
    }
    options["homs"] = std::move(hom_names);
    options["tables"] = std::move(table_map);
    return options;
}

void print_owned(const OwnedString& s) { std::cout << s.get(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tangle-group functor evaluator: tangle expressions to cospans of "
                 "finitely presented groups"};
    app.require_subcommand(1);
    app.fallthrough();  // --json may follow the subcommand
    app.set_version_flag("--version", std::string(tg_version()));

    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text")->configurable(false);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to a cospan");
    InputOptions eval_input;
    eval_input.attach(eval_cmd);
    bool simplify_every_node = false;
    bool timing = false;
    std::vector<std::string> hom_groups;
    std::vector<std::string> table_files;
    eval_cmd->add_flag("--simplify-every-node", simplify_every_node,
                       "Tietze-simplify after every node instead of only at the root");
    eval_cmd->add_flag("--timing", timing, "Include wall-clock timing in the output");
    eval_cmd->add_option("--homs", hom_groups, "Count homs into a builtin group (repeatable)");
    eval_cmd->add_option("--table", table_files,
                         "Count homs into a custom group table JSON file (repeatable)");

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "Parse only; echo the canonical form");
    InputOptions parse_input;
    parse_input.attach(parse_cmd);

    // knot-group
    auto* knot_cmd = app.add_subcommand("knot-group", "Knot group of a closed tangle");
    InputOptions knot_input;
    knot_input.attach(knot_cmd);

    // abelianize
    auto* abel_cmd = app.add_subcommand("abelianize", "Abelian invariants of the middle group");
    InputOptions abel_input;
    abel_input.attach(abel_cmd);

    // homs
    auto* homs_cmd = app.add_subcommand("homs", "Count homomorphisms into finite groups");
    InputOptions homs_input;
    homs_input.attach(homs_cmd);
    std::vector<std::string> homs_groups;
    std::vector<std::string> homs_tables;
    homs_cmd->add_option("--homs", homs_groups, "Builtin target group (repeatable)");
    homs_cmd->add_option("--table", homs_tables, "Custom group table JSON file (repeatable)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Run the verification suite");
    bool check_relations = false;
    bool check_rank = false;
    std::uint64_t seeds = 200;
    std::size_t max_nodes = 12;
    std::size_t budget = 3;
    bool check_timing = false;
    check_cmd->add_flag("--relations", check_relations, "Check the tangle relations under the functor");
    check_cmd->add_flag("--rank-theorem", check_rank,
                        "Check the abelianization rank formula on random expressions");
    check_cmd->add_option("--seeds", seeds, "Number of random expressions");
    check_cmd->add_option("--max-nodes", max_nodes, "Node budget per random expression");
    check_cmd->add_option("--budget", budget, "Witness word length for iso checks");
    check_cmd->add_flag("--timing", check_timing, "Include per-case timing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitSyntax;
    }

    if (eval_cmd->parsed()) {
        OwnedExpr expr = eval_input.load();
        const auto options = eval_options_json(simplify_every_node, timing, hom_groups, table_files);
        char* out = nullptr;
        tg_status status = tg_eval_report(expr.get(), options.dump().c_str(), as_json ? 1 : 0, &out);
        if (status != TG_OK) die(status);
        print_owned(OwnedString(out));
        return kExitOk;
    }

    if (parse_cmd->parsed()) {
        OwnedExpr expr = parse_input.load();
        char* out = nullptr;
        tg_status status = tg_expr_print(expr.get(), &out);
        if (status != TG_OK) die(status);
        OwnedString text(out);
        if (as_json) {
            nlohmann::ordered_json doc;
            doc["expression"] = text.get();
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << text.get() << "\n";
        }
        return kExitOk;
    }

    if (knot_cmd->parsed()) {
        OwnedExpr expr = knot_input.load();
        tg_presentation* raw = nullptr;
        tg_status status = tg_knot_group(expr.get(), &raw);
        if (status != TG_OK) die(status);
        OwnedPresentation pres(raw);
        char* out = nullptr;
        status = as_json ? tg_presentation_json(pres.get(), &out)
                         : tg_presentation_text(pres.get(), &out);
        if (status != TG_OK) die(status);
        OwnedString text(out);
        std::cout << text.get() << "\n";
        return kExitOk;
    }

    if (abel_cmd->parsed()) {
        OwnedExpr expr = abel_input.load();
        tg_cospan* raw_cospan = nullptr;
        tg_status status = tg_eval(expr.get(), 0, &raw_cospan);
        if (status != TG_OK) die(status);
        OwnedCospan cospan(raw_cospan);
        tg_presentation* raw_pres = nullptr;
        status = tg_cospan_middle(cospan.get(), &raw_pres);
        if (status != TG_OK) die(status);
        OwnedPresentation pres(raw_pres);
        char* out = nullptr;
        status = tg_presentation_abelianize(pres.get(), &out);
        if (status != TG_OK) die(status);
        OwnedString invariants(out);
        if (as_json) {
            std::cout << invariants.get() << "\n";
        } else {
            const auto parsed = nlohmann::ordered_json::parse(invariants.get());
            std::cout << "free rank " << parsed.at("free_rank").get<std::uint64_t>()
                      << ", torsion " << parsed.at("torsion").dump() << "\n";
        }
        return kExitOk;
    }

    if (homs_cmd->parsed()) {
        if (homs_groups.empty() && homs_tables.empty()) {
            std::cerr << "tg: homs needs at least one --homs or --table target\n";
            return kExitSyntax;
        }
        OwnedExpr expr = homs_input.load();
        tg_cospan* raw_cospan = nullptr;
        tg_status status = tg_eval(expr.get(), 0, &raw_cospan);
        if (status != TG_OK) die(status);
        OwnedCospan cospan(raw_cospan);
        tg_presentation* raw_pres = nullptr;
        status = tg_cospan_middle(cospan.get(), &raw_pres);
        if (status != TG_OK) die(status);
        OwnedPresentation pres(raw_pres);

        nlohmann::ordered_json counts;
        auto count_into = [&](const std::string& name, tg_group* group) {
            OwnedGroup owned(group);
            uint64_t count = 0;
            tg_status s = tg_presentation_count_homs(pres.get(), owned.get(), &count);
            if (s != TG_OK) die(s);
            counts[name] = count;
        };
        for (const std::string& name : homs_groups) {
            tg_group* group = nullptr;
            tg_status s = tg_group_builtin(name.c_str(), &group);
            if (s != TG_OK) die(s);
            count_into(name, group);
        }
        for (const std::string& path : homs_tables) {
            tg_group* group = nullptr;
            tg_status s = tg_group_parse_json(read_file_or_die(path).c_str(), &group);
            if (s != TG_OK) die(s);
            count_into(table_name_from_path(path), group);
        }
        if (as_json) {
            std::cout << counts.dump(2) << "\n";
        } else {
            for (const auto& [name, count] : counts.items()) {
                std::cout << "homs into " << name << ": " << count.get<std::uint64_t>() << "\n";
            }
        }
        return kExitOk;
    }

    if (check_cmd->parsed()) {
        nlohmann::ordered_json options;
        options["relations"] = check_relations;
        options["rank_theorem"] = check_rank;
        options["budget"] = budget;
        options["seeds"] = seeds;
        options["max_nodes"] = max_nodes;
        options["timing"] = check_timing;
        int passed = 0;
        char* out = nullptr;
        tg_status status = tg_check(options.dump().c_str(), as_json ? 1 : 0, &passed, &out);
        if (status != TG_OK) die(status);
        print_owned(OwnedString(out));
        return passed ? kExitOk : kExitCheckFailed;
    }

    return kExitOk;
}
