#include "tanglegroup.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "abelian.hpp"
#include "cospan.hpp"
#include "document.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "gamma.hpp"
#include "iso.hpp"
#include "tangle.hpp"
#include "verify.hpp"

struct tg_expr {
    tg::Expr value;
};
struct tg_cospan {
    tg::Cospan value;
    size_t raw_generators;
    size_t raw_relators;
};
struct tg_presentation {
    tg::Presentation value;
};
struct tg_group {
    tg::FiniteGroup value;
};

namespace {

thread_local std::string g_last_error;

tg_status map_code(tg::ErrorCode code) {
    switch (code) {
        case tg::ErrorCode::Syntax:
            return TG_ERR_SYNTAX;
        case tg::ErrorCode::Arity:
            return TG_ERR_ARITY;
        case tg::ErrorCode::UnknownGenerator:
            return TG_ERR_UNKNOWN_GENERATOR;
        case tg::ErrorCode::SourceMismatch:
            return TG_ERR_SOURCE_MISMATCH;
        case tg::ErrorCode::InvalidGroupTable:
            return TG_ERR_INVALID_GROUP_TABLE;
        case tg::ErrorCode::UnknownBuiltin:
            return TG_ERR_UNKNOWN_BUILTIN;
        case tg::ErrorCode::NotALink:
            return TG_ERR_NOT_A_LINK;
        case tg::ErrorCode::BadArgument:
            return TG_ERR_BAD_ARGUMENT;
    }
    return TG_ERR_INTERNAL;
}

template <typename F>
tg_status guarded(F&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return TG_OK;
    } catch (const tg::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TG_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return TG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tg_status require(bool ok, const char* what) {
    if (ok) return TG_OK;
    g_last_error = std::string("null ") + what;
    return TG_ERR_BAD_ARGUMENT;
}

tg::EvalRequest parse_eval_options(const char* options_json) {
    tg::EvalRequest request;
    if (!options_json || !*options_json) return request;
    const auto opts = nlohmann::ordered_json::parse(options_json, nullptr, false);
    if (opts.is_discarded() || !opts.is_object()) {
        tg::fail(tg::ErrorCode::BadArgument, "options must be a JSON object");
    }
    request.simplify_every_node = opts.value("simplify_every_node", false);
    request.timing = opts.value("timing", false);
    if (opts.contains("homs")) {
        for (const auto& name : opts.at("homs")) {
            if (!name.is_string()) {
                tg::fail(tg::ErrorCode::BadArgument, "hom targets must be group names");
            }
            const std::string key = name.get<std::string>();
            if (opts.contains("tables") && opts.at("tables").contains(key)) {
                request.hom_targets.push_back(
                    tg::FiniteGroup::from_json(key, opts.at("tables").at(key)));
            } else {
                request.hom_targets.push_back(tg::FiniteGroup::builtin(key));
            }
        }
    }
    return request;
}

tg::CheckRequest parse_check_options(const char* options_json) {
    tg::CheckRequest request;
    if (!options_json || !*options_json) {
        request.relations = true;
        return request;
    }
    const auto opts = nlohmann::ordered_json::parse(options_json, nullptr, false);
    if (opts.is_discarded() || !opts.is_object()) {
        tg::fail(tg::ErrorCode::BadArgument, "options must be a JSON object");
    }
    request.relations = opts.value("relations", false);
    request.rank_theorem = opts.value("rank_theorem", false);
    if (!request.relations && !request.rank_theorem) request.relations = true;
    request.budget = opts.value("budget", std::size_t{3});
    request.seeds = opts.value("seeds", std::uint64_t{200});
    request.max_nodes = opts.value("max_nodes", std::size_t{12});
    request.timing = opts.value("timing", false);
    return request;
}

}  // namespace

extern "C" {

const char* tg_version(void) { return "0.1.0"; }

const char* tg_status_name(tg_status status) {
    switch (status) {
        case TG_OK:
            return "ok";
        case TG_ERR_SYNTAX:
            return "syntax error";
        case TG_ERR_ARITY:
            return "arity mismatch";
        case TG_ERR_UNKNOWN_GENERATOR:
            return "unknown generator";
        case TG_ERR_SOURCE_MISMATCH:
            return "source mismatch";
        case TG_ERR_INVALID_GROUP_TABLE:
            return "invalid group table";
        case TG_ERR_UNKNOWN_BUILTIN:
            return "unknown builtin";
        case TG_ERR_NOT_A_LINK:
            return "not a link";
        case TG_ERR_BAD_ARGUMENT:
            return "bad argument";
        case TG_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* tg_last_error(void) { return g_last_error.c_str(); }

void tg_string_free(char* s) { std::free(s); }

tg_status tg_expr_parse(const char* text, tg_expr** out) {
    if (tg_status s = require(text && out, "argument")) return s;
    return guarded([&] { *out = new tg_expr{tg::parse(text)}; });
}

tg_status tg_expr_builtin(const char* name, tg_expr** out) {
    if (tg_status s = require(name && out, "argument")) return s;
    return guarded([&] { *out = new tg_expr{tg::builtin(name)}; });
}

tg_status tg_expr_random(uint64_t seed, uint32_t max_nodes, tg_expr** out) {
    if (tg_status s = require(out != nullptr, "argument")) return s;
    return guarded([&] { *out = new tg_expr{tg::random_expr(seed, max_nodes)}; });
}

void tg_expr_free(tg_expr* e) { delete e; }

tg_status tg_expr_print(const tg_expr* e, char** out) {
    if (tg_status s = require(e && out, "argument")) return s;
    return guarded([&] { *out = dup_string(tg::print(e->value)); });
}

tg_status tg_expr_arity(const tg_expr* e, uint32_t* m, uint32_t* n) {
    if (tg_status s = require(e && m && n, "argument")) return s;
    return guarded([&] {
        const tg::Arity a = tg::arity(e->value);
        *m = static_cast<uint32_t>(a.m);
        *n = static_cast<uint32_t>(a.n);
    });
}

tg_status tg_expr_loops(const tg_expr* e, uint64_t* loops) {
    if (tg_status s = require(e && loops, "argument")) return s;
    return guarded([&] { *loops = tg::connectivity(e->value).loops; });
}

tg_status tg_eval(const tg_expr* e, int simplify_every_node, tg_cospan** out) {
    if (tg_status s = require(e && out, "argument")) return s;
    return guarded([&] {
        tg::EvalOptions options;
        options.simplify_every_node = simplify_every_node != 0;
        tg::Evaluation eval = tg::evaluate(e->value, options);
        *out = new tg_cospan{std::move(eval.cospan), eval.raw_generator_count,
                             eval.raw_relator_count};
    });
}

void tg_cospan_free(tg_cospan* c) { delete c; }

tg_status tg_cospan_arity(const tg_cospan* c, uint32_t* m, uint32_t* n) {
    if (tg_status s = require(c && m && n, "argument")) return s;
    *m = static_cast<uint32_t>(c->value.m());
    *n = static_cast<uint32_t>(c->value.n());
    return TG_OK;
}

tg_status tg_cospan_raw_size(const tg_cospan* c, size_t* generators, size_t* relators) {
    if (tg_status s = require(c && generators && relators, "argument")) return s;
    *generators = c->raw_generators;
    *relators = c->raw_relators;
    return TG_OK;
}

tg_status tg_cospan_json(const tg_cospan* c, char** out) {
    if (tg_status s = require(c && out, "argument")) return s;
    return guarded([&] { *out = dup_string(c->value.to_json().dump()); });
}

tg_status tg_cospan_middle(const tg_cospan* c, tg_presentation** out) {
    if (tg_status s = require(c && out, "argument")) return s;
    return guarded([&] { *out = new tg_presentation{c->value.middle()}; });
}

tg_status tg_cospan_iso_check(const tg_cospan* a, const tg_cospan* b, uint32_t budget,
                              char** verdict_json) {
    if (tg_status s = require(a && b && verdict_json, "argument")) return s;
    return guarded([&] {
        tg::IsoBudget iso_budget;
        iso_budget.max_word_length = budget;
        *verdict_json =
            dup_string(tg::iso_check(a->value, b->value, iso_budget).to_json().dump());
    });
}

tg_status tg_knot_group(const tg_expr* e, tg_presentation** out) {
    if (tg_status s = require(e && out, "argument")) return s;
    return guarded([&] { *out = new tg_presentation{tg::knot_group(e->value)}; });
}

void tg_presentation_free(tg_presentation* p) { delete p; }

tg_status tg_presentation_parse(const char* text, tg_presentation** out) {
    if (tg_status s = require(text && out, "argument")) return s;
    return guarded([&] { *out = new tg_presentation{tg::Presentation::parse_text(text)}; });
}

tg_status tg_presentation_text(const tg_presentation* p, char** out) {
    if (tg_status s = require(p && out, "argument")) return s;
    return guarded([&] { *out = dup_string(p->value.text()); });
}

tg_status tg_presentation_parse_json(const char* json, tg_presentation** out) {
    if (tg_status s = require(json && out, "argument")) return s;
    return guarded([&] {
        const auto parsed = nlohmann::ordered_json::parse(json, nullptr, false);
        if (parsed.is_discarded()) {
            tg::fail(tg::ErrorCode::Syntax, "malformed presentation JSON");
        }
        *out = new tg_presentation{tg::Presentation::from_json(parsed)};
    });
}

tg_status tg_presentation_json(const tg_presentation* p, char** out) {
    if (tg_status s = require(p && out, "argument")) return s;
    return guarded([&] { *out = dup_string(p->value.to_json().dump()); });
}

tg_status tg_presentation_size(const tg_presentation* p, size_t* generators, size_t* relators) {
    if (tg_status s = require(p && generators && relators, "argument")) return s;
    *generators = p->value.generators().size();
    *relators = p->value.relators().size();
    return TG_OK;
}

tg_status tg_presentation_abelianize(const tg_presentation* p, char** invariants_json) {
    if (tg_status s = require(p && invariants_json, "argument")) return s;
    return guarded(
        [&] { *invariants_json = dup_string(tg::abelianize(p->value).to_json().dump()); });
}

tg_status tg_presentation_count_homs(const tg_presentation* p, const tg_group* target,
                                     uint64_t* count) {
    if (tg_status s = require(p && target && count, "argument")) return s;
    return guarded([&] { *count = tg::count_homs(p->value, target->value); });
}

tg_status tg_group_builtin(const char* name, tg_group** out) {
    if (tg_status s = require(name && out, "argument")) return s;
    return guarded([&] { *out = new tg_group{tg::FiniteGroup::builtin(name)}; });
}

tg_status tg_group_parse_json(const char* json, tg_group** out) {
    if (tg_status s = require(json && out, "argument")) return s;
    return guarded([&] {
        const auto parsed = nlohmann::ordered_json::parse(json, nullptr, false);
        if (parsed.is_discarded()) {
            tg::fail(tg::ErrorCode::InvalidGroupTable, "malformed group table JSON");
        }
        *out = new tg_group{tg::FiniteGroup::from_json("custom", parsed)};
    });
}

tg_status tg_group_order(const tg_group* g, uint32_t* order) {
    if (tg_status s = require(g && order, "argument")) return s;
    *order = g->value.order();
    return TG_OK;
}

void tg_group_free(tg_group* g) { delete g; }

tg_status tg_eval_report(const tg_expr* e, const char* options_json, int as_json, char** out) {
    if (tg_status s = require(e && out, "argument")) return s;
    return guarded([&] {
        const tg::EvalRequest request = parse_eval_options(options_json);
        const tg::EvalDocument doc = tg::make_eval_document(e->value, request);
        *out = dup_string(as_json ? doc.to_json().dump(2) + "\n" : doc.to_text());
    });
}

tg_status tg_check(const char* options_json, int as_json, int* passed, char** out) {
    if (tg_status s = require(passed && out, "argument")) return s;
    return guarded([&] {
        const tg::CheckRequest request = parse_check_options(options_json);
        const tg::CheckDocument doc = tg::run_checks(request);
        *passed = doc.passed ? 1 : 0;
        *out = dup_string(as_json ? doc.to_json().dump(2) + "\n" : doc.to_text());
    });
}

}  // extern "C"
