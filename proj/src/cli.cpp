#include "vtl/cli.hpp"

#include "vtl/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

namespace vtl {

namespace {

// Joins (piece, label) pairs into "a [x] - b [y] + c [z]" form, folding each
// piece's leading sign into the separator. Zero pieces are dropped.
std::string signed_join(const std::vector<std::pair<std::string, std::string>>& parts) {
    std::string s;
    for (const auto& [piece, label] : parts) {
        if (piece == "0") continue;
        if (s.empty()) {
            s = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            s += " - " + piece.substr(1);
        } else {
            s += " + " + piece;
        }
        if (!label.empty()) s += " " + label;
    }
    return s.empty() ? "0" : s;
}

std::string class_label(int n, int l) {
    return "[" + std::to_string(n - 2 * l) + "]_" + std::to_string(n);
}

std::string class_table_text(const ClassTable& t) {
    std::vector<std::pair<std::string, std::string>> parts;
    for (std::size_t l = 0; l < t.coeff.size(); ++l) {
        parts.emplace_back(t.coeff[l].str(), class_label(t.n, static_cast<int>(l)));
    }
    return signed_join(parts);
}

nlohmann::json term_json(const Diagram& dg, const RationalFunction& c) {
    nlohmann::json partner = nlohmann::json::array();
    for (const std::uint16_t x : dg.partner()) partner.push_back(static_cast<int>(x));
    return nlohmann::json{{"partner", partner}, {"coeff", to_json(c)}};
}

// Same schema as to_json(Element), written term by term so the 8-strand
// expansion never materializes a DOM.
void stream_element_json(const Element& e, std::ostream& out) {
    out << "{\n  \"n\": " << e.n() << ",\n  \"terms\": [";
    bool first = true;
    for (const auto& [dg, c] : e.terms()) {
        out << (first ? "\n    " : ",\n    ") << term_json(dg, c).dump();
        first = false;
    }
    out << "\n  ]\n}\n";
}

void stream_element_text(const Element& e, std::ostream& out) {
    out << "n " << e.n() << "  terms " << e.term_count() << "\n";
    for (const auto& [dg, c] : e.terms()) out << c.str() << "  " << dg.str() << "\n";
}

void stream_numeric_text(const NumericElement& e, std::ostream& out) {
    out << "n " << e.n() << "  d " << e.d_value().str() << "  terms " << e.term_count()
        << "\n";
    for (const auto& [dg, c] : e.terms()) out << c.str() << "  " << dg.str() << "\n";
}

bool is_excluded(const BigRational& v, int n) {
    if (!v.is_integer()) return false;
    for (int t = 0; t <= n - 2; ++t) {
        if (v == BigRational(-2L * t)) return true;
    }
    return false;
}

std::string excluded_set_str(int n) {
    std::string s = "{";
    for (int t = 0; t <= n - 2; ++t) {
        if (t) s += ", ";
        s += std::to_string(-2 * t);
    }
    return s + "}";
}

// The cheapest exact route to the named construction; throws through to the
// caller on invalid input.
const Element& pick_projector(const std::string& form, int n, Element& storage) {
    if (form == "recursive") return f_recursive(n);
    if (form == "kernel") return f_kernel(n);
    if (form == "simplified") return f_simplified(n);
    storage = class_expand(f_explicit(n));
    return storage;
}

// Shared --n guard: every subcommand except verify needs an explicit n.
bool missing_n(const CommandConfig& cfg, std::ostream& err) {
    if (cfg.n) return false;
    err << "error: --n is required\n";
    return true;
}

int cmd_emit(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    if (missing_n(cfg, err)) return 2;
    const int n = *cfg.n;
    if (n < 1 || n > 8) {
        err << "error: emit supports n in 1..8\n";
        return 2;
    }
    const bool heavy = cfg.form == "recursive" || cfg.form == "simplified";
    if (heavy && n > 6 && !cfg.force) {
        err << "error: the " << cfg.form
            << " construction above 6 strands is expensive; pass --force to build it\n";
        return 2;
    }
    if (cfg.form == "kernel" && n < 2) {
        err << "error: the kernel factor needs at least 2 strands\n";
        return 2;
    }
    const bool json = cfg.format == "json";
    if (cfg.form == "explicit" && !cfg.expand) {
        const ClassTable t = f_explicit(n);
        if (json) {
            out << to_json(t).dump(2) << "\n";
        } else {
            out << "f_" << n << " = " << class_table_text(t) << "\n";
        }
        return 0;
    }
    Element storage(1);
    const Element& e = pick_projector(cfg.form, n, storage);
    if (json) {
        stream_element_json(e, out);
    } else {
        stream_element_text(e, out);
    }
    return 0;
}

int cmd_eval(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    if (missing_n(cfg, err)) return 2;
    const int n = *cfg.n;
    if (n < 1 || n > 8) {
        err << "error: eval supports n in 1..8\n";
        return 2;
    }
    if (!cfg.eval_point) {
        err << "error: --d is required\n";
        return 2;
    }
    BigRational v;
    try {
        v = BigRational::from_string(*cfg.eval_point);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    const std::string excl = excluded_set_str(n);
    if (is_excluded(v, n)) {
        err << "error: d = " << v.str() << " lies in the excluded set " << excl
            << "; the projector f_" << n << " is undefined there\n";
        return 2;
    }
    const bool heavy = cfg.form == "recursive" || cfg.form == "simplified";
    if (heavy && n > 6 && !cfg.force) {
        err << "error: the " << cfg.form
            << " construction above 6 strands is expensive; pass --force to build it\n";
        return 2;
    }
    const bool json = cfg.format == "json";
    try {
        if (cfg.form == "explicit" && !cfg.expand) {
            const ClassTable t = f_explicit(n);
            std::vector<BigRational> vals;
            vals.reserve(t.coeff.size());
            for (const RationalFunction& c : t.coeff) vals.push_back(c.eval(v));
            if (json) {
                nlohmann::json coeffs = nlohmann::json::array();
                for (std::size_t l = 0; l < vals.size(); ++l) {
                    coeffs.push_back(nlohmann::json{{"l", l}, {"coeff", vals[l].str()}});
                }
                out << nlohmann::json{{"n", n}, {"d", v.str()}, {"coeffs", coeffs}}.dump(2)
                    << "\n";
            } else {
                std::vector<std::pair<std::string, std::string>> parts;
                for (std::size_t l = 0; l < vals.size(); ++l) {
                    parts.emplace_back(vals[l].str(), class_label(n, static_cast<int>(l)));
                }
                out << "f_" << n << "(d = " << v.str() << ") = " << signed_join(parts)
                    << "\n";
            }
            return 0;
        }
        Element storage(1);
        const Element& e = pick_projector(cfg.form, n, storage);
        const NumericElement ne = eval_at(e, v);
        if (json) {
            out << to_json(ne).dump(2) << "\n";
        } else {
            stream_numeric_text(ne, out);
        }
        return 0;
    } catch (const PoleError& ex) {
        err << "error: " << ex.what() << "; admissible points avoid the excluded set "
            << excl << " and every denominator root\n";
        return 2;
    }
}

int cmd_trace(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    if (missing_n(cfg, err)) return 2;
    const int n = *cfg.n;
    const int cap = cfg.force ? 7 : 5;
    if (n < 1 || n > cap) {
        err << "error: trace supports n in 1.." << cap
            << (cfg.force ? "" : " (--force raises the cap to 7)") << "\n";
        return 2;
    }
    const Element& f = n <= 5 ? f_recursive(n) : f_simplified(n);
    const RationalFunction oracle = markov_trace(f);
    const RationalFunction dp = trace_closed_form(n, TraceVariant::d_power);
    const RationalFunction ap = trace_closed_form(n, TraceVariant::alpha_product);
    const bool match_dp = oracle == dp;
    const bool match_ap = oracle == ap;
    if (cfg.format == "json") {
        out << nlohmann::json{
                   {"n", n},
                   {"trace", to_json(oracle)},
                   {"variants",
                    nlohmann::json{{"d_power", nlohmann::json{{"value", to_json(dp)},
                                                              {"matches", match_dp}}},
                                   {"alpha_product",
                                    nlohmann::json{{"value", to_json(ap)},
                                                   {"matches", match_ap}}}}}}
                   .dump(2)
            << "\n";
    } else {
        out << "markov_trace(f_" << n << ") = " << oracle.str() << "\n";
        out << "closed form d_power       = " << dp.str() << "  ["
            << (match_dp ? "matches" : "differs") << "]\n";
        out << "closed form alpha_product = " << ap.str() << "  ["
            << (match_ap ? "matches" : "differs") << "]\n";
    }
    return (match_dp || match_ap) ? 0 : 1;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    if (missing_n(cfg, err)) return 2;
    const int n = *cfg.n;
    if (n < 1 || n > 8) {
        err << "error: enumerate supports n in 1..8\n";
        return 2;
    }
    if (cfg.k_filter) {
        const int k = *cfg.k_filter;
        if (k < 0 || k > n || (n - k) % 2 != 0) {
            err << "error: through-strand count " << k << " needs 0 <= k <= n and k = n (mod 2)\n";
            return 2;
        }
    }
    const std::vector<Diagram> ds =
        cfg.k_filter ? enumerate_diagrams(n, *cfg.k_filter) : enumerate_diagrams(n);
    if (cfg.format == "json") {
        out << "{\n  \"n\": " << n << ",\n";
        if (cfg.k_filter) out << "  \"k\": " << *cfg.k_filter << ",\n";
        out << "  \"count\": " << ds.size() << ",\n  \"diagrams\": [";
        bool first = true;
        for (const Diagram& dg : ds) {
            nlohmann::json partner = nlohmann::json::array();
            for (const std::uint16_t x : dg.partner()) partner.push_back(static_cast<int>(x));
            out << (first ? "\n    " : ",\n    ") << partner.dump();
            first = false;
        }
        out << "\n  ]\n}\n";
    } else {
        for (const Diagram& dg : ds) out << dg.str() << "\n";
    }
    return 0;
}

int cmd_relations(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    if (missing_n(cfg, err)) return 2;
    const int n = *cfg.n;
    if (n < 2 || n > 8) {
        err << "error: relations supports n in 2..8\n";
        return 2;
    }
    const Report rep = check_relations(n);
    if (cfg.format == "json") {
        out << to_json(rep).dump(2) << "\n";
    } else {
        out << report_text(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

struct SuiteEntry {
    const char* name;
    int default_n;
    int min_n;
    int max_n;
    std::function<Report(int, std::uint64_t)> fn;
};

const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> table = {
        {"relations", 4, 2, 8,
         [](int n, std::uint64_t) { return check_relations(n); }},
        {"characterization", 4, 1, 7,
         [](int n, std::uint64_t seed) {
             const Element& candidate = n <= 5 ? f_recursive(n) : f_simplified(n);
             return check_characterization(n, candidate, seed);
         }},
        {"class_invariance", 4, 2, 6,
         [](int n, std::uint64_t) { return check_class_invariance(n); }},
        {"structural", 4, 3, 6,
         [](int n, std::uint64_t) { return check_structural_lemmas(n); }},
        {"trace", 4, 1, 5, [](int n, std::uint64_t) { return check_trace(n); }},
        {"dimensions", 5, 1, 7,
         [](int n, std::uint64_t) { return check_dimensions(n); }},
        {"kernel_support", 5, 2, 8,
         [](int n, std::uint64_t) { return check_kernel_support(n); }},
        {"scalars", 12, 1, 64,
         [](int n, std::uint64_t) { return check_scalar_identities(n); }},
        {"projector_properties", 4, 2, 5,
         [](int n, std::uint64_t) { return check_projector_properties(n); }},
        {"jones_wenzl", 4, 1, 6,
         [](int n, std::uint64_t) { return check_jones_wenzl(n); }},
        {"coefficient_laws", 10, 1, 64,
         [](int n, std::uint64_t) { return check_coefficient_laws(n); }},
        {"agreement", 4, 1, 6,
         [](int n, std::uint64_t) { return check_construction_agreement(n); }},
    };
    return table;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<const SuiteEntry*> selected;
    if (cfg.suites.empty()) {
        for (const SuiteEntry& entry : suite_registry()) selected.push_back(&entry);
    } else {
        for (const std::string& name : cfg.suites) {
            const SuiteEntry* found = nullptr;
            for (const SuiteEntry& entry : suite_registry()) {
                if (name == entry.name) {
                    found = &entry;
                    break;
                }
            }
            if (!found) {
                err << "error: unknown suite \"" << name << "\"\n";
                return 2;
            }
            selected.push_back(found);
        }
    }
    bool ok = true;
    const bool json = cfg.format == "json";
    nlohmann::json jreports = nlohmann::json::array();
    for (const SuiteEntry* entry : selected) {
        int n = entry->default_n;
        if (cfg.n) {
            n = *cfg.n;
            if (!cfg.force && (n < entry->min_n || n > entry->max_n)) {
                err << "note: skipping suite " << entry->name << " (supported n "
                    << entry->min_n << ".." << entry->max_n << ")\n";
                continue;
            }
        }
        const Report rep = entry->fn(n, cfg.seed);
        ok = ok && rep.all_pass();
        if (json) {
            jreports.push_back(to_json(rep));
        } else {
            out << report_text(rep);
        }
    }
    if (json) {
        out << nlohmann::json{{"reports", jreports}, {"all_pass", ok}}.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!config.output.empty()) {
            file.open(config.output);
            if (!file) {
                err << "error: cannot open " << config.output << " for writing\n";
                return 2;
            }
            sink = &file;
        }
        if (config.subcommand == "emit") return cmd_emit(config, *sink, err);
        if (config.subcommand == "verify") return cmd_verify(config, *sink, err);
        if (config.subcommand == "trace") return cmd_trace(config, *sink, err);
        if (config.subcommand == "eval") return cmd_eval(config, *sink, err);
        if (config.subcommand == "enumerate") return cmd_enumerate(config, *sink, err);
        if (config.subcommand == "relations") return cmd_relations(config, *sink, err);
        err << "error: unknown subcommand \"" << config.subcommand << "\"\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact projector calculus for the virtual Temperley-Lieb algebra"};
    app.require_subcommand(1);
    CommandConfig cfg;
    if (const char* env = std::getenv("VTL_FORMAT")) {
        const std::string value(env);
        if (value == "text" || value == "json") cfg.format = value;
    }
    const auto add_common = [&cfg](CLI::App* sub, bool require_n) {
        auto* n_opt = sub->add_option("--n", cfg.n, "strand count");
        if (require_n) n_opt->required();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", cfg.output, "write the document to this file");
    };
    const auto add_form = [&cfg](CLI::App* sub) {
        sub->add_option("--form", cfg.form, "construction")
            ->check(CLI::IsMember({"recursive", "kernel", "simplified", "explicit"}));
        sub->add_flag("--expand", cfg.expand,
                      "emit the full element instead of the class table");
        sub->add_flag("--force", cfg.force, "lift the construction cost caps");
    };

    CLI::App* emit = app.add_subcommand("emit", "print a projector construction");
    add_common(emit, true);
    add_form(emit);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, false);
    verify->add_option("--suite", cfg.suites, "suites to run (repeatable)");
    verify->add_option("--seed", cfg.seed, "sample seed for evaluated checks");
    verify->add_flag("--force", cfg.force, "bypass the per-suite n ranges");

    CLI::App* trace = app.add_subcommand("trace", "Markov trace and closed forms");
    add_common(trace, true);
    trace->add_flag("--force", cfg.force, "raise the n cap");

    CLI::App* eval = app.add_subcommand("eval", "evaluate the projector at d = p/q");
    add_common(eval, true);
    add_form(eval);
    eval->add_option("--d", cfg.eval_point, "evaluation point, a rational like 7/3")
        ->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list basis diagrams");
    add_common(enumerate, true);
    enumerate->add_option("--k", cfg.k_filter, "through-strand filter");

    CLI::App* relations = app.add_subcommand("relations", "check the defining relations");
    add_common(relations, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (emit->parsed()) cfg.subcommand = "emit";
    if (verify->parsed()) cfg.subcommand = "verify";
    if (trace->parsed()) cfg.subcommand = "trace";
    if (eval->parsed()) cfg.subcommand = "eval";
    if (enumerate->parsed()) cfg.subcommand = "enumerate";
    if (relations->parsed()) cfg.subcommand = "relations";
    return run(cfg, std::cout, std::cerr);
}

}  // namespace vtl
