// triweb command-line front end: difference sets, triangle presentations,
// functor relation suites, and Yang-Baxter checks. All output is JSON on
// stdout (or --out); exit code 0 = success/pass, 1 = checks failed,
// 2 = usage or validation error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "triweb/diffset.hpp"
#include "triweb/presentation.hpp"
#include "triweb/webfun.hpp"
#include "triweb/ybe.hpp"

using json = nlohmann::ordered_json;
using namespace triweb;

namespace {

int g_exit = 0;

void emit_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw ValidationError("cannot open output file " + out_path);
        os << text;
    }
}

void emit_json(const json& j, const std::string& out_path) { emit_output(j.dump(2), out_path); }

json diffset_json(const diffset::DifferenceSet& d) {
    return json{{"N", d.N}, {"q", d.q}, {"D", d.D}};
}

diffset::DifferenceSet read_diffset_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open " + path);
    json j = json::parse(is, nullptr, true);
    diffset::DifferenceSet d;
    d.N = j.at("N").get<std::int64_t>();
    d.q = j.at("q").get<std::int64_t>();
    d.D = j.at("D").get<std::vector<std::int64_t>>();
    return d;
}

/// "builtin:15.1", "degenerate:N", or a path to a presentation JSON file.
presentation::TrianglePresentation load_presentation(const std::string& src) {
    if (src.rfind("builtin:", 0) == 0) {
        const auto name = src.substr(8);
        if (name == "15.1") return presentation::builtin_exotic_15_1();
        throw ValidationError("unknown builtin presentation \"" + name + "\"");
    }
    if (src.rfind("degenerate:", 0) == 0) {
        return presentation::degenerate(std::stoi(src.substr(11)));
    }
    std::ifstream is(src);
    if (!is) throw ValidationError("cannot open presentation file " + src);
    std::vector<std::string> warnings;
    auto tp = presentation::import_json(nlohmann::json::parse(is), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return tp;
}

presentation::TrianglePresentation load_presentation_or_stdin(const std::string& in_path) {
    if (!in_path.empty()) return load_presentation(in_path);
    std::vector<std::string> warnings;
    auto tp = presentation::import_json(nlohmann::json::parse(std::cin), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return tp;
}

json axiom_report_json(const presentation::AxiomReport& rep,
                       const std::optional<presentation::SixVariants>& variants) {
    json j;
    j["all_pass"] = rep.all_pass;
    j["conditions"] = json::array();
    for (const auto& c : rep.conditions) {
        json cj{{"condition", c.number}, {"pass", c.pass}};
        cj["witness"] = c.pass ? json(nullptr) : json(c.witness);
        j["conditions"].push_back(cj);
    }
    if (variants) {
        j["condition_6_variants"] = {{"c6", variants->c6},
                                     {"c6_prime", variants->c6_prime},
                                     {"c6_double_prime", variants->c6_double_prime}};
    } else {
        j["condition_6_variants"] = nullptr;
    }
    return j;
}

template <class Fn>
void with_field(std::int64_t p, Fn&& fn) {
    if (p == 0)
        fn(gf::Rationals{});
    else
        fn(gf::Fp(p)); // throws for non-prime p
}

bool relation_selected(const std::string& relation, const std::vector<std::string>& filters) {
    if (filters.empty()) return true;
    for (const auto& f : filters)
        if (relation.rfind(f, 0) == 0) return true;
    return false;
}

struct EmitSpec {
    std::string kind;
    int a = 0;
    int b = 0;
};

EmitSpec parse_emit(const std::string& s) {
    auto colon = s.find(':');
    auto comma = s.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos)
        throw ValidationError("--emit expects kind:a,b (e.g. crossing:1,1)");
    EmitSpec spec;
    spec.kind = s.substr(0, colon);
    spec.a = std::stoi(s.substr(colon + 1, comma - colon - 1));
    spec.b = std::stoi(s.substr(comma + 1));
    if (spec.kind != "merge" && spec.kind != "split" && spec.kind != "crossing")
        throw ValidationError("--emit kind must be merge, split or crossing");
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle presentations on finite projective planes, their web functor "
                 "matrices over prime fields, and the resulting Yang-Baxter solutions"};
    app.require_subcommand(1);
    std::function<void()> action;

    // diffset ---------------------------------------------------------------
    auto* cmd_ds = app.add_subcommand("diffset", "cyclic planar difference sets");
    cmd_ds->require_subcommand(1);
    {
        static std::int64_t N = 0, q = 0;
        static std::vector<std::int64_t> D;
        static std::string out;

        auto* verify = cmd_ds->add_subcommand("verify", "check the difference property");
        verify->add_option("--N", N)->required();
        verify->add_option("--D", D)->required()->delimiter(',');
        verify->add_option("--out", out);
        verify->callback([&] {
            action = [&] {
                auto rep = diffset::verify_planar_difference_set(N, D);
                json j{{"ok", rep.ok}, {"N", N}, {"D", D}};
                j["collisions"] = json::array();
                for (const auto& c : rep.collisions)
                    j["collisions"].push_back({{"residue", c.residue}, {"count", c.count}});
                emit_json(j, out);
                g_exit = rep.ok ? 0 : 1;
            };
        });

        auto* stdz = cmd_ds->add_subcommand("standardize", "canonical zero-sum translate");
        stdz->add_option("--N", N)->required();
        stdz->add_option("--q", q)->required();
        stdz->add_option("--D", D)->required()->delimiter(',');
        stdz->add_option("--out", out);
        stdz->callback([&] { action = [&] { emit_json(diffset_json(diffset::standardize(N, q, D)), out); }; });

        auto* singer = cmd_ds->add_subcommand("singer", "trace-zero construction for a prime power q");
        singer->add_option("--q", q)->required();
        singer->add_option("--out", out);
        singer->callback([&] { action = [&] { emit_json(diffset_json(diffset::singer_difference_set(q)), out); }; });
    }

    // presentation ----------------------------------------------------------
    auto* cmd_p = app.add_subcommand("presentation", "triangle presentations");
    cmd_p->require_subcommand(1);
    {
        static std::string name = "15.1", in, out, from_diffset;
        static int N = 0;

        auto* builtin = cmd_p->add_subcommand("builtin", "emit a built-in presentation");
        builtin->add_option("--name", name)->required();
        builtin->add_option("--out", out);
        builtin->callback([&] {
            action = [&] { emit_json(presentation::export_json(load_presentation("builtin:" + name)), out); };
        });

        auto* degen = cmd_p->add_subcommand("degenerate", "emit the powerset presentation on N elements");
        degen->add_option("--N", N)->required();
        degen->add_option("--out", out);
        degen->callback(
            [&] { action = [&] { emit_json(presentation::export_json(presentation::degenerate(N)), out); }; });

        auto* build = cmd_p->add_subcommand("build", "build from a difference-set JSON file");
        build->add_option("--from-diffset", from_diffset)->required();
        build->add_option("--out", out);
        build->callback([&] {
            action = [&] {
                auto d = read_diffset_file(from_diffset);
                emit_json(presentation::export_json(diffset::presentation_from_difference_set(d.N, d.q, d.D)), out);
            };
        });

        auto* verify = cmd_p->add_subcommand("verify", "run the six axioms plus the 6'/6'' variants");
        verify->add_option("--in", in, "presentation file (default: stdin)");
        verify->add_option("--out", out);
        verify->callback([&] {
            action = [&] {
                auto tp = load_presentation_or_stdin(in);
                auto rep = presentation::verify_axioms(tp);
                std::optional<presentation::SixVariants> variants;
                bool variants_ok = true;
                if (rep.all_pass) {
                    variants = presentation::verify_condition_6_variants(tp);
                    variants_ok = variants->c6 && variants->c6_prime && variants->c6_double_prime;
                }
                emit_json(axiom_report_json(rep, variants), out);
                g_exit = (rep.all_pass && variants_ok) ? 0 : 1;
            };
        });

        auto* exportc = cmd_p->add_subcommand("export", "re-emit a presentation in canonical JSON");
        exportc->add_option("--in", in, "presentation file (default: stdin)");
        exportc->add_option("--out", out);
        exportc->callback([&] {
            action = [&] { emit_json(presentation::export_json(load_presentation_or_stdin(in)), out); };
        });
    }

    // functor ---------------------------------------------------------------
    auto* cmd_f = app.add_subcommand("functor", "fiber functor matrices and relation checks");
    cmd_f->require_subcommand(1);
    {
        static std::string src, out, emit_what;
        static std::int64_t charac = 0;
        static bool override_hyp = false;
        static int max_labels = 0;
        static std::vector<std::string> relations;

        auto* check = cmd_f->add_subcommand("check", "run the full relation suite");
        check->add_option("--presentation", src)->required();
        check->add_option("--char", charac)->required();
        check->add_flag("--override-hypotheses", override_hyp);
        check->add_option("--max-labels", max_labels);
        check->add_option("--relations", relations, "relation-name prefixes to keep")->delimiter(',');
        check->add_option("--out", out);
        check->callback([&] {
            action = [&] {
                auto tp = load_presentation(src);
                with_field(charac, [&](auto field) {
                    webfun::FunctorContext<decltype(field)> ctx(tp, field, override_hyp);
                    if (ctx.hypotheses().overridden) std::cerr << "warning: functor hypotheses overridden\n";
                    auto reports = ctx.run_full_suite(max_labels);
                    json arr = json::array();
                    bool ok = true;
                    for (const auto& r : reports) {
                        if (!relation_selected(r.relation, relations)) continue;
                        ok = ok && r.pass();
                        arr.push_back(webfun::to_json(r));
                    }
                    emit_json(arr, out);
                    g_exit = ok ? 0 : 1;
                });
            };
        });

        auto* emitc = cmd_f->add_subcommand("emit", "write one generator matrix in coordinate format");
        emitc->add_option("--presentation", src)->required();
        emitc->add_option("--char", charac)->required();
        emitc->add_flag("--override-hypotheses", override_hyp);
        emitc->add_option("--emit", emit_what, "merge:a,b | split:a,b | crossing:a,b")->required();
        emitc->add_option("--out", out);
        emitc->callback([&] {
            action = [&] {
                auto tp = load_presentation(src);
                auto spec = parse_emit(emit_what);
                with_field(charac, [&](auto field) {
                    webfun::FunctorContext<decltype(field)> ctx(tp, field, override_hyp);
                    auto mat = spec.kind == "merge"   ? ctx.merge(spec.a, spec.b)
                               : spec.kind == "split" ? ctx.split(spec.a, spec.b)
                                                      : ctx.crossing(spec.a, spec.b);
                    emit_output(sparsemat::coords_string(mat), out);
                });
            };
        });
    }

    // ybe ---------------------------------------------------------------------
    {
        auto* cmd_y = app.add_subcommand("ybe", "involutivity, Yang-Baxter and density checks");
        static std::string src, out;
        static std::int64_t charac = 0;
        static bool override_hyp = false;
        cmd_y->add_option("--presentation", src)->required();
        cmd_y->add_option("--char", charac)->required();
        cmd_y->add_flag("--override-hypotheses", override_hyp);
        cmd_y->add_option("--out", out);
        cmd_y->callback([&] {
            action = [&] {
                auto tp = load_presentation(src);
                with_field(charac, [&](auto field) {
                    webfun::FunctorContext<decltype(field)> ctx(tp, field, override_hyp);
                    auto sol = ybe::rhat(ctx);
                    json j = ybe::summary(sol);
                    emit_json(j, out);
                    g_exit = (j["involutive"].get<bool>() && j["ybe"].get<bool>() &&
                              j["density_bound_ok"].get<bool>())
                                 ? 0
                                 : 1;
                });
            };
        });
    }

    try {
        app.parse(argc, argv);
        if (action) action();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ValidationError& e) { // includes HypothesisError
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
