#include "wpat/cli.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wpat/alcove_index.hpp"
#include "wpat/kernels.hpp"
#include "wpat/render.hpp"
#include "wpat/runner_removal.hpp"

namespace wpat {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(const std::string& text, bool allow_zero) {
    if (text.empty() || text == "-") return {};
    std::vector<Int> values;
    std::vector<size_t> starts;
    size_t i = 0;
    while (true) {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw UsageError("malformed list \"" + text + "\": expected a digit at position " +
                             std::to_string(i + 1));
        starts.push_back(i);
        Int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        values.push_back(v);
        if (!allow_zero && v == 0)
            throw UsageError("malformed list \"" + text + "\": zero entry at position " +
                             std::to_string(starts.back() + 1));
        if (i == text.size()) break;
        if (text[i] != ',')
            throw UsageError("malformed list \"" + text + "\": expected ',' at position " +
                             std::to_string(i + 1));
        ++i;
    }
    return values;
}

Partition parse_partition_text(const std::string& text) {
    auto parts = parse_int_list(text, /*allow_zero=*/true);
    for (size_t k = 0; k + 1 < parts.size(); ++k)
        if (parts[k] < parts[k + 1])
            throw UsageError("malformed partition \"" + text + "\": parts increase at entry " +
                             std::to_string(k + 2));
    // trailing zeros are fine; interior zeros are caught by the increase check
    return Partition(std::move(parts));
}

json to_json(const Partition& p) { return json(p.parts()); }
json to_json(const DominantWeight& w) { return json(w.coeffs()); }

json abacus_json(const Partition& lam, Int e, int r) {
    const auto ab = abacus_of(beta_numbers(lam, r), e);
    return json{{"e", ab.e}, {"positions", ab.positions}};
}

json to_json(const ShiVector& shi) {
    json entries = json::array();
    size_t idx = 0;
    for (const auto& root : positive_roots(shi.rank())) {
        entries.push_back({root.i, root.j, shi.entries()[idx]});
        ++idx;
    }
    return json{{"e", shi.level()}, {"entries", entries}};
}

json to_json(const MultiPartition& q) {
    json arr = json::array();
    for (const auto& c : q.components()) arr.push_back(to_json(c));
    return arr;
}

json to_json(const CheckReport& report) {
    return json{{"check", report.check},
                {"status", report.pass ? "pass" : "fail"},
                {"witnesses", report.witnesses}};
}

json entry_json(const DominantWeight& w, const ComponentKey& key) {
    return json{{"weight", w.coeffs()},
                {"mu", key.mu.parts()},
                {"gaps", key.gaps},
                {"quotient", to_json(key.quotient)}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + path);
    file << content;
}

int default_rank(const Partition& lam, int floor_rank) {
    return std::max(lam.length(), floor_rank);
}

struct VerifyOutcome {
    int checks = 0;
    int failures = 0;
    json reports = json::array();
};

void show_report(const CheckReport& report, const std::string& context, VerifyOutcome& outcome,
                 std::ostream& out, bool json_mode) {
    ++outcome.checks;
    if (!report.pass) ++outcome.failures;
    if (json_mode) {
        json r = to_json(report);
        r["context"] = context;
        outcome.reports.push_back(std::move(r));
        return;
    }
    out << (report.pass ? "PASS " : "FAIL ") << report.check << ' ' << context;
    if (!report.pass) {
        out << '\n';
        for (const auto& w : report.witnesses) out << "  " << w << '\n';
    } else {
        out << '\n';
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dominant-weight patterns of partitions with fixed e-core data"};
    app.require_subcommand(1);

    // shared option storage
    int rank = 0;
    Int level = 0, eweight = 0;
    bool json_mode = false;
    bool allow_degenerate = false;
    bool parallel = false;
    std::string out_path;
    std::string partition_text, label_text, highlight_name;
    int generator = 0;
    Int runner = 0;
    std::string verify_what = "all";
    Int wmax = 6;
    Int emax = 0;
    int parts_max = 0;
    Int part_max = 8;
    bool show_labels = false;
    double radius = 4.0;

    const auto add_rank = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("-r,--rank", rank, "number of beta numbers (rank)");
        if (required) opt->required();
    };
    const auto add_level = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("-e,--level", level, "number of runners / level");
        if (required) opt->required();
    };
    const auto add_eweight = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("-w,--eweight", eweight, "e-weight");
        if (required) opt->required();
    };
    const auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_mode, "emit JSON");
        cmd->add_option("--out", out_path, "write the output here instead of stdout");
    };

    bool show_abacus = false;

    auto* cmd_core = app.add_subcommand("core", "e-core of a partition");
    add_level(cmd_core, true);
    add_rank(cmd_core, false);
    add_json(cmd_core);
    cmd_core->add_flag("--abacus", show_abacus, "print the bead diagram first");
    cmd_core->add_option("partition", partition_text, "comma-separated parts")->required();

    auto* cmd_weight = app.add_subcommand("weight", "e-weight of a partition");
    add_level(cmd_weight, true);
    add_rank(cmd_weight, false);
    add_json(cmd_weight);
    cmd_weight->add_option("partition", partition_text)->required();

    auto* cmd_quotient = app.add_subcommand("quotient", "e-quotient of a partition");
    add_level(cmd_quotient, true);
    add_rank(cmd_quotient, false);
    add_json(cmd_quotient);
    cmd_quotient->add_flag("--abacus", show_abacus, "print the bead diagram first");
    cmd_quotient->add_option("partition", partition_text)->required();

    auto* cmd_omega = app.add_subcommand("omega", "dominant weight of a partition");
    add_rank(cmd_omega, false);
    add_json(cmd_omega);
    cmd_omega->add_option("partition", partition_text)->required();

    auto* cmd_shi = app.add_subcommand("shi", "Shi vector of a partition's weight");
    add_level(cmd_shi, true);
    add_rank(cmd_shi, false);
    add_json(cmd_shi);
    cmd_shi->add_option("partition", partition_text)->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate the block weight set");
    add_rank(cmd_enum, true);
    add_level(cmd_enum, true);
    add_eweight(cmd_enum, true);
    add_json(cmd_enum);
    cmd_enum->add_flag("--allow-degenerate", allow_degenerate, "accept non-generic triples");

    auto* cmd_count = app.add_subcommand("count", "size of the block weight set");
    add_rank(cmd_count, true);
    add_level(cmd_count, true);
    add_eweight(cmd_count, true);
    add_json(cmd_count);
    cmd_count->add_flag("--allow-degenerate", allow_degenerate, "accept non-generic triples");

    auto* cmd_vertices = app.add_subcommand("vertices", "boundary and interior affine vertices");
    add_rank(cmd_vertices, true);
    add_level(cmd_vertices, true);
    add_eweight(cmd_vertices, true);
    add_json(cmd_vertices);

    auto* cmd_pairs = app.add_subcommand("pairs", "bad and good pairs of affine vertices");
    add_rank(cmd_pairs, true);
    add_level(cmd_pairs, true);
    add_eweight(cmd_pairs, true);
    add_json(cmd_pairs);

    auto* cmd_patterns = app.add_subcommand("patterns", "stingray and regular patterns");
    add_rank(cmd_patterns, true);
    add_level(cmd_patterns, true);
    add_eweight(cmd_patterns, true);
    add_json(cmd_patterns);

    auto* cmd_alcoves = app.add_subcommand("alcoves", "alcove labels of the block weight set");
    add_rank(cmd_alcoves, true);
    add_eweight(cmd_alcoves, true);
    auto* alcove_level =
        cmd_alcoves->add_option("-e,--level", level, "include Shi vectors at this level");
    add_json(cmd_alcoves);

    auto* cmd_act = app.add_subcommand("act", "apply an affine Weyl generator to a label");
    cmd_act->add_option("--label", label_text, "comma-separated weak composition")->required();
    cmd_act->add_option("--gen", generator, "generator index in [0, r-1]")->required();
    add_json(cmd_act);

    auto* cmd_verify = app.add_subcommand("verify", "run verification batteries");
    cmd_verify->add_option("what", verify_what,
                           "all|embedding|tails|regular|walls|stability")
        ->check(CLI::IsMember({"all", "embedding", "tails", "regular", "walls", "stability"}));
    add_rank(cmd_verify, false);
    add_level(cmd_verify, false);
    cmd_verify->add_option("--wmax", wmax, "sweep e-weights 0..wmax (default 6)");
    cmd_verify->add_option("--emax", emax, "sweep levels e..emax (default e)");
    cmd_verify->add_option("--parts-max", parts_max, "stability: max parts (default rank)");
    cmd_verify->add_option("--part-max", part_max, "stability: max part size (default 8)");
    cmd_verify->add_flag("--parallel", parallel, "parallelize the sweeps");
    add_json(cmd_verify);

    auto* cmd_insert = app.add_subcommand("insert-runner", "insert an empty runner");
    add_level(cmd_insert, true);
    add_rank(cmd_insert, false);
    cmd_insert->add_option("-k,--runner", runner, "insert to the left of this runner")->required();
    add_json(cmd_insert);
    cmd_insert->add_option("partition", partition_text)->required();

    auto* cmd_plot = app.add_subcommand("plot", "render the block weight set as SVG");
    add_rank(cmd_plot, true);
    add_level(cmd_plot, true);
    add_eweight(cmd_plot, true);
    add_json(cmd_plot);
    cmd_plot->add_flag("--labels", show_labels, "label the alcoves of the (1,1,1) component");
    cmd_plot->add_option("--highlight", highlight_name, "vertices|pairs|stingray|regular")
        ->check(CLI::IsMember({"vertices", "pairs", "stingray", "regular"}));
    cmd_plot->add_option("--radius", radius, "point radius in user units");
    cmd_plot->add_flag("--allow-degenerate", allow_degenerate, "accept non-generic triples");

    std::vector<const char*> argv;
    argv.push_back("wpat");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        std::ostringstream sink;
        std::ostream& res = sink;
        if (*cmd_core) {
            const auto lam = parse_partition_text(partition_text);
            const int r = rank ? rank : default_rank(lam, 1);
            const auto core = e_core(lam, level, r);
            if (show_abacus) res << render_text(abacus_of(beta_numbers(lam, r), level));
            if (json_mode)
                emit(res, json{{"schema", "wpat/core/1"},
                               {"partition", to_json(lam)},
                               {"e", level},
                               {"rank", r},
                               {"abacus", abacus_json(lam, level, r)},
                               {"core", to_json(core)}});
            else
                res << core.str() << '\n';
        } else if (*cmd_weight) {
            const auto lam = parse_partition_text(partition_text);
            const int r = rank ? rank : default_rank(lam, 1);
            const Int w = e_weight(lam, level, r);
            if (json_mode)
                emit(res, json{{"schema", "wpat/weight/1"},
                               {"partition", to_json(lam)},
                               {"e", level},
                               {"rank", r},
                               {"weight", w}});
            else
                res << w << '\n';
        } else if (*cmd_quotient) {
            const auto lam = parse_partition_text(partition_text);
            const int r = rank ? rank : default_rank(lam, 1);
            const auto q = e_quotient(lam, level, r);
            if (show_abacus) res << render_text(abacus_of(beta_numbers(lam, r), level));
            if (json_mode) {
                json comps = json::array();
                for (const auto& c : q.components) comps.push_back(to_json(c));
                emit(res, json{{"schema", "wpat/quotient/1"},
                               {"partition", to_json(lam)},
                               {"e", level},
                               {"rank", r},
                               {"abacus", abacus_json(lam, level, r)},
                               {"quotient", comps}});
            } else {
                for (size_t i = 0; i < q.components.size(); ++i)
                    res << (i ? "|" : "") << q.components[i].str();
                res << '\n';
            }
        } else if (*cmd_omega) {
            const auto lam = parse_partition_text(partition_text);
            const int r = rank ? rank : default_rank(lam, 2);
            const auto w = omega(lam, r);
            if (json_mode)
                emit(res, json{{"schema", "wpat/omega/1"},
                               {"partition", to_json(lam)},
                               {"rank", r},
                               {"omega", to_json(w)}});
            else
                res << w.str() << '\n';
        } else if (*cmd_shi) {
            const auto lam = parse_partition_text(partition_text);
            const int r = rank ? rank : default_rank(lam, 2);
            const auto shi = shi_vector(omega(lam, r), level);
            if (json_mode)
                emit(res, json{{"schema", "wpat/shi/1"},
                               {"partition", to_json(lam)},
                               {"rank", r},
                               {"shi", to_json(shi)}});
            else
                res << shi.str() << '\n';
        } else if (*cmd_enum) {
            const GenericTriple t{rank, level, eweight};
            const auto set = enumerate_block_weights(t, allow_degenerate);
            if (json_mode) {
                json entries = json::array();
                for (const auto& [w, key] : set.entries()) entries.push_back(entry_json(w, key));
                emit(res, json{{"schema", "wpat/enumerate/1"},
                               {"r", t.r},
                               {"e", t.e},
                               {"w", t.w},
                               {"entries", entries}});
            } else {
                for (const auto& [w, key] : set.entries()) {
                    res << w.str() << "  mu=" << key.mu.str() << "  gaps=";
                    for (size_t i = 0; i < key.gaps.size(); ++i)
                        res << (i ? "," : "") << key.gaps[i];
                    res << "  quot=" << key.quotient.str() << '\n';
                }
            }
        } else if (*cmd_count) {
            const GenericTriple t{rank, level, eweight};
            const auto n = count_block_weights(t, allow_degenerate);
            if (json_mode)
                emit(res, json{{"schema", "wpat/count/1"},
                               {"r", t.r},
                               {"e", t.e},
                               {"w", t.w},
                               {"count", n}});
            else
                res << n << '\n';
        } else if (*cmd_vertices) {
            const GenericTriple t{rank, level, eweight};
            const auto boundary = boundary_affine_vertices(t);
            const auto interior = interior_affine_vertices(t);
            if (json_mode) {
                json b = json::array(), in = json::array();
                for (const auto& v : boundary) b.push_back(to_json(v));
                for (const auto& v : interior) in.push_back(to_json(v));
                emit(res, json{{"schema", "wpat/vertices/1"},
                               {"r", t.r},
                               {"e", t.e},
                               {"w", t.w},
                               {"boundary", b},
                               {"interior", in}});
            } else {
                for (const auto& v : boundary) res << "boundary " << v.str() << '\n';
                for (const auto& v : interior) res << "interior " << v.str() << '\n';
            }
        } else if (*cmd_pairs) {
            const GenericTriple t{rank, level, eweight};
            const auto pairs = classify_pairs(t);
            if (json_mode) {
                json bad = json::array(), good = json::array();
                for (const auto& p : pairs)
                    (p.kind == PairKind::bad ? bad : good)
                        .push_back(json{to_json(p.v1), to_json(p.v2)});
                emit(res, json{{"schema", "wpat/pairs/1"},
                               {"r", t.r},
                               {"e", t.e},
                               {"w", t.w},
                               {"bad", bad},
                               {"good", good}});
            } else {
                for (const auto& p : pairs)
                    res << (p.kind == PairKind::bad ? "bad (" : "good (") << p.v1.str() << ", "
                        << p.v2.str() << ")\n";
            }
        } else if (*cmd_patterns) {
            const GenericTriple t{rank, level, eweight};
            const auto weights = block_weights_only(t);
            const auto pairs = classify_pairs(t);
            json stingrays = json::array(), regulars = json::array();
            for (const auto& p : pairs) {
                if (p.kind == PairKind::bad) {
                    const auto region = stingray(t, p, weights);
                    if (json_mode) {
                        json body = json::array(), tail = json::array();
                        for (const auto& u : region.body) body.push_back(to_json(u));
                        for (const auto& u : region.tail) tail.push_back(to_json(u));
                        stingrays.push_back(json{{"v1", to_json(p.v1)},
                                                 {"v2", to_json(p.v2)},
                                                 {"body", body},
                                                 {"tail", tail}});
                    } else {
                        res << "stingray (" << p.v1.str() << ", " << p.v2.str() << "): body "
                            << region.body.size() << " points, tail " << region.tail.size()
                            << " points\n";
                    }
                } else {
                    std::vector<DominantWeight> points;
                    for (const auto& u : cell_points(p.v1, t.e, /*open=*/true))
                        if (weights.count(u)) points.push_back(u);
                    if (json_mode) {
                        json pts = json::array();
                        for (const auto& u : points) pts.push_back(to_json(u));
                        regulars.push_back(
                            json{{"v1", to_json(p.v1)}, {"v2", to_json(p.v2)}, {"points", pts}});
                    } else {
                        res << "regular (" << p.v1.str() << ", " << p.v2.str() << "): "
                            << points.size() << " points\n";
                    }
                }
            }
            if (json_mode)
                emit(res, json{{"schema", "wpat/patterns/1"},
                               {"r", t.r},
                               {"e", t.e},
                               {"w", t.w},
                               {"stingrays", stingrays},
                               {"regular", regulars}});
        } else if (*cmd_alcoves) {
            const bool with_shi = alcove_level->count() > 0;
            const auto labels = enumerate_labels(rank, eweight);
            const auto fundamental = fundamental_label(rank, eweight);
            if (json_mode) {
                json arr = json::array();
                for (const auto& label : labels) {
                    json item{{"label", label.parts()}, {"fundamental", label == fundamental}};
                    if (with_shi) item["shi"] = to_json(label_to_shi(label, level));
                    arr.push_back(std::move(item));
                }
                json doc{{"schema", "wpat/alcoves/1"}, {"r", rank}, {"w", eweight}, {"labels", arr}};
                if (with_shi) doc["e"] = level;
                emit(res, doc);
            } else {
                for (const auto& label : labels) {
                    res << (label == fundamental ? "* " : "  ") << label.str();
                    if (with_shi) res << "  " << label_to_shi(label, level).str();
                    res << '\n';
                }
            }
        } else if (*cmd_act) {
            const auto parts = parse_int_list(label_text, /*allow_zero=*/true);
            const WeakComposition label(parts);
            const auto image = apply_generator(label, generator);
            if (json_mode)
                emit(res, json{{"schema", "wpat/act/1"},
                               {"label", label.parts()},
                               {"generator", generator},
                               {"result", image ? json(image->parts()) : json(nullptr)}});
            else
                res << (image ? image->str() : "undefined") << '\n';
        } else if (*cmd_verify) {
            const int r = rank ? rank : 3;
            const Int e_lo = level ? level : 8;
            const Int e_hi = emax ? emax : e_lo;
            if (e_hi < e_lo) throw UsageError("--emax must be at least the level");
            VerifyOutcome outcome;
            const auto context = [&](Int e, Int w) {
                return "(" + std::to_string(r) + "," + std::to_string(e) + "," +
                       std::to_string(w) + ")";
            };
            for (Int e = e_lo; e <= e_hi; ++e) {
                const bool want_sets = verify_what == "all" || verify_what == "tails" ||
                                       verify_what == "regular";
                if (verify_what == "all" || verify_what == "embedding") {
                    for (Int w = 0; w <= wmax; ++w)
                        show_report(verify_embedding({r, e, w}),
                                    context(e, w) + "->" + context(e, w + 1), outcome, res,
                                    json_mode);
                }
                if (want_sets) {
                    for (Int w = 0; w <= wmax; ++w) {
                        const GenericTriple t{r, e, w};
                        const auto weights =
                            parallel ? block_weights_parallel(t) : block_weights_only(t);
                        if (verify_what == "all" || verify_what == "tails")
                            show_report(verify_tail_separation(t, weights), context(e, w),
                                        outcome, res, json_mode);
                        if (verify_what == "all" || verify_what == "regular") {
                            const auto report = r == 3
                                                    ? verify_regular_pattern(t, weights)
                                                    : verify_regular_pattern_general(t, weights);
                            show_report(report, context(e, w), outcome, res, json_mode);
                        }
                    }
                }
                if (verify_what == "all" || verify_what == "walls") {
                    const auto sweep = parallel ? wall_crossing_sweep(r, e, wmax)
                                                : wall_crossing_sweep_serial(r, e, wmax);
                    CheckReport report{"wall-crossing"};
                    for (const auto& f : sweep.failures) report.fail(f);
                    if (report.pass)
                        report.note(std::to_string(sweep.crossings) + " crossings checked");
                    show_report(report,
                                "labels of size <= " + std::to_string(wmax) + " at level " +
                                    std::to_string(e),
                                outcome, res, json_mode);
                }
                if (verify_what == "all" || verify_what == "stability") {
                    const int mp = parts_max ? parts_max : r;
                    const auto sweep = parallel
                                           ? shi_stability_sweep(mp, part_max, {e})
                                           : shi_stability_sweep_serial(mp, part_max, {e});
                    CheckReport report{"shi-stability"};
                    for (const auto& f : sweep.failures) report.fail(f);
                    if (report.pass)
                        report.note(std::to_string(sweep.cases) + " insertions checked");
                    show_report(report,
                                "partitions in [" + std::to_string(mp) + " parts <= " +
                                    std::to_string(part_max) + "], level " + std::to_string(e),
                                outcome, res, json_mode);
                }
            }
            if (json_mode)
                emit(res, json{{"schema", "wpat/verify/1"},
                               {"checks", outcome.reports},
                               {"status", outcome.failures == 0 ? "pass" : "fail"}});
            else
                res << outcome.checks - outcome.failures << '/' << outcome.checks
                    << " checks passed\n";
            write_output(out_path, sink.str(), out);
            return outcome.failures == 0 ? 0 : 1;
        } else if (*cmd_insert) {
            const auto lam = parse_partition_text(partition_text);
            const int r = rank ? rank : default_rank(lam, 1);
            const auto plus = insert_empty_runner(lam, {level, r, runner});
            if (json_mode)
                emit(res, json{{"schema", "wpat/insert-runner/1"},
                               {"partition", to_json(lam)},
                               {"e", level},
                               {"rank", r},
                               {"k", runner},
                               {"result", to_json(plus)}});
            else
                res << plus.str() << '\n';
        } else if (*cmd_plot) {
            const GenericTriple t{rank, level, eweight};
            const auto set = enumerate_block_weights(t, allow_degenerate);
            auto opts = RenderOptions::defaults();
            opts.show_alcove_labels = show_labels;
            opts.point_radius = radius;
            if (highlight_name == "vertices") opts.highlight = Highlight::vertices;
            else if (highlight_name == "pairs") opts.highlight = Highlight::pairs;
            else if (highlight_name == "stingray") opts.highlight = Highlight::stingray;
            else if (highlight_name == "regular") opts.highlight = Highlight::regular;
            const auto svg = render_svg(t, set, opts);
            if (json_mode)
                emit(res, json{{"schema", "wpat/plot/1"},
                               {"r", t.r},
                               {"e", t.e},
                               {"w", t.w},
                               {"svg", svg}});
            else
                res << svg;
        }
        write_output(out_path, sink.str(), out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return 3;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace wpat
