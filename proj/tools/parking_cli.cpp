// Command-line front end: recognition, conversion, enumeration, verification, labeling and
// rendering. Exit codes: 0 success, 1 domain-level failure, 2 usage or parse error.

#include "parking/bijections.hpp"
#include "parking/cayley.hpp"
#include "parking/errors.hpp"
#include "parking/parallel.hpp"
#include "parking/render.hpp"
#include "parking/serialization.hpp"
#include "parking/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace {

using parking::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Input that could not be parsed at all (JSON syntax, unreadable file).
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Domain-level failure with a machine-readable diagnostic.
struct DomainFailure : std::runtime_error {
    DomainFailure(const std::string& what, Json diagnostic)
        : std::runtime_error(what), diagnostic(std::move(diagnostic)) {}
    Json diagnostic;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open input file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseFailure(std::string("malformed JSON: ") + e.what());
    }
}

// ---- check ----------------------------------------------------------------

struct CheckOptions {
    std::optional<std::string> sequence;
    std::string input;
};

int run_check(const CheckOptions& opt) {
    std::vector<int> seq;
    try {
        seq = opt.sequence ? parking::io::integer_list(*opt.sequence)
                           : parking::io::preference_sequence_from_json(
                                 parse_json(read_input(opt.input)));
        const auto outcome = parking::check_by_simulation(seq);
        const bool sorted_ok = parking::check_by_sort(seq);

        if (outcome.success) {
            std::string assignment;
            for (std::size_t i = 0; i < outcome.assignment.size(); ++i) {
                assignment += (i ? "," : "") + std::to_string(outcome.assignment[i]);
            }
            std::cout << "parking function; assignment " << assignment << "\n";
        } else {
            std::cout << "not a parking function; car " << *outcome.first_failed_car
                      << " fails\n";
        }
        std::cout << "simulation: " << (outcome.success ? "parks" : "fails") << "\n"
                  << "sorted criterion: " << (sorted_ok ? "parks" : "fails") << "\n";
        if (outcome.success != sorted_ok) {
            std::cerr << "error: recognizers disagree\n";
            return kExitDomain;
        }
        return outcome.success ? kExitOk : kExitDomain;
    } catch (const parking::ValidationError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
}

// ---- convert --------------------------------------------------------------

struct ConvertOptions {
    std::string from;
    std::string to;
    std::string input;
    bool trace = false;
};

struct Converted {
    Json value;
    std::optional<Json> trace;
};

parking::ParkingGraph certified_graph(const Json& j) {
    const auto g = parking::io::mixed_graph_from_json(j);
    auto result = parking::check_source_sink(g);
    if (const auto* v = std::get_if<parking::Violation>(&result)) {
        throw DomainFailure("not a parking graph", Json{{"violation", parking::io::to_json(*v)}});
    }
    return std::get<parking::ParkingGraph>(std::move(result));
}

parking::RegionSignVector region_input(const Json& j) {
    if (j.is_object() && j.contains("coords")) {
        const auto p = parking::io::point_from_json(j);
        auto sv = parking::sign_vector_of_point(p);
        if (const auto* on = std::get_if<parking::OnHyperplane>(&sv)) {
            throw DomainFailure("point lies on a hyperplane",
                                Json{{"on_hyperplane", {{"j", on->j},
                                                        {"k", on->k},
                                                        {"value", parking::to_string(on->value)}}}});
        }
        return std::get<parking::RegionSignVector>(std::move(sv));
    }
    auto sv = parking::io::sign_vector_from_json(j);
    const auto sys = parking::system_of_sign_vector(sv);
    auto feasible = parking::feasible_interior(sys);
    if (const auto* cert = std::get_if<parking::Infeasible>(&feasible)) {
        throw DomainFailure("sign vector describes no region", parking::io::to_json(*cert, sys));
    }
    return sv;
}

Json region_output(const parking::ParkingGraph& p) {
    const auto r = parking::psi(p);
    return parking::io::to_json(r.signs, r.witness);
}

parking::ParkingFunction to_parking_function(const std::string& kind, const Json& j) {
    if (kind == "pf") return parking::io::parking_function_from_json(j);
    if (kind == "graph") return parking::phi(certified_graph(j));
    if (kind == "region") return parking::pak_stanley_label(region_input(j));
    if (kind == "tree") return parking::parking_function_of_tree(parking::io::tree_from_json(j));
    return parking::pollak_inverse(parking::io::pollak_code_from_json(j));
}

Converted from_parking_function(const std::string& kind, const parking::ParkingFunction& x,
                                bool want_trace) {
    if (kind == "pf") return {parking::io::to_json(x), std::nullopt};
    if (kind == "tree") return {parking::io::to_json(parking::tree_of_parking_function(x)), std::nullopt};
    if (kind == "code") return {parking::io::to_json(parking::pollak(x)), std::nullopt};

    auto built = parking::phi_inverse(x);
    std::optional<Json> trace;
    if (want_trace) trace = parking::io::to_json(built.trace, built.priority);
    if (kind == "graph") return {parking::io::to_json(built.graph.graph()), trace};
    return {region_output(built.graph), trace};
}

int run_convert(const ConvertOptions& opt) {
    const Json input = parse_json(read_input(opt.input));
    Converted out;
    if (opt.from == "graph" && opt.to == "region") {
        out.value = region_output(certified_graph(input));
    } else if (opt.from == "region" && opt.to == "graph") {
        out.value = parking::io::to_json(parking::psi_inverse(region_input(input)).graph());
    } else if (opt.from == "graph" && opt.to == "graph") {
        out.value = parking::io::to_json(certified_graph(input).graph());
    } else if (opt.from == "region" && opt.to == "region") {
        out.value = region_output(parking::psi_inverse(region_input(input)));
    } else {
        out = from_parking_function(opt.to, to_parking_function(opt.from, input), opt.trace);
    }

    if (opt.trace) {
        Json wrapped{{"result", out.value}};
        wrapped["trace"] = out.trace ? *out.trace : Json(nullptr);
        std::cout << parking::io::canonical(wrapped) << "\n";
    } else {
        std::cout << parking::io::canonical(out.value) << "\n";
    }
    return kExitOk;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateOptions {
    std::string kind;
    int n = 0;
    bool count_only = false;
    bool bounded_only = false;
    int jobs = 1;
};

int run_enumerate(const EnumerateOptions& opt) {
    if (opt.bounded_only && opt.kind != "region") {
        std::cerr << "usage error: --bounded-only applies to --kind region only\n";
        return kExitUsage;
    }
    std::vector<std::string> lines;
    std::size_t count = 0;
    auto emit = [&](const Json& j) {
        ++count;
        if (!opt.count_only) lines.push_back(parking::io::canonical(j));
    };

    if (opt.kind == "pf") {
        if (opt.n < 1) throw parking::ValidationError("n must be at least 1");
        if (opt.n > parking::kDefaultParkingFunctionCap) {
            throw parking::ResourceLimitError("n exceeds the parking-function cap");
        }
        const auto all = parking::collect_partitioned<parking::ParkingFunction>(
            static_cast<std::size_t>(opt.n), opt.jobs, [&](std::size_t part, auto& out) {
                parking::for_each_parking_function_with_first(
                    opt.n, static_cast<int>(part) + 1,
                    [&](const parking::ParkingFunction& x) { out.push_back(x); });
            });
        for (const auto& x : all) emit(parking::io::to_json(x));
    } else if (opt.kind == "graph") {
        std::vector<parking::ParkingGraph> all;
        if (opt.n < 2) {
            all = parking::enumerate_parking_graphs(opt.n);
        } else {
            if (opt.n > parking::kDefaultParkingGraphCap) {
                throw parking::ResourceLimitError("n exceeds the parking-graph cap");
            }
            all = parking::collect_partitioned<parking::ParkingGraph>(
                3, opt.jobs, [&](std::size_t part, auto& out) {
                    parking::for_each_parking_graph_with_first(
                        opt.n, static_cast<parking::EdgeKind>(part),
                        [&](const parking::ParkingGraph& p) { out.push_back(p); });
                });
        }
        for (const auto& p : all) emit(parking::io::to_json(p.graph()));
    } else {
        for (const auto& r : parking::enumerate_regions(opt.n, parking::kDefaultRegionCap, opt.jobs)) {
            if (opt.bounded_only && !parking::is_relatively_bounded(r.signs)) continue;
            emit(parking::io::to_json(r.signs, r.witness));
        }
    }

    if (opt.count_only) {
        std::cout << count << "\n";
    } else {
        for (const auto& line : lines) std::cout << line << "\n";
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    int n = 0;
    std::string suite = "all";
    int jobs = 1;
};

int run_verify(const VerifyOptions& opt) {
    const auto results = parking::run_suite(parking::parse_suite(opt.suite), opt.n, opt.jobs);
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    for (const auto& r : results) {
        Json line{{"check", r.name},
                  {"n", opt.n},
                  {"status", std::string(parking::to_string(r.status))},
                  {"expected", r.expected},
                  {"actual", r.actual},
                  {"detail", r.detail}};
        std::cout << parking::io::canonical(line) << "\n";
        switch (r.status) {
            case parking::CheckResult::Status::Pass: ++passed; break;
            case parking::CheckResult::Status::Fail: ++failed; break;
            case parking::CheckResult::Status::Skip: ++skipped; break;
        }
    }
    std::cout << "summary: " << passed << " passed, " << failed << " failed, " << skipped
              << " skipped\n";
    if (failed > 0) {
        std::cerr << "failed checks:";
        for (const auto& r : results) {
            if (r.status == parking::CheckResult::Status::Fail) std::cerr << " " << r.name;
        }
        std::cerr << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

// ---- label / render -------------------------------------------------------

int run_label(const std::string& point_text) {
    parking::RationalPoint p;
    try {
        p = parking::io::point_from_list(point_text);
    } catch (const parking::ValidationError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << parking::io::canonical(parking::io::to_json(parking::pak_stanley_label(p)))
              << "\n";
    return kExitOk;
}

int run_render(int n, const std::string& out_path, int jobs) {
    if (n != 3) {
        std::cerr << "error: rendering is only supported for n = 3\n";
        return kExitDomain;
    }
    const std::string svg = parking::render_shi3_svg(jobs);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitDomain;
    }
    out << svg;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parking functions, parking graphs and Shi regions"};
    app.require_subcommand(1);

    int jobs = 1;
    auto add_jobs = [&jobs](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads (default from PARK_JOBS)")
            ->envname("PARK_JOBS")
            ->check(CLI::Range(1, 256));
    };

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "recognize a parking function");
    check->add_option("sequence", check_opt.sequence, "inline sequence such as 2,1,1");
    check->add_option("--in", check_opt.input, "pf JSON file (default: stdin)");

    ConvertOptions convert_opt;
    const std::vector<std::string> kinds{"pf", "graph", "region", "tree", "code"};
    auto* convert = app.add_subcommand("convert", "convert between object families");
    convert->add_option("--from", convert_opt.from)->required()->check(CLI::IsMember(kinds));
    convert->add_option("--to", convert_opt.to)->required()->check(CLI::IsMember(kinds));
    convert->add_option("--in", convert_opt.input, "input JSON file (default: stdin)");
    convert->add_flag("--trace", convert_opt.trace, "attach the graph-construction trace");

    EnumerateOptions enum_opt;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate an object family");
    enumerate->add_option("--kind", enum_opt.kind)
        ->required()
        ->check(CLI::IsMember({"pf", "graph", "region"}));
    enumerate->add_option("--n", enum_opt.n)->required();
    enumerate->add_flag("--count-only", enum_opt.count_only);
    enumerate->add_flag("--bounded-only", enum_opt.bounded_only);
    add_jobs(enumerate);

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--n", verify_opt.n)->required();
    verify->add_option("--suite", verify_opt.suite)
        ->check(CLI::IsMember({"all", "counts", "roundtrip", "lemmas", "oracle", "pakstanley"}));
    add_jobs(verify);

    std::string point_text;
    auto* label = app.add_subcommand("label", "parking-function label of a point's region");
    label->add_option("--point", point_text, "comma-separated rationals, e.g. 6/5,1/2,0")
        ->required();

    int render_n = 3;
    std::string render_out;
    auto* render = app.add_subcommand("render", "SVG of the labeled n = 3 arrangement");
    render->add_option("--n", render_n)->required();
    render->add_option("--out", render_out)->required();
    add_jobs(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return run_check(check_opt);
        if (*convert) return run_convert(convert_opt);
        if (*enumerate) {
            enum_opt.jobs = jobs;
            return run_enumerate(enum_opt);
        }
        if (*verify) {
            verify_opt.jobs = jobs;
            return run_verify(verify_opt);
        }
        if (*label) return run_label(point_text);
        if (*render) return run_render(render_n, render_out, jobs);
    } catch (const ParseFailure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainFailure& e) {
        std::cerr << "error: " << e.what() << ": " << parking::io::canonical(e.diagnostic) << "\n";
        return kExitDomain;
    } catch (const parking::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
