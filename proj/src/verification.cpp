#include "parking/verification.hpp"

#include "parking/bijections.hpp"
#include "parking/cayley.hpp"
#include "parking/errors.hpp"
#include "parking/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace parking {

namespace {

using Status = CheckResult::Status;

// Lazily built object families for one n.
class Families {
public:
    Families(int n, int jobs) : n_(n), jobs_(jobs) {}

    int n() const { return n_; }

    const std::vector<ParkingFunction>& parking_functions() {
        if (!pfs_) {
            pfs_ = collect_partitioned<ParkingFunction>(
                static_cast<std::size_t>(n_), jobs_, [&](std::size_t part, auto& out) {
                    for_each_parking_function_with_first(
                        n_, static_cast<int>(part) + 1,
                        [&](const ParkingFunction& x) { out.push_back(x); });
                });
        }
        return *pfs_;
    }

    const std::vector<ParkingGraph>& parking_graphs() {
        if (!graphs_) {
            if (n_ < 2) {
                graphs_ = enumerate_parking_graphs(n_);
            } else {
                graphs_ = collect_partitioned<ParkingGraph>(3, jobs_, [&](std::size_t part, auto& out) {
                    for_each_parking_graph_with_first(
                        n_, static_cast<EdgeKind>(part),
                        [&](const ParkingGraph& p) { out.push_back(p); });
                });
            }
        }
        return *graphs_;
    }

    const std::vector<Region>& regions() {
        if (!regions_) regions_ = enumerate_regions(n_, kDefaultRegionCap, jobs_);
        return *regions_;
    }

private:
    int n_;
    int jobs_;
    std::optional<std::vector<ParkingFunction>> pfs_;
    std::optional<std::vector<ParkingGraph>> graphs_;
    std::optional<std::vector<Region>> regions_;
};

BigInt power(int base, int exponent) {
    if (exponent == 0) return 1;  // includes 0^0
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

class Runner {
public:
    Runner(int n, int jobs) : families_(n, jobs) {}

    std::vector<CheckResult> take() { return std::move(results_); }

    // Runs `body` unless n exceeds `cap`; exceptions from the library count as failures.
    void check(const std::string& name, int cap, const std::function<CheckResult()>& body) {
        if (families_.n() > cap) {
            results_.push_back({name, Status::Skip, "", "", "n exceeds enumeration cap " +
                                                                std::to_string(cap)});
            return;
        }
        try {
            CheckResult r = body();
            r.name = name;
            results_.push_back(std::move(r));
        } catch (const std::exception& e) {
            results_.push_back({name, Status::Fail, "", "", std::string("exception: ") + e.what()});
        }
    }

    static CheckResult equal(const std::string& expected, const std::string& actual,
                             std::string detail = {}) {
        return {"", expected == actual ? Status::Pass : Status::Fail, expected, actual,
                std::move(detail)};
    }

    static CheckResult violations(std::size_t bad, std::size_t total, std::string first_bad = {}) {
        CheckResult r{"", bad == 0 ? Status::Pass : Status::Fail, "0 violations",
                      std::to_string(bad) + " violations", std::to_string(total) + " cases"};
        if (!first_bad.empty()) r.detail += "; first: " + first_bad;
        return r;
    }

    Families& families() { return families_; }

private:
    Families families_;
    std::vector<CheckResult> results_;
};

void run_counts(Runner& run) {
    auto& fam = run.families();
    const int n = fam.n();
    const std::string expected = count_parking_functions(n).str();

    run.check("counts.pf", kDefaultParkingFunctionCap, [&] {
        return Runner::equal(expected, std::to_string(fam.parking_functions().size()));
    });
    run.check("counts.graphs", kDefaultParkingGraphCap, [&] {
        return Runner::equal(expected, std::to_string(fam.parking_graphs().size()));
    });
    run.check("counts.regions", kDefaultRegionCap, [&] {
        return Runner::equal(expected, std::to_string(fam.regions().size()));
    });
    run.check("counts.bounded", kDefaultRegionCap, [&] {
        const auto bounded = std::ranges::count_if(
            fam.regions(), [](const Region& r) { return is_relatively_bounded(r.signs); });
        return Runner::equal(power(n - 1, n - 1).str(), std::to_string(bounded));
    });
    run.check("counts.trees", kDefaultParkingFunctionCap, [&] {
        // all Pruefer codes on n+1 vertices, decoded to distinct trees
        std::set<LabeledTree> trees;
        const int v = n + 1;
        std::vector<int> code(static_cast<std::size_t>(v - 2), 1);
        while (true) {
            trees.insert(prufer_decode(PruferCode(v, code)));
            std::size_t pos = code.size();
            while (pos > 0 && code[pos - 1] == v) code[--pos] = 1;
            if (pos == 0) break;
            ++code[pos - 1];
        }
        return Runner::equal(expected, std::to_string(trees.size()));
    });
}

void run_roundtrip(Runner& run) {
    auto& fam = run.families();

    run.check("roundtrip.phi_after_phi_inverse", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        std::string first;
        for (const auto& x : fam.parking_functions()) {
            if (phi(phi_inverse(x).graph) != x && bad++ == 0) first = join(x.entries());
        }
        return Runner::violations(bad, fam.parking_functions().size(), first);
    });
    run.check("roundtrip.phi_inverse_after_phi", kDefaultParkingGraphCap, [&] {
        std::size_t bad = 0;
        for (const auto& p : fam.parking_graphs()) {
            if (!(phi_inverse(phi(p)).graph == p)) ++bad;
        }
        return Runner::violations(bad, fam.parking_graphs().size());
    });
    run.check("roundtrip.psi_inverse_after_psi", kDefaultRegionCap, [&] {
        std::size_t bad = 0;
        for (const auto& p : fam.parking_graphs()) {
            if (!(psi_inverse(psi(p).signs) == p)) ++bad;
        }
        return Runner::violations(bad, fam.parking_graphs().size());
    });
    run.check("roundtrip.psi_after_psi_inverse", kDefaultRegionCap, [&] {
        std::size_t bad = 0;
        for (const auto& r : fam.regions()) {
            if (!(psi(psi_inverse(r.signs)).signs == r.signs)) ++bad;
        }
        return Runner::violations(bad, fam.regions().size());
    });
    run.check("roundtrip.witness_sign_vector", kDefaultRegionCap, [&] {
        std::size_t bad = 0;
        for (const auto& r : fam.regions()) {
            const auto sv = sign_vector_of_point(r.witness.point());
            if (!r.witness.verified() || !std::holds_alternative<RegionSignVector>(sv) ||
                !(std::get<RegionSignVector>(sv) == r.signs)) {
                ++bad;
            }
        }
        return Runner::violations(bad, fam.regions().size());
    });
    run.check("roundtrip.pollak", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        for (const auto& x : fam.parking_functions()) {
            if (pollak_inverse(pollak(x)) != x) ++bad;
        }
        return Runner::violations(bad, fam.parking_functions().size());
    });
    run.check("roundtrip.tree", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        for (const auto& x : fam.parking_functions()) {
            const LabeledTree t = tree_of_parking_function(x);
            if (parking_function_of_tree(t) != x || prufer_decode(prufer_encode(t)) != t) ++bad;
        }
        return Runner::violations(bad, fam.parking_functions().size());
    });
}

void run_lemmas(Runner& run) {
    auto& fam = run.families();
    const int n = fam.n();

    // Executing phi_inverse already asserts down-feeder negativity and tie-freeness.
    std::vector<PhiInverseResult> runs;
    auto results = [&]() -> const std::vector<PhiInverseResult>& {
        if (runs.empty()) {
            for (const auto& x : fam.parking_functions()) runs.push_back(phi_inverse(x));
        }
        return runs;
    };

    run.check("lemmas.algorithm_runs", kDefaultParkingFunctionCap, [&] {
        return Runner::violations(0, results().size());
    });
    run.check("lemmas.source_priority_total", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        for (const auto& r : results()) {
            std::vector<int> mags;
            for (int v : r.priority.values()) mags.push_back(-v);
            std::ranges::sort(mags);
            for (int i = 0; i < n; ++i) {
                if (mags[i] != i + 1) {
                    ++bad;
                    break;
                }
            }
        }
        return Runner::violations(bad, results().size());
    });
    run.check("lemmas.reverse_feeder_order", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        for (const auto& r : results()) {
            std::vector<int> feeders;
            for (const auto& e : r.trace.events) {
                if (const auto* up = std::get_if<UpStep>(&e)) feeders.push_back(up->feeder);
            }
            std::vector<int> by_priority(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) by_priority[n - r.priority.priority(v)] = v;
            if (feeders != by_priority) ++bad;
        }
        return Runner::violations(bad, results().size());
    });
    run.check("lemmas.up_edge_law", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        for (const auto& r : results()) {
            for (const auto& [i, j] : canonical_pairs(n)) {
                const bool higher = r.priority.priority(i) > r.priority.priority(j);
                if (higher != (r.graph.kind(i, j) == EdgeKind::Up)) {
                    ++bad;
                    break;
                }
            }
        }
        return Runner::violations(bad, results().size());
    });
    run.check("lemmas.down_feeder_law", kDefaultParkingFunctionCap, [&] {
        std::size_t bad = 0;
        std::size_t steps = 0;
        for (const auto& r : results()) {
            for (const auto& e : r.trace.events) {
                const auto* down = std::get_if<DownStep>(&e);
                if (!down) continue;
                ++steps;
                const int best = r.priority.priority(down->feeder);
                for (int c : down->candidates) {
                    if (c != down->feeder && r.priority.priority(c) >= best) {
                        ++bad;
                        break;
                    }
                }
            }
        }
        auto res = Runner::violations(bad, steps);
        res.detail += " (down steps)";
        return res;
    });
    run.check("lemmas.down_step_guard_activations", kDefaultParkingFunctionCap, [&] {
        long long total = 0;
        for (const auto& r : results()) total += r.guard_activations;
        return CheckResult{"", Status::Pass, "", std::to_string(total),
                           "count of down-step pairs skipped because an edge already existed"};
    });
}

void run_oracle(Runner& run) {
    auto& fam = run.families();
    const int n = fam.n();

    run.check("oracle.feasibility_vs_source_sink", kDefaultRegionCap, [&] {
        std::size_t bad = 0;
        std::size_t total = 0;
        std::vector<Sign> signs(pair_count(n), Sign::Below);
        while (true) {
            ++total;
            const RegionSignVector sv(n, signs);
            const bool feasible =
                std::holds_alternative<Witness>(feasible_interior(system_of_sign_vector(sv)));
            std::vector<EdgeKind> kinds;
            for (Sign s : signs) kinds.push_back(kind_of_sign(s));
            const bool accepted =
                std::holds_alternative<ParkingGraph>(check_source_sink(MixedGraph(n, kinds)));
            if (feasible != accepted) ++bad;
            std::size_t pos = signs.size();
            while (pos > 0 && signs[pos - 1] == Sign::Above) signs[--pos] = Sign::Below;
            if (pos == 0) break;
            signs[pos - 1] = static_cast<Sign>(static_cast<int>(signs[pos - 1]) + 1);
        }
        return Runner::violations(bad, total);
    });
    run.check("oracle.boundedness_scc_vs_probe", kDefaultRegionCap, [&] {
        std::size_t bad = 0;
        for (const auto& r : fam.regions()) {
            if (is_relatively_bounded(r.signs) != is_relatively_bounded_by_probe(r.signs)) ++bad;
        }
        return Runner::violations(bad, fam.regions().size());
    });
    run.check("oracle.witness_follows_in_degrees", kDefaultRegionCap, [&] {
        std::size_t bad = 0;
        for (const auto& p : fam.parking_graphs()) {
            const auto degrees = in_degrees_oriented(p.graph());
            const auto w = psi(p).witness.point();
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) order[degrees[v - 1]] = v;
            for (int i = 0; i + 1 < n; ++i) {
                if (!(w[order[i]] < w[order[i + 1]])) {
                    ++bad;
                    break;
                }
            }
        }
        return Runner::violations(bad, fam.parking_graphs().size());
    });
    run.check("oracle.oriented_degrees_permutation", kDefaultParkingGraphCap, [&] {
        std::size_t bad = 0;
        for (const auto& p : fam.parking_graphs()) {
            auto d = in_degrees_oriented(p.graph());
            std::ranges::sort(d);
            for (int i = 0; i < n; ++i) {
                if (d[i] != i) {
                    ++bad;
                    break;
                }
            }
        }
        return Runner::violations(bad, fam.parking_graphs().size());
    });
}

void run_pakstanley(Runner& run) {
    auto& fam = run.families();
    const int n = fam.n();

    run.check("pakstanley.bijective", kDefaultRegionCap, [&] {
        std::set<ParkingFunction> labels;
        for (const auto& r : fam.regions()) labels.insert(pak_stanley_label(r.signs));
        const bool onto = labels.size() == fam.regions().size() &&
                          std::ranges::all_of(fam.parking_functions(), [&](const auto& x) {
                              return labels.contains(x);
                          });
        return CheckResult{"", onto ? Status::Pass : Status::Fail,
                           count_parking_functions(n).str() + " distinct labels covering all",
                           std::to_string(labels.size()) + " distinct labels", ""};
    });
    run.check("pakstanley.central_label", kDefaultRegionCap, [&] {
        const auto label = pak_stanley_label(RegionSignVector::uniform(n, Sign::Between));
        return Runner::equal(join(std::vector<int>(static_cast<std::size_t>(n), 1)),
                             join(label.entries()));
    });
    run.check("pakstanley.wall_crossing_unit_step", kDefaultRegionCap, [&] {
        std::map<RegionSignVector, ParkingFunction> label_of;
        for (const auto& r : fam.regions()) label_of.emplace(r.signs, pak_stanley_label(r.signs));
        std::size_t bad = 0;
        std::size_t crossings = 0;
        for (const auto& [sv, label] : label_of) {
            for (const auto& [j, k] : canonical_pairs(n)) {
                if (sv.sign(j, k) == Sign::Above) continue;
                RegionSignVector next = sv;
                next.set_sign(j, k, static_cast<Sign>(static_cast<int>(sv.sign(j, k)) + 1));
                const auto it = label_of.find(next);
                if (it == label_of.end()) continue;
                ++crossings;
                int changed = 0;
                int total_change = 0;
                for (int i = 0; i < n; ++i) {
                    const int d = it->second[i] - label[i];
                    if (d != 0) {
                        ++changed;
                        total_change += d < 0 ? -d : d;
                    }
                }
                if (changed != 1 || total_change != 1) ++bad;
            }
        }
        auto res = Runner::violations(bad, crossings);
        res.detail += " (adjacent region pairs)";
        return res;
    });
}

}  // namespace

Suite parse_suite(std::string_view text) {
    if (text == "all") return Suite::All;
    if (text == "counts") return Suite::Counts;
    if (text == "roundtrip") return Suite::Roundtrip;
    if (text == "lemmas") return Suite::Lemmas;
    if (text == "oracle") return Suite::Oracle;
    if (text == "pakstanley") return Suite::PakStanley;
    throw ValidationError("unknown suite '" + std::string(text) + "'");
}

std::string_view to_string(CheckResult::Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite suite, int n, int jobs) {
    if (n < 1) throw ValidationError("n must be at least 1");
    Runner run(n, jobs);
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Counts) run_counts(run);
    if (all || suite == Suite::Roundtrip) run_roundtrip(run);
    if (all || suite == Suite::Lemmas) run_lemmas(run);
    if (all || suite == Suite::Oracle) run_oracle(run);
    if (all || suite == Suite::PakStanley) run_pakstanley(run);
    return run.take();
}

}  // namespace parking
