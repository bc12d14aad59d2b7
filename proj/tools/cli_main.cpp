#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgpred/alist.hpp"
#include "hgpred/bundle.hpp"
#include "hgpred/classical_code.hpp"
#include "hgpred/coloring.hpp"
#include "hgpred/graphs.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/homomorphism.hpp"
#include "hgpred/memsim.hpp"
#include "hgpred/planner.hpp"
#include "hgpred/reducer.hpp"
#include "hgpred/sescheduler.hpp"
#include "hgpred/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hgpred;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitVerifyFailed = 3;

SimpleGraph named_graph(const std::string& name) {
    if (name == "k33") return complete_bipartite_graph(3, 3);
    if (name == "heawood") return heawood_graph();
    if (name == "tutte-coxeter") return tutte_coxeter_graph();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string kind = name.substr(0, colon);
        std::string arg = name.substr(colon + 1);
        if (kind == "cycle") return cycle_graph(std::stoul(arg));
        if (kind == "complete") return complete_graph(std::stoul(arg));
        if (kind == "complete-bipartite") {
            auto comma = arg.find(',');
            return complete_bipartite_graph(std::stoul(arg.substr(0, comma)),
                                            std::stoul(arg.substr(comma + 1)));
        }
    }
    throw std::invalid_argument("unknown graph: " + name);
}

ClassicalCode load_classical_any(const std::string& path) {
    if (fs::is_directory(path)) return load_classical(path);
    return ClassicalCode(read_alist_file(path), fs::path(path).stem().string());
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> parse_exponents(
    const std::string& text) {
    // "r,c:p;r,c:p;..."
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::size_t r, c, p;
        if (std::sscanf(item.c_str(), "%zu,%zu:%zu", &r, &c, &p) != 3)
            throw std::invalid_argument("bad exponent entry: " + item);
        out[{r, c}] = p;
    }
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoul(item));
    }
    return out;
}

struct PlannedBundle {
    CodeBundle bundle;
    ProductColoring pc;
    CombinationSchedule schedule;
};

// Colorings and schedule for a bundle: reuse what the manifest has, compute
// what is missing, and leave both in the returned bundle.
PlannedBundle plan_bundle(CodeBundle bundle, bool fold_symmetric, std::uint64_t seed) {
    if (!bundle.c1 || !bundle.c2)
        throw std::invalid_argument("bundle lacks the classical inputs (h1/h2.alist)");
    if (!bundle.col1 || !bundle.col2) {
        bundle.col1 = greedy_color(check_adjacency_graph(*bundle.c1), seed);
        bundle.col2 = greedy_color(check_adjacency_graph(*bundle.c2), seed);
    }
    PlannedBundle out;
    out.pc = product_coloring(*bundle.col1, *bundle.col2, bundle.code.layout);
    if (!verify_product_coloring(out.pc, *bundle.c1, *bundle.c2))
        throw std::invalid_argument("product coloring failed verification");
    out.schedule = fold_symmetric ? fold_symmetric_schedule(out.pc) : choose_schedule(out.pc);
    bundle.schedule = out.schedule;
    out.bundle = std::move(bundle);
    return out;
}

// Rebuild the reduction plan of a reduced bundle from its recorded inputs.
ReductionPlan rebuild_plan(const CodeBundle& bundle, CssCode& base_out) {
    if (!bundle.c1 || !bundle.c2 || !bundle.col1 || !bundle.col2 || !bundle.schedule)
        throw std::invalid_argument("bundle does not carry inputs, coloring and schedule");
    base_out = build_hgp(*bundle.c1, *bundle.c2);
    if (bundle.c1->full_rank() && bundle.c2->full_rank())
        canonical_logicals(base_out, *bundle.c1, *bundle.c2);
    ProductColoring pc = product_coloring(*bundle.col1, *bundle.col2, base_out.layout);
    ReductionPlan plan = build_reduction(base_out, pc, *bundle.schedule);
    if (bundle.plan_hash != 0 && plan.fingerprint() != bundle.plan_hash)
        throw std::invalid_argument("rebuilt plan does not match the bundle's plan hash");
    return plan;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

int cmd_gen_classical(const std::string& kind, const std::string& graph_name, bool double_cover,
                      std::int64_t drop, std::size_t n, std::size_t dv, std::size_t dc,
                      const std::string& proto_bits, const std::string& exponents,
                      std::size_t lift, std::uint64_t seed, const std::string& out_dir,
                      std::size_t dist_cap) {
    ClassicalCode code;
    std::string generator;
    if (kind == "random") {
        code = random_ldpc(n, dv, dc, seed);
        generator = "random";
    } else if (kind == "qc") {
        code = qc_lift(BitMatrix::parse(proto_bits), parse_exponents(exponents), lift);
        generator = "qc";
    } else if (kind == "cycle") {
        SimpleGraph g = named_graph(graph_name);
        if (double_cover) g = bipartite_double_cover(g);
        code = cycle_code(g, drop >= 0 ? std::optional<std::size_t>(drop) : std::nullopt);
        generator = "cycle:" + graph_name;
    } else {
        throw std::invalid_argument("gen-classical kind must be random, qc or cycle");
    }
    if (code.k() > 0 && (code.k() <= 24 || dist_cap > 0)) {
        DistanceResult d =
            min_distance(code, dist_cap > 0 ? std::optional(dist_cap) : std::nullopt);
        if (d.exact) code.distance = d.value;
    }
    save_classical(out_dir, code, seed, generator);
    std::printf("[%zu,%zu%s] code written to %s\n", code.n(), code.k(),
                code.distance ? ("," + std::to_string(*code.distance)).c_str() : "",
                out_dir.c_str());
    return kExitOk;
}

int cmd_build_hgp(const std::string& h1_path, const std::string& h2_path,
                  const std::string& out_dir) {
    ClassicalCode c1 = load_classical_any(h1_path);
    ClassicalCode c2 = load_classical_any(h2_path);
    CssCode code = build_hgp(c1, c2);
    if (c1.full_rank() && c2.full_rank()) canonical_logicals(code, c1, c2);
    if (c1.distance && c2.distance) {
        auto [dx, dz] = hgp_distances(c1, c2);
        code.dx = dx;
        code.dz = dz;
    }
    CodeBundle bundle;
    bundle.code = std::move(code);
    bundle.c1 = std::move(c1);
    bundle.c2 = std::move(c2);
    bundle.generator = "hgp";
    save_bundle(out_dir, bundle);
    std::printf("[[%zu,%zu%s]] bundle written to %s\n", bundle.code.n(),
                bundle.code.k_from_rank(),
                bundle.code.dx ? ("," + std::to_string(*bundle.code.dx)).c_str() : "",
                out_dir.c_str());
    return kExitOk;
}

int cmd_color(const std::string& bundle_dir, std::uint64_t seed) {
    CodeBundle bundle = load_bundle(bundle_dir);
    if (!bundle.c1 || !bundle.c2)
        throw std::invalid_argument("bundle lacks the classical inputs (h1/h2.alist)");
    bundle.col1 = greedy_color(check_adjacency_graph(*bundle.c1), seed);
    bundle.col2 = greedy_color(check_adjacency_graph(*bundle.c2), seed);
    save_bundle(bundle_dir, bundle);
    std::printf("colored: chi1=%zu chi2=%zu\n", bundle.col1->num_colors, bundle.col2->num_colors);
    return kExitOk;
}

int cmd_plan(const std::string& bundle_dir, bool fold_symmetric, std::uint64_t seed) {
    PlannedBundle planned = plan_bundle(load_bundle(bundle_dir), fold_symmetric, seed);
    std::size_t removed = removed_count(planned.pc, planned.schedule);
    CssCode base = build_hgp(*planned.bundle.c1, *planned.bundle.c2);
    ReductionPlan plan = build_reduction(base, planned.pc, planned.schedule);
    planned.bundle.plan_hash = plan.fingerprint();
    save_bundle(bundle_dir, planned.bundle);
    std::printf("removes %zu check-type qubits (%zu -> %zu)\n", removed, base.n(),
                base.n() - removed);
    return kExitOk;
}

int cmd_reduce(const std::string& bundle_dir, const std::string& plan_dir,
               const std::string& out_dir) {
    CodeBundle bundle = load_bundle(bundle_dir);
    if (!plan_dir.empty()) {
        CodeBundle plan_source = load_bundle(plan_dir);
        bundle.col1 = plan_source.col1;
        bundle.col2 = plan_source.col2;
        bundle.schedule = plan_source.schedule;
        bundle.plan_hash = plan_source.plan_hash;
    }
    if (!bundle.schedule) {
        PlannedBundle planned = plan_bundle(std::move(bundle), false, 0);
        bundle = std::move(planned.bundle);
        CssCode base = build_hgp(*bundle.c1, *bundle.c2);
        ProductColoring pc = product_coloring(*bundle.col1, *bundle.col2, base.layout);
        bundle.plan_hash = build_reduction(base, pc, *bundle.schedule).fingerprint();
    }
    CssCode base;
    ReductionPlan plan = rebuild_plan(bundle, base);
    base.dx = bundle.code.dx;       // distances carry through the reduction
    base.dz = bundle.code.dz;
    CssCode reduced = apply_reduction(base, plan);
    WeightReport report = weight_report(base, reduced);

    CodeBundle out = bundle;
    out.code = reduced;
    out.plan_hash = plan.fingerprint();
    save_bundle(out_dir, out);

    std::string dtext = "d=?";
    if (reduced.dx && reduced.dz) {
        std::size_t d = std::min(*reduced.dx, *reduced.dz);
        // Carried distance; check the canonical-basis upper bound agrees.
        bool upper_ok = false;
        if (reduced.logical_x && reduced.logical_z) {
            std::size_t ub = reduced.n();
            for (std::size_t r = 0; r < reduced.logical_x->rows(); ++r)
                ub = std::min(ub, reduced.logical_x->row_weight(r));
            for (std::size_t r = 0; r < reduced.logical_z->rows(); ++r)
                ub = std::min(ub, reduced.logical_z->row_weight(r));
            upper_ok = ub == d;
        }
        dtext = "d=" + std::to_string(d) + (upper_ok ? " (certified-upper)" : " (carried)");
    }
    std::printf("%zu -> %zu qubits, %zu logicals, %s\n", base.n(), reduced.n(),
                reduced.k_from_rank(), dtext.c_str());
    std::printf("N2q %zu -> %zu, weights (%zu,%zu) -> (%zu,%zu)\n", report.n2q_before,
                report.n2q_after, report.wq_before, report.wc_before, report.wq_after,
                report.wc_after);
    return kExitOk;
}

int cmd_verify(const std::string& before_dir, const std::string& after_dir,
               const std::string& out_path, std::size_t distance_cap, std::uint64_t seed) {
    CodeBundle before = load_bundle(before_dir);
    CodeBundle after = load_bundle(after_dir);

    json report;
    bool all_ok = true;

    CssReport css_before = verify_css(before.code);
    CssReport css_after = verify_css(after.code);
    report["css"] = {{"before_ok", css_before.ok}, {"after_ok", css_after.ok}};
    all_ok = all_ok && css_before.ok && css_after.ok;

    DimensionReport dim = verify_k(before.code, after.code);
    report["dimension"] = {{"ok", dim.ok}, {"k_before", dim.k_before}, {"k_after", dim.k_after}};
    all_ok = all_ok && dim.ok;

    if (after.code.logical_x && after.code.logical_z) {
        BasisReport basis = verify_logical_basis(after.code);
        report["logical_basis"] = {{"kernel_ok", basis.kernel_ok},
                                   {"nonstabilizer_ok", basis.nonstabilizer_ok},
                                   {"pairing_ok", basis.pairing_ok}};
        all_ok = all_ok && basis.ok();

        if (after.code.dx && after.code.dz) {
            std::size_t d1 = *after.code.dz, d2 = *after.code.dx;
            SectorBoundReport sector = verify_sector_bounds(after.code, d1, d2, 200, seed);
            report["sector_bounds"] = {{"ok", sector.ok},
                                       {"checked", sector.checked},
                                       {"min_x_cols", sector.min_x_cols},
                                       {"min_z_rows", sector.min_z_rows}};
            all_ok = all_ok && sector.ok;
        }
    }

    // Informational only: the optimal schedule is generally not fold-symmetric.
    if (after.code.layout.n1 == after.code.layout.n2 &&
        after.code.layout.m1 == after.code.layout.m2) {
        report["fold_symmetric"] = verify_zx_fold(after.code, diagonal_mirror(after.code.layout));
    }

    if (distance_cap > 0 && after.code.dx && after.code.dz) {
        auto side_report = [&](Pauli side, std::size_t d_claim) {
            DistanceReport d = certify_distance(after.code, d_claim, distance_cap, side);
            json j = {{"claim", d_claim},
                      {"cap", d.searched_cap},
                      {"upper_bound", d.upper_bound},
                      {"verdict", d.verdict == DistanceVerdict::ConfirmedMin ? "confirmed-min"
                                  : d.verdict == DistanceVerdict::NoLogicalBelowCap
                                      ? "no-logical-below-cap"
                                      : "counterexample"}};
            all_ok = all_ok && d.verdict != DistanceVerdict::Counterexample;
            return j;
        };
        report["distance_x"] = side_report(Pauli::X, *after.code.dx);
        report["distance_z"] = side_report(Pauli::Z, *after.code.dz);
    }

    report["ok"] = all_ok;
    if (!out_path.empty()) write_json_file(out_path, report);
    std::cout << report.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_schedule(const std::string& bundle_dir, bool split, std::uint64_t seed,
                 const std::string& out_path) {
    CodeBundle bundle = load_bundle(bundle_dir);
    CnotSchedule schedule;
    if (split) {
        CssCode base;
        ReductionPlan plan = rebuild_plan(bundle, base);
        schedule = split_schedule(bundle.code, plan);
    } else {
        schedule = random_schedule(bundle.code, seed);
    }
    if (!schedule_valid(bundle.code, schedule))
        throw std::logic_error("generated schedule failed validation");
    save_cnot_schedule(out_path, schedule, bundle.code);
    std::printf("%s schedule: %zu X rounds, %zu Z rounds -> %s\n", split ? "split" : "random",
                schedule.x_rounds.size(), schedule.z_rounds.size(), out_path.c_str());
    return kExitOk;
}

int cmd_hooks(const std::string& bundle_dir, const std::string& schedule_path,
              const std::string& out_path) {
    CodeBundle bundle = load_bundle(bundle_dir);
    CnotSchedule schedule = load_cnot_schedule(schedule_path, bundle.code);

    json report;
    bool contained = true;
    for (Pauli basis : {Pauli::X, Pauli::Z}) {
        BitLineOracle oracle(bundle.code, basis);
        std::size_t total = 0, multi_line = 0, worst = 0;
        for (const auto& hook : enumerate_hooks(bundle.code, schedule, basis)) {
            ++total;
            if (!oracle.at_most_one_line(hook.residual)) {
                ++multi_line;
                BitVector reduced = reduce_residual(bundle.code, hook.residual, basis);
                worst = std::max(worst, bit_line_count(bundle.code, reduced, basis));
            }
        }
        const char* key = basis == Pauli::X ? "x" : "z";
        report[key] = {{"hooks", total},
                       {"multi_line_residuals", multi_line},
                       {"worst_line_count", worst}};
        contained = contained && multi_line == 0;
    }
    report["distance_preserving_single_faults"] = contained;
    if (!out_path.empty()) write_json_file(out_path, report);
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int cmd_chainmap(const std::string& kind, const std::string& h1_path, const std::string& h2_path,
                 const std::string& row_bits, const std::string& bits,
                 const std::string& out_dir) {
    ClassicalCode c1 = load_classical_any(h1_path);
    ClassicalCode c2 = load_classical_any(h2_path);

    // Indices address the informational bits in canonical order, so "0" means
    // the first informational bit regardless of the column layout.
    CanonicalGenerator gen2 = canonical_generator(c2);
    auto info_bit = [&](std::size_t idx) {
        if (idx >= gen2.info_cols.size())
            throw std::invalid_argument("informational index out of range");
        return gen2.info_cols[idx];
    };

    ReducedPair pair;
    if (kind == "augment") {
        BitMatrix rows = BitMatrix::zeros(row_bits.empty() ? 0 : 1, c2.n());
        for (std::size_t b : parse_index_list(row_bits)) rows.set(0, info_bit(b), true);
        pair = build_aug_chain_map(c1, c2, rows);
    } else if (kind == "puncture") {
        std::vector<std::size_t> cols;
        for (std::size_t b : parse_index_list(bits)) cols.push_back(info_bit(b));
        pair = build_punc_chain_map(c1, c2, cols);
    } else {
        throw std::invalid_argument("chainmap kind must be augment or puncture");
    }

    fs::create_directories(out_dir);
    fs::path base(out_dir);
    CodeBundle base_bundle;
    base_bundle.code = pair.base;
    base_bundle.generator = "chainmap-base";
    save_bundle((base / "base").string(), base_bundle);
    CodeBundle mod_bundle;
    mod_bundle.code = pair.modified;
    mod_bundle.generator = "chainmap-" + kind;
    save_bundle((base / "modified").string(), mod_bundle);
    write_alist_file((base / "gamma_x.alist").string(), pair.map.gamma_x);
    write_alist_file((base / "gamma_q.alist").string(), pair.map.gamma_q);
    write_alist_file((base / "gamma_z.alist").string(), pair.map.gamma_z);

    bool ok = verify_chain_map(pair.map, pair.modified, pair.base);
    json manifest = {{"kind", kind},
                     {"k_base", pair.base.k_from_rank()},
                     {"k_modified", pair.modified.k_from_rank()},
                     {"squares_commute", ok}};
    write_json_file((base / "manifest.json").string(), manifest);
    std::printf("chain map (%s): k %zu -> %zu, squares %s\n", kind.c_str(),
                pair.base.k_from_rank(), pair.modified.k_from_rank(),
                ok ? "commute" : "VIOLATED");
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_simulate(const std::string& bundle_dir, const std::string& p_list, std::size_t shots,
                 std::uint64_t seed, std::size_t rounds, const std::string& out_csv,
                 const std::string& out_summary) {
    CodeBundle bundle = load_bundle(bundle_dir);
    if (!bundle.code.logical_z)
        throw std::invalid_argument("simulate needs a bundle with canonical logicals");

    std::vector<double> ps;
    std::stringstream ss(p_list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) ps.push_back(std::stod(item));
    if (ps.empty()) throw std::invalid_argument("no noise strengths given");

    std::size_t d =
        bundle.code.dx && bundle.code.dz ? std::min(*bundle.code.dx, *bundle.code.dz) : 4;
    if (rounds == 0) rounds = d + 1;

    std::ostringstream csv;
    csv << "p,shots,failures,bler,ci_low,ci_high,code,schedule\n";
    json summary = json::array();
    for (double p : ps) {
        NoiseModel noise{p, p, rounds};
        TrialResult r = run_memory(bundle.code, noise, shots, seed);
        csv << p << "," << r.shots << "," << r.failures << "," << r.bler << "," << r.ci_low << ","
            << r.ci_high << "," << bundle.code.name << ",phenomenological\n";
        summary.push_back({{"p", p},
                           {"shots", r.shots},
                           {"failures", r.failures},
                           {"bler", r.bler},
                           {"ci_low", r.ci_low},
                           {"ci_high", r.ci_high}});
        std::printf("p=%g: %zu/%zu failures, bler=%.5g [%.5g, %.5g]\n", p, r.failures, r.shots,
                    r.bler, r.ci_low, r.ci_high);
    }
    if (!out_csv.empty()) {
        std::ofstream f(out_csv);
        f << csv.str();
    }
    if (!out_summary.empty()) write_json_file(out_summary, summary);
    return kExitOk;
}

int cmd_export(const std::string& bundle_dir, const std::string& format,
               const std::string& out_path) {
    CodeBundle bundle = load_bundle(bundle_dir);
    if (format == "alist") {
        fs::create_directories(out_path);
        write_alist_file((fs::path(out_path) / "hx.alist").string(), bundle.code.hx);
        write_alist_file((fs::path(out_path) / "hz.alist").string(), bundle.code.hz);
    } else if (format == "json") {
        auto matrix_to_json = [](const BitMatrix& m) {
            json rows = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_support(r));
            return json{{"rows", m.rows()}, {"cols", m.cols()}, {"row_support", rows}};
        };
        json out = {{"name", bundle.code.name},
                    {"n", bundle.code.n()},
                    {"k", bundle.code.k_from_rank()},
                    {"hx", matrix_to_json(bundle.code.hx)},
                    {"hz", matrix_to_json(bundle.code.hz)}};
        write_json_file(out_path, out);
    } else {
        throw std::invalid_argument("export format must be alist or json");
    }
    std::printf("exported %s to %s\n", format.c_str(), out_path.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph-product code reduction toolkit"};
    app.require_subcommand(1);

    std::string gen_kind, graph_name = "k33", proto_bits, exponents, out_dir;
    bool double_cover = false;
    std::int64_t drop = -1;
    std::size_t n = 0, dv = 0, dc = 0, lift = 1, dist_cap = 0;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen-classical", "generate a classical input code");
    gen->add_option("kind", gen_kind, "random | qc | cycle")->required();
    gen->add_option("--graph", graph_name, "cycle base graph (k33, heawood, tutte-coxeter, ...)");
    gen->add_flag("--double-cover", double_cover, "take the bipartite double cover first");
    gen->add_option("--drop", drop, "vertex whose check row is removed (default: last)");
    gen->add_option("--n", n, "code length (random)");
    gen->add_option("--dv", dv, "bit degree (random)");
    gen->add_option("--dc", dc, "check degree (random)");
    gen->add_option("--proto", proto_bits, "proto matrix rows, e.g. 1011;0111;1101 (qc)");
    gen->add_option("--exponents", exponents, "circulant powers r,c:p;... (qc)");
    gen->add_option("--lift", lift, "lift size (qc)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--distance-cap", dist_cap, "optional cap for the distance search");
    gen->add_option("--out", out_dir, "output directory")->required();

    std::string h1_path, h2_path;
    auto* build = app.add_subcommand("build-hgp", "hypergraph product of two classical codes");
    build->add_option("--h1", h1_path, "first input (alist file or classical dir)")->required();
    build->add_option("--h2", h2_path, "second input")->required();
    build->add_option("--out", out_dir, "output bundle directory")->required();

    std::string bundle_dir;
    auto* color = app.add_subcommand("color", "greedy check colorings of the inputs");
    color->add_option("--code", bundle_dir, "code bundle")->required();
    color->add_option("--seed", seed, "tie-break seed");

    bool fold_symmetric = false;
    auto* plan = app.add_subcommand("plan", "choose the combination schedule");
    plan->add_option("--code", bundle_dir, "code bundle")->required();
    plan->add_flag("--fold-symmetric", fold_symmetric, "restrict to fold-symmetric schedules");
    plan->add_option("--seed", seed, "coloring seed when the bundle has no coloring");

    std::string plan_dir;
    auto* reduce = app.add_subcommand("reduce", "apply the qubit reduction");
    reduce->add_option("--code", bundle_dir, "code bundle")->required();
    reduce->add_option("--plan", plan_dir, "bundle to take coloring/schedule from");
    reduce->add_option("--out", out_dir, "output bundle directory")->required();

    std::string before_dir, after_dir, out_path;
    std::size_t distance_cap = 0;
    auto* verify = app.add_subcommand("verify", "run every preservation check");
    verify->add_option("--before", before_dir, "original bundle")->required();
    verify->add_option("--after", after_dir, "reduced bundle")->required();
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--distance-cap", distance_cap, "exhaustive search cap (0 = skip)");
    verify->add_option("--seed", seed, "seed for the deformation sampling");

    bool split = false, random_flag = false;
    auto* sched = app.add_subcommand("schedule", "emit a CNOT schedule");
    sched->add_option("--code", bundle_dir, "code bundle")->required();
    sched->add_flag("--split", split, "three-phase distance-preserving schedule");
    sched->add_flag("--random", random_flag, "random edge-coloring schedule");
    sched->add_option("--seed", seed, "seed for the random schedule");
    sched->add_option("--out", out_path, "schedule JSON path")->required();

    std::string schedule_path;
    auto* hooks = app.add_subcommand("hooks", "enumerate ancilla hook faults");
    hooks->add_option("--code", bundle_dir, "code bundle")->required();
    hooks->add_option("--schedule", schedule_path, "schedule JSON")->required();
    hooks->add_option("--out", out_path, "write the JSON report here");

    std::string chain_kind, row_bits, bits;
    auto* chain = app.add_subcommand("chainmap", "build and verify a code homomorphism");
    chain->add_option("kind", chain_kind, "augment | puncture")->required();
    chain->add_option("--h1", h1_path, "first input")->required();
    chain->add_option("--h2", h2_path, "second input")->required();
    chain->add_option("--row-bits", row_bits, "informational bits the new check acts on, e.g. 0,1");
    chain->add_option("--bits", bits, "informational bits to puncture (canonical order), e.g. 0");
    chain->add_option("--out", out_dir, "output directory")->required();

    std::string p_list, out_csv, out_summary;
    std::size_t shots = 10000, rounds = 0;
    auto* sim = app.add_subcommand("simulate", "phenomenological Z-memory Monte Carlo");
    sim->add_option("--code", bundle_dir, "code bundle")->required();
    sim->add_option("--p", p_list, "comma-separated noise strengths")->required();
    sim->add_option("--shots", shots, "shots per point");
    sim->add_option("--seed", seed, "master seed");
    sim->add_option("--rounds", rounds, "syndrome rounds (default d+1)");
    sim->add_option("--out", out_csv, "CSV output path");
    sim->add_option("--summary", out_summary, "JSON summary path");

    std::string format = "alist";
    auto* exp = app.add_subcommand("export", "export parity checks");
    exp->add_option("--code", bundle_dir, "code bundle")->required();
    exp->add_option("--format", format, "alist | json");
    exp->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (gen->parsed())
            return cmd_gen_classical(gen_kind, graph_name, double_cover, drop, n, dv, dc,
                                     proto_bits, exponents, lift, seed, out_dir, dist_cap);
        if (build->parsed()) return cmd_build_hgp(h1_path, h2_path, out_dir);
        if (color->parsed()) return cmd_color(bundle_dir, seed);
        if (plan->parsed()) return cmd_plan(bundle_dir, fold_symmetric, seed);
        if (reduce->parsed()) return cmd_reduce(bundle_dir, plan_dir, out_dir);
        if (verify->parsed())
            return cmd_verify(before_dir, after_dir, out_path, distance_cap, seed);
        if (sched->parsed()) {
            if (split == random_flag)
                throw std::invalid_argument("choose exactly one of --split / --random");
            return cmd_schedule(bundle_dir, split, seed, out_path);
        }
        if (hooks->parsed()) return cmd_hooks(bundle_dir, schedule_path, out_path);
        if (chain->parsed())
            return cmd_chainmap(chain_kind, h1_path, h2_path, row_bits, bits, out_dir);
        if (sim->parsed())
            return cmd_simulate(bundle_dir, p_list, shots, seed, rounds, out_csv, out_summary);
        if (exp->parsed()) return cmd_export(bundle_dir, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::logic_error& e) {
        // Invariant breach inside a construction: a verification failure.
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
