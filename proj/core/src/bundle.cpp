#include "hgpred/bundle.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "hgpred/alist.hpp"

namespace hgpred {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json coloring_to_json(const CheckColoring& c) {
    return json{{"num_colors", c.num_colors}, {"color_of", c.color_of}};
}

CheckColoring coloring_from_json(const json& j) {
    CheckColoring c;
    c.num_colors = j.at("num_colors").get<std::size_t>();
    c.color_of = j.at("color_of").get<std::vector<std::size_t>>();
    return c;
}

json schedule_to_json(const CombinationSchedule& s) {
    json x = json::array(), z = json::array();
    for (const auto& [i, jj] : s.x_groups) x.push_back({i, jj});
    for (const auto& [i, jj] : s.z_groups) z.push_back({i, jj});
    return json{{"x_groups", x}, {"z_groups", z}};
}

CombinationSchedule schedule_from_json(const json& j) {
    CombinationSchedule s;
    for (const auto& e : j.at("x_groups")) s.x_groups.emplace_back(e[0], e[1]);
    for (const auto& e : j.at("z_groups")) s.z_groups.emplace_back(e[0], e[1]);
    return s;
}

json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    json j;
    in >> j;
    return j;
}

void dump_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace

void save_bundle(const std::string& dir, const CodeBundle& bundle) {
    fs::create_directories(dir);
    fs::path base(dir);
    const CssCode& code = bundle.code;

    write_alist_file((base / "hx.alist").string(), code.hx);
    write_alist_file((base / "hz.alist").string(), code.hz);
    if (bundle.c1) write_alist_file((base / "h1.alist").string(), bundle.c1->h());
    if (bundle.c2) write_alist_file((base / "h2.alist").string(), bundle.c2->h());
    if (code.logical_x) write_alist_file((base / "logical_x.alist").string(), *code.logical_x);
    if (code.logical_z) write_alist_file((base / "logical_z.alist").string(), *code.logical_z);

    json manifest;
    manifest["name"] = code.name;
    manifest["n"] = code.n();
    manifest["k"] = code.k_from_rank();
    manifest["d_x"] = code.dx ? json(*code.dx) : json(nullptr);
    manifest["d_z"] = code.dz ? json(*code.dz) : json(nullptr);
    manifest["layout"] = {{"n1", code.layout.n1},
                          {"n2", code.layout.n2},
                          {"m1", code.layout.m1},
                          {"m2", code.layout.m2},
                          {"kept", code.qubit_grid}};
    json coloring = nullptr;
    if (bundle.col1 && bundle.col2)
        coloring = json{{"input1", coloring_to_json(*bundle.col1)},
                        {"input2", coloring_to_json(*bundle.col2)}};
    manifest["coloring"] = coloring;
    manifest["schedule"] = bundle.schedule ? schedule_to_json(*bundle.schedule) : json(nullptr);
    manifest["plan_hash"] = bundle.plan_hash;
    manifest["provenance"] = {{"seed", bundle.seed}, {"generator", bundle.generator}};
    dump_json(base / "manifest.json", manifest);
}

CodeBundle load_bundle(const std::string& dir) {
    fs::path base(dir);
    json manifest = load_json(base / "manifest.json");

    CodeBundle bundle;
    CssCode& code = bundle.code;
    code.hx = read_alist_file((base / "hx.alist").string());
    code.hz = read_alist_file((base / "hz.alist").string());
    code.name = manifest.at("name").get<std::string>();
    const json& lay = manifest.at("layout");
    code.layout = {lay.at("n1").get<std::size_t>(), lay.at("n2").get<std::size_t>(),
                   lay.at("m1").get<std::size_t>(), lay.at("m2").get<std::size_t>()};
    code.qubit_grid = lay.at("kept").get<std::vector<std::size_t>>();
    if (!manifest.at("d_x").is_null()) code.dx = manifest.at("d_x").get<std::size_t>();
    if (!manifest.at("d_z").is_null()) code.dz = manifest.at("d_z").get<std::size_t>();
    if (fs::exists(base / "logical_x.alist"))
        code.logical_x = read_alist_file((base / "logical_x.alist").string());
    if (fs::exists(base / "logical_z.alist"))
        code.logical_z = read_alist_file((base / "logical_z.alist").string());
    if (fs::exists(base / "h1.alist"))
        bundle.c1 = ClassicalCode(read_alist_file((base / "h1.alist").string()), "input1");
    if (fs::exists(base / "h2.alist"))
        bundle.c2 = ClassicalCode(read_alist_file((base / "h2.alist").string()), "input2");
    if (!manifest.at("coloring").is_null()) {
        bundle.col1 = coloring_from_json(manifest["coloring"].at("input1"));
        bundle.col2 = coloring_from_json(manifest["coloring"].at("input2"));
    }
    if (!manifest.at("schedule").is_null())
        bundle.schedule = schedule_from_json(manifest["schedule"]);
    bundle.plan_hash = manifest.at("plan_hash").get<std::uint64_t>();
    bundle.seed = manifest.at("provenance").at("seed").get<std::uint64_t>();
    bundle.generator = manifest.at("provenance").at("generator").get<std::string>();

    if (code.qubit_grid.size() != code.n())
        throw std::runtime_error("load_bundle: layout kept list does not match hx");
    return bundle;
}

void save_classical(const std::string& dir, const ClassicalCode& code, std::uint64_t seed,
                    const std::string& generator) {
    fs::create_directories(dir);
    fs::path base(dir);
    write_alist_file((base / "h.alist").string(), code.h());
    json manifest;
    manifest["name"] = code.name();
    manifest["n"] = code.n();
    manifest["k"] = code.k();
    manifest["d"] = code.distance ? json(*code.distance) : json(nullptr);
    manifest["provenance"] = {{"seed", seed}, {"generator", generator}};
    dump_json(base / "manifest.json", manifest);
}

ClassicalCode load_classical(const std::string& dir) {
    fs::path base(dir);
    json manifest = load_json(base / "manifest.json");
    ClassicalCode code(read_alist_file((base / "h.alist").string()),
                       manifest.at("name").get<std::string>());
    if (!manifest.at("d").is_null()) code.distance = manifest.at("d").get<std::size_t>();
    return code;
}

void save_cnot_schedule(const std::string& path, const CnotSchedule& schedule,
                        const CssCode& code) {
    json j;
    j["code_hash"] = code.hx.fingerprint() ^ code.hz.fingerprint();
    auto rounds_to_json = [](const auto& rounds) {
        json out = json::array();
        for (const auto& round : rounds) {
            json r = json::array();
            for (const auto& [c, q] : round) r.push_back({c, q});
            out.push_back(r);
        }
        return out;
    };
    j["x_rounds"] = rounds_to_json(schedule.x_rounds);
    j["z_rounds"] = rounds_to_json(schedule.z_rounds);
    dump_json(path, j);
}

CnotSchedule load_cnot_schedule(const std::string& path, const CssCode& code) {
    json j = load_json(path);
    std::uint64_t expected = code.hx.fingerprint() ^ code.hz.fingerprint();
    if (j.at("code_hash").get<std::uint64_t>() != expected)
        throw std::runtime_error("schedule file does not match the code");
    CnotSchedule schedule;
    auto rounds_from_json = [](const json& rounds) {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
        for (const auto& round : rounds) {
            std::vector<std::pair<std::size_t, std::size_t>> r;
            for (const auto& e : round) r.emplace_back(e[0], e[1]);
            out.push_back(std::move(r));
        }
        return out;
    };
    schedule.x_rounds = rounds_from_json(j.at("x_rounds"));
    schedule.z_rounds = rounds_from_json(j.at("z_rounds"));
    return schedule;
}

}  // namespace hgpred
