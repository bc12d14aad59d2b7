#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hgpred/classical_code.hpp"
#include "hgpred/coloring.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/planner.hpp"
#include "hgpred/sescheduler.hpp"

namespace hgpred {

/// One code directory: manifest.json plus alist files for the parity checks,
/// the classical inputs, and the logical bases. Manifests reference sibling
/// files by fixed names so pipelines stay diffable.
struct CodeBundle {
    CssCode code;
    std::optional<ClassicalCode> c1, c2;
    std::optional<CheckColoring> col1, col2;
    std::optional<CombinationSchedule> schedule;
    std::uint64_t plan_hash = 0;
    std::uint64_t seed = 0;
    std::string generator;
};

void save_bundle(const std::string& dir, const CodeBundle& bundle);
CodeBundle load_bundle(const std::string& dir);

/// Classical code directory: h.alist + a small manifest.
void save_classical(const std::string& dir, const ClassicalCode& code, std::uint64_t seed,
                    const std::string& generator);
ClassicalCode load_classical(const std::string& dir);

void save_cnot_schedule(const std::string& path, const CnotSchedule& schedule,
                        const CssCode& code);
CnotSchedule load_cnot_schedule(const std::string& path, const CssCode& code);

}  // namespace hgpred
