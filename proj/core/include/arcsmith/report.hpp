#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arcsmith/count.hpp"
#include "arcsmith/surface_def.hpp"

namespace arcsmith {

inline constexpr const char* kToolVersion = "arcsmith 0.1.0";
inline constexpr int kReportSchema = 1;

enum class Task { jet, fibers, counts, graphs, condition_no, intersections };

const char* task_name(Task t);
// Parses a comma-separated task list, deduplicates, and returns the tasks in
// dependency (canonical) order.
std::vector<Task> parse_tasks(std::string_view csv);

struct PipelineResult {
    nlohmann::json report;
    bool certifications_ok = true; // exit code 0 iff true
};

// Executes the requested tasks against the definition and assembles the
// experiment report. Reports are byte-stable for a fixed input and seed: no
// timestamps, keys sorted, deterministic sampling streams. Certification
// failures (truncation coherence, base-change commutation) are recorded in
// the report rather than thrown.
PipelineResult run_pipeline(const SurfaceDefinition& def,
                            std::span<const Task> tasks,
                            const CountOptions& opts = {});

std::string report_to_bytes(const nlohmann::json& report);
void write_report(const nlohmann::json& report, const std::filesystem::path& path);

} // namespace arcsmith
