#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuberaid/cli/config.hpp"
#include "tuberaid/timeline/timeline.hpp"

namespace tuberaid::cli {

// Each command writes its artifacts under the config's output_dir and returns
// the summary it also writes to reports/<command>_summary.json.
nlohmann::json cmd_synth(const PipelineConfig &config, std::ostream &log);
nlohmann::json cmd_ingest(const PipelineConfig &config, std::ostream &log);
nlohmann::json cmd_pretrain(const PipelineConfig &config, std::ostream &log);
nlohmann::json cmd_detect(const PipelineConfig &config, std::ostream &log);
nlohmann::json cmd_evaluate(const PipelineConfig &config, std::ostream &log);
nlohmann::json cmd_attribute(const PipelineConfig &config, std::ostream &log);
nlohmann::json cmd_stats(const PipelineConfig &config, std::ostream &log);

const std::vector<std::string> &command_names();

// Dispatches by name; throws InvalidArgument for an unknown command.
nlohmann::json run_command(std::string_view name, const PipelineConfig &config, std::ostream &log);

// Comments grouped by video and binned, keyed by video id.
std::map<std::string, timeline::CommentTimeline> load_timelines(const std::filesystem::path &path);

} // namespace tuberaid::cli
