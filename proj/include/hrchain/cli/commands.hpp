#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hrchain/recruit/io.hpp"

namespace hrchain::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitStall = 2;

using recruit::OutputFormat;

struct InitOptions {
  std::filesystem::path data_dir;
  std::filesystem::path roster;
  std::optional<std::string> diversity;
  std::vector<std::string> miners;
};

struct RunOptions {
  std::filesystem::path data_dir;
  std::filesystem::path scenario;
  std::optional<std::uint64_t> seed;  // wins over the scenario's seed
  OutputFormat format = OutputFormat::Text;
};

struct RankOptions {
  std::filesystem::path data_dir;
  std::string company;
  std::filesystem::path applicants;
  std::filesystem::path requirements;
  std::optional<std::filesystem::path> records;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::Csv;
};

struct HireOptions {
  std::filesystem::path data_dir;
  std::filesystem::path contract;
};

struct EventOptions {
  std::filesystem::path data_dir;
  std::string issuer;
  std::string subject;
  std::string kind;
  std::string details;
};

struct InspectOptions {
  std::filesystem::path data_dir;
  std::string node;
  std::optional<std::uint64_t> height;
};

struct HistoryOptions {
  std::filesystem::path data_dir;
  std::string node;
  std::string subject;
};

// Each command writes its result to `out` and returns an exit code.
// Failures are thrown; the tool maps them to kExitError, or kExitStall
// when consensus cannot make progress.
int cmd_init(const InitOptions& opts, std::ostream& out);
int cmd_run(const RunOptions& opts, std::ostream& out);
int cmd_rank(const RankOptions& opts, std::ostream& out);
int cmd_hire(const HireOptions& opts, std::ostream& out);
int cmd_event(const EventOptions& opts, std::ostream& out);
int cmd_inspect(const InspectOptions& opts, std::ostream& out);
int cmd_history(const HistoryOptions& opts, std::ostream& out);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

}  // namespace hrchain::cli
