// hrchain: operator CLI for a simulated recruitment/HR ledger deployment.

#include <iostream>

#include <CLI11.hpp>

#include "hrchain/cli/commands.hpp"

namespace cli = hrchain::cli;

int main(int argc, char** argv) {
  CLI::App app{"hrchain: permissioned HR ledger with a deterministic network simulator"};
  app.require_subcommand(1);

  const std::map<std::string, cli::OutputFormat> formats{{"text", cli::OutputFormat::Text},
                                                         {"csv", cli::OutputFormat::Csv}};
  std::string data_dir = "hrchain-data";
  app.add_option("--data-dir", data_dir, "Deployment directory")->capture_default_str();

  cli::InitOptions init;
  auto* init_cmd = app.add_subcommand("init", "Create node directories and genesis from a roster");
  init_cmd->add_option("--roster", init.roster, "Roster file (role,name,key_hex[,host])")->required();
  init_cmd->add_option("--diversity", init.diversity, "Mining diversity in [0, 1] (default 0.75)");
  init_cmd->add_option("--miners", init.miners, "Miner names in rotation order")->delimiter(',');

  cli::RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario file");
  run_cmd->add_option("--scenario", run.scenario, "Scenario file")->required();
  run_cmd->add_option("--seed", run.seed, "Override the scenario seed");
  run_cmd->add_option("--format", run.format, "text or csv")->transform(CLI::CheckedTransformer(formats));

  cli::RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Verify and rank applicants for a company");
  rank_cmd->add_option("--company", rank.company, "Ranking company")->required();
  rank_cmd->add_option("--applicants", rank.applicants, "applicant,kind,issuer,fields")->required();
  rank_cmd->add_option("--requirements", rank.requirements, "kind,predicate,weight,mandatory")->required();
  rank_cmd->add_option("--records", rank.records, "authority,applicant,kind,fields");
  rank_cmd->add_option("--seed", rank.seed, "Simulation seed");
  rank_cmd->add_option("--format", rank.format, "text or csv")->transform(CLI::CheckedTransformer(formats));

  cli::HireOptions hire;
  auto* hire_cmd = app.add_subcommand("hire", "Commit an employment contract");
  hire_cmd->add_option("--contract", hire.contract, "Contract file")->required();

  cli::EventOptions event;
  auto* event_cmd = app.add_subcommand("event", "Commit an HR event from the current employer");
  event_cmd->add_option("--issuer", event.issuer)->required();
  event_cmd->add_option("--subject", event.subject)->required();
  event_cmd->add_option("--kind", event.kind, "Salary, Title, Promotion, Training, Leave, Performance, Transfer")
      ->required();
  event_cmd->add_option("--details", event.details, "name=value;...");

  cli::InspectOptions inspect;
  auto* inspect_cmd = app.add_subcommand("inspect", "Print a node's chain");
  inspect_cmd->add_option("--node", inspect.node)->required();
  inspect_cmd->add_option("--height", inspect.height, "Show one block in full");

  cli::HistoryOptions history;
  auto* history_cmd = app.add_subcommand("history", "Committed records about a participant");
  history_cmd->add_option("--node", history.node)->required();
  history_cmd->add_option("--subject", history.subject)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  try {
    if (*init_cmd) return init.data_dir = data_dir, cli::cmd_init(init, std::cout);
    if (*run_cmd) return run.data_dir = data_dir, cli::cmd_run(run, std::cout);
    if (*rank_cmd) return rank.data_dir = data_dir, cli::cmd_rank(rank, std::cout);
    if (*hire_cmd) return hire.data_dir = data_dir, cli::cmd_hire(hire, std::cout);
    if (*event_cmd) return event.data_dir = data_dir, cli::cmd_event(event, std::cout);
    if (*inspect_cmd) return inspect.data_dir = data_dir, cli::cmd_inspect(inspect, std::cout);
    if (*history_cmd) return history.data_dir = data_dir, cli::cmd_history(history, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "hrchain: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
  return cli::kExitError;
}
