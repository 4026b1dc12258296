// darg: command-line front end over knowledge-base files (.akb).
#include <iostream>

#include <CLI11.hpp>

#include "darg/commands.hpp"
#include "darg/error.hpp"

namespace {

struct Invocation {
  std::string kb_path;
  std::string positional;
  darg::CommandOptions opts;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Invocation& inv, const std::string& positional_name = {},
                      bool positional_required = false) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("kb", inv.kb_path, "knowledge-base file (.akb)")->required();
  if (!positional_name.empty()) {
    auto* opt = sub->add_option(positional_name, inv.positional, positional_name);
    if (positional_required) opt->required();
  }
  sub->add_option("--format", inv.opts.format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deductive argumentation over simple, classical, default and conditional logic"};
  app.require_subcommand(1);
  Invocation inv;
  std::string semantics;
  std::string claim_flag;

  auto* args = add_command(app, "args", "list generated arguments", inv);
  args->add_option("--claim", claim_flag, "only arguments for this claim");
  add_command(app, "attacks", "list attacks between generated arguments", inv);
  add_command(app, "graph", "emit the generated argument graph", inv);
  auto* ext = add_command(app, "extensions", "extensions of the generated graph", inv);
  ext->add_option("--semantics", semantics, "grounded, complete, preferred or stable");
  auto* acc = add_command(app, "accept", "is a claim accepted", inv, "claim", true);
  acc->add_option("--semantics", semantics, "grounded, complete, preferred or stable");
  acc->add_option("--mode", inv.opts.mode, "credulous or skeptical");
  acc->add_flag("--skeptical", inv.opts.skeptical, "same as --mode skeptical");
  add_command(app, "dl-extensions", "extensions of a default theory", inv);
  auto* dle = add_command(app, "dl-entails", "default-logic consequence", inv, "formula", true);
  dle->add_flag("--skeptical", inv.opts.skeptical, "hold in every extension");
  add_command(app, "p-entails", "System P consequence of a conditional", inv, "conditional", true);
  auto* ver = add_command(app, "verify-descriptive", "check an abstract graph against arguments",
                          inv, "graph", true);
  ver->add_flag("--strict", inv.opts.strict, "also fail on attacks missing from the graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : darg::kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (!semantics.empty()) inv.opts.semantics = semantics;
  if (!claim_flag.empty()) inv.opts.claim = claim_flag;
  if (!inv.positional.empty()) {
    if (command == "verify-descriptive") inv.opts.graph_file = inv.positional;
    else inv.opts.claim = inv.positional;
  }

  try {
    const darg::KBDocument doc = darg::load_kb(inv.kb_path);
    const darg::QueryResult r = darg::run_command(doc, command, inv.opts);
    std::cout << r.output;
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "darg: " << e.what() << "\n";
    return darg::exit_code_for(e);
  }
}
