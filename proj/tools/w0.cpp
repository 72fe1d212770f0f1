// w0: weight-zero cohomology from dual complexes and resolution nerves.
//
//   w0 <command> [--ring z|q] [--format text|json] [--output PATH] FILE...

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "w0/cli/run.hpp"

namespace {

std::size_t max_dim_from_env() {
  const char* raw = std::getenv("W0_MAX_DIM");
  if (!raw || !*raw) return w0::cli::kDefaultMaxDim;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0') {
    std::cerr << "w0: ignoring malformed W0_MAX_DIM='" << raw << "'\n";
    return w0::cli::kDefaultMaxDim;
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial (weight-zero) cohomology of singular varieties"};
  app.require_subcommand(1);

  w0::cli::JobRequest req;
  std::string ring = "z";
  std::string format = "text";
  std::string output;

  for (const auto& name : w0::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--ring", ring, "coefficient ring")
        ->check(CLI::IsMember({"z", "q", "Z", "Q"}))
        ->capture_default_str();
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--jobs", req.jobs, "files processed in parallel")->check(CLI::PositiveNumber);
    if (name == "bound-check")
      sub->add_option("--h-struct", req.h_struct, "structure-sheaf dimensions h^0,h^1,...")->delimiter(',');
    sub->add_option("FILE", req.inputs, "input documents")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : w0::cli::kInputError;
  }

  req.command = app.get_subcommands().front()->get_name();
  req.ring = (ring == "q" || ring == "Q") ? w0::Ring::Q : w0::Ring::Z;
  req.format = format == "json" ? w0::cli::Format::Json : w0::cli::Format::Text;
  req.max_dim = max_dim_from_env();
  if (!output.empty()) req.output = output;

  const auto reports = w0::cli::run_batch(req);
  const std::string text = w0::cli::render(reports, req.format);
  if (req.output) {
    std::ofstream out(*req.output);
    if (!out) {
      std::cerr << "w0: cannot write '" << *req.output << "'\n";
      return w0::cli::kInputError;
    }
    out << text;
  } else {
    std::cout << text;
  }
  for (const auto& r : reports)
    if (!r.error.empty() && req.format == w0::cli::Format::Json) std::cerr << "w0: " << r.error << '\n';
  return w0::cli::combined_status(reports);
}
