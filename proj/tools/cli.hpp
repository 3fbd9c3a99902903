#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ellbundle::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on domain errors (error JSON on `err`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Verbs in the dispatch table, in registration order.
std::vector<std::string> verbs();

/// An example invocation reaching a library operation.
struct Route {
  std::string operation;
  std::vector<std::string> args;
};

/// One route per library operation exposed by the tool.
const std::vector<Route>& routes();

}  // namespace ellbundle::cli
