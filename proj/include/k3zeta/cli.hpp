// Command dispatch for the mzt tool. Exit codes: 0 success, 1 input error,
// 2 theory-violation diagnostic.
#ifndef K3ZETA_CLI_HPP
#define K3ZETA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace k3zeta {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace k3zeta

#endif
