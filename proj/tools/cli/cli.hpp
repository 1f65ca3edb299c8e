#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "table.hpp"

namespace gravheun::cli {

enum class Subcommand { reduce, identities, eigen, eigen_gravity, heunb, hermite_expand, quantized_K, reproduce };

std::string to_string(Subcommand s);

struct RunConfig {
    Subcommand subcommand = Subcommand::reproduce;
    std::map<std::string, std::string> params;  // validated values keyed by flag name
    std::string output;                         // empty = stdout
    Format format = Format::csv;
    bool format_given = false;
    int threads = -1;                           // -1 = leave GRAVHEUN_THREADS in charge

    const std::string& get(const std::string& key) const;
    double number(const std::string& key) const;
    long long integer(const std::string& key) const;
    bool flag(const std::string& key) const;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --help / --version: the text to print, exit code 0.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// argv[0] is the program name. Throws UsageError naming the offending flag.
RunConfig parse_args(int argc, const char* const* argv);
// Same, without the program name.
RunConfig parse_args(const std::vector<std::string>& args);

// 0 ok, 1 numerical failure, 2 usage error detected while running.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gravheun::cli
