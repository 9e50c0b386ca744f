#ifndef PGRAPH_CLI_HPP_
#define PGRAPH_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGuard = 1;
inline constexpr int kExitUsage = 2;

/// Bad command-line input detected after parsing (exit status 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NRange {
    int first = 1;
    int last = 12;
};

/// "A..B" (inclusive) or a single "N". Throws UsageError.
NRange parse_range(std::string_view text);

struct CliConfig {
    std::string subcommand;
    NRange range;
    int n = 0;
    std::vector<std::uint32_t> radii{1, 2};
    std::uint32_t scan_radius = 2;
    std::filesystem::path out_dir = "pgraph_out";
    std::string format;
    std::vector<std::string> tables{"basic", "maxima", "central"};
    std::vector<std::string> modes{"all"};
    int focus = 12;
    int max_n = 40;
    std::size_t clique_bound = 64;
    int threads = 0;  ///< 0: one per available core
};

/**
 * Entry point shared by the pgraph executable and the tests. args excludes
 * the program name. Summaries go to out, diagnostics to err.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pgraph::cli

#endif // PGRAPH_CLI_HPP_
