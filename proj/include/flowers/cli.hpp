#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace flowers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// One line of `sweep` output.
struct SweepRow {
    std::string family;
    int m = 0;
    int n = 0;
    std::optional<int> p;
    std::string quantity;
    std::string closed_form;  // "num/den", lowest terms
    double oracle = 0.0;
    double abs_error = 0.0;
};

inline constexpr const char* kCsvHeader = "family,m,n,p,quantity,closed_form,oracle,abs_error";

std::string to_csv(const SweepRow& row);
std::string to_json(const std::vector<SweepRow>& rows);

/// One `verify` mismatch, e.g.
/// "FAIL family=cycle m=6 n=5 p=2 pair=1:1,3:4 expected=7/5 observed=1.41".
std::string failure_line(const std::string& family, int m, int n, std::optional<int> p, const std::string& what,
                         const std::string& expected, double observed);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowers::cli
