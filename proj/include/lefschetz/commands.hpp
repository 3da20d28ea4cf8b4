// Command implementations behind the lefschetz CLI.  Each returns the process
// exit code: 0 pass, 1 fail, 2 inconclusive, 3 input error.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz::cli {

enum ExitCode { kPass = 0, kFail = 1, kInconclusive = 2, kInputError = 3 };

struct KRange {
  long lo = -3, hi = 3;
};
// Accepts "a:b", "a..b" or a single integer.
KRange parse_k_range(const std::string& s);

int cmd_example(const std::string& name, int g, const std::string& out,
                const std::string& derivation_out, std::ostream& os);
int cmd_verify(const std::string& file, const std::string& out, std::ostream& os);
int cmd_sections(const std::string& file, const std::string& delta, const std::string& gamma,
                 const KRange& range, const std::string& out_dir, std::ostream& os);
int cmd_invariants(const std::string& file, const std::string& route, const std::string& out,
                   std::ostream& os);
int cmd_hurwitz(const std::string& file1, const std::string& file2, std::size_t budget,
                const std::vector<std::string>& conjugators, const std::string& out,
                bool serial, std::ostream& os);
int cmd_separate(long k1, long k2, int g, int radius, const std::string& out, std::ostream& os);

}  // namespace lefschetz::cli
