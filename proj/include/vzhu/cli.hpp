#ifndef VZHU_CLI_HPP
#define VZHU_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vzhu/series.hpp"

namespace vzhu {

enum ExitCode { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

// Runs one command line (without the program name). Output goes to `out`
// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// f<n>, g<n>, huang_f, huang_g, exp_mode(k,w,m), exp(w), expm1, log1p, x,
// binom(r), or an explicit {"valuation": v, "coeffs": [...]} polynomial.
LaurentSeries series_from_spec(const std::string& spec, int order);

}  // namespace vzhu

#endif  // VZHU_CLI_HPP
