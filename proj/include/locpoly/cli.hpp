#ifndef LOCPOLY_CLI_HPP
#define LOCPOLY_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "locpoly/json_io.hpp"
#include "locpoly/kernels.hpp"

namespace locpoly {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitSchema = 2;

// Runs one command line; reports go to out (or to --out), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Command bodies on an already parsed scenario document.
Json verify_axioms_command(const Json& scenario);
Json vf_command(const Json& scenario);
Json poly_check_command(const Json& scenario);
Json decompose_command(const Json& scenario);
Json isotypic_command(const Json& scenario);
Json convolve_command(const Json& scenario);
Json local_unit_command(const Json& scenario);

// Dual-point and reconstruction checks for a certificate.
Json certificate_checks(const Action& a, const Func& f, const PolynomialCertificate& cert);

// Generated instances; seeds depend only on (seed, index).
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);
Json finite_instance_report(std::uint64_t seed, std::size_t index);
Json padic_instance_report(std::uint64_t seed, std::size_t index);
Json affine_instance_report(std::uint64_t seed, std::size_t index);
// family: finite, padic, affine or all.  Instances sorted by name.
Json suite_report(const std::string& family, std::size_t count, std::uint64_t seed, Exec e = Exec::Parallel);

// Text rendering of a report.
std::string render_text(const Json& report);

}  // namespace locpoly

#endif
