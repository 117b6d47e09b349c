#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tdual/dualgroup.hpp"

namespace tdual::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parsing helpers shared with the tests.
IntVector parse_vector(const std::string& text);
// Rows separated by ';', entries by ','.
RatMatrix parse_rat_matrix(const std::string& text);
// Sum over components of K_c / g_c with g_c the largest integer keeping
// K_c / g_c integral with even diagonal.
IntMatrix minimal_killing(const RootDatum& rd);
// Gram e * minimal_killing, rational part in G0 and t-part in G1.
QForm exponent_qform(const RootDatum& rd, const Exponent& e);
// "nZ" in rank one, span{...} otherwise.
std::string lattice_string(const Sublattice& s);

}  // namespace tdual::cli
