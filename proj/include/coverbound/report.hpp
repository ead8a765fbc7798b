#ifndef COVERBOUND_REPORT_HPP
#define COVERBOUND_REPORT_HPP

#include <ostream>
#include <string>

#include "json.hpp"

#include "coverbound/case_analysis.hpp"
#include "coverbound/certifier.hpp"
#include "coverbound/oracle.hpp"

namespace coverbound {

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& cert);
Json to_json(const SampleReport& report);
Json to_json(const CaseReport& report);

// Compact JSON with every floating-point number printed with 17 significant
// digits. Non-finite numbers become null.
std::string dump_json(const Json& value, int indent = 2);

// %.17g
std::string format_double(double value);

// CSV rows "alpha,beta,p,q,f,g,F" over an n x n grid of the canonical Moser
// domain, endpoints included, preceded by a header line.
void write_moser_grid_csv(std::ostream& out, int n,
                          double b0 = kBroadwormBreadth);

}  // namespace coverbound

#endif  // COVERBOUND_REPORT_HPP
