#pragma once

// JSON and table rendering shared by the CLI and the Python module.

#include "brauer/sft.hpp"

#include "json.hpp"

#include <string>

namespace brauer {

using Json = nlohmann::ordered_json;

Json diagram_json(const Diagram& d);  // [[i, j], ...], 1-based

// Murphy or dual Murphy basis of B_r (brauer) or Z S_r, coefficients in Z[d]
Json murphy_json(const MurphyBasis& b);
// split basis at δ_0, with a kernel flag per entry
Json split_json(const SplitBasis& sb);

Json certificate_json(const Certificate& c);
std::string certificate_table(const Certificate& c);

Json dims_json(const std::vector<DimsRow>& rows);
std::string dims_table_text(const std::vector<DimsRow>& rows);

std::string basis_table(const Json& basis);

}  // namespace brauer
