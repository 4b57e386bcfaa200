#pragma once

#include "polyco/scomplex.hpp"
#include "polyco/spacexpr.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polyco {

/// Runs the polyco command line.  Returns 0 on success, 2 on invalid input,
/// 1 on an internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a complex file ({"m": .., "facets": [..]}).  Errors name the file
/// and, for syntax errors, the line.
SimplicialComplex load_complex(const std::string& path);

/// Reads a spaces file keyed by vertex ("1", "2", ...).  Each value is a
/// space expression (meaning X_i -> *) or {"domain", "codomain",
/// "domain_contractible"}.
PairAssignment load_pairs(const std::string& path);
PairAssignment pairs_from_json(const nlohmann::json& j, const std::string& source, const std::string& text = {});

}  // namespace polyco
