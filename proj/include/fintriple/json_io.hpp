#ifndef FINTRIPLE_JSON_IO_HPP
#define FINTRIPLE_JSON_IO_HPP

#include <json.hpp>

#include "fintriple/catalog.hpp"

namespace fintriple {

using Json = nlohmann::json;

// Algebra descriptor: {"base": "C"|"R", "summands": [{"n": 2, "field": "C"}]}
Json to_json(const AlgebraSpec& spec);
AlgebraSpec algebra_from_json(const Json& j);

// Triple descriptor: {"algebra": ..., "q": [[...]]}; rows and columns follow
// the algebra's irrep label order.
Json to_json(const TripleSpace& space);
TripleSpace triple_from_json(const Json& j);

// Group descriptor: {"elements": [names], "table": [[...]]}
Json to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const Json& j);

// Complex scalars and matrices: [re, im] pairs.
Json to_json(const Complex& z);
Json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);

Json to_json(const IMatrix& m);
IMatrix imatrix_from_json(const Json& j);

// Dirac parameters: {"params": [matrix, ...]} in allowed_blocks order.
Json dirac_params_to_json(const std::vector<CMatrix>& params);
std::vector<CMatrix> dirac_params_from_json(const Json& j);

Json fixture_to_json(const Fixture& f);

/// 64-bit FNV-1a digest of the canonical input text, as fixed-width hex.
std::string input_digest(const std::string& text);

}  // namespace fintriple

#endif
