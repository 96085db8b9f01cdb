#pragma once

#include <json.hpp>

#include <Eigen/Dense>

#include "ktorus/banach.hpp"
#include "ktorus/invariants.hpp"
#include "ktorus/rieffel.hpp"

namespace ktorus {

using Json = nlohmann::json;

Json to_json(const Verdict& v);
Json to_json(const WindingResult& r);
Json to_json(const ChernResult& r);
Json to_json(const BoundaryResult& r);
Json to_json(const K3Report& r);

/// {"a": "<expr>", "b": ..., "alpha": ..., "beta": ..., "gamma": ...};
/// missing fields default to 0, all parsed with a common variable count.
ScalarData scalar_data_from_json(const Json& j);
/// {"X0": [["<expr>","<expr>"],[...]], "X1": [[...]]}
RieffelPair pair_from_json(const Json& j);

/// Dense complex matrix as an array of rows of [re, im] pairs.
Eigen::MatrixXcd matrix_from_json(const Json& j);
Json matrix_to_json(const Eigen::MatrixXcd& m);

Json coeffseq_to_json(const CoeffSeq& a);

}  // namespace ktorus
