#pragma once

// JSON encodings. Real matrices are nested row arrays, complex matrices are
// {"re": ..., "im": ...}, complex scalars are [re, im]. Doubles are written in
// nlohmann's shortest round-trip form, so parsing them back is exact.

#include "sj/config.hpp"
#include "sj/reduction.hpp"
#include "sj/types.hpp"

#include <json.hpp>

namespace sj {

using Json = nlohmann::ordered_json;

// Thrown for JSON that parses but does not match the expected shape.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const RMat& M);
Json to_json(const CMat& M);
Json to_json(cplx z);
Json to_json(const SiegelPoint& p);
Json to_json(const JacobiPoint& p);
Json to_json(const DiskPoint& p);
Json to_json(const SymplecticMatrix& M);
Json to_json(const HeisenbergElement& h);
Json to_json(const JacobiGroupElement& g);
Json to_json(const DiskGroupElement& g);
Json to_json(const Condition& c);
Json to_json(const DomainMembership& m);
Json to_json(const Tolerances& t);

RMat rmat_from_json(const Json& j);
CMat cmat_from_json(const Json& j);  // also accepts a real matrix
cplx cplx_from_json(const Json& j);  // [re, im] or a plain number
SiegelPoint siegel_point_from_json(const Json& j);   // {"X","Y"} or {"omega"}
JacobiPoint jacobi_point_from_json(const Json& j);   // {"X","Y","U","V"} or {"omega","Z"}
DiskPoint disk_point_from_json(const Json& j);       // {"W","eta"}
SymplecticMatrix symplectic_from_json(const Json& j);  // {"A","B","C","D"} or {"M"}
HeisenbergElement heisenberg_from_json(const Json& j); // {"lambda","mu","kappa"}
// {"M": ..., "h": ...} or flat {"A",...,"D","lambda","mu","kappa"}. A missing
// Heisenberg part means the zero element of shape m×n, m from `m_hint`.
JacobiGroupElement jacobi_element_from_json(const Json& j, std::size_t m_hint = 0);
DiskGroupElement disk_element_from_json(const Json& j);  // {"P","Q","lambda","mu","kappa"}
// Fields not present keep their defaults.
Tolerances tolerances_from_json(const Json& j, Tolerances base = default_tolerances());

const Json& require(const Json& j, const char* key);

}  // namespace sj
