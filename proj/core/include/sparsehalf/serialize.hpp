#pragma once

#include <string>

#include "sparsehalf/closed_form.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/outcome.hpp"
#include "sparsehalf/pipeline.hpp"

namespace sparsehalf {

/// Compact JSON objects, one per call; keys are stable.
std::string to_json(const SelectionOutcome& o);
std::string to_json(const OracleResult& r, std::size_t k);
std::string to_json(const SparseHalfResult& r);
std::string to_json(const ExtremalReport& r);
std::string to_json(const BipartiteSplit& s);
std::string to_json(const ClosedFormCheck& c);

}  // namespace sparsehalf
