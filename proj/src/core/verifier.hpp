#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "core/element_record.hpp"

namespace sidon {

// Outcome of a Sidon check. When ok is false the witness equation
// x1 + x2 = y1 + y2 holds exactly with {x1,x2} != {y1,y2}; it is the
// lexicographically least such quadruple (x1 <= x2, y1 <= y2, (x1,x2) < (y1,y2)).
struct SidonReport {
  bool ok = true;
  bool has_witness = false;
  mpz_class x1, x2, y1, y2;
  uint64_t pairs_checked = 0;
};

// All unordered pair sums (including doubled elements) must be distinct.
// Input duplicates are themselves violations and surface as x1 == x2 witnesses.
SidonReport check_sidon(const std::vector<mpz_class>& xs);

// Lemma-style blockwise classifier: true iff Delta_{ip}+Delta_{iq} ==
// Delta_{ir}+Delta_{is} for every i (blocks beyond an element's class are 0)
// and t_p + t_q == t_r + t_s.
bool classify_tuple(const ElementRecord& ep, const ElementRecord& eq,
                    const ElementRecord& er, const ElementRecord& es);

}  // namespace sidon
