#pragma once

// Frozen reference data for the 3-column table family: the shipped base
// relation on 4 copies and the published lifted relations on 5, 6 and 7
// copies (plus the 7-copy variant produced by switching the lead count at
// 6 copies). Transcribed by hand; tests compare computed output against
// these tables entry by entry.

#include <vector>

#include "graverlift/exact.hpp"
#include "graverlift/nfold.hpp"
#include "graverlift/relation.hpp"

namespace fixtures {

using graverlift::BrickVector;
using graverlift::Int;
using graverlift::IntMatrix;
using graverlift::IntVector;
using graverlift::PrimitiveRelation;

inline PrimitiveRelation make(std::size_t copies,
                              std::vector<std::vector<IntVector>> tables,
                              std::vector<Int> coefficients) {
  PrimitiveRelation rel;
  rel.base_matrix = IntMatrix::from_rows({{1, 1, 1}});
  rel.copies = copies;
  for (auto& t : tables)
    rel.elements.push_back(BrickVector::from_bricks(t));
  rel.coefficients = std::move(coefficients);
  return rel;
}

inline PrimitiveRelation relation_3x5() {
  return make(
      5,
      {
          {{0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {-1, 1, 0}},
          {{0, 0, 0}, {0, 1, -1}, {-1, 0, 1}, {0, 0, 0}, {1, -1, 0}},
          {{-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {1, -1, 0}},
          {{-1, 1, 0}, {0, 0, 0}, {0, -1, 1}, {1, 0, -1}, {0, 0, 0}},
          {{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}},
          {{0, 1, -1}, {1, -1, 0}, {0, 0, 0}, {-1, 0, 1}, {0, 0, 0}},
          {{1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}},
      },
      {9, 6, 10, 4, 6, 12, 14, 7, 7});
}

inline PrimitiveRelation relation_3x6() {
  return make(
      6,
      {
          {{0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 1, 0}},
          {{0, 0, 0}, {0, 1, -1}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}},
          {{-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}},
          {{-1, 1, 0}, {0, 0, 0}, {0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 1, -1}, {1, -1, 0}, {0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}},
          {{1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}, {0, 0, 0}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}},
      },
      {25, 12, 20, 8, 12, 24, 28, 14, 14, 7, 7});
}

inline PrimitiveRelation relation_3x7() {
  return make(
      7,
      {
          {{0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 1, 0}},
          {{0, 0, 0}, {0, 1, -1}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}},
          {{-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}},
          {{-1, 1, 0}, {0, 0, 0}, {0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{0, 1, -1}, {1, -1, 0}, {0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}, {0, 0, 0}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}},
      },
      {57, 24, 40, 16, 24, 48, 56, 28, 28, 14, 14, 7, 7});
}

inline PrimitiveRelation relation_3x7_switched() {
  return make(
      7,
      {
          {{0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 1, 0}},
          {{0, 0, 0}, {0, 1, -1}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {0, 0, 0}},
          {{-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {0, 0, 0}},
          {{-1, 1, 0}, {0, 0, 0}, {0, -1, 1}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{0, 1, -1}, {1, -1, 0}, {0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}},
          {{0, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {0, 1, -1}, {0, 0, 0}},
          {{0, 1, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -1, 0}, {-1, 0, 1}, {0, 0, 0}},
          {{0, 0, 0}, {1, 0, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 1, 0}, {0, -1, 1}},
          {{0, -1, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {-1, 1, 0}, {1, 0, -1}},
      },
      {25, 24, 40, 16, 24, 48, 56, 28, 28, 14, 14, 25, 25});
}

}  // namespace fixtures
