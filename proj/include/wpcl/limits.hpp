#pragma once

#include <cstddef>

namespace wpcl {

/// Resource guards. Operations that would otherwise enumerate a doubly
/// exponential space check these and throw ResourceError naming the limit,
/// so oversized inputs fail fast instead of hanging.
struct Limits {
  /// Cap on |P| for whole-domain enumerations over C(P), whose size is
  /// 2^(2^|P|-1) - 1. Also gates expanding a constant into a full table.
  int port_limit = 4;

  /// Cap on |gamma| when evaluating a star formula: a configuration of size
  /// n has Bell(n) partitions (Bell(9) = 21147).
  int star_limit = 9;

  /// Cap on the universe size for dense per-subset tables inside the
  /// evaluator (2^n entries per formula node, 3^n split enumeration).
  int dense_limit = 16;

  /// Cap on enumerated combinations in the sparse paths: term pairs under
  /// coalescing, disjoint term families under star, superset spreads.
  std::size_t work_budget = std::size_t(1) << 22;
};

}  // namespace wpcl
