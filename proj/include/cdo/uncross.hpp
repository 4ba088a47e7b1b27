#pragma once

#include <ostream>
#include <vector>

#include "cdo/family.hpp"

namespace cdo {

struct UncrossOptions {
  std::ostream* trace = nullptr;  // one JSON line per rewritten pair
};

struct UncrossStats {
  int pairs = 0;
  int merged = 0;
  int missing_cross_node = 0;  // crossing pairs sharing no node off the parent
};

// A candidate path from the cross-node to the opposite span [g, l].
struct CandidatePath {
  Path path;
  Length r = 0;  // l(R(P))
  int via = -1;  // last chain cycle, -1 for Q' or Q''
  Length cost() const { return 2 * path.length - r; }
};

// Not-very-heavy-outer-crossing pairs among the placed pool of parent, in
// processing order.
std::vector<CrossingRecord> nvh_pairs(const Family& f, int parent, UncrossStats* stats = nullptr);

// One application of the rewrite to the pair r below parent.
void uncross_pair(Family& f, int parent, const CrossingRecord& r, const UncrossOptions& opt = {},
                  UncrossStats* stats = nullptr);

// Builds the hierarchy while removing every not-very-heavy-outer-crossing,
// then fills the tree annotations.
Family cancel_crossings(Family f, const UncrossOptions& opt = {}, UncrossStats* stats = nullptr);

struct NineReport {
  Length worst_num = 0;  // l(C_after(v)) of the worst node
  Length worst_den = 1;  // l(C*(v)) of the worst node
  NodeId worst = -1;
  int violations = 0;
};

// Ratio num/den compared against k with 0/0 read as 1.
bool ratio_within(Length num, Length den, Length k);
bool ratio_greater(Length n1, Length d1, Length n2, Length d2);

NineReport assert_nine_bound(const Family& after, bool throw_on_violation = true);

}  // namespace cdo
