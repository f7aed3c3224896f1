#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minorlab/report.hpp"

namespace minorlab {

// Edge bound (t-3)n - (t-1)(t-4)/2 for 5 <= t <= 9, n >= t-1.
int threshold(int t, int n);

struct RunOptions {
  int jobs = 0;         // 0 = all cores; MINORLAB_JOBS overrides
  std::string out_dir;  // empty = keep everything in memory
  bool resume = false;
  int witness_cap = 2000;
};

// Exhaustive verification of one numbered claim at the given cap (the cap is
// the maximum cockade order for 1-3, the sample count for 4, and the largest
// enumerated vertex count for 5-7; claims 9-11 take no cap).
LemmaReport verify_lemma(int id, std::optional<int> cap, const RunOptions& opts);

// Streams the degree-constrained enumeration for one n through the
// K7=-union-K1 family test and compares the minor-free survivors against the
// expected named graphs; includes the edge-maximality and K7-minus-an-edge
// side checks for the survivors of that order.
LemmaReport verify_lemma8(int n, const RunOptions& opts);

// Hook for exercising the checkpoint: abort after the given number of chunks
// (-1 = never).  An aborted run writes its checkpoint and returns a report
// flagged "aborted"; resuming completes it.
struct Lemma8Control {
  int abort_after_chunks = -1;
};
LemmaReport verify_lemma8_controlled(int n, const RunOptions& opts, const Lemma8Control& ctl);

// All five side claims at once, independent of the enumeration runs.
LemmaReport verify_lemma8_side_claims(const RunOptions& opts);

// Dichotomy spot check for small t: every enumerated graph on up to n_max
// vertices with at least threshold(t, n) edges has the two-missing-edges
// family minor or is a glued-clique stack of complete pieces.
LemmaReport check_theorem(int t, int n_max, const RunOptions& opts);

// Randomized dichotomy sampling at the t = 9 parameters.
LemmaReport spot_check_theorem2(int samples, uint64_t seed, const RunOptions& opts);

}  // namespace minorlab
