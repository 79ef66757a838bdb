#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/pointer.hpp"
#include "core/rng.hpp"

namespace weaklab::statkit {

using pointer::ReadoutRecord;

// fixed: constant coupling epsilon, estimator error falls as 1/sqrt(N).
// scaled: epsilon = lambda / sqrt(N), disturbance stays N-independent but the
// estimator signal-to-noise no longer improves with N.
enum class CouplingMode { fixed, scaled };

const char* to_string(CouplingMode mode);

// Ordered record of individually recorded readouts for one detector, to be
// summed up later under any desired grouping.
struct OutcomeLedger {
  std::vector<ReadoutRecord> records;
  CouplingMode mode = CouplingMode::fixed;
  double epsilon_or_lambda = 0.0;

  void append(const ReadoutRecord& rec);  // enforces nondecreasing trial_id
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

// Mean of value/epsilon per record; std_error is the sample standard
// deviation of value/epsilon over sqrt(N). Needs at least two records.
Estimate estimate(const OutcomeLedger& ledger);

// Streaming mean/variance (Welford) for runs too large to keep records.
class RunningStat {
 public:
  void add(double x);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double sample_variance() const;
  Estimate as_estimate() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct SliceResult {
  std::vector<Estimate> groups;
  Estimate without_flagged;    // full-ledger estimate with collapse-flagged records removed
  std::size_t flagged = 0;
};

// Seeded random partition into `groups` near-equal groups (k = 1 collapses to
// the full estimate). Also recomputes the estimate with every collapse-flagged
// record deleted, the falsification check that the few collapsed outcomes are
// not what carries the signal.
SliceResult slice(const OutcomeLedger& ledger, std::size_t groups, RandomStream& rng);

// Least-squares slope of log(std_error) against log(N). Needs >= 3 points
// spanning at least two decades of N, all entries positive.
double scaling_exponent(std::span<const std::pair<double, double>> n_and_std_error);

// CSV export: header trial_id,cycle_id,value,epsilon,collapsed_flag with
// 12-significant-digit decimals; byte-deterministic.
void write_csv(const OutcomeLedger& ledger, std::ostream& out);

std::string format_decimal(double v);  // the 12-significant-digit format used everywhere

}  // namespace weaklab::statkit
