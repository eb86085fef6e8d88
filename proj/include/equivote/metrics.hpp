#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "equivote/core.hpp"
#include "equivote/elections.hpp"
#include "equivote/errors.hpp"

namespace equivote {

namespace detail {

// Chunked integer reduction over ballots; partial sums merge in chunk order,
// so results are identical for any thread count.
template <typename Fn>
std::uint64_t count_ballots(const PreferenceProfile& profile, int threads, Fn&& pred) {
  const auto& ballots = profile.ballots();
  const std::size_t n = ballots.size();
  threads = std::max(1, threads);
  if (threads == 1 || n < 4096) {
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (pred(ballots[b])) ++total;
    return total;
  }
  const std::size_t chunks = static_cast<std::size_t>(threads);
  const std::size_t stride = (n + chunks - 1) / chunks;
  std::vector<std::uint64_t> partial(chunks, 0);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < chunks; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = t * stride;
      const std::size_t hi = std::min(n, lo + stride);
      std::uint64_t local = 0;
      for (std::size_t b = lo; b < hi; ++b)
        if (pred(ballots[b])) ++local;
      partial[t] = local;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (const auto p : partial) total += p;
  return total;
}

inline void require_winners_in_pool(const std::vector<CandidateIndex>& winners,
                                    const PreferenceProfile& profile, const char* what) {
  for (const auto w : winners)
    if (w >= profile.pool().size())
      throw DataError(std::string(what) + ": winner index outside the profile pool");
}

}  // namespace detail

// Fraction of voters with at least one winner among their top-t choices.
inline double user_satisfaction_index(const std::vector<CandidateIndex>& winners,
                                      const PreferenceProfile& profile, std::uint32_t t = 10,
                                      int threads = 1) {
  if (winners.empty()) throw std::invalid_argument("user_satisfaction_index: empty winner set");
  if (t == 0) throw std::invalid_argument("user_satisfaction_index: t must be positive");
  detail::require_winners_in_pool(winners, profile, "user_satisfaction_index");
  const auto satisfied = detail::count_ballots(profile, threads, [&](const Ballot& ballot) {
    for (const auto w : winners)
      if (ballot.rank_of(w) <= t) return true;
    return false;
  });
  return static_cast<double>(satisfied) / static_cast<double>(profile.size());
}

// A voter dislikes an item when it sits in the bottom x percent of their
// ranking (strict: rank > (1 - x/100) * m, compared exactly for integral x).
// Returns the disliking fraction averaged over the winner set.
inline double anti_plurality_index(const std::vector<CandidateIndex>& winners,
                                   const PreferenceProfile& profile, double x = 10.0,
                                   int threads = 1) {
  if (winners.empty()) throw std::invalid_argument("anti_plurality_index: empty winner set");
  if (!(x > 0.0 && x < 100.0))
    throw std::invalid_argument("anti_plurality_index: x must lie in (0, 100)");
  detail::require_winners_in_pool(winners, profile, "anti_plurality_index");
  const double m = static_cast<double>(profile.pool().size());
  const double threshold = (100.0 - x) * m;  // dislike iff 100 * rank > threshold
  double sum = 0.0;
  for (const auto w : winners) {
    const auto dislikes = detail::count_ballots(profile, threads, [&](const Ballot& ballot) {
      return 100.0 * static_cast<double>(ballot.rank_of(w)) > threshold;
    });
    sum += static_cast<double>(dislikes) / static_cast<double>(profile.size());
  }
  return sum / static_cast<double>(winners.size());
}

inline double jaccard_overlap(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty())
    throw std::invalid_argument("jaccard_overlap: both sets are empty");
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

// How the winner set lands across voters' ranked choices: per-rank counts,
// percentile-bin counts, and the mean rank/percentile over all
// (ballot, winner) pairs.
struct ChoiceDistribution {
  std::map<std::uint32_t, std::uint64_t> rank_counts;
  std::vector<std::uint64_t> percentile_bins;
  double mean_rank = 0.0;
  double mean_percentile = 0.0;
  std::uint64_t samples = 0;

  friend bool operator==(const ChoiceDistribution&, const ChoiceDistribution&) = default;
};

inline ChoiceDistribution choice_distribution(const std::vector<CandidateIndex>& winners,
                                              const PreferenceProfile& profile,
                                              std::size_t percentile_bins = 10) {
  if (winners.empty()) throw std::invalid_argument("choice_distribution: empty winner set");
  if (percentile_bins == 0)
    throw std::invalid_argument("choice_distribution: need at least one percentile bin");
  detail::require_winners_in_pool(winners, profile, "choice_distribution");
  const std::size_t m = profile.pool().size();
  ChoiceDistribution dist;
  dist.percentile_bins.assign(percentile_bins, 0);
  std::uint64_t rank_sum = 0;
  for (const auto& ballot : profile.ballots()) {
    for (const auto w : winners) {
      const std::uint32_t r = ballot.rank_of(w);
      dist.rank_counts[r] += 1;
      rank_sum += r;
      // rank r maps to bin floor((r-1) * bins / m): exact integer binning.
      const std::size_t bin = static_cast<std::size_t>(
          (static_cast<std::uint64_t>(r) - 1) * percentile_bins / m);
      dist.percentile_bins[bin] += 1;
      ++dist.samples;
    }
  }
  dist.mean_rank = static_cast<double>(rank_sum) / static_cast<double>(dist.samples);
  dist.mean_percentile =
      static_cast<double>(rank_sum) / (static_cast<double>(m) * static_cast<double>(dist.samples));
  return dist;
}

// Proportions over demographic categories, summing to one.
struct DemographicVector {
  std::map<std::string, double> shares;

  void validate() const {
    double sum = 0.0;
    for (const auto& [category, value] : shares) {
      if (value < 0.0 || value > 1.0)
        throw DataError("demographic share out of [0,1] for category " + category);
      sum += value;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw DataError("demographic shares sum to " + std::to_string(sum) + ", expected 1");
  }

  static DemographicVector normalized(const std::map<std::string, double>& raw) {
    double sum = 0.0;
    for (const auto& [category, value] : raw) {
      if (value < 0.0) throw DataError("negative demographic count for category " + category);
      sum += value;
    }
    if (sum <= 0.0) throw DataError("demographic vector with zero total mass");
    DemographicVector out;
    for (const auto& [category, value] : raw) out.shares[category] = value / sum;
    return out;
  }

  friend bool operator==(const DemographicVector&, const DemographicVector&) = default;
};

// Euclidean distance between an item's voter demographics and the reference
// population demographics.
inline double demographic_bias(const DemographicVector& item, const DemographicVector& reference) {
  if (item.shares.size() != reference.shares.size())
    throw std::invalid_argument("demographic_bias: category spaces differ");
  double sum = 0.0;
  auto it = item.shares.begin();
  auto rt = reference.shares.begin();
  for (; it != item.shares.end(); ++it, ++rt) {
    if (it->first != rt->first)
      throw std::invalid_argument("demographic_bias: category spaces differ");
    const double d = it->second - rt->second;
    sum += d * d;
  }
  return std::sqrt(sum);
}

// True when the group's share among the item's voters falls below
// threshold * (its share in the reference population).
inline bool under_representation(const DemographicVector& item, const DemographicVector& reference,
                                 const std::string& group, double threshold = 0.8) {
  const auto it = item.shares.find(group);
  const auto rt = reference.shares.find(group);
  if (it == item.shares.end() || rt == reference.shares.end())
    throw std::invalid_argument("under_representation: group not present: " + group);
  if (rt->second == 0.0)
    throw std::invalid_argument("under_representation: reference fraction is zero for " + group);
  return it->second < threshold * rt->second;
}

// Demographics of the distinct voters who voted for an item, aggregated from
// the per-voter side table and renormalized. Voters absent from the side
// table are skipped.
inline DemographicVector item_demographics(const std::vector<VoteEvent>& events,
                                           const std::string& item,
                                           const std::map<std::string, DemographicVector>& voters) {
  std::set<std::string> seen;
  std::map<std::string, double> totals;
  for (const auto& ev : events) {
    if (ev.candidate != item || !seen.insert(ev.voter).second) continue;
    const auto it = voters.find(ev.voter);
    if (it == voters.end()) continue;
    for (const auto& [category, value] : it->second.shares) totals[category] += value;
  }
  if (totals.empty())
    throw DataError("item_demographics: no demographic data for voters of " + item);
  return DemographicVector::normalized(totals);
}

struct SolidCoalitionReport {
  std::uint64_t coalition_size = 0;  // |V'|: ballots ranking all of C' on top
  std::uint64_t q_entitled = 0;      // seats the coalition size entitles it to
  std::uint64_t q_elected = 0;       // |W ∩ C'|
  bool satisfied = true;
};

// Verifies proportionality for one candidate subset C': V' is the set of
// ballots ranking every member of C' above every non-member, and the
// coalition is entitled to max { q : |V'| >= q * n/(K+1) } seats, capped at
// K and |C'|.
inline SolidCoalitionReport check_solid_coalition(const PreferenceProfile& profile,
                                                  const std::vector<CandidateIndex>& coalition,
                                                  const std::vector<CandidateIndex>& winners,
                                                  std::size_t k) {
  if (coalition.empty()) throw std::invalid_argument("check_solid_coalition: empty coalition");
  if (k == 0) throw std::invalid_argument("check_solid_coalition: K must be positive");
  detail::require_winners_in_pool(coalition, profile, "check_solid_coalition");
  const auto csize = static_cast<std::uint32_t>(coalition.size());

  SolidCoalitionReport report;
  // With complete strict rankings, C' sits above everything else exactly when
  // its members occupy ranks 1..|C'|.
  for (const auto& ballot : profile.ballots()) {
    bool solid = true;
    for (const auto c : coalition) {
      if (ballot.rank_of(c) > csize) {
        solid = false;
        break;
      }
    }
    if (solid) ++report.coalition_size;
  }

  const auto n = static_cast<std::uint64_t>(profile.size());
  std::uint64_t q = report.coalition_size * (k + 1) / n;  // floor(|V'|(K+1)/n)
  q = std::min<std::uint64_t>(q, k);
  q = std::min<std::uint64_t>(q, coalition.size());
  report.q_entitled = q;

  for (const auto w : winners)
    if (std::find(coalition.begin(), coalition.end(), w) != coalition.end()) ++report.q_elected;
  report.satisfied = report.q_elected >= report.q_entitled;
  return report;
}

// Exhaustive enumeration of entitled solid coalitions; exponential in m, so
// callers are expected to keep pools small (tests use m <= 6).
inline std::vector<std::vector<CandidateIndex>> entitled_coalitions(
    const PreferenceProfile& profile, std::size_t k) {
  const std::size_t m = profile.pool().size();
  if (m > 20) throw std::invalid_argument("entitled_coalitions: pool too large to enumerate");
  std::vector<std::vector<CandidateIndex>> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<CandidateIndex> subset;
    for (CandidateIndex c = 0; c < m; ++c)
      if (mask & (1u << c)) subset.push_back(c);
    const auto report = check_solid_coalition(profile, subset, {}, k);
    if (report.q_entitled >= 1) out.push_back(std::move(subset));
  }
  return out;
}

// Aggregated fairness quantities of one method's winner set.
struct MetricsReport {
  std::string method;
  double usi = 0.0;
  double anti_plurality = 0.0;
  ChoiceDistribution choices;
  std::optional<double> mean_bias;                       // needs demographics + events
  std::map<std::string, double> under_representation;    // group -> fraction of winners
  std::map<std::string, double> jaccard;                 // other method -> overlap
};

}  // namespace equivote
