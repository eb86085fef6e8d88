#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "equivote/core.hpp"
#include "equivote/errors.hpp"
#include "equivote/rational.hpp"
#include "equivote/rng.hpp"

namespace equivote {

// One raw vote batch: a voter backed a candidate `multiplicity` times within
// the cycle (tweets, reads, shares).
struct VoteEvent {
  std::string voter;
  std::string candidate;
  std::int64_t multiplicity = 1;
};

struct DroopQuota {
  std::uint64_t value = 0;
};

inline DroopQuota droop_quota(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("droop_quota: n and K must be positive");
  return DroopQuota{static_cast<std::uint64_t>(n) / (k + 1) + 1};
}

enum class TieBreak { Lexicographic, SeededRandom };

struct TieBreakPolicy {
  TieBreak mode = TieBreak::Lexicographic;
  std::uint64_t seed = 0;
};

enum class Transfer { FractionalGregory, RandomWholeVote };

struct TransferPolicy {
  Transfer mode = Transfer::FractionalGregory;
  std::uint64_t seed = 0;
};

inline std::string to_string(TieBreak m) {
  return m == TieBreak::Lexicographic ? "lex" : "random";
}
inline std::string to_string(Transfer m) {
  return m == Transfer::FractionalGregory ? "fractional" : "random";
}
inline TieBreak tiebreak_from_string(const std::string& s) {
  if (s == "lex") return TieBreak::Lexicographic;
  if (s == "random") return TieBreak::SeededRandom;
  throw DataError("unknown tie-break mode: " + s);
}
inline Transfer transfer_from_string(const std::string& s) {
  if (s == "fractional") return Transfer::FractionalGregory;
  if (s == "random") return Transfer::RandomWholeVote;
  throw DataError("unknown transfer mode: " + s);
}

// Deterministic tie resolution. Lexicographic mode compares candidate id
// strings; seeded mode consumes the policy RNG only when an actual tie occurs,
// so equal traces imply equal RNG streams across implementations.
class TieBreaker {
 public:
  TieBreaker(const TieBreakPolicy& policy, const CandidatePool& pool)
      : policy_(policy), pool_(&pool), rng_(policy.seed) {}

  CandidateIndex pick(std::vector<CandidateIndex> tied) {
    if (tied.empty()) throw InternalError("TieBreaker: empty tie set");
    if (tied.size() == 1) return tied.front();
    std::sort(tied.begin(), tied.end());
    if (policy_.mode == TieBreak::Lexicographic) {
      return *std::min_element(tied.begin(), tied.end(),
                               [&](CandidateIndex a, CandidateIndex b) {
                                 return pool_->id(a) < pool_->id(b);
                               });
    }
    return tied[static_cast<std::size_t>(rng::bounded(rng_, tied.size()))];
  }

  // Orders a group of equal-score candidates: by id in lexicographic mode,
  // seeded shuffle otherwise. Input must already be sorted by index.
  void order_group(std::vector<CandidateIndex>& group) {
    if (group.size() < 2) return;
    if (policy_.mode == TieBreak::Lexicographic) {
      std::sort(group.begin(), group.end(), [&](CandidateIndex a, CandidateIndex b) {
        return pool_->id(a) < pool_->id(b);
      });
    } else {
      rng::shuffle(group, rng_);
    }
  }

  // Full ordering by score descending with policy-resolved tie groups.
  template <typename Score>
  std::vector<CandidateIndex> order_desc(std::vector<CandidateIndex> candidates,
                                         const std::vector<Score>& score) {
    std::sort(candidates.begin(), candidates.end());
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](CandidateIndex a, CandidateIndex b) { return score[b] < score[a]; });
    std::vector<CandidateIndex> out;
    out.reserve(candidates.size());
    std::size_t i = 0;
    while (i < candidates.size()) {
      std::size_t j = i + 1;
      while (j < candidates.size() && score[candidates[j]] == score[candidates[i]]) ++j;
      std::vector<CandidateIndex> group(candidates.begin() + i, candidates.begin() + j);
      order_group(group);
      out.insert(out.end(), group.begin(), group.end());
      i = j;
    }
    return out;
  }

 private:
  TieBreakPolicy policy_;
  const CandidatePool* pool_;
  rng::Engine rng_;
};

struct StvOptions {
  TransferPolicy transfer{};
  TieBreakPolicy ties{};
  int threads = 1;
};

namespace detail {

// Aggregates events into per-(voter, candidate) multiplicities, keyed by
// candidate pool index. Voters are keyed by id so iteration order is
// independent of event file order.
inline std::map<std::string, std::map<CandidateIndex, std::int64_t>> aggregate_events(
    const CandidatePool& pool, const std::vector<VoteEvent>& events) {
  std::map<std::string, std::map<CandidateIndex, std::int64_t>> by_voter;
  for (const auto& ev : events) {
    if (ev.multiplicity < 1)
      throw DataError("vote event with nonpositive multiplicity for voter " + ev.voter);
    by_voter[ev.voter][pool.index_of(ev.candidate)] += ev.multiplicity;
  }
  return by_voter;
}

inline std::vector<std::pair<CandidateIndex, Weight>> snapshot_tallies(
    const std::vector<std::int64_t>& counts) {
  std::vector<std::pair<CandidateIndex, Weight>> out;
  out.reserve(counts.size());
  for (CandidateIndex c = 0; c < counts.size(); ++c) out.emplace_back(c, Weight(counts[c]));
  return out;
}

inline ElectionResult count_based_result(Method method, const CandidatePool& pool,
                                         const std::vector<std::int64_t>& counts,
                                         const std::vector<CandidateIndex>& eligible,
                                         std::size_t k, const TieBreakPolicy& ties,
                                         const char* what) {
  if (eligible.size() < k)
    throw std::invalid_argument(std::string(what) + ": fewer than K candidates (" +
                                std::to_string(eligible.size()) + " < " + std::to_string(k) +
                                ")");
  TieBreaker breaker(ties, pool);
  auto ordered = breaker.order_desc(eligible, counts);
  ordered.resize(k);

  ElectionResult result;
  result.method = method;
  result.winners = std::move(ordered);
  result.tie_seed = ties.seed;
  Round round;
  round.number = 1;
  round.tallies = snapshot_tallies(counts);
  round.action = RoundAction::ElectedAllRemaining;
  round.affected = result.winners;
  result.rounds.push_back(std::move(round));
  return result;
}

}  // namespace detail

// Weighted (plural) voting: every raw vote counts, so the top-K candidates by
// total multiplicity win no matter how the votes are distributed over voters.
inline ElectionResult weighted_voting(const CandidatePool& pool,
                                      const std::vector<VoteEvent>& events, std::size_t k,
                                      const TieBreakPolicy& ties = {}) {
  if (k == 0) throw std::invalid_argument("weighted_voting: K must be positive");
  std::vector<std::int64_t> counts(pool.size(), 0);
  std::vector<CandidateIndex> eligible;
  for (const auto& ev : events) {
    if (ev.multiplicity < 1)
      throw DataError("vote event with nonpositive multiplicity for voter " + ev.voter);
    const auto c = pool.index_of(ev.candidate);
    if (counts[c] == 0) eligible.push_back(c);
    counts[c] += ev.multiplicity;
  }
  std::sort(eligible.begin(), eligible.end());
  auto result =
      detail::count_based_result(Method::WV, pool, counts, eligible, k, ties, "weighted_voting");
  result.engine = "weighted_voting";
  return result;
}

// Plurality voting (SNTV): each participating voter contributes exactly one
// vote, assigned to the candidate they voted for the most.
inline ElectionResult plurality_voting(const CandidatePool& pool,
                                       const std::vector<VoteEvent>& events, std::size_t k,
                                       const TieBreakPolicy& ties = {}) {
  if (k == 0) throw std::invalid_argument("plurality_voting: K must be positive");
  const auto by_voter = detail::aggregate_events(pool, events);

  std::vector<std::int64_t> counts(pool.size(), 0);
  std::vector<bool> appears(pool.size(), false);
  TieBreaker argmax_ties(ties, pool);
  for (const auto& [voter, votes] : by_voter) {
    std::int64_t best = 0;
    for (const auto& [c, mult] : votes) {
      appears[c] = true;
      best = std::max(best, mult);
    }
    std::vector<CandidateIndex> top;
    for (const auto& [c, mult] : votes)
      if (mult == best) top.push_back(c);
    counts[argmax_ties.pick(std::move(top))] += 1;
  }

  std::vector<CandidateIndex> eligible;
  for (CandidateIndex c = 0; c < pool.size(); ++c)
    if (appears[c]) eligible.push_back(c);
  auto result =
      detail::count_based_result(Method::PLV, pool, counts, eligible, k, ties, "plurality_voting");
  result.engine = "plurality_voting";
  return result;
}

// Plurality over complete preference rankings: top-K candidates by number of
// ballots ranking them first. Considers every voter, silent ones included.
inline ElectionResult plurality_star(const PreferenceProfile& profile, std::size_t k,
                                     const TieBreakPolicy& ties = {}) {
  const auto m = profile.pool().size();
  if (k == 0) throw std::invalid_argument("plurality_star: K must be positive");
  if (k > m) throw std::invalid_argument("plurality_star: K exceeds candidate count");
  std::vector<std::int64_t> counts(m, 0);
  for (const auto& ballot : profile.ballots()) counts[ballot.ranking().front()] += 1;
  std::vector<CandidateIndex> eligible(m);
  for (CandidateIndex c = 0; c < m; ++c) eligible[c] = c;
  auto result = detail::count_based_result(Method::PLVSTAR, profile.pool(), counts, eligible, k,
                                           ties, "plurality_star");
  result.engine = "plurality_star";
  return result;
}

namespace detail {

enum class CandState : std::uint8_t { Continuing, Elected, Eliminated };

// Ballots a random-whole-vote transfer removes: the assigned ballots are
// ordered ascending by index, shuffled with the transfer RNG, and the first
// dq leave the election. Shared contract between both STV implementations.
inline std::vector<std::uint32_t> whole_vote_removal(std::vector<std::uint32_t> assigned,
                                                     std::uint64_t dq, rng::Engine& eng) {
  std::sort(assigned.begin(), assigned.end());
  rng::shuffle(assigned, eng);
  assigned.resize(static_cast<std::size_t>(dq));
  return assigned;
}

inline void validate_stv_inputs(const PreferenceProfile& profile, std::size_t k,
                                const char* what) {
  if (profile.size() == 0) throw std::invalid_argument(std::string(what) + ": empty profile");
  if (k == 0) throw std::invalid_argument(std::string(what) + ": K must be positive");
  if (k >= profile.pool().size())
    throw std::invalid_argument(std::string(what) + ": K must be smaller than the pool");
}

}  // namespace detail

// Single Transferable Vote over complete rankings.
//
// Round contract (shared with reference_stv):
//   1. every continuing ballot counts for its highest-ranked continuing
//      candidate; the round snapshot records these tallies;
//   2. if the continuing candidates exactly fill the remaining seats, all are
//      elected (descending tally, ties per policy) and the election ends;
//   3. else if the highest tally reaches the Droop quota (ties per policy),
//      that candidate is elected and its surplus transfers: fractional mode
//      scales every one of its ballots by surplus/tally, random mode removes
//      dq seed-selected ballots and moves the rest at full weight;
//   4. else the candidate with the smallest tally (ties per policy) is
//      eliminated and its ballots move to their next continuing preference.
//
// This engine keeps incremental tallies and per-candidate ballot lists, so a
// ballot is touched only when its current candidate leaves the race. Weights
// are integers over one shared denominator (the product of elected tallies),
// which keeps the hot path free of rational normalization while staying
// exact: fractional surpluses multiply the denominator instead of reducing
// per-ballot fractions.
inline ElectionResult stv(const PreferenceProfile& profile, std::size_t k,
                          const StvOptions& opt = {}) {
  using BigInt = boost::multiprecision::cpp_int;
  detail::validate_stv_inputs(profile, k, "stv");
  const auto& ballots = profile.ballots();
  const std::size_t n = ballots.size();
  const std::size_t m = profile.pool().size();
  const std::uint64_t dq = droop_quota(n, k).value;

  std::vector<detail::CandState> state(m, detail::CandState::Continuing);
  std::vector<std::uint32_t> position(n, 0);
  std::vector<BigInt> weight(n, 1);
  std::vector<std::vector<std::uint32_t>> assigned(m);
  std::vector<BigInt> tally(m);
  BigInt denom = 1;                 // true weight of ballot b is weight[b] / denom
  BigInt quota = BigInt(dq);        // dq * denom, kept in step with denom
  std::uint64_t steps = 0;

  // First-choice assignment. Initial weights are all one, so per-candidate
  // counts are plain integers and chunked counting merges deterministically.
  {
    std::vector<std::int64_t> counts(m, 0);
    const int threads = std::max(1, opt.threads);
    if (threads > 1 && n >= 4096) {
      const std::size_t chunks = static_cast<std::size_t>(threads);
      std::vector<std::vector<std::int64_t>> local(chunks, std::vector<std::int64_t>(m, 0));
      std::vector<std::thread> pool_threads;
      const std::size_t stride = (n + chunks - 1) / chunks;
      for (std::size_t t = 0; t < chunks; ++t) {
        pool_threads.emplace_back([&, t] {
          const std::size_t lo = t * stride;
          const std::size_t hi = std::min(n, lo + stride);
          for (std::size_t b = lo; b < hi; ++b) local[t][ballots[b].ranking().front()] += 1;
        });
      }
      for (auto& th : pool_threads) th.join();
      for (std::size_t t = 0; t < chunks; ++t)
        for (std::size_t c = 0; c < m; ++c) counts[c] += local[t][c];
    } else {
      for (std::size_t b = 0; b < n; ++b) counts[ballots[b].ranking().front()] += 1;
    }
    for (CandidateIndex c = 0; c < m; ++c) {
      tally[c] = counts[c];
      assigned[c].reserve(static_cast<std::size_t>(counts[c]));
    }
    for (std::uint32_t b = 0; b < n; ++b) assigned[ballots[b].ranking().front()].push_back(b);
    steps += n;
  }

  TieBreaker breaker(opt.ties, profile.pool());
  rng::Engine transfer_rng(opt.transfer.seed);

  ElectionResult result;
  result.method = Method::STV;
  result.engine = "stv";
  result.tie_seed = opt.ties.seed;
  result.transfer_seed = opt.transfer.seed;

  BigInt exhausted_total = 0;
  std::size_t continuing = m;

  const auto as_weight = [&](const BigInt& scaled) {
    return Weight(Weight::Rational(scaled, denom));
  };

  const auto advance = [&](std::uint32_t b) {
    const auto& ranking = ballots[b].ranking();
    std::uint32_t p = position[b];
    do {
      ++p;
      ++steps;
    } while (p < m && state[ranking[p]] != detail::CandState::Continuing);
    if (p >= m) {
      exhausted_total += weight[b];
      return;
    }
    position[b] = p;
    const CandidateIndex c = ranking[p];
    assigned[c].push_back(b);
    tally[c] += weight[b];
    ++steps;
  };

  std::uint32_t round_no = 0;
  while (result.winners.size() < k) {
    Round round;
    round.number = ++round_no;
    for (CandidateIndex c = 0; c < m; ++c)
      if (state[c] == detail::CandState::Continuing) round.tallies.emplace_back(c, as_weight(tally[c]));
    round.exhausted = as_weight(exhausted_total);

    const std::size_t remaining = k - result.winners.size();
    if (continuing == remaining) {
      std::vector<CandidateIndex> rest;
      rest.reserve(continuing);
      for (const auto& entry : round.tallies) rest.push_back(entry.first);
      auto ordered = breaker.order_desc(std::move(rest), tally);
      round.action = RoundAction::ElectedAllRemaining;
      round.affected = ordered;
      for (const auto c : ordered) {
        state[c] = detail::CandState::Elected;
        result.winners.push_back(c);
      }
      continuing = 0;
      result.rounds.push_back(std::move(round));
      break;
    }

    // Highest and lowest tallies among continuing candidates.
    std::vector<CandidateIndex> maxima;
    std::vector<CandidateIndex> minima;
    for (CandidateIndex c = 0; c < m; ++c) {
      if (state[c] != detail::CandState::Continuing) continue;
      if (maxima.empty() || tally[maxima.front()] < tally[c])
        maxima.assign(1, c);
      else if (tally[maxima.front()] == tally[c])
        maxima.push_back(c);
      if (minima.empty() || tally[c] < tally[minima.front()])
        minima.assign(1, c);
      else if (tally[minima.front()] == tally[c])
        minima.push_back(c);
    }

    if (tally[maxima.front()] >= quota) {
      const CandidateIndex winner = breaker.pick(std::move(maxima));
      const BigInt winner_tally = tally[winner];
      const BigInt surplus = winner_tally - quota;
      round.action = RoundAction::Elected;
      round.affected = {winner};
      round.surplus = as_weight(surplus);
      result.winners.push_back(winner);
      state[winner] = detail::CandState::Elected;
      --continuing;

      auto moved = std::move(assigned[winner]);
      assigned[winner].clear();
      tally[winner] = 0;
      if (opt.transfer.mode == Transfer::FractionalGregory) {
        // Rebase everything onto denom * winner_tally, then the moved ballots
        // carry weight * surplus instead of weight * winner_tally.
        std::vector<bool> is_moved(n, false);
        for (const auto b : moved) is_moved[b] = true;
        for (std::uint32_t b = 0; b < n; ++b) {
          if (weight[b].is_zero()) continue;
          weight[b] *= is_moved[b] ? surplus : winner_tally;
        }
        for (CandidateIndex c = 0; c < m; ++c)
          if (state[c] == detail::CandState::Continuing && !tally[c].is_zero())
            tally[c] *= winner_tally;
        exhausted_total *= winner_tally;
        denom *= winner_tally;
        quota = BigInt(dq) * denom;
        for (const auto b : moved)
          if (!weight[b].is_zero()) advance(b);
      } else {
        for (const auto b : detail::whole_vote_removal(moved, dq, transfer_rng)) weight[b] = 0;
        for (const auto b : moved)
          if (!weight[b].is_zero()) advance(b);
      }
    } else {
      const CandidateIndex loser = breaker.pick(std::move(minima));
      round.action = RoundAction::Eliminated;
      round.affected = {loser};
      state[loser] = detail::CandState::Eliminated;
      --continuing;

      auto moved = std::move(assigned[loser]);
      assigned[loser].clear();
      tally[loser] = 0;
      for (const auto b : moved)
        if (!weight[b].is_zero()) advance(b);
    }

    result.rounds.push_back(std::move(round));
  }

  result.advance_steps = steps;
  return result;
}

// Literal restatement of the STV procedure used as an independent oracle:
// every round rescans every ballot from the top of its ranking and rebuilds
// all tallies from scratch. Same round contract and policies as stv().
inline ElectionResult reference_stv(const PreferenceProfile& profile, std::size_t k,
                                    const StvOptions& opt = {}) {
  detail::validate_stv_inputs(profile, k, "reference_stv");
  const auto& ballots = profile.ballots();
  const std::size_t n = ballots.size();
  const std::size_t m = profile.pool().size();
  const std::uint64_t dq = droop_quota(n, k).value;
  const Weight quota(static_cast<std::int64_t>(dq));

  std::vector<detail::CandState> state(m, detail::CandState::Continuing);
  std::vector<Weight> weight(n, Weight(1));
  std::vector<bool> removed(n, false);  // whole-vote-removed ballots leave the election
  std::uint64_t steps = 0;

  TieBreaker breaker(opt.ties, profile.pool());
  rng::Engine transfer_rng(opt.transfer.seed);

  ElectionResult result;
  result.method = Method::STV;
  result.engine = "reference_stv";
  result.tie_seed = opt.ties.seed;
  result.transfer_seed = opt.transfer.seed;

  // First continuing candidate on a ballot, rescanned from the top each time.
  const auto current_choice = [&](std::size_t b) -> std::optional<CandidateIndex> {
    for (const auto c : ballots[b].ranking()) {
      ++steps;
      if (state[c] == detail::CandState::Continuing) return c;
    }
    return std::nullopt;
  };

  std::uint32_t round_no = 0;
  std::size_t continuing = m;
  while (result.winners.size() < k) {
    std::vector<Weight> tally(m);
    std::vector<std::vector<std::uint32_t>> assigned(m);
    Weight exhausted_total;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (removed[b]) continue;
      const auto c = current_choice(b);
      if (!c) {
        exhausted_total += weight[b];
        continue;
      }
      tally[*c] += weight[b];
      assigned[*c].push_back(b);
      ++steps;
    }

    Round round;
    round.number = ++round_no;
    for (CandidateIndex c = 0; c < m; ++c)
      if (state[c] == detail::CandState::Continuing) round.tallies.emplace_back(c, tally[c]);
    round.exhausted = exhausted_total;

    const std::size_t remaining = k - result.winners.size();
    if (continuing == remaining) {
      std::vector<CandidateIndex> rest;
      for (const auto& [c, w] : round.tallies) rest.push_back(c);
      auto ordered = breaker.order_desc(std::move(rest), tally);
      round.action = RoundAction::ElectedAllRemaining;
      round.affected = ordered;
      for (const auto c : ordered) {
        state[c] = detail::CandState::Elected;
        result.winners.push_back(c);
      }
      continuing = 0;
      result.rounds.push_back(std::move(round));
      break;
    }

    std::vector<CandidateIndex> maxima;
    std::vector<CandidateIndex> minima;
    for (const auto& [c, w] : round.tallies) {
      if (maxima.empty() || tally[maxima.front()] < w)
        maxima.assign(1, c);
      else if (tally[maxima.front()] == w)
        maxima.push_back(c);
      if (minima.empty() || w < tally[minima.front()])
        minima.assign(1, c);
      else if (tally[minima.front()] == w)
        minima.push_back(c);
    }

    if (tally[maxima.front()] >= quota) {
      const CandidateIndex winner = breaker.pick(std::move(maxima));
      const Weight winner_tally = tally[winner];
      const Weight surplus = winner_tally - quota;
      round.action = RoundAction::Elected;
      round.affected = {winner};
      round.surplus = surplus;
      result.winners.push_back(winner);
      state[winner] = detail::CandState::Elected;
      --continuing;

      if (opt.transfer.mode == Transfer::FractionalGregory) {
        const Weight factor = surplus / winner_tally;
        for (const auto b : assigned[winner]) weight[b] *= factor;
      } else {
        for (const auto b : detail::whole_vote_removal(assigned[winner], dq, transfer_rng)) {
          weight[b] = Weight();
          removed[b] = true;
        }
      }
    } else {
      const CandidateIndex loser = breaker.pick(std::move(minima));
      round.action = RoundAction::Eliminated;
      round.affected = {loser};
      state[loser] = detail::CandState::Eliminated;
      --continuing;
    }

    result.rounds.push_back(std::move(round));
  }

  result.advance_steps = steps;
  return result;
}

struct MethodInputs {
  const PreferenceProfile* profile = nullptr;
  const std::vector<VoteEvent>* events = nullptr;
  const CandidatePool* pool = nullptr;
  const std::vector<std::string>* external_winners = nullptr;
};

// Uniform dispatch so the metrics stage can treat every method alike.
// EXTERNAL wraps an ingested winner list (e.g. a platform's own selection)
// as an ElectionResult over the given pool.
inline ElectionResult run_method(Method method, const MethodInputs& in, std::size_t k,
                                 const StvOptions& opt = {}) {
  const auto need = [&](const void* p, const char* what) {
    if (p == nullptr)
      throw std::invalid_argument("run_method(" + to_string(method) + "): missing " + what);
  };
  switch (method) {
    case Method::WV: {
      need(in.events, "events");
      const CandidatePool* pool = in.pool ? in.pool : (in.profile ? &in.profile->pool() : nullptr);
      need(pool, "candidate pool");
      return weighted_voting(*pool, *in.events, k, opt.ties);
    }
    case Method::PLV: {
      need(in.events, "events");
      const CandidatePool* pool = in.pool ? in.pool : (in.profile ? &in.profile->pool() : nullptr);
      need(pool, "candidate pool");
      return plurality_voting(*pool, *in.events, k, opt.ties);
    }
    case Method::PLVSTAR:
      need(in.profile, "profile");
      return plurality_star(*in.profile, k, opt.ties);
    case Method::STV:
      need(in.profile, "profile");
      return stv(*in.profile, k, opt);
    case Method::EXTERNAL: {
      need(in.external_winners, "external winner list");
      const CandidatePool* pool = in.pool ? in.pool : (in.profile ? &in.profile->pool() : nullptr);
      need(pool, "candidate pool");
      if (in.external_winners->size() != k)
        throw std::invalid_argument("run_method(external): winner list has " +
                                    std::to_string(in.external_winners->size()) +
                                    " entries, expected K=" + std::to_string(k));
      ElectionResult result;
      result.method = Method::EXTERNAL;
      result.engine = "external";
      for (const auto& id : *in.external_winners) result.winners.push_back(pool->index_of(id));
      Round round;
      round.number = 1;
      round.action = RoundAction::ElectedAllRemaining;
      round.affected = result.winners;
      result.rounds.push_back(std::move(round));
      return result;
    }
  }
  throw InternalError("run_method: unhandled method tag");
}

}  // namespace equivote
