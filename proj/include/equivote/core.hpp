#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "equivote/errors.hpp"
#include "equivote/rational.hpp"

namespace equivote {

// Dense index of a candidate within one CandidatePool.
using CandidateIndex = std::uint32_t;

// The candidate items of one election cycle, with the per-cycle usage counts
// that drove their selection into the pool.
class CandidatePool {
 public:
  CandidatePool() = default;

  explicit CandidatePool(std::vector<std::string> ids)
      : CandidatePool(std::move(ids), {}, {}) {}

  CandidatePool(std::vector<std::string> ids, std::vector<std::int64_t> usage_current,
                std::vector<std::int64_t> usage_previous)
      : ids_(std::move(ids)),
        usage_current_(std::move(usage_current)),
        usage_previous_(std::move(usage_previous)) {
    if (ids_.empty()) throw DataError("CandidatePool: empty candidate list");
    usage_current_.resize(ids_.size(), 0);
    usage_previous_.resize(ids_.size(), 0);
    index_.reserve(ids_.size());
    for (CandidateIndex i = 0; i < ids_.size(); ++i) {
      if (usage_current_[i] < 0 || usage_previous_[i] < 0)
        throw DataError("CandidatePool: negative usage count for " + ids_[i]);
      if (!index_.emplace(ids_[i], i).second)
        throw DataError("CandidatePool: duplicate candidate id: " + ids_[i]);
    }
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }

  const std::string& id(CandidateIndex i) const {
    if (i >= ids_.size()) throw DataError("CandidatePool: index out of range");
    return ids_[i];
  }

  std::optional<CandidateIndex> find(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  CandidateIndex index_of(const std::string& id) const {
    const auto found = find(id);
    if (!found) throw DataError("CandidatePool: unknown candidate: " + id);
    return *found;
  }

  std::int64_t usage_current(CandidateIndex i) const { return usage_current_.at(i); }
  std::int64_t usage_previous(CandidateIndex i) const { return usage_previous_.at(i); }

 private:
  std::vector<std::string> ids_;
  std::vector<std::int64_t> usage_current_;
  std::vector<std::int64_t> usage_previous_;
  std::unordered_map<std::string, CandidateIndex> index_;
};

// One voter's strict total order over the full candidate pool, most-preferred
// first. Immutable after construction; the inverse index makes rank lookups
// O(1).
class Ballot {
 public:
  Ballot(std::string voter, std::vector<CandidateIndex> ranking)
      : voter_(std::move(voter)), ranking_(std::move(ranking)) {
    const auto m = ranking_.size();
    if (m == 0) throw DataError("Ballot " + voter_ + ": empty ranking");
    position_.assign(m, kUnset);
    for (std::uint32_t pos = 0; pos < m; ++pos) {
      const CandidateIndex c = ranking_[pos];
      if (c >= m) throw DataError("Ballot " + voter_ + ": candidate index out of range");
      if (position_[c] != kUnset)
        throw DataError("Ballot " + voter_ + ": duplicate in ranking");
      position_[c] = pos;
    }
  }

  const std::string& voter() const { return voter_; }
  const std::vector<CandidateIndex>& ranking() const { return ranking_; }
  std::size_t size() const { return ranking_.size(); }

  // 1-based preference rank of a candidate; 1 = most preferred.
  std::uint32_t rank_of(CandidateIndex candidate) const {
    if (candidate >= position_.size())
      throw DataError("rank_of: unknown candidate index " + std::to_string(candidate));
    return position_[candidate] + 1;
  }

  friend bool operator==(const Ballot& a, const Ballot& b) {
    return a.voter_ == b.voter_ && a.ranking_ == b.ranking_;
  }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  std::string voter_;
  std::vector<CandidateIndex> ranking_;
  std::vector<std::uint32_t> position_;
};

inline std::uint32_t rank_of(const Ballot& ballot, CandidateIndex candidate) {
  return ballot.rank_of(candidate);
}

// A ballot as parsed from disk, before any validation: candidate ids are raw
// strings and the ranking may be malformed.
struct RawBallot {
  std::string voter;
  std::vector<std::string> ranking;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> issues;

  void flag(std::string issue) {
    valid = false;
    issues.push_back(std::move(issue));
  }
};

// Checks raw ballots against a pool: completeness (each ballot a permutation
// of the pool), duplicate voter ids, and pool consistency.
inline ValidationReport validate_profile(const std::vector<RawBallot>& ballots,
                                         const CandidatePool& pool) {
  ValidationReport report;
  std::unordered_set<std::string> seen_voters;
  for (const auto& ballot : ballots) {
    if (!seen_voters.insert(ballot.voter).second)
      report.flag("duplicate voter id: " + ballot.voter);
    std::unordered_set<std::string> seen;
    bool consistent = true;
    for (const auto& id : ballot.ranking) {
      if (!pool.find(id)) {
        report.flag("voter " + ballot.voter + ": unknown candidate: " + id);
        consistent = false;
      }
      if (!seen.insert(id).second) {
        report.flag("voter " + ballot.voter + ": duplicate in ranking: " + id);
        consistent = false;
      }
    }
    if (consistent && seen.size() < pool.size())
      report.flag("voter " + ballot.voter + ": incomplete ranking (" +
                  std::to_string(seen.size()) + " of " + std::to_string(pool.size()) + ")");
  }
  return report;
}

// Complete preference rankings of the whole electorate over one pool.
// Immutable after construction and safe to share across threads.
class PreferenceProfile {
 public:
  PreferenceProfile(CandidatePool pool, std::vector<Ballot> ballots)
      : pool_(std::move(pool)), ballots_(std::move(ballots)) {
    std::unordered_set<std::string> voters;
    voters.reserve(ballots_.size());
    for (const auto& ballot : ballots_) {
      if (ballot.size() != pool_.size())
        throw DataError("profile: ballot of voter " + ballot.voter() +
                        " does not rank the full pool");
      if (!voters.insert(ballot.voter()).second)
        throw DataError("profile: duplicate voter id: " + ballot.voter());
    }
  }

  static PreferenceProfile from_raw(CandidatePool pool, const std::vector<RawBallot>& raw) {
    const auto report = validate_profile(raw, pool);
    if (!report.valid)
      throw DataError("invalid profile: " + report.issues.front() +
                      (report.issues.size() > 1
                           ? " (+" + std::to_string(report.issues.size() - 1) + " more)"
                           : ""));
    std::vector<Ballot> ballots;
    ballots.reserve(raw.size());
    for (const auto& rb : raw) {
      std::vector<CandidateIndex> ranking;
      ranking.reserve(rb.ranking.size());
      for (const auto& id : rb.ranking) ranking.push_back(pool.index_of(id));
      ballots.emplace_back(rb.voter, std::move(ranking));
    }
    return PreferenceProfile(std::move(pool), std::move(ballots));
  }

  const CandidatePool& pool() const { return pool_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::size_t size() const { return ballots_.size(); }

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.pool_.ids() == b.pool_.ids() && a.ballots_ == b.ballots_;
  }

 private:
  CandidatePool pool_;
  std::vector<Ballot> ballots_;
};

inline ValidationReport validate_profile(const PreferenceProfile& profile) {
  // Permutation structure and pool consistency are enforced at construction;
  // re-checked here so the report can stand on its own.
  ValidationReport report;
  std::unordered_set<std::string> voters;
  for (const auto& ballot : profile.ballots()) {
    if (ballot.size() != profile.pool().size())
      report.flag("voter " + ballot.voter() + ": incomplete ranking");
    if (!voters.insert(ballot.voter()).second)
      report.flag("duplicate voter id: " + ballot.voter());
  }
  return report;
}

enum class Method { WV, PLV, PLVSTAR, STV, EXTERNAL };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::WV: return "wv";
    case Method::PLV: return "plv";
    case Method::PLVSTAR: return "plvstar";
    case Method::STV: return "stv";
    case Method::EXTERNAL: return "external";
  }
  throw InternalError("unknown method tag");
}

inline Method method_from_string(const std::string& s) {
  if (s == "wv") return Method::WV;
  if (s == "plv") return Method::PLV;
  if (s == "plvstar") return Method::PLVSTAR;
  if (s == "stv") return Method::STV;
  if (s == "external") return Method::EXTERNAL;
  throw DataError("unknown method tag: " + s);
}

enum class RoundAction { Elected, Eliminated, ElectedAllRemaining };

inline std::string to_string(RoundAction a) {
  switch (a) {
    case RoundAction::Elected: return "elected";
    case RoundAction::Eliminated: return "eliminated";
    case RoundAction::ElectedAllRemaining: return "elected_all_remaining";
  }
  throw InternalError("unknown round action");
}

inline RoundAction round_action_from_string(const std::string& s) {
  if (s == "elected") return RoundAction::Elected;
  if (s == "eliminated") return RoundAction::Eliminated;
  if (s == "elected_all_remaining") return RoundAction::ElectedAllRemaining;
  throw DataError("unknown round action: " + s);
}

// One tally round of an election: tallies of continuing candidates (ascending
// candidate index) and the action taken. The exhausted bucket is always zero
// for complete profiles but is kept in the trace for forward compatibility
// with partial ballots.
struct Round {
  std::uint32_t number = 0;
  std::vector<std::pair<CandidateIndex, Weight>> tallies;
  RoundAction action = RoundAction::Eliminated;
  std::vector<CandidateIndex> affected;
  Weight surplus;
  Weight exhausted;

  friend bool operator==(const Round& a, const Round& b) {
    return a.number == b.number && a.tallies == b.tallies && a.action == b.action &&
           a.affected == b.affected && a.surplus == b.surplus && a.exhausted == b.exhausted;
  }
};

struct ElectionResult {
  Method method = Method::STV;
  std::vector<CandidateIndex> winners;  // in order of election / descending tally
  std::vector<Round> rounds;
  std::uint64_t tie_seed = 0;
  std::uint64_t transfer_seed = 0;
  std::string engine;                // implementation label, not part of the contract
  std::uint64_t advance_steps = 0;   // instrumented ballot-advance step counter

  std::vector<std::string> winner_ids(const CandidatePool& pool) const {
    std::vector<std::string> out;
    out.reserve(winners.size());
    for (const auto w : winners) out.push_back(pool.id(w));
    return out;
  }
};

// Contract-level equality: winner sets and round-by-round traces. Engine
// labels and step counters are diagnostics and do not participate.
inline bool trace_equal(const ElectionResult& a, const ElectionResult& b) {
  return a.method == b.method && a.winners == b.winners && a.rounds == b.rounds;
}

}  // namespace equivote
