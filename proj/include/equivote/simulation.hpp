#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equivote/core.hpp"
#include "equivote/elections.hpp"
#include "equivote/errors.hpp"
#include "equivote/rng.hpp"

namespace equivote {

// A voter bloc: `fraction` of the electorate ranks `candidates` above all
// other items. `noise` is the per-voter probability that one bloc candidate
// drops out of that solid prefix.
struct BlocSpec {
  double fraction = 0.0;
  std::vector<std::string> candidates;
  double noise = 0.0;
};

// A fringe candidate: `supporter_fraction` of voters rank it first and
// promote it hyper-actively; `dislike_fraction` of the remaining voters rank
// it last.
struct ExtremistSpec {
  std::string candidate;
  double supporter_fraction = 0.0;
  double dislike_fraction = 0.0;
};

struct ElectorateSpec {
  std::size_t n_voters = 100;
  std::size_t m_candidates = 10;
  std::size_t k = 3;
  double silent_fraction = 0.0;      // voters emitting no events at all
  double activity_exponent = 2.5;    // votes per active voter ~ power law
  std::int64_t activity_max = 100;
  std::int64_t hyper_activity = 200; // extra multiplicity for extremist supporters
  std::vector<BlocSpec> blocs;
  std::vector<ExtremistSpec> extremists;
  std::uint64_t seed = 0;
};

struct GeneratedElectorate {
  PreferenceProfile profile;
  std::vector<VoteEvent> events;
};

namespace detail {

inline std::vector<std::string> numbered_ids(const std::string& prefix, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t v = count; v >= 10; v /= 10) ++width;
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    auto digits = std::to_string(i);
    ids.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return ids;
}

inline std::size_t spec_share(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

}  // namespace detail

// Synthesizes an electorate showing the usual pathologies of crowdsourced
// elections: silent voters with latent preferences, heavy-tailed activity,
// bloc-structured interests and hyper-promoted fringe candidates. Output is
// bit-deterministic per seed.
inline GeneratedElectorate generate_electorate(const ElectorateSpec& spec) {
  if (spec.n_voters == 0 || spec.m_candidates == 0)
    throw std::invalid_argument("generate_electorate: empty electorate or pool");
  if (spec.silent_fraction < 0.0 || spec.silent_fraction > 1.0)
    throw std::invalid_argument("generate_electorate: silent_fraction out of [0,1]");
  if (spec.activity_exponent <= 1.0)
    throw std::invalid_argument("generate_electorate: activity_exponent must exceed 1");

  const std::size_t n = spec.n_voters;
  const std::size_t m = spec.m_candidates;
  CandidatePool pool(detail::numbered_ids("c", m));

  double assigned_fraction = 0.0;
  for (const auto& bloc : spec.blocs) {
    if (bloc.fraction < 0.0 || bloc.fraction > 1.0 || bloc.noise < 0.0 || bloc.noise > 1.0)
      throw std::invalid_argument("generate_electorate: bloc fractions out of range");
    if (bloc.candidates.empty() || bloc.candidates.size() >= m)
      throw std::invalid_argument("generate_electorate: infeasible bloc candidate subset");
    assigned_fraction += bloc.fraction;
  }
  for (const auto& ex : spec.extremists) {
    if (ex.supporter_fraction < 0.0 || ex.dislike_fraction < 0.0 ||
        ex.supporter_fraction + ex.dislike_fraction > 1.0)
      throw std::invalid_argument("generate_electorate: extremist fractions out of range");
    assigned_fraction += ex.supporter_fraction;
  }
  if (assigned_fraction > 1.0 + 1e-9)
    throw std::invalid_argument("generate_electorate: bloc and supporter fractions exceed 1");

  // Resolve candidate subsets to indices up front.
  std::vector<std::vector<CandidateIndex>> bloc_members(spec.blocs.size());
  for (std::size_t i = 0; i < spec.blocs.size(); ++i)
    for (const auto& id : spec.blocs[i].candidates)
      bloc_members[i].push_back(pool.index_of(id));
  std::vector<CandidateIndex> extremist_idx(spec.extremists.size());
  for (std::size_t i = 0; i < spec.extremists.size(); ++i)
    extremist_idx[i] = pool.index_of(spec.extremists[i].candidate);

  // Voter role assignment: bloc blocks first, then supporter blocks, rest
  // background. kNone marks unaffiliated voters.
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> voter_bloc(n, kNone);
  std::vector<std::size_t> voter_support(n, kNone);
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < spec.blocs.size(); ++i) {
    const auto count = detail::spec_share(spec.blocs[i].fraction, n);
    for (std::size_t j = 0; j < count && cursor < n; ++j) voter_bloc[cursor++] = i;
  }
  for (std::size_t i = 0; i < spec.extremists.size(); ++i) {
    const auto count = detail::spec_share(spec.extremists[i].supporter_fraction, n);
    for (std::size_t j = 0; j < count && cursor < n; ++j) voter_support[cursor++] = i;
  }

  rng::Engine eng(spec.seed);
  const auto voter_ids = detail::numbered_ids("v", n);

  std::vector<Ballot> ballots;
  ballots.reserve(n);
  std::vector<VoteEvent> events;
  std::vector<double> score(m);
  std::vector<CandidateIndex> order(m);

  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < m; ++c) score[c] = rng::uniform01(eng);
    if (voter_bloc[v] != kNone) {
      const auto& bloc = spec.blocs[voter_bloc[v]];
      for (const auto c : bloc_members[voter_bloc[v]]) score[c] += 2.0;
      if (bloc.noise > 0.0 && rng::uniform01(eng) < bloc.noise) {
        const auto& members = bloc_members[voter_bloc[v]];
        score[members[rng::bounded(eng, members.size())]] -= 2.0;
      }
    }
    for (std::size_t e = 0; e < spec.extremists.size(); ++e) {
      const auto c = extremist_idx[e];
      if (voter_support[v] == e) {
        score[c] = 10.0;
      } else if (rng::uniform01(eng) < spec.extremists[e].dislike_fraction) {
        score[c] = -1.0 - rng::uniform01(eng);
      }
    }

    std::iota(order.begin(), order.end(), CandidateIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](CandidateIndex a, CandidateIndex b) { return score[a] > score[b]; });
    ballots.emplace_back(voter_ids[v], order);

    // Event emission. Extremist supporters are the hyper-active slice and
    // always participate; everyone else is silent with the configured
    // probability and otherwise casts a heavy-tailed number of votes spread
    // over their top choices.
    if (voter_support[v] != kNone) {
      const auto target = spec.extremists[voter_support[v]].candidate;
      const auto mult = spec.hyper_activity +
                        rng::power_law(eng, spec.activity_exponent, spec.activity_max);
      events.push_back(VoteEvent{voter_ids[v], target, mult});
      continue;
    }
    if (rng::uniform01(eng) < spec.silent_fraction) continue;
    const auto votes = rng::power_law(eng, spec.activity_exponent, spec.activity_max);
    std::map<CandidateIndex, std::int64_t> cast;
    const std::int64_t span = std::min<std::int64_t>(static_cast<std::int64_t>(m), 10);
    for (std::int64_t i = 0; i < votes; ++i) {
      const auto pick = rng::power_law(eng, 2.0, span) - 1;  // 0-based preferred rank
      cast[order[static_cast<std::size_t>(pick)]] += 1;
    }
    for (const auto& [c, mult] : cast)
      events.push_back(VoteEvent{voter_ids[v], pool.id(c), mult});
  }

  // Pool usage mirrors the produced event stream.
  std::vector<std::int64_t> usage(m, 0);
  for (const auto& ev : events) usage[pool.index_of(ev.candidate)] += ev.multiplicity;
  CandidatePool counted_pool(pool.ids(), usage, std::vector<std::int64_t>(m, 0));

  return GeneratedElectorate{PreferenceProfile(std::move(counted_pool), std::move(ballots)),
                             std::move(events)};
}

// The canonical 100-voter, 5-item toy election. Ballot patterns are pinned so
// that (a) every per-rank column count matches the published table, (b) the
// 39 voters backing items 3 and 4 form a solid coalition over {item3, item4},
// and (c) surplus and elimination transfers are unambiguous: all 39 ballots
// counting for item1 at its election continue to item4, as do all 20 ballots
// of item3 at its elimination, under either transfer mode.
inline PreferenceProfile table1_fixture() {
  // {count, ranking over item indices 0..4, most-preferred first}
  static constexpr struct {
    int count;
    CandidateIndex ranking[5];
  } kPatterns[] = {
      {20, {0, 1, 3, 2, 4}},  // item1 > item2 > item4 > item3 > item5
      {1, {0, 3, 1, 2, 4}},   // item1 > item4 > item2 > item3 > item5
      {9, {0, 3, 2, 1, 4}},   // item1 > item4 > item3 > item2 > item5
      {9, {1, 0, 3, 2, 4}},   // item2 > item1 > item4 > item3 > item5
      {14, {2, 3, 0, 1, 4}},  // item3 > item4 > item1 > item2 > item5
      {6, {2, 3, 1, 0, 4}},   // item3 > item4 > item2 > item1 > item5
      {12, {3, 2, 0, 1, 4}},  // item4 > item3 > item1 > item2 > item5
      {7, {3, 2, 1, 0, 4}},   // item4 > item3 > item2 > item1 > item5
      {8, {4, 0, 2, 3, 1}},   // item5 > item1 > item3 > item4 > item2
      {3, {4, 0, 2, 1, 3}},   // item5 > item1 > item3 > item2 > item4
      {3, {4, 1, 2, 3, 0}},   // item5 > item2 > item3 > item4 > item1
      {2, {4, 1, 2, 0, 3}},   // item5 > item2 > item3 > item1 > item4
      {1, {4, 2, 1, 0, 3}},   // item5 > item3 > item2 > item1 > item4
      {4, {4, 1, 0, 3, 2}},   // item5 > item2 > item1 > item4 > item3
      {1, {4, 1, 3, 0, 2}},   // item5 > item2 > item4 > item1 > item3
  };

  CandidatePool pool({"item1", "item2", "item3", "item4", "item5"});
  std::vector<Ballot> ballots;
  ballots.reserve(100);
  int voter = 0;
  for (const auto& pattern : kPatterns) {
    for (int i = 0; i < pattern.count; ++i) {
      ++voter;
      auto id = std::to_string(voter);
      ballots.emplace_back("v" + std::string(3 - id.size(), '0') + id,
                           std::vector<CandidateIndex>(pattern.ranking, pattern.ranking + 5));
    }
  }
  return PreferenceProfile(std::move(pool), std::move(ballots));
}

// One raw vote with a timestamp, as stored in event logs.
struct EventRecord {
  double ts = 0.0;
  std::string voter;
  std::string item;
};

struct CycleSpec {
  double window_length = 900.0;
  std::size_t pool_size = 1000;
  enum class JumpRule { AbsoluteDifference, RelativeRatio };
  JumpRule rule = JumpRule::AbsoluteDifference;
};

struct Cycle {
  std::size_t index = 0;
  double window_start = 0.0;
  CandidatePool pool;
  std::vector<VoteEvent> events;
};

// Partitions a timestamped event log into consecutive election cycles. Each
// cycle's candidate pool is the top pool_size items by usage jump against the
// previous window (ties broken lexicographically); the cycle's events are the
// per-voter aggregated votes for pool items.
inline std::vector<Cycle> window_events(const std::vector<EventRecord>& records,
                                        const CycleSpec& spec) {
  if (spec.window_length <= 0.0)
    throw std::invalid_argument("window_events: window_length must be positive");
  if (spec.pool_size == 0) throw std::invalid_argument("window_events: pool_size must be positive");
  std::vector<Cycle> cycles;
  if (records.empty()) return cycles;

  double min_ts = records.front().ts;
  double max_ts = records.front().ts;
  for (const auto& r : records) {
    min_ts = std::min(min_ts, r.ts);
    max_ts = std::max(max_ts, r.ts);
  }
  const double origin = std::floor(min_ts / spec.window_length) * spec.window_length;
  const auto window_of = [&](double ts) {
    return static_cast<std::size_t>(std::floor((ts - origin) / spec.window_length));
  };
  const std::size_t last_window = window_of(max_ts);

  std::vector<std::map<std::string, std::int64_t>> item_counts(last_window + 1);
  std::vector<std::map<std::pair<std::string, std::string>, std::int64_t>> votes(last_window + 1);
  for (const auto& r : records) {
    const auto w = window_of(r.ts);
    item_counts[w][r.item] += 1;
    votes[w][{r.voter, r.item}] += 1;
  }

  for (std::size_t w = 0; w <= last_window; ++w) {
    if (item_counts[w].empty()) continue;
    const auto& prev =
        w == 0 ? std::map<std::string, std::int64_t>{} : item_counts[w - 1];
    const auto prev_count = [&](const std::string& item) {
      const auto it = prev.find(item);
      return it == prev.end() ? std::int64_t{0} : it->second;
    };

    std::vector<std::string> items;
    items.reserve(item_counts[w].size());
    for (const auto& [item, count] : item_counts[w]) items.push_back(item);
    const auto jump = [&](const std::string& item) {
      const auto cur = static_cast<double>(item_counts[w].at(item));
      const auto before = static_cast<double>(prev_count(item));
      return spec.rule == CycleSpec::JumpRule::AbsoluteDifference ? cur - before
                                                                  : cur / (before + 1.0);
    };
    std::sort(items.begin(), items.end(), [&](const std::string& a, const std::string& b) {
      const double ja = jump(a), jb = jump(b);
      if (ja != jb) return ja > jb;
      return a < b;
    });
    if (items.size() > spec.pool_size) items.resize(spec.pool_size);

    std::vector<std::string> pool_ids(items);
    std::vector<std::int64_t> current, previous;
    for (const auto& item : pool_ids) {
      current.push_back(item_counts[w].at(item));
      previous.push_back(prev_count(item));
    }

    Cycle cycle;
    cycle.index = w;
    cycle.window_start = origin + static_cast<double>(w) * spec.window_length;
    cycle.pool = CandidatePool(pool_ids, current, previous);
    for (const auto& [key, mult] : votes[w]) {
      if (cycle.pool.find(key.second))
        cycle.events.push_back(VoteEvent{key.first, key.second, mult});
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Expands aggregated vote events into a timestamped log within one window,
// with seeded timestamps; rows come out sorted by (ts, voter, item).
inline std::vector<EventRecord> expand_to_log(const std::vector<VoteEvent>& events,
                                              double window_length, std::uint64_t seed) {
  if (window_length <= 0.0)
    throw std::invalid_argument("expand_to_log: window_length must be positive");
  rng::Engine eng(seed);
  std::vector<EventRecord> records;
  for (const auto& ev : events) {
    if (ev.multiplicity < 1)
      throw DataError("expand_to_log: nonpositive multiplicity for voter " + ev.voter);
    for (std::int64_t i = 0; i < ev.multiplicity; ++i)
      records.push_back(EventRecord{rng::uniform(eng, 0.0, window_length), ev.voter, ev.item});
  }
  std::sort(records.begin(), records.end(), [](const EventRecord& a, const EventRecord& b) {
    if (a.ts != b.ts) return a.ts < b.ts;
    if (a.voter != b.voter) return a.voter < b.voter;
    return a.item < b.item;
  });
  return records;
}

// Seeded uniform ballot sample without replacement, preserving ballot order.
inline PreferenceProfile sample_electorate(const PreferenceProfile& profile, double fraction,
                                           std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("sample_electorate: fraction must lie in (0, 1]");
  const std::size_t n = profile.size();
  const auto target = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  rng::Engine eng(seed);
  auto picked = rng::sample_indices(eng, n, target);
  std::sort(picked.begin(), picked.end());
  std::vector<Ballot> ballots;
  ballots.reserve(picked.size());
  for (const auto i : picked) ballots.push_back(profile.ballots()[i]);
  return PreferenceProfile(profile.pool(), std::move(ballots));
}

// Baseline adversarial electorate: a largely silent population with
// heavy-tailed activity, bloc-structured interests, and one hyper-promoted
// fringe candidate disliked by almost everyone.
inline ElectorateSpec skewed_participation_spec(std::uint64_t seed) {
  ElectorateSpec spec;
  spec.n_voters = 400;
  spec.m_candidates = 50;
  spec.k = 5;
  spec.silent_fraction = 0.95;
  spec.activity_exponent = 2.5;
  spec.activity_max = 50;
  spec.hyper_activity = 200;
  spec.seed = seed;
  const auto ids = detail::numbered_ids("c", spec.m_candidates);
  for (int b = 0; b < 5; ++b) {
    BlocSpec bloc;
    bloc.fraction = 0.17;
    for (int c = 0; c < 5; ++c) bloc.candidates.push_back(ids[static_cast<std::size_t>(b * 5 + c)]);
    spec.blocs.push_back(bloc);
  }
  spec.extremists.push_back(ExtremistSpec{ids.back(), 0.05, 0.90});
  return spec;
}

}  // namespace equivote
