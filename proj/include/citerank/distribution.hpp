#ifndef CITERANK_DISTRIBUTION_HPP
#define CITERANK_DISTRIBUTION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citerank/errors.hpp"

namespace citerank {

// One (publication year, subject category) combination. All normalization
// happens inside such a cell.
struct CellKey {
  int year = 0;
  std::string category;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

// Assignment of a paper to a publishing unit (researcher, institution,
// country, ...) with its fractional weight in (0, 1].
struct UnitShare {
  std::string unit;
  double fraction = 1.0;

  friend bool operator==(const UnitShare&, const UnitShare&) = default;
};

struct PublicationRecord {
  std::string paper_id;
  int year = 0;
  std::int64_t citations = 0;
  std::vector<std::string> categories;  // non-empty, no duplicates
  std::vector<UnitShare> units;         // may be empty
};

// Size-frequency distribution of the citation counts in one cell:
// ascending unique citation values with the number of papers at each.
// Immutable after construction; all queries are const.
class CitationDistribution {
 public:
  struct Entry {
    std::int64_t cc = 0;
    std::int64_t count = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Ranks of one citation value in the two rank systems:
  // `i` indexes the unique citation values ascending (lowest value -> 0),
  // `j` counts the papers with strictly fewer citations.
  struct ValueRanks {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend bool operator==(const ValueRanks&, const ValueRanks&) = default;
  };

  static CitationDistribution from_citations(std::span<const std::int64_t> citations) {
    if (citations.empty()) throw EmptyDistribution();
    std::vector<std::int64_t> sorted(citations.begin(), citations.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Entry> entries;
    for (std::int64_t cc : sorted) {
      if (!entries.empty() && entries.back().cc == cc) {
        ++entries.back().count;
      } else {
        entries.push_back({cc, 1});
      }
    }
    return CitationDistribution(std::move(entries));
  }

  // `entries` must be ascending by citation value with positive counts.
  static CitationDistribution from_entries(std::vector<Entry> entries) {
    return CitationDistribution(std::move(entries));
  }

  std::int64_t n() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t unique_values() const { return entries_.size(); }
  std::int64_t min_cc() const { return entries_.front().cc; }
  std::int64_t max_cc() const { return entries_.back().cc; }

  bool contains(std::int64_t cc) const { return index_of(cc) >= 0; }

  // Number of papers with exactly `cc` citations; 0 when the value is absent.
  std::int64_t count_at(std::int64_t cc) const {
    auto idx = index_of(cc);
    return idx < 0 ? 0 : entries_[static_cast<std::size_t>(idx)].count;
  }

  // Number of papers with strictly fewer than `cc` citations.
  std::int64_t papers_below(std::int64_t cc) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), cc,
                               [](const Entry& e, std::int64_t v) { return e.cc < v; });
    if (it == entries_.begin()) return 0;
    return cum_[static_cast<std::size_t>(it - entries_.begin()) - 1];
  }

  // Number of papers with at most `cc` citations.
  std::int64_t papers_at_or_below(std::int64_t cc) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), cc,
                               [](std::int64_t v, const Entry& e) { return v < e.cc; });
    if (it == entries_.begin()) return 0;
    return cum_[static_cast<std::size_t>(it - entries_.begin()) - 1];
  }

  // Mean of the 1..n positions occupied by the papers with `cc` citations
  // when papers are ranked ascending by citation count. Tied papers share
  // the arithmetic mean of their positions.
  double mean_rank(std::int64_t cc) const {
    auto idx = require_index(cc);
    const Entry& e = entries_[idx];
    std::int64_t below = idx == 0 ? 0 : cum_[idx - 1];
    return static_cast<double>(below) + (static_cast<double>(e.count) + 1.0) / 2.0;
  }

  ValueRanks value_ranks(std::int64_t cc) const {
    auto idx = require_index(cc);
    std::int64_t below = idx == 0 ? 0 : cum_[idx - 1];
    return {static_cast<std::int64_t>(idx), below};
  }

  friend bool operator==(const CitationDistribution& a, const CitationDistribution& b) {
    return a.entries_ == b.entries_;
  }

 private:
  explicit CitationDistribution(std::vector<Entry> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) throw EmptyDistribution();
    cum_.reserve(entries_.size());
    std::int64_t running = 0;
    std::int64_t prev = 0;
    bool first = true;
    for (const Entry& e : entries_) {
      if (e.count < 1) {
        throw InvalidCitationCount("entry for citation count " + std::to_string(e.cc) +
                                   " has non-positive paper count");
      }
      if (e.cc < 0) {
        throw InvalidCitationCount("negative citation count " + std::to_string(e.cc));
      }
      if (!first && e.cc <= prev) {
        throw InvalidCitationCount("citation values must be strictly increasing");
      }
      first = false;
      prev = e.cc;
      running += e.count;
      cum_.push_back(running);
    }
    n_ = running;
  }

  // Index of `cc` among the unique values, or -1 when absent.
  std::ptrdiff_t index_of(std::int64_t cc) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), cc,
                               [](const Entry& e, std::int64_t v) { return e.cc < v; });
    if (it == entries_.end() || it->cc != cc) return -1;
    return it - entries_.begin();
  }

  std::size_t require_index(std::int64_t cc) const {
    auto idx = index_of(cc);
    if (idx < 0) throw UnknownCitationCount(cc);
    return static_cast<std::size_t>(idx);
  }

  std::vector<Entry> entries_;
  std::vector<std::int64_t> cum_;  // cumulative paper counts, at-or-below
  std::int64_t n_ = 0;
};

// Builds the distribution of one cell from records. Every record must
// belong to the cell: matching year and the category present.
inline CitationDistribution build_distribution(std::span<const PublicationRecord> records,
                                               const CellKey& key) {
  std::vector<std::int64_t> citations;
  citations.reserve(records.size());
  for (const PublicationRecord& r : records) {
    if (r.year != key.year ||
        std::find(r.categories.begin(), r.categories.end(), key.category) ==
            r.categories.end()) {
      throw InvalidConfig("record \"" + r.paper_id + "\" does not belong to cell " +
                          std::to_string(key.year) + ":" + key.category);
    }
    citations.push_back(r.citations);
  }
  if (citations.empty()) throw EmptyDistribution();
  return CitationDistribution::from_citations(citations);
}

inline std::map<std::int64_t, double> mean_ranks(const CitationDistribution& dist) {
  std::map<std::int64_t, double> out;
  for (const auto& e : dist.entries()) out[e.cc] = dist.mean_rank(e.cc);
  return out;
}

inline std::map<std::int64_t, CitationDistribution::ValueRanks> unique_value_ranks(
    const CitationDistribution& dist) {
  std::map<std::int64_t, CitationDistribution::ValueRanks> out;
  for (const auto& e : dist.entries()) out[e.cc] = dist.value_ranks(e.cc);
  return out;
}

}  // namespace citerank

#endif  // CITERANK_DISTRIBUTION_HPP
