#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rulehide/rational.hpp"
#include "rulehide/transaction_db.hpp"

namespace rulehide {

/// Minimum support, given either as a fraction of the database size or as
/// an absolute transaction count. The resolved threshold is never below 1,
/// so zero-support itemsets are never frequent.
class MiningParams {
public:
    /// Fractional support in [0, 1]; anything else throws ParamError.
    static MiningParams fraction(const Rational& s);
    static MiningParams absolute(std::int64_t count);

    /// threshold = max(1, ceil(s * n)) for fractions, max(1, count) otherwise.
    std::int64_t threshold_for(std::int64_t n) const;

private:
    MiningParams() = default;

    bool fractional_ = false;
    Rational fraction_;
    std::int64_t count_ = 1;
};

struct FrequentItemset {
    Itemset items;
    std::int64_t support = 0;

    bool operator==(const FrequentItemset&) const = default;
};

/// Frequent itemsets grouped by size, each level in canonical ascending
/// order, plus the number of counting passes the level-wise model charges
/// (one per level entered, so largest-size + 1 when anything is frequent,
/// 1 otherwise).
class FrequentCollection {
public:
    std::size_t level_count() const noexcept { return levels_.size(); }
    /// Size-k members; empty span when k exceeds the deepest level.
    std::span<const FrequentItemset> level(std::size_t k) const;
    int scan_count() const noexcept { return scan_count_; }

    std::optional<std::int64_t> support_of(const Itemset& s) const;

    std::int64_t total_count() const noexcept;
    /// All members, level by level, in canonical order.
    std::vector<FrequentItemset> flatten() const;

    void set_scan_count(int scans) noexcept { scan_count_ = scans; }
    void push_level(std::vector<FrequentItemset> level);

private:
    std::vector<std::vector<FrequentItemset>> levels_;
    int scan_count_ = 1;
};

/// Level-wise frequent-itemset mining: candidates of size k are generated
/// from the frequent sets of size k-1 (join + prune), then counted against
/// the database. Output is independent of transaction order.
FrequentCollection apriori(const TransactionDB& db, const MiningParams& params);

/// Candidate generation. Joins pairs from a canonically sorted level of
/// uniform size s that agree on their first s-1 items, then prunes any
/// candidate with an s-subset missing from the level. Mixed sizes are a
/// contract violation.
std::vector<Itemset> apriori_gen(std::span<const FrequentItemset> prior_level);

/// Exhaustive oracle: enumerates all 2^m - 1 non-empty subsets of the
/// dictionary and keeps those meeting the threshold. Refuses m > 20.
FrequentCollection brute_force_frequent(const TransactionDB& db, const MiningParams& params);

}  // namespace rulehide
