#include "rulehide/apriori.hpp"

#include <algorithm>

#include "rulehide/errors.hpp"

namespace rulehide {

MiningParams MiningParams::fraction(const Rational& s) {
    if (s < Rational(0) || s > Rational(1)) {
        throw ParamError("min-support fraction must lie in [0, 1], got " + s.to_fraction_string());
    }
    MiningParams p;
    p.fractional_ = true;
    p.fraction_ = s;
    return p;
}

MiningParams MiningParams::absolute(std::int64_t count) {
    MiningParams p;
    p.fractional_ = false;
    p.count_ = count;
    return p;
}

std::int64_t MiningParams::threshold_for(std::int64_t n) const {
    if (!fractional_) {
        return std::max<std::int64_t>(1, count_);
    }
    // ceil(num * n / den) in integer arithmetic
    __int128 scaled = static_cast<__int128>(fraction_.num()) * n;
    __int128 den = fraction_.den();
    std::int64_t ceiling = static_cast<std::int64_t>((scaled + den - 1) / den);
    return std::max<std::int64_t>(1, ceiling);
}

std::span<const FrequentItemset> FrequentCollection::level(std::size_t k) const {
    if (k < 1 || k > levels_.size()) return {};
    return levels_[k - 1];
}

std::optional<std::int64_t> FrequentCollection::support_of(const Itemset& s) const {
    auto lvl = level(s.size());
    auto it = std::lower_bound(lvl.begin(), lvl.end(), s,
                               [](const FrequentItemset& fi, const Itemset& key) {
                                   return fi.items < key;
                               });
    if (it == lvl.end() || it->items != s) return std::nullopt;
    return it->support;
}

std::int64_t FrequentCollection::total_count() const noexcept {
    std::int64_t total = 0;
    for (const auto& lvl : levels_) total += static_cast<std::int64_t>(lvl.size());
    return total;
}

std::vector<FrequentItemset> FrequentCollection::flatten() const {
    std::vector<FrequentItemset> out;
    out.reserve(static_cast<std::size_t>(total_count()));
    for (const auto& lvl : levels_) out.insert(out.end(), lvl.begin(), lvl.end());
    return out;
}

void FrequentCollection::push_level(std::vector<FrequentItemset> level) {
    levels_.push_back(std::move(level));
}

FrequentCollection apriori(const TransactionDB& db, const MiningParams& params) {
    const std::int64_t threshold = params.threshold_for(db.transaction_count());
    FrequentCollection out;

    std::vector<FrequentItemset> prior;
    int scans = 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<Itemset> candidates;
        if (k == 1) {
            const auto m = static_cast<ItemId>(db.item_count());
            candidates.reserve(m);
            for (ItemId id = 0; id < m; ++id) {
                candidates.push_back(Itemset::from_sorted_unique({id}));
            }
        } else {
            candidates = apriori_gen(prior);
        }

        // One counting pass per level entered; entering the level that turns
        // out empty is what tells the miner to stop, so it is charged too.
        ++scans;
        std::vector<FrequentItemset> level;
        for (auto& c : candidates) {
            std::int64_t support = db.support_count(c);
            if (support >= threshold) {
                level.push_back(FrequentItemset{std::move(c), support});
            }
        }
        if (level.empty()) break;
        out.push_level(level);
        prior = std::move(level);
    }
    out.set_scan_count(scans);
    return out;
}

std::vector<Itemset> apriori_gen(std::span<const FrequentItemset> prior_level) {
    if (prior_level.empty()) return {};
    const std::size_t size = prior_level.front().items.size();
    if (size == 0) {
        throw ContractViolation("apriori_gen on empty itemsets");
    }
    for (const auto& fi : prior_level) {
        if (fi.items.size() != size) {
            throw ContractViolation("apriori_gen level mixes itemset sizes");
        }
    }
    if (!std::is_sorted(prior_level.begin(), prior_level.end(),
                        [](const FrequentItemset& a, const FrequentItemset& b) {
                            return a.items < b.items;
                        })) {
        throw ContractViolation("apriori_gen level not canonically sorted");
    }

    auto is_frequent = [&](const Itemset& s) {
        auto it = std::lower_bound(prior_level.begin(), prior_level.end(), s,
                                   [](const FrequentItemset& fi, const Itemset& key) {
                                       return fi.items < key;
                                   });
        return it != prior_level.end() && it->items == s;
    };

    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < prior_level.size(); ++i) {
        const auto& lhs = prior_level[i].items.ids();
        for (std::size_t j = i + 1; j < prior_level.size(); ++j) {
            const auto& rhs = prior_level[j].items.ids();
            // Canonical order clusters shared prefixes, so once the first
            // size-1 items stop matching no later j can match either.
            if (!std::equal(lhs.begin(), lhs.end() - 1, rhs.begin(), rhs.end() - 1)) break;

            std::vector<ItemId> joined(lhs.begin(), lhs.end());
            joined.push_back(rhs.back());
            Itemset candidate = Itemset::from_sorted_unique(std::move(joined));

            // Prune: every size-1-smaller subset must itself be frequent.
            bool all_subsets_frequent = true;
            for (ItemId dropped : candidate) {
                std::vector<ItemId> subset;
                subset.reserve(candidate.size() - 1);
                for (ItemId id : candidate) {
                    if (id != dropped) subset.push_back(id);
                }
                if (!is_frequent(Itemset::from_sorted_unique(std::move(subset)))) {
                    all_subsets_frequent = false;
                    break;
                }
            }
            if (all_subsets_frequent) {
                candidates.push_back(std::move(candidate));
            }
        }
    }
    return candidates;
}

FrequentCollection brute_force_frequent(const TransactionDB& db, const MiningParams& params) {
    if (db.item_count() > 20) {
        throw ParamError("brute-force enumeration refused for " + std::to_string(db.item_count()) +
                         " items (limit 20)");
    }
    const auto m = static_cast<std::uint32_t>(db.item_count());
    const std::int64_t threshold = params.threshold_for(db.transaction_count());

    std::vector<std::vector<FrequentItemset>> by_size(m + 1);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<ItemId> ids;
        for (ItemId id = 0; id < m; ++id) {
            if (mask & (1u << id)) ids.push_back(id);
        }
        Itemset s = Itemset::from_sorted_unique(std::move(ids));
        std::int64_t support = db.support_count(s);
        if (support >= threshold) {
            by_size[s.size()].push_back(FrequentItemset{std::move(s), support});
        }
    }

    FrequentCollection out;
    int deepest = 0;
    for (std::size_t k = 1; k < by_size.size(); ++k) {
        if (by_size[k].empty()) break;  // downward closure: no gaps possible
        std::sort(by_size[k].begin(), by_size[k].end(),
                  [](const FrequentItemset& a, const FrequentItemset& b) {
                      return a.items < b.items;
                  });
        out.push_level(std::move(by_size[k]));
        deepest = static_cast<int>(k);
    }
    out.set_scan_count(deepest >= 1 ? deepest + 1 : 1);
    return out;
}

}  // namespace rulehide
