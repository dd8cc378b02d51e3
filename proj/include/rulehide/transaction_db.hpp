#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rulehide {

/// Dense handle for an interned item. Ids follow lexicographic name order,
/// frozen when the dictionary is built, so ascending-id iteration is also
/// ascending-name iteration.
using ItemId = std::uint32_t;

/// 1-based transaction identifier equal to the transaction's position in
/// the database. Never renumbered, including by sanitization.
using Tid = std::uint32_t;

/// Set of item ids kept sorted ascending without duplicates. Comparison is
/// lexicographic on the id sequence, which is the canonical order used for
/// levels, rule sets and file output.
class Itemset {
public:
    Itemset() = default;
    explicit Itemset(std::vector<ItemId> ids);

    /// Trusts the input to be sorted ascending and duplicate-free.
    static Itemset from_sorted_unique(std::vector<ItemId> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    const std::vector<ItemId>& ids() const noexcept { return ids_; }

    /// First item in canonical order. Precondition: not empty.
    ItemId first() const;

    bool contains(ItemId id) const;
    /// other ⊆ *this.
    bool contains_all(const Itemset& other) const;
    bool intersects(const Itemset& other) const;

    /// Removes an item that must be present.
    void erase(ItemId id);

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    auto operator<=>(const Itemset&) const = default;

private:
    std::vector<ItemId> ids_;
};

Itemset set_union(const Itemset& a, const Itemset& b);
Itemset set_difference(const Itemset& a, const Itemset& b);

struct Transaction {
    Tid tid = 0;
    Itemset items;

    bool operator==(const Transaction&) const = default;
};

/// Interned item names. Ids are assigned in sorted-name order over the full
/// name set, so name <-> id is an order-preserving bijection.
class Dictionary {
public:
    Dictionary() = default;
    /// Builds from arbitrary names; duplicates collapse.
    explicit Dictionary(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(ItemId id) const;
    std::optional<ItemId> find(std::string_view name) const;

    bool operator==(const Dictionary& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;  // index = id, lexicographically sorted
    std::unordered_map<std::string, ItemId> ids_;
};

/// The transaction database both miners read and the hider mutates.
/// Transactions are itemsets (duplicate purchases collapse); the number of
/// transactions is fixed for the lifetime of the object, deletion included,
/// so support fractions stay comparable before and after sanitization.
///
/// Reads are safe under shared access to an unchanging instance;
/// delete_item requires exclusive access (single writer, no concurrent
/// readers during a write).
class TransactionDB {
public:
    TransactionDB() = default;
    TransactionDB(Dictionary dictionary, std::vector<Itemset> transactions);

    std::int64_t transaction_count() const noexcept {
        return static_cast<std::int64_t>(transactions_.size());
    }
    std::int64_t item_count() const noexcept {
        return static_cast<std::int64_t>(dictionary_.size());
    }
    const Dictionary& dictionary() const noexcept { return dictionary_; }
    const std::vector<Transaction>& transactions() const noexcept { return transactions_; }
    const Transaction& transaction(Tid tid) const;

    /// Sum of transaction sizes; the denominator of the distortion ratio.
    std::int64_t occurrence_count() const noexcept { return occurrences_; }

    /// Number of transactions t with s ⊆ t. The empty itemset is supported
    /// by every transaction. Throws ContractViolation for unknown item ids.
    std::int64_t support_count(const Itemset& s) const;

    /// Ascending tids of exactly the transactions supporting s.
    std::vector<Tid> supporting_tids(const Itemset& s) const;

    /// Removes one item from one transaction; the single mutation primitive
    /// sanitization is built on. The item must currently be present.
    void delete_item(Tid tid, ItemId item);

    bool operator==(const TransactionDB& other) const {
        return dictionary_ == other.dictionary_ && transactions_ == other.transactions_;
    }

private:
    void check_items(const Itemset& s) const;

    Dictionary dictionary_;
    std::vector<Transaction> transactions_;
    // Vertical index: per item, ascending tids of the transactions holding
    // it. Kept in lockstep with the row data by delete_item; observationally
    // invisible.
    std::vector<std::vector<Tid>> tids_by_item_;
    std::int64_t occurrences_ = 0;
};

/// Parses the basket format: one transaction per non-comment line, items as
/// whitespace-separated tokens, '#' lines skipped, empty lines kept as empty
/// transactions. The dictionary is built from the file's own tokens.
TransactionDB parse_basket(std::string_view text);

/// Same format, but tokens resolve against an existing dictionary (used to
/// compare a sanitized file against its original's id space). Unknown names
/// are parse errors.
TransactionDB parse_basket(std::string_view text, const Dictionary& dictionary);

/// Canonical text form: items ascending, single-space separated, one "\n"
/// terminated line per transaction. parse_basket(serialize_basket(db))
/// reproduces db's transactions exactly.
std::string serialize_basket(const TransactionDB& db);

}  // namespace rulehide
