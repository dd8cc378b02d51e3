#include "rulehide/transaction_db.hpp"

#include <algorithm>
#include <cctype>

#include "rulehide/errors.hpp"

namespace rulehide {

Itemset::Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

Itemset Itemset::from_sorted_unique(std::vector<ItemId> ids) {
    Itemset s;
    s.ids_ = std::move(ids);
    return s;
}

ItemId Itemset::first() const {
    if (ids_.empty()) {
        throw ContractViolation("first() on empty itemset");
    }
    return ids_.front();
}

bool Itemset::contains(ItemId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Itemset::contains_all(const Itemset& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

bool Itemset::intersects(const Itemset& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

void Itemset::erase(ItemId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
        throw ContractViolation("erase of absent item");
    }
    ids_.erase(it);
}

Itemset set_union(const Itemset& a, const Itemset& b) {
    std::vector<ItemId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Itemset::from_sorted_unique(std::move(out));
}

Itemset set_difference(const Itemset& a, const Itemset& b) {
    std::vector<ItemId> out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Itemset::from_sorted_unique(std::move(out));
}

Dictionary::Dictionary(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    names_ = std::move(names);
    ids_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        ids_.emplace(names_[i], static_cast<ItemId>(i));
    }
}

const std::string& Dictionary::name(ItemId id) const {
    if (id >= names_.size()) {
        throw ContractViolation("unknown item id " + std::to_string(id));
    }
    return names_[id];
}

std::optional<ItemId> Dictionary::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

TransactionDB::TransactionDB(Dictionary dictionary, std::vector<Itemset> transactions)
    : dictionary_(std::move(dictionary)) {
    tids_by_item_.resize(dictionary_.size());
    transactions_.reserve(transactions.size());
    Tid tid = 0;
    for (auto& items : transactions) {
        ++tid;
        check_items(items);
        occurrences_ += static_cast<std::int64_t>(items.size());
        for (ItemId id : items) {
            tids_by_item_[id].push_back(tid);
        }
        transactions_.push_back(Transaction{tid, std::move(items)});
    }
}

const Transaction& TransactionDB::transaction(Tid tid) const {
    if (tid < 1 || tid > transactions_.size()) {
        throw ContractViolation("tid out of range: " + std::to_string(tid));
    }
    return transactions_[tid - 1];
}

void TransactionDB::check_items(const Itemset& s) const {
    for (ItemId id : s) {
        if (id >= dictionary_.size()) {
            throw ContractViolation("unknown item id " + std::to_string(id));
        }
    }
}

std::int64_t TransactionDB::support_count(const Itemset& s) const {
    return static_cast<std::int64_t>(supporting_tids(s).size());
}

std::vector<Tid> TransactionDB::supporting_tids(const Itemset& s) const {
    check_items(s);
    if (s.empty()) {
        std::vector<Tid> all(transactions_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Tid>(i + 1);
        return all;
    }
    // Intersect the per-item tid lists, rarest item first.
    ItemId rarest = s.first();
    for (ItemId id : s) {
        if (tids_by_item_[id].size() < tids_by_item_[rarest].size()) rarest = id;
    }
    std::vector<Tid> acc = tids_by_item_[rarest];
    for (ItemId id : s) {
        if (id == rarest || acc.empty()) continue;
        const auto& other = tids_by_item_[id];
        std::vector<Tid> next;
        next.reserve(acc.size());
        std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

void TransactionDB::delete_item(Tid tid, ItemId item) {
    if (tid < 1 || tid > transactions_.size()) {
        throw ContractViolation("tid out of range: " + std::to_string(tid));
    }
    if (item >= dictionary_.size()) {
        throw ContractViolation("unknown item id " + std::to_string(item));
    }
    Transaction& t = transactions_[tid - 1];
    if (!t.items.contains(item)) {
        throw ContractViolation("item '" + dictionary_.name(item) + "' not present in transaction " +
                                std::to_string(tid));
    }
    t.items.erase(item);
    auto& tids = tids_by_item_[item];
    tids.erase(std::lower_bound(tids.begin(), tids.end(), tid));
    --occurrences_;
}

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

struct RawLine {
    std::size_t file_line;
    std::vector<std::string> tokens;
};

// Splits into non-comment lines and validates token shape; dictionary
// resolution happens afterwards so ids can be assigned over the full name
// set.
std::vector<RawLine> scan_basket(std::string_view text) {
    std::vector<RawLine> lines;
    std::size_t file_line = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line;
        if (eol == std::string_view::npos) {
            line = text.substr(pos);  // unterminated final line still counts
            pos = text.size();
        } else {
            line = text.substr(pos, eol - pos);
            pos = eol + 1;
        }
        ++file_line;
        if (!line.empty() && line.front() == '#') continue;
        RawLine raw{file_line, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            std::size_t start = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            if (i > start) {
                std::string token(line.substr(start, i - start));
                if (token.find('#') != std::string::npos ||
                    token.find("->") != std::string::npos) {
                    throw ParseError(file_line, "malformed item token '" + token + "'");
                }
                raw.tokens.push_back(std::move(token));
            }
        }
        lines.push_back(std::move(raw));
    }
    return lines;
}

TransactionDB assemble(const std::vector<RawLine>& lines, const Dictionary& dictionary) {
    std::vector<Itemset> transactions;
    transactions.reserve(lines.size());
    for (const auto& raw : lines) {
        std::vector<ItemId> ids;
        ids.reserve(raw.tokens.size());
        for (const auto& token : raw.tokens) {
            auto id = dictionary.find(token);
            if (!id) {
                throw ParseError(raw.file_line, "unknown item '" + token + "'");
            }
            ids.push_back(*id);
        }
        transactions.emplace_back(std::move(ids));  // sorts and collapses duplicates
    }
    return TransactionDB(dictionary, std::move(transactions));
}

}  // namespace

TransactionDB parse_basket(std::string_view text) {
    auto lines = scan_basket(text);
    std::vector<std::string> names;
    for (const auto& raw : lines) {
        names.insert(names.end(), raw.tokens.begin(), raw.tokens.end());
    }
    return assemble(lines, Dictionary(std::move(names)));
}

TransactionDB parse_basket(std::string_view text, const Dictionary& dictionary) {
    return assemble(scan_basket(text), dictionary);
}

std::string serialize_basket(const TransactionDB& db) {
    std::string out;
    for (const auto& t : db.transactions()) {
        bool first = true;
        for (ItemId id : t.items) {
            if (!first) out += ' ';
            out += db.dictionary().name(id);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace rulehide
