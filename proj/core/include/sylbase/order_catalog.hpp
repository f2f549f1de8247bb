#pragma once

// Data-driven catalog of group orders.  The formulas live in text files
// (one per family) in the notation of order_formula.hpp; quotients by the
// q-dependent centre are applied at evaluation time.

#include "sylbase/group_id.hpp"
#include "sylbase/order_formula.hpp"

#include <filesystem>
#include <map>
#include <span>
#include <string>

namespace sylbase::orders {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class OrderCatalog {
public:
    // Loads every *.ord file in `dir` ("NAME := FORMULA" lines, '#' comments).
    static OrderCatalog load(const std::filesystem::path& dir);

    // Exact order of g over GF(q), q an odd prime power.
    Integer order_of(const GroupId& g, const Integer& q) const;

    // Exact quotient of order products; a non-integral result throws
    // CatalogError (it would mean a broken catalog entry, never truncation).
    Integer index_ratio(std::span<const GroupId> num, std::span<const GroupId> den,
                        const Integer& q) const;

    const FactoredOrder& entry(const std::string& name) const;
    bool has_entry(const std::string& name) const;
    std::size_t size() const { return entries_.size(); }

    // Catalog key for the matrix-level order backing g ("GL12", "SOM10", ...).
    static std::string entry_name(const GroupId& g);

private:
    std::map<std::string, FactoredOrder> entries_;
};

}  // namespace sylbase::orders
