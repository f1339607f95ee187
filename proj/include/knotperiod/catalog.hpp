#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in knots: Alexander polynomial, two-bridge flag, and a
 *        two-generator presentation where one is stored.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace knotperiod {

struct CatalogEntry {
    std::string name;
    std::vector<std::int64_t> alexander;  ///< integer coefficients, low degree first
    bool two_bridge;
    std::string presentation;             ///< empty if none stored
};

const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* catalog_find(const std::string& name);

} // namespace knotperiod
