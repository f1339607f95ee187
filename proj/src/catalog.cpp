#include "knotperiod/catalog.hpp"

namespace knotperiod {

// The presentations are the standard two-bridge ones: two meridian
// generators of weight 1 and a single relator W x W^-1 y^-1. Tests recompute
// each Alexander polynomial from the presentation and compare against the
// stored coefficients.
const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {
            "trefoil",
            {1, -1, 1},
            true,
            "gens x y\n"
            "kappa x=1 y=1\n"
            "dist x\n"
            "rel x y x y^-1 x^-1 y^-1\n",
        },
        {
            "figure8",
            {-1, 3, -1},
            true,
            "gens x y\n"
            "kappa x=1 y=1\n"
            "dist x\n"
            "rel x y^-1 x^-1 y x y^-1 x y x^-1 y^-1\n",
        },
        {
            "6_2",
            {1, -3, 3, -3, 1},
            true,
            "gens x y\n"
            "kappa x=1 y=1\n"
            "dist x\n"
            "rel x y x y^-1 x^-1 y^-1 x^-1 y x y x y^-1 x^-1 y^-1 x y x y x^-1 y^-1 x^-1 y^-1\n",
        },
        {
            "9_1",
            {1, -1, 1, -1, 1, -1, 1, -1, 1},
            true,
            "gens x y\n"
            "kappa x=1 y=1\n"
            "dist x\n"
            "rel x y x y x y x y x y^-1 x^-1 y^-1 x^-1 y^-1 x^-1 y^-1 x^-1 y^-1\n",
        },
    };
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

} // namespace knotperiod
