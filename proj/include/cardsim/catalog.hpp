#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardsim/geometry.hpp"

namespace cardsim {

/// One examined card: outline geometry paired with its measured resonant
/// frequency.
struct CardCatalogEntry {
    std::string id;            // short token, "card-a" .. "card-j"
    std::string manufacturer;
    std::string product;
    AntennaGeometry geometry;
    double measured_f0 = 0.0;  // Hz
};

/// The ten examined cards, in (a)-(j) order.
const std::vector<CardCatalogEntry>& catalog();

std::optional<CardCatalogEntry> find_catalog_entry(const std::string& id);

/// CSV with header: id,manufacturer,product,width_mm,height_mm,turns,measured_f0_mhz
std::string catalog_csv();

}  // namespace cardsim
