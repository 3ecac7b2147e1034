#include "cardsim/catalog.hpp"

#include <cstdio>

namespace cardsim {

namespace {

AntennaGeometry make_geometry(double width_mm, double height_mm, int turns,
                              double pitch_mm = 0.5) {
    AntennaGeometry g;
    g.width = width_mm * 1e-3;
    g.height = height_mm * 1e-3;
    g.turns = turns;
    g.pitch = pitch_mm * 1e-3;
    return g;
}

// The winding pitch of the commercial cards is not published. The cards with
// resonances far above the band (card-c, card-f) only make sense with a wider
// winding spread, so those entries carry per-entry pitch overrides.
std::vector<CardCatalogEntry> build_catalog() {
    return {
        {"card-a", "Austria Card", "Maestro (Bankomatkarte)",
         make_geometry(80, 34, 4), 17.98e6},
        {"card-b", "Austria Card", "Visa",
         make_geometry(80, 34, 4), 18.04e6},
        {"card-c", "Winter AG / Trueb AG", "MasterCard picture card",
         make_geometry(80, 34, 4, 4.0), 53.31e6},
        {"card-d", "Gemalto", "MasterCard picture card",
         make_geometry(74, 22, 4), 14.49e6},
        {"card-e", "Gemalto", "IDCore 3010",
         make_geometry(74, 44, 4), 18.11e6},
        {"card-f", "unknown", "Athena IDProtect",
         make_geometry(80, 49, 2, 12.0), 76.49e6},
        {"card-g", "unknown", "NXP JCOP41 V2.3.1",
         make_geometry(80, 49, 3), 29.66e6},
        {"card-h", "unknown", "NXP J3A081 DI / JCOP V2.4.1 R2",
         make_geometry(80, 49, 5), 17.09e6},
        {"card-i", "unknown", "NXP J3D081 DI / JCOP V2.4.2 R2",
         make_geometry(78, 46, 5), 17.92e6},
        {"card-j", "unknown", "NXP JCOP41 engineering sample",
         make_geometry(78, 48, 4), 28.65e6},
    };
}

}  // namespace

const std::vector<CardCatalogEntry>& catalog() {
    static const std::vector<CardCatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<CardCatalogEntry> find_catalog_entry(const std::string& id) {
    for (const CardCatalogEntry& e : catalog()) {
        if (e.id == id) return e;
    }
    return std::nullopt;
}

std::string catalog_csv() {
    std::string out = "id,manufacturer,product,width_mm,height_mm,turns,measured_f0_mhz\n";
    char line[256];
    for (const CardCatalogEntry& e : catalog()) {
        std::snprintf(line, sizeof(line), "%s,%s,%s,%.9g,%.9g,%d,%.9g\n",
                      e.id.c_str(), e.manufacturer.c_str(), e.product.c_str(),
                      e.geometry.width * 1e3, e.geometry.height * 1e3,
                      e.geometry.turns, e.measured_f0 * 1e-6);
        out += line;
    }
    return out;
}

}  // namespace cardsim
