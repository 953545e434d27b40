#pragma once

#include <map>
#include <string>

#include "spinor/catalog.hpp"

namespace spinor {

/// The expected spinorial-OIR table for one q mod 8 case, loaded from a
/// data file. Keys are catalogue families (with the quadratic principal
/// series pi(1, sgn) split out); values are one of:
///   all | none | trivial_only | chi_even | chi_odd | product_even | product_odd
struct CatalogueFixture {
    std::string case_label;
    unsigned q_mod_8 = 0;
    std::map<std::string, std::string> spinorial;
};

/// Resolution order for the data directory: explicit argument, then the
/// SPINOR_DATA_DIR environment variable, then the compiled-in source path.
std::string default_data_dir();

CatalogueFixture load_catalogue_fixture(const std::string& data_dir, unsigned q_mod_8);

/// Evaluates the fixture's condition for a concrete catalogue entry.
bool fixture_predicts_spinorial(const CatalogueFixture& fx, const OirDescriptor& d);

}  // namespace spinor
