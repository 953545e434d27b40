#include "spinor/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "spinor/errors.hpp"

namespace spinor {

std::string default_data_dir() {
    if (const char* env = std::getenv("SPINOR_DATA_DIR")) return env;
#ifdef SPINOR_SOURCE_DATA_DIR
    return SPINOR_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

CatalogueFixture load_catalogue_fixture(const std::string& data_dir, unsigned q_mod_8) {
    std::string path =
        data_dir + "/fixtures/gl2_spinorial_q" + std::to_string(q_mod_8) + "mod8.json";
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path);
    nlohmann::json j;
    in >> j;
    CatalogueFixture fx;
    fx.case_label = j.at("case").get<std::string>();
    fx.q_mod_8 = j.at("q_mod_8").get<unsigned>();
    for (const auto& [k, v] : j.at("spinorial").items()) fx.spinorial[k] = v.get<std::string>();
    return fx;
}

namespace {

bool chi_even(const OirDescriptor& d, unsigned long index) {
    return eval_at_minus_one(LinearChar(d.q.q - 1, index)) == 1;
}

}  // namespace

bool fixture_predicts_spinorial(const CatalogueFixture& fx, const OirDescriptor& d) {
    std::string key = family_name(d.family);
    if (d.family == OirFamily::PrincipalSeries) {
        // pi(1, sgn) is listed separately from the pi(chi, chi^{-1}) family
        LinearChar c1(d.q.q - 1, d.a), c2(d.q.q - 1, d.b);
        if (c1.is_quadratic() && c2.is_quadratic()) key = "principal_series_quadratic";
    }
    auto it = fx.spinorial.find(key);
    if (it == fx.spinorial.end())
        throw Error("fixture " + fx.case_label + " has no rule for family " + key);
    const std::string& rule = it->second;
    if (rule == "all") return true;
    if (rule == "none") return false;
    if (rule == "trivial_only") return d.a == 0;
    if (rule == "chi_even") return chi_even(d, d.a);
    if (rule == "chi_odd") return !chi_even(d, d.a);
    if (rule == "product_even") return chi_even(d, d.a) == chi_even(d, d.b);
    if (rule == "product_odd") return chi_even(d, d.a) != chi_even(d, d.b);
    throw Error("fixture rule \"" + rule + "\" not understood");
}

}  // namespace spinor
