#ifndef ZETAP_JSON_IO_HPP
#define ZETAP_JSON_IO_HPP

#include <zetap/coleman.hpp>
#include <zetap/measure.hpp>

#include <json.hpp>

namespace zetap {

using Json = nlohmann::ordered_json;

// p-adic numbers as {"v": int, "digits": little-endian base-p string, "M": int};
// approximate zeros carry {"zero": true, "prec": A}
Json padic_to_json(const Padic& x);
Padic padic_from_json(const Json& j, const Int& p);

// residues mod p^M as little-endian digit strings (digits dot-separated for
// p > 9), trailing zeros trimmed
std::string residue_digits(const Int& r, const Int& p);
Int residue_from_digits(const std::string& s, const Int& p);

Json ring_to_json(const CycloRingPtr& R);
CycloRingPtr ring_from_json(const Json& j);

// canonical measure serialization: bit-exact round-trip
Json measure_to_json(const Measure& mu);
Measure measure_from_json(const Json& j);

Json tower_to_json(const UnitTower& t);
UnitTower tower_from_json(const Json& j);

Json series_to_json(const ModCtx& m, const Poly& f);
void series_from_json(const Json& j, ModCtx& m, Poly& f);

inline constexpr const char* kSchema = "zetap/1";

}  // namespace zetap

#endif
