#include "abexact/serialize.hpp"

#include <json.hpp>

namespace abexact {

namespace {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r) { return json(r.to_string()); }

template <typename Var>
json poly_json(const Poly<Rat, Var>& p) {
    json a = json::array();
    for (const Rat& c : p.coeffs()) a.push_back(rat_json(c));
    return a;
}

json pole_form_json(const PoleForm& f) {
    json o = json::object();
    o["num"] = poly_json(f.num());
    o["pole_order"] = f.pole_order();
    return o;
}

}  // namespace

std::string json_of(const Rat& r) { return rat_json(r).dump(); }

std::string json_of(const ZPoly& p) { return poly_json(p).dump(); }

std::string json_of(const UPolyRat& p) { return poly_json(p).dump(); }

std::string json_of(const PoleForm& f) { return pole_form_json(f).dump(); }

std::string json_of(const ABPoly& p, unsigned long n,
                    const std::string& formula_tag) {
    json o = json::object();
    o["n"] = n;
    o["formula"] = formula_tag;
    json cs = json::array();
    for (const PoleForm& c : p.coeffs()) cs.push_back(pole_form_json(c));
    o["u_coeffs"] = cs;
    return o.dump();
}

}  // namespace abexact
