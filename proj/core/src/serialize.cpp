#include "weylcq/serialize.hpp"

namespace weylcq {

nlohmann::json to_json(const Rat& r) {
    static const mpz_class safe("9007199254740992");  // 2^53
    if (is_integer(r) && abs(r.get_num()) < safe)
        return static_cast<long long>(r.get_num().get_si());
    return r.get_str();
}

nlohmann::json to_json(const Poly& p, const std::string& var) {
    nlohmann::json num = nlohmann::json::array();
    nlohmann::json den = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        const Rat c = p.coeff(k);
        num.push_back(to_json(Rat(c.get_num())));
        den.push_back(to_json(Rat(c.get_den())));
    }
    return {{"num", num}, {"den", den}, {"string", p.str(var)}};
}

nlohmann::json to_json(const QuasiPoly& f, const std::string& var) {
    nlohmann::json cs = nlohmann::json::array();
    for (int r = 1; r <= f.period(); ++r) cs.push_back(to_json(f.constituent(r), var));
    return {{"period", f.period()},
            {"constituents", cs},
            {"validFrom", f.valid_from()},
            {"gcdProperty", f.gcd_property()}};
}

nlohmann::json to_json(const RootSystem& rs) {
    nlohmann::json norms = nlohmann::json::array();
    for (const Rat& n : rs.root_norms) norms.push_back(to_json(n));
    return {{"type", rs.str()},
            {"rank", rs.rank},
            {"cartan", rs.cartan},
            {"rootNorms", norms},
            {"positiveRoots", rs.positive_roots},
            {"highestRoot", rs.highest_root},
            {"marks", rs.marks},
            {"coxeterNumber", rs.coxeter_number},
            {"exponents", rs.exponents},
            {"indexOfConnection", rs.index_of_connection},
            {"weylOrder", rs.weyl_order},
            {"ehrhartPeriod", rs.ehrhart_period},
            {"ehrhartPeriodRadical", rs.ehrhart_period_radical}};
}

nlohmann::json to_json(const RootSystem& rs, const AlcoveKey& key) {
    nlohmann::json floors = nlohmann::json::object();
    for (size_t m = 0; m < key.floors.size(); ++m)
        floors[std::to_string(m)] = key.floors[m];
    (void)rs;
    return {{"floors", floors}};
}

nlohmann::json to_json(const RootSystem& rs, const CharQuasi& cq) {
    nlohmann::json cs = nlohmann::json::array();
    for (int r = 1; r <= cq.quasi.period(); ++r)
        cs.push_back(cq.quasi.constituent(r).str());
    return {{"type", rs.str()},
            {"interval", {cq.spec.a, cq.spec.b}},
            {"period", cq.quasi.period()},
            {"constituents", cs},
            {"charPoly", cq.char_poly.str()},
            {"route", cq.route},
            {"empirical", cq.empirical},
            {"validFrom", cq.quasi.valid_from()}};
}

}  // namespace weylcq
