#ifndef HOPFMOD_SERIALIZE_HPP
#define HOPFMOD_SERIALIZE_HPP

#include <fstream>

#include <json.hpp>

#include "hopfmod/galois.hpp"

namespace hopfmod {

using Json = nlohmann::ordered_json;

// {"order": M, "coeffs": [["num", "den"], ...]} with decimal strings.
inline Json cyclotomic_to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs())
        coeffs.push_back(Json::array({q.get_num().get_str(), q.get_den().get_str()}));
    return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    unsigned long order = j.at("order").get<unsigned long>();
    std::vector<Rational> coeffs;
    for (const auto& pair : j.at("coeffs"))
        coeffs.push_back(rational_from_strings(pair.at(0).get<std::string>(), pair.at(1).get<std::string>()));
    return Cyclotomic(order, std::move(coeffs));
}

inline Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(cyclotomic_to_json(c));
    return out;
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclotomic_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Group input file: {"order": n, "table": [[...]]} with 0-based indices.
inline FiniteGroup group_from_json(const Json& j) {
    std::size_t order = j.at("order").get<std::size_t>();
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    check(table.size() == order, "group file: table size does not match the order");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    // associativity is left to the axiom checker so corrupted files fail loudly there
    return FiniteGroup::from_table(std::move(table), std::move(labels), false);
}

inline FiniteGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    check(static_cast<bool>(in), "cannot open group file: " + path);
    Json j = Json::parse(in);
    return group_from_json(j);
}

// Structure constants of a Hopf algebra in sparse form.
inline Json hopf_to_json(const HopfAlgebra& h) {
    std::size_t n = h.dim();
    Json j;
    j["schema"] = 1;
    j["dimension"] = n;
    j["field_order"] = h.field_order();
    j["labels"] = h.labels();
    Json mul = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj)
            for (const auto& [k, c] : h.basis_product(i, jj).terms)
                mul.push_back(Json{{"idx", {i, jj, k}}, {"c", cyclotomic_to_json(c)}});
    j["mul"] = std::move(mul);
    Json comul = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [idx, c] : h.basis_coproduct(i).terms())
            comul.push_back(Json{{"idx", {i, idx[0], idx[1]}}, {"c", cyclotomic_to_json(c)}});
    j["comul"] = std::move(comul);
    Json counit = Json::array();
    for (std::size_t i = 0; i < n; ++i) counit.push_back(cyclotomic_to_json(h.basis_counit(i)));
    j["counit"] = std::move(counit);
    Json antipode = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : h.basis_antipode(i).terms)
            antipode.push_back(Json{{"idx", {i, k}}, {"c", cyclotomic_to_json(c)}});
    j["antipode"] = std::move(antipode);
    j["unit"] = vec_to_json(h.unit());
    return j;
}

inline Json semisimple_to_json(const SemisimpleData& sd) {
    Json j;
    j["schema"] = 1;
    j["k"] = sd.k;
    j["degrees"] = sd.degrees;
    Json idem = Json::array();
    for (const auto& e : sd.idempotents) idem.push_back(vec_to_json(e));
    j["idempotents"] = std::move(idem);
    Json chars = Json::array();
    for (const auto& c : sd.characters) chars.push_back(vec_to_json(c));
    j["characters"] = std::move(chars);
    j["dual_involution"] = sd.dual;
    if (sd.has_character_ring) {
        j["kappa"] = cyclotomic_to_json(sd.kappa);
        j["linear"] = sd.linear;
    }
    return j;
}

inline Json modular_to_json(const ModularData& md) {
    Json j;
    j["schema"] = 1;
    j["N"] = md.N;
    j["dim"] = md.dim;
    j["S"] = matrix_to_json(md.S);
    Json t = Json::array();
    for (const auto& c : md.T) t.push_back(cyclotomic_to_json(c));
    j["T"] = std::move(t);
    j["C"] = md.C;
    j["linear"] = md.linear;
    return j;
}

inline Json hopf_symbol_table_json(const SemisimpleData& sd, const ModularData& md) {
    Json symbols = Json::object();
    for (long q = 0; q < static_cast<long>(md.N); ++q)
        symbols[std::to_string(q)] = cyclotomic_to_json(hopf_symbol(sd, md, q));
    return Json{{"schema", 1}, {"N", md.N}, {"symbols", symbols}};
}

// One complex embedding of a cyclotomic number at modest precision, for the
// human-readable (explicitly approximate) CSV export.
inline std::pair<double, double> approximate(const Cyclotomic& c) {
    mpfr_prec_t prec = 128;
    BigFloat re(prec), im(prec);
    for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
        if (c.coeffs()[j] == 0) continue;
        auto [co, si] = BigFloat::cos_sin_2pi(static_cast<long>(j), c.order(), prec);
        BigFloat q = BigFloat::from_rational(c.coeffs()[j], prec);
        re += q * co;
        im += q * si;
    }
    return {re.to_double(), im.to_double()};
}

inline std::string s_matrix_csv(const ModularData& md) {
    std::ostringstream os;
    os << "# approximate values under one complex embedding\n";
    for (std::size_t i = 0; i < md.k; ++i) {
        for (std::size_t j = 0; j < md.k; ++j) {
            auto [re, im] = approximate(md.S(i, j));
            if (j) os << ",";
            os << re;
            if (im != 0.0) os << (im > 0 ? "+" : "") << im << "i";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hopfmod

#endif
