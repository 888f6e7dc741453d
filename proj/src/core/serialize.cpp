#include "fubini/serialize.hpp"

#include <sstream>

namespace fubini {

using nlohmann::json;

json to_json(const PolyZ& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

json to_json(const PolyQ& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    return out;
}

json to_json(const BiPolyZ& p) {
    json out = json::array();
    for (const auto& row : p.grid()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(to_string(c));
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const RatFunc& f) {
    return json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

PolyQ poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(Rat::parse(c.get<std::string>()));
    return PolyQ(std::move(coeffs));
}

std::string serialize(const PolyZ& p) { return to_json(p).dump(); }
std::string serialize(const PolyQ& p) { return to_json(p).dump(); }
std::string serialize(const BiPolyZ& p) { return to_json(p).dump(); }
std::string serialize(const RatFunc& f) { return to_json(f).dump(); }

namespace {

// One term "c·var^k" with sign handled by the caller.
std::string term(const Rat& magnitude, std::size_t power, std::string_view var) {
    std::string out;
    const bool unit = magnitude == Rat(1);
    if (!unit || power == 0) out += magnitude.str();
    if (power >= 1) out += var;
    if (power >= 2) out += "^" + std::to_string(power);
    return out;
}

// Detects den == (var - root)^d and returns root.
bool is_power_of_linear(const PolyQ& den, Rat& root) {
    const int d = den.degree();
    if (d < 1) return false;
    root = -den.coeff(static_cast<std::size_t>(d - 1)) / Rat(d);
    return den == pow(PolyQ{-root, Rat(1)}, static_cast<unsigned>(d));
}

}  // namespace

std::string pretty(const PolyQ& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        os << term(abs(c), static_cast<std::size_t>(i), var);
        first = false;
    }
    return os.str();
}

std::string pretty(const PolyZ& p, std::string_view var) { return pretty(to_rational(p), var); }

std::string pretty(const BiPolyZ& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Graded by total degree, x-power descending within a degree.
    const int total = p.degree_x() + p.degree_y();
    for (int deg = total; deg >= 0; --deg) {
        for (int i = std::min(deg, p.degree_x()); i >= 0; --i) {
            const int j = deg - i;
            const Int c = p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (c == 0) continue;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            const Int mag = abs(c);
            std::string mono;
            if (i >= 1) mono += "x" + (i >= 2 ? "^" + std::to_string(i) : std::string{});
            if (j >= 1) mono += "y" + (j >= 2 ? "^" + std::to_string(j) : std::string{});
            if (mag != 1 || mono.empty()) os << to_string(mag);
            os << mono;
            first = false;
        }
    }
    return os.str();
}

std::string pretty(const RatFunc& f, std::string_view var) {
    if (f.is_zero()) return "0";
    if (f.denominator().degree() == 0) return pretty(f.numerator(), var);
    const PolyQ& top = f.numerator();
    std::string num = pretty(top, var);
    if (top.degree() > 0 || top.leading().sign() < 0 || !top.leading().is_integer()) num = "(" + num + ")";
    Rat root;
    std::string den;
    if (is_power_of_linear(f.denominator(), root)) {
        den = "(" + std::string(var);
        if (!root.is_zero()) den += (root.sign() > 0 ? "-" : "+") + abs(root).str();
        den += ")";
        if (f.denominator().degree() > 1) den += "^" + std::to_string(f.denominator().degree());
    } else {
        den = "(" + pretty(f.denominator(), var) + ")";
    }
    return num + "/" + den;
}

}  // namespace fubini
