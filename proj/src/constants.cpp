#include "chilab/constants.hpp"

#include <stdexcept>

namespace chilab {

GoldenElem phi() { return {Rational(1), Rational(0)}; }
GoldenElem inv_phi() { return {Rational(1), Rational(-1)}; }

TowerElem chi() {
    // (sqrt(5) - 1)/4 + (1/4) sqrt(22 - 2 sqrt(5)); on the phi basis
    // sqrt(5) - 1 = 2*phi - 2 and 22 - 2 sqrt(5) = -4*phi + 24.
    GoldenElem p{Rational(1, 2), Rational(-1, 2)};
    GoldenElem q{Rational(0), Rational(1, 4)};
    GoldenElem r{Rational(-4), Rational(24)};
    return {p, q, r};
}

TowerElem chi_prime() {
    // (1 + sqrt(5))/4 + (1/4) sqrt(22 + 2 sqrt(5)).
    GoldenElem p{Rational(1, 2), Rational(0)};
    GoldenElem q{Rational(0), Rational(1, 4)};
    GoldenElem r{Rational(4), Rational(20)};
    return {p, q, r};
}

Value metallic(unsigned n) {
    if (n == 0) throw std::invalid_argument("metallic mean needs n >= 1");
    Rational nr(static_cast<long long>(n));
    GoldenElem p{Rational(0), nr / Rational(2)};
    GoldenElem q{Rational(0), Rational(1, 2)};
    GoldenElem r{Rational(0), nr * nr + Rational(4)};
    return demote(Value(TowerElem(p, q, r)));
}

Poly poly_from_descending(std::vector<GoldenElem> coeffs) {
    Poly p;
    p.coeffs.assign(coeffs.rbegin(), coeffs.rend());
    while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
    return p;
}

Poly poly_mul(const Poly& x, const Poly& y) {
    if (x.coeffs.empty() || y.coeffs.empty()) return {};
    Poly out;
    out.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, GoldenElem());
    for (size_t i = 0; i < x.coeffs.size(); ++i)
        for (size_t j = 0; j < y.coeffs.size(); ++j)
            out.coeffs[i + j] = out.coeffs[i + j] + x.coeffs[i] * y.coeffs[j];
    return out;
}

Value poly_eval(const Poly& p, const Value& x) {
    Value acc{Rational(0)};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = value_add(value_mul(acc, x), Value(*it));
    return acc;
}

std::string poly_to_string(const Poly& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const GoldenElem& c = p.coeffs[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool leading = out.empty();
        bool negated = false;
        if (cs.front() == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            negated = true;
            cs.erase(cs.begin());
        }
        out += leading ? (negated ? "-" : "") : (negated ? "-" : "+");
        bool needs_coeff = d == 0 || cs != "1";
        if (needs_coeff) out += cs.find_first_of("+-*", 1) != std::string::npos ? "(" + cs + ")" : cs;
        if (d > 0) {
            if (needs_coeff) out += "*";
            out += d == 1 ? "x" : "x^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

Poly quartic_expand(QuarticPairing pairing) {
    GoldenElem one{Rational(0), Rational(1)};
    GoldenElem minus_one{Rational(0), Rational(-1)};
    Poly chi_factor = poly_from_descending({one, -inv_phi(), minus_one});       // x^2 - x/phi - 1
    Poly chi_prime_factor = poly_from_descending({one, -phi(), minus_one});     // x^2 - phi x - 1
    Poly chi_prime_conj = poly_from_descending({one, phi(), minus_one});        // x^2 + phi x - 1
    if (pairing == QuarticPairing::same_signs)
        return poly_mul(chi_prime_factor, chi_factor);
    return poly_mul(chi_factor, chi_prime_conj);
}

namespace {
GoldenElem g(long long a, long long b) { return {Rational(a), Rational(b)}; }

std::vector<NamedConstant> build_catalogue() {
    std::vector<NamedConstant> out;
    auto add_exact = [&](std::string name, Value v, Poly defining, std::string desc) {
        NamedConstant c;
        c.name = std::move(name);
        c.decimal3 = eval_decimal(v, 3).digits;
        c.exact = std::move(v);
        c.approximate = false;
        c.defining_poly = std::move(defining);
        c.description = std::move(desc);
        out.push_back(std::move(c));
    };
    add_exact("phi", Value(phi()), poly_from_descending({g(0, 1), g(0, -1), g(0, -1)}),
              "golden ratio (1+sqrt(5))/2, positive root of x^2-x-1");
    add_exact("chi", Value(chi()), poly_from_descending({g(0, 1), -inv_phi(), g(0, -1)}),
              "Bartlett's chi ratio (sqrt(5)-1+sqrt(22-2*sqrt(5)))/4, positive root of "
              "x^2-(1/phi)x-1; limit of consecutive H-sequence ratios");
    add_exact("chi_prime", Value(chi_prime()), poly_from_descending({g(0, 1), -phi(), g(0, -1)}),
              "Bartlett's chi-prime ratio (1+sqrt(5)+sqrt(22+2*sqrt(5)))/4, positive root of "
              "x^2-phi*x-1; the companion of chi with the signs aligned");
    add_exact("silver", metallic(2), poly_from_descending({g(0, 1), g(0, -2), g(0, -1)}),
              "silver ratio 1+sqrt(2), second metallic mean");
    add_exact("bronze", metallic(3), poly_from_descending({g(0, 1), g(0, -3), g(0, -1)}),
              "bronze ratio (3+sqrt(13))/2, third metallic mean");
    add_exact("sesquitertia", Value(Rational(4, 3)), poly_from_descending({g(0, 3), g(0, -4)}),
              "sesquitertia 4:3, the classical perfect fourth");

    NamedConstant plastic;
    plastic.name = "plastic";
    plastic.decimal3 = "1.324";
    plastic.approximate = true;
    plastic.defining_poly = poly_from_descending({g(0, 1), g(0, 0), g(0, -1), g(0, -1)});
    plastic.description = "plastic ratio, real root of x^3-x-1 (decimal literal; not "
                          "representable in the radical tower)";
    out.push_back(std::move(plastic));

    NamedConstant cordovan;
    cordovan.name = "cordovan";
    cordovan.decimal3 = "1.306";
    cordovan.approximate = true;
    cordovan.defining_poly = poly_from_descending({g(0, 2), g(0, 0), g(0, -4), g(0, 0), g(0, 1)});
    cordovan.description = "cordovan ratio 1/(2*sin(pi/8)), root of 2x^4-4x^2+1 (decimal "
                           "literal; not representable in the radical tower)";
    out.push_back(std::move(cordovan));
    return out;
}
}  // namespace

const std::vector<NamedConstant>& named_constants() {
    static const std::vector<NamedConstant> catalogue = build_catalogue();
    return catalogue;
}

const NamedConstant* find_constant(const std::string& name) {
    for (const auto& c : named_constants())
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace chilab
