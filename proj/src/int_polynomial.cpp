#include "motive/int_polynomial.hpp"

#include <vector>

#include "motive/error.hpp"

namespace motive {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

std::set<Int> prime_divisors(Int n) {
    std::set<Int> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.insert(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.insert(n);
    return out;
}

IntPolynomial::IntPolynomial(const Int& constant) {
    set(0, constant);
}

IntPolynomial IntPolynomial::monomial(int degree, const Int& coefficient) {
    if (degree < 0) fail("DomainError", "negative monomial degree");
    IntPolynomial p;
    p.set(degree, coefficient);
    return p;
}

IntPolynomial IntPolynomial::from_coefficients(const std::map<int, Int>& by_degree) {
    IntPolynomial p;
    for (const auto& [deg, c] : by_degree) p.set(deg, c);
    return p;
}

void IntPolynomial::set(int degree, Int value) {
    if (degree < 0) fail("DomainError", "negative degree");
    if (value == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(value);
}

Int IntPolynomial::coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Int(0) : it->second;
}

Int IntPolynomial::value_at_one() const {
    Int s = 0;
    for (const auto& [deg, c] : coeffs_) s += c;
    return s;
}

bool IntPolynomial::is_palindromic() const {
    const int d = degree();
    if (d < 0) return true;
    for (const auto& [deg, c] : coeffs_)
        if (coefficient(d - deg) != c) return false;
    return true;
}

bool IntPolynomial::all_coefficients_nonnegative() const {
    for (const auto& [deg, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    IntPolynomial out = *this;
    for (const auto& [deg, c] : other.coeffs_) out.set(deg, out.coefficient(deg) + c);
    return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    IntPolynomial out = *this;
    for (const auto& [deg, c] : other.coeffs_) out.set(deg, out.coefficient(deg) - c);
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    IntPolynomial out;
    for (const auto& [da, ca] : coeffs_)
        for (const auto& [db, cb] : other.coeffs_) out.set(da + db, out.coefficient(da + db) + ca * cb);
    return out;
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
    IntPolynomial out;
    for (const auto& [deg, v] : coeffs_) out.set(deg, v * c);
    return out;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) fail("DomainError", "division by the zero polynomial");
    if (is_zero()) return IntPolynomial();

    const int dd = divisor.degree();
    std::vector<Int> rem(static_cast<std::size_t>(degree()) + 1);
    for (const auto& [deg, c] : coeffs_) rem[static_cast<std::size_t>(deg)] = c;
    const Int lead = divisor.coefficient(dd);

    IntPolynomial quotient;
    for (int k = degree() - dd; k >= 0; --k) {
        const Int& top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        for (const auto& [deg, c] : divisor.coeffs_) rem[static_cast<std::size_t>(deg + k)] -= q * c;
        quotient.set(k, std::move(q));
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return quotient;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [deg, c] : coeffs_) {
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (mag == 1) && deg != 0;
        if (!unit) out += mag.str();
        if (deg >= 1) out += "z";
        if (deg >= 2) out += "^" + std::to_string(deg);
    }
    return out;
}

nlohmann::json IntPolynomial::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [deg, c] : coeffs_) {
        static const Int kJsonMax = Int(1) << 53;
        if (c > -kJsonMax && c < kJsonMax)
            j[std::to_string(deg)] = static_cast<long long>(c);
        else
            j[std::to_string(deg)] = c.str();
    }
    return j;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
    IntPolynomial p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int deg = std::stoi(it.key());
        if (it.value().is_string())
            p.set(deg, Int(it.value().get<std::string>()));
        else
            p.set(deg, Int(it.value().get<long long>()));
    }
    return p;
}

}  // namespace motive
